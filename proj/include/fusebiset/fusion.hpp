#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusebiset/group.hpp"
#include "fusebiset/subgroups.hpp"

namespace fusebiset {

/// Partition of the subgroups of S into conjugacy classes, with the data the
/// stabilization algorithms need: which members are fully normalized /
/// centralized and a canonical representative.
struct ConjClasses {
  std::vector<int> class_of;                 // subgroup id -> class id
  std::vector<std::vector<int>> members;     // class id -> member ids
  std::vector<int> canonical_rep;            // class id -> subgroup id
  std::vector<std::vector<int>> fully_normalized;
  std::vector<std::vector<int>> fully_centralized;

  int class_count() const { return int(members.size()); }
};

/// A fusion system on a p-group S.  S is its own FiniteGroup; every morphism
/// is stored as an injective map P -> S, and Hom(P,Q) is the subset of maps
/// from P whose image lies in Q.  Immutable once built.
class FusionSystem {
 public:
  const GroupPtr& s() const { return s_; }
  int p() const { return p_; }

  int subgroup_count() const { return int(subgroups_.size()); }
  const Subgroup& subgroup(int id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  int subgroup_id(const std::vector<Elem>& sorted_elems) const;
  int subgroup_id(const Subgroup& p) const { return subgroup_id(p.elements()); }
  int full_subgroup_id() const { return full_id_; }

  /// All morphisms with source P, as maps into S.
  const std::vector<GroupMap>& maps_from(int pid) const { return homs_[pid]; }
  /// Hom(P,Q): maps from P landing inside Q.
  std::vector<GroupMap> homs(int pid, int qid) const;
  bool contains(const GroupMap& phi) const;

  std::vector<GroupMap> aut_f(int pid) const { return homs(pid, pid); }
  std::vector<GroupMap> aut_s(int pid) const;
  long long out_s_order() const;  // |Aut_F(S)| / |Inn(S)|

  const Subgroup& normalizer_of(int pid) const { return normalizers_[pid]; }
  const Subgroup& centralizer_of(int pid) const { return centralizers_[pid]; }

  const ConjClasses& s_classes() const;
  const ConjClasses& f_classes() const;
  bool fully_normalized(int pid) const;
  bool fully_centralized(int pid) const;
  /// Fully normalized member of P's class with canonical tie-break
  /// (maximal normalizer, then least element set).
  int fully_normalized_rep(int pid) const;

  /// Ambient realization, when the system was built from a group.
  const std::optional<EmbeddedGroup>& ambient() const { return ambient_; }
  bool ambient_is_sylow() const { return ambient_sylow_; }

  bool operator==(const FusionSystem& o) const;

  /// Internal factory: table of morphisms per subgroup, maps into S.
  static FusionSystem from_store(GroupPtr s, int p,
                                 std::vector<std::vector<GroupMap>> store,
                                 std::optional<EmbeddedGroup> ambient,
                                 bool ambient_sylow,
                                 const Caps& caps = default_caps());

 private:
  FusionSystem() = default;

  GroupPtr s_;
  int p_ = 0;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<Elem>, int> index_;
  int full_id_ = -1;
  std::vector<std::vector<GroupMap>> homs_;
  std::vector<Subgroup> normalizers_;
  std::vector<Subgroup> centralizers_;
  std::optional<EmbeddedGroup> ambient_;
  bool ambient_sylow_ = true;
  // lazily built caches
  mutable std::optional<ConjClasses> s_classes_;
  mutable std::optional<ConjClasses> f_classes_;
};

/// Fusion system induced by G-conjugation on a p-subgroup S <= G.
/// S is promoted to its own group; the embedding is kept for model checks.
FusionSystem fusion_of_group(const GroupPtr& g, const Subgroup& s, int p,
                             const Caps& caps = default_caps());

/// Smallest fusion system on S containing all S-conjugation maps and the
/// given generators, closed under composition, restriction and inversion.
FusionSystem generate_fusion(const GroupPtr& s, int p,
                             const std::vector<GroupMap>& generators,
                             const Caps& caps = default_caps());

/// The extender N_phi <= N_S(P): elements x such that conjugation by x is
/// carried to some S-conjugation on the image side.
Subgroup extender(const FusionSystem& f, const GroupMap& phi);

struct SaturationReport {
  bool saturated = false;
  // on failure:
  int axiom = 0;                          // 1 or 2
  std::optional<Subgroup> witness;        // offending subgroup
  std::optional<GroupMap> witness_map;    // offending morphism (axiom 2)
  std::optional<Subgroup> witness_extender;
  std::string detail;
};

SaturationReport is_saturated(const FusionSystem& f);

struct NormalizerMapReport {
  bool holds = true;
  // counterexample triple: fully normalized P, class member Q, and the
  // normalizer pair that admits no suitable morphism
  std::optional<Subgroup> rep, member;
  std::string detail;
};

/// Checks that for each fully normalized P, every class member Q admits a
/// morphism N_S(Q) -> N_S(P) carrying Q onto P.  Diagnostic; presupposes
/// saturation.
NormalizerMapReport normalizer_map_check(const FusionSystem& f);

}  // namespace fusebiset
