#pragma once

#include <map>

#include "fusebiset/fusion.hpp"

namespace fusebiset {

/// A finite S-set up to isomorphism: multiplicities of the transitive sets
/// [Q] = S/Q, indexed by S-conjugacy class id (see FusionSystem::s_classes).
struct SSet {
  std::map<int, long long> coeffs;

  void add(int s_class, long long mult) {
    if (mult == 0) return;
    auto it = coeffs.find(s_class);
    if (it == coeffs.end()) {
      coeffs[s_class] = mult;
    } else {
      it->second += mult;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  long long at(int s_class) const {
    auto it = coeffs.find(s_class);
    return it == coeffs.end() ? 0 : it->second;
  }
  bool operator==(const SSet& o) const { return coeffs == o.coeffs; }
};

/// |(S/R)^Q| = #{s in S : s^-1 Q s <= R} / |R|.
long long orbit_fixed_points(const Subgroup& q, const Subgroup& r);

/// Q-fixed points of X, extended linearly over the orbit multiplicities.
long long fixed_points(const FusionSystem& f, const SSet& x, int qid);

struct StabilityReport {
  bool stable = true;
  // witness: subgroup pair with differing fixed-point counts
  int source_id = -1, image_id = -1;
  long long source_count = 0, image_count = 0;
};

StabilityReport is_f_stable(const FusionSystem& f, const SSet& x);

struct StabilizeStep {
  int s_class;           // class receiving new orbits
  long long deficiency;  // fixed-point gap against the fully normalized rep
  long long weyl;        // |N_S(Q)/Q|
  long long added;       // deficiency / weyl
};

struct BasisOptions {
  bool substituted = false;   // out: P was replaced by its class rep
  int used_subgroup = -1;     // out: the fully normalized subgroup used
  std::vector<StabilizeStep> trace;  // out: every deficiency computed
};

/// The irreducible F-stable S-set containing [P] exactly once, built by
/// level-descending stabilization.  P is replaced by the canonical fully
/// normalized member of its class when necessary.  Throws NotSaturatedError
/// when a deficiency is negative or not divisible by the Weyl order.
SSet basis_element(const FusionSystem& f, int pid, BasisOptions* opts = nullptr);

struct NotStable : InputError {
  using InputError::InputError;
};

/// Unique expansion of an F-stable X over the basis elements, by top-down
/// subtraction at the largest outstanding class.  Keys are F-class ids.
std::map<int, long long> decompose(const FusionSystem& f, const SSet& x);

/// Nonnegative combination of basis elements (keys: F-class ids).
SSet combine(const FusionSystem& f, const std::map<int, long long>& coeffs);

}  // namespace fusebiset
