#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusebiset/util.hpp"

namespace fusebiset {

/// A finite group given by a dense multiplication table on element indices
/// 0..order-1.  Index 0 is always the identity.  Immutable after
/// construction; constructor validates the group axioms.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<Elem> table, std::string label = "");

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem mul3(Elem a, Elem b, Elem c) const { return mul(mul(a, b), c); }
  Elem inv(Elem a) const { return inv_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul3(g, x, inv_[g]); }
  int element_order(Elem x) const { return elem_order_[x]; }
  const std::string& label() const { return label_; }

 private:
  int order_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<int> elem_order_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a FiniteGroup, stored as the sorted set of its element
/// indices.  Two subgroups of the same parent are equal iff their element
/// sets are equal.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> elems);

  static Subgroup trivial(GroupPtr g);
  static Subgroup full(GroupPtr g);
  static Subgroup generated(GroupPtr g, std::span<const Elem> gens);

  const std::vector<Elem>& elements() const { return elems_; }
  bool contains(Elem x) const { return mask_[x] != 0; }
  bool contains_all(const Subgroup& other) const;
  int order() const { return int(elems_.size()); }
  const GroupPtr& parent() const { return parent_; }
  bool is_full() const { return order() == parent_->order(); }

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
  bool operator!=(const Subgroup& o) const { return elems_ != o.elems_; }
  bool operator<(const Subgroup& o) const;  // order, then lexicographic

  // xHx^-1
  Subgroup conjugate(Elem x) const;

 private:
  GroupPtr parent_;
  std::vector<Elem> elems_;
  std::vector<char> mask_;
};

/// An injective homomorphism from a subgroup into a (possibly different)
/// parent group, stored as the total list of images aligned with the sorted
/// source elements.
class GroupMap {
 public:
  struct Unchecked {};  // tag: skip validation on structurally-valid maps

  GroupMap(Subgroup source, GroupPtr target_parent, std::vector<Elem> images);
  GroupMap(Subgroup source, GroupPtr target_parent, std::vector<Elem> images,
           Unchecked);

  /// Inclusion of P into its parent.
  static GroupMap inclusion(const Subgroup& p);
  /// c_g restricted to P, into P's parent.  Requires gPg^-1 defined there.
  static GroupMap conjugation(const Subgroup& p, Elem g);

  const Subgroup& source() const { return source_; }
  const GroupPtr& target_parent() const { return target_; }
  const std::vector<Elem>& images() const { return images_; }

  Elem apply(Elem x) const;
  Subgroup image() const;
  std::vector<Elem> image_elements() const;  // sorted

  GroupMap restrict_to(const Subgroup& sub) const;
  GroupMap inverse() const;
  /// next . this  (requires image(this) <= source(next))
  GroupMap then(const GroupMap& next) const;

  bool is_inclusion() const;
  /// order under composition; requires image == source
  int automorphism_order() const;
  bool fixes_setwise(const Subgroup& p) const;

  bool operator==(const GroupMap& o) const {
    return source_.elements() == o.source_.elements() && images_ == o.images_;
  }
  bool operator<(const GroupMap& o) const;

 private:
  void validate() const;
  Subgroup source_;
  GroupPtr target_;
  std::vector<Elem> images_;
};

/// A subgroup promoted to a standalone FiniteGroup, with the element
/// dictionary in both directions.  Promotion is deterministic: elements are
/// numbered in increasing parent-index order, so the identity is index 0.
struct EmbeddedGroup {
  GroupPtr group;
  GroupPtr parent;
  std::vector<Elem> to_parent;
  std::vector<int> from_parent;  // -1 where absent

  Subgroup as_subgroup() const { return Subgroup(parent, to_parent); }
  Subgroup push(const Subgroup& in_parent) const;  // parent coords -> promoted
  Subgroup pull(const Subgroup& in_promoted) const;
  GroupMap push_map(const GroupMap& in_parent) const;
};

EmbeddedGroup promote(const Subgroup& h, std::string label = "");

// --- constructors ---------------------------------------------------------

GroupPtr make_cyclic(int n, const Caps& caps = default_caps());
GroupPtr make_dihedral(int order, const Caps& caps = default_caps());
GroupPtr make_quaternion8();
GroupPtr make_symmetric(int n, const Caps& caps = default_caps());
GroupPtr make_alternating(int n, const Caps& caps = default_caps());
GroupPtr make_perm_group(int degree, const std::vector<std::vector<Elem>>& gens,
                         const Caps& caps = default_caps());
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        const Caps& caps = default_caps());
/// n ⋊ h where action[i] is the automorphism of n induced by h-element i,
/// given as a permutation of n's elements.
GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<Elem>>& action,
                            const Caps& caps = default_caps());

GroupPtr table_group(std::vector<std::vector<Elem>> table, std::string label,
                     const Caps& caps = default_caps());

}  // namespace fusebiset
