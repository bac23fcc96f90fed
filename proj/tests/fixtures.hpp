#pragma once

#include <vector>

#include "fusebiset/fusion.hpp"
#include "fusebiset/group.hpp"

namespace fixtures {

using namespace fusebiset;

inline GroupPtr q8_c3() {
  static GroupPtr g = [] {
    auto q8 = make_quaternion8();
    auto c3 = make_cyclic(3);
    std::vector<Elem> kappa = {0, 1, 4, 5, 6, 7, 2, 3};
    std::vector<Elem> kappa2(8), ident(8);
    for (int i = 0; i < 8; ++i) {
      kappa2[i] = kappa[kappa[i]];
      ident[i] = Elem(i);
    }
    return semidirect_product(q8, c3, {ident, kappa, kappa2});
  }();
  return g;
}

// F_S(S) for S = D8.
inline const FusionSystem& trivial_d8() {
  static FusionSystem f = generate_fusion(make_dihedral(8), 2, {});
  return f;
}

// Fusion of A6 on its Sylow 2-subgroup (isomorphic to D8).
inline const FusionSystem& d8_a6() {
  static FusionSystem f = [] {
    auto a6 = make_alternating(6);
    return fusion_of_group(a6, sylow_subgroup(a6, 2), 2);
  }();
  return f;
}

// Fusion of S4 on its Sylow 2-subgroup.
inline const FusionSystem& d8_s4() {
  static FusionSystem f = [] {
    auto s4 = make_symmetric(4);
    return fusion_of_group(s4, sylow_subgroup(s4, 2), 2);
  }();
  return f;
}

// Fusion of Q8 x| C3 on Q8.
inline const FusionSystem& q8_fused() {
  static FusionSystem f = [] {
    auto g = q8_c3();
    return fusion_of_group(g, sylow_subgroup(g, 2), 2);
  }();
  return f;
}

// Non-saturated system on D8: generated by the lone isomorphism
// <r^2> -> <s>, which cannot extend past the order-2 level.
inline const FusionSystem& d8_nonsat() {
  static FusionSystem f = [] {
    auto d8 = make_dihedral(8);
    Subgroup z(d8, {0, 2});
    GroupMap gamma(z, d8, {0, 4});
    return generate_fusion(d8, 2, {gamma});
  }();
  return f;
}

// The two Klein subgroups of a D8-shaped group, canonically ordered.
inline std::vector<int> klein_ids(const FusionSystem& f) {
  std::vector<int> out;
  for (int i = 0; i < f.subgroup_count(); ++i) {
    const Subgroup& h = f.subgroup(i);
    if (h.order() != 4) continue;
    bool elementary = true;
    for (Elem x : h.elements())
      if (f.s()->element_order(x) > 2) elementary = false;
    if (elementary) out.push_back(i);
  }
  return out;
}

// An order-3 automorphism of the given Klein subgroup, taken from F.
inline GroupMap order3_aut(const FusionSystem& f, int vid) {
  for (const GroupMap& m : f.aut_f(vid))
    if (m.automorphism_order() == 3) return m;
  throw std::runtime_error("no order-3 automorphism in class");
}

}  // namespace fixtures
