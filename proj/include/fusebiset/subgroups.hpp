#pragma once

#include <vector>

#include "fusebiset/group.hpp"

namespace fusebiset {

/// Complete duplicate-free subgroup list, sorted by order then lexicographic
/// element set.  Only available below the lattice cap.
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    const Caps& caps = default_caps());

Subgroup normalizer(const Subgroup& p);   // N_G(P) in P's parent
Subgroup centralizer(const Subgroup& p);  // C_G(P) in P's parent
Subgroup center(const Subgroup& p);       // Z(P) = C_P(P) in P's parent

/// Centralizer of P taken inside H (both subgroups of the same parent).
Subgroup centralizer_in(const Subgroup& h, const Subgroup& p);

Subgroup sylow_subgroup(const GroupPtr& g, int p);
bool is_sylow(const GroupPtr& g, const Subgroup& s, int p);

/// All bijective multiplicative self-maps of P (as maps into P's parent).
std::vector<GroupMap> automorphisms(const Subgroup& p,
                                    const Caps& caps = default_caps());

/// Table isomorphisms a -> b as image vectors indexed by a's elements.
std::vector<std::vector<Elem>> group_isomorphisms(const FiniteGroup& a,
                                                  const FiniteGroup& b,
                                                  bool first_only = false);

std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       const Caps& caps = default_caps());

/// Largest normal p-subgroup / p'-subgroup.
Subgroup op_subgroup(const GroupPtr& g, int p, const Caps& caps = default_caps());
Subgroup op_prime_subgroup(const GroupPtr& g, int p,
                           const Caps& caps = default_caps());

/// Smallest subgroup containing both (inside the common parent).
Subgroup join(const Subgroup& a, const Subgroup& b);

}  // namespace fusebiset
