#include "fusebiset/subgroups.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace fusebiset {

namespace {

// Attempts to extend gens -> gen_images to a homomorphism on all of p,
// walking products from the identity.  Returns the image list aligned with
// p.elements(), or nullopt when the assignment is inconsistent or not
// injective.
std::optional<std::vector<Elem>> extend_hom(const Subgroup& p,
                                            const std::vector<Elem>& gens,
                                            const FiniteGroup& target,
                                            const std::vector<Elem>& gen_images) {
  const FiniteGroup& src = *p.parent();
  const auto& elems = p.elements();
  std::vector<int> pos(src.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = int(i);
  std::vector<int> img(elems.size(), -1);
  img[pos[0]] = 0;
  std::vector<Elem> work{0};
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    Elem u = Elem(img[pos[x]]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = src.mul(x, gens[i]);
      Elem v = target.mul(u, gen_images[i]);
      int& slot = img[pos[y]];
      if (slot == -1) {
        slot = v;
        work.push_back(y);
      } else if (slot != int(v)) {
        return std::nullopt;
      }
    }
  }
  for (int v : img)
    if (v == -1) return std::nullopt;  // gens do not generate p
  // injectivity
  std::vector<Elem> sorted(img.begin(), img.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::nullopt;
  // multiplicativity on all pairs; the walk above only checks the relations
  // it traverses
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      Elem prod = src.mul(elems[i], elems[j]);
      if (img[pos[prod]] != int(target.mul(Elem(img[i]), Elem(img[j]))))
        return std::nullopt;
    }
  return std::vector<Elem>(img.begin(), img.end());
}

// Greedy generating sequence of a subgroup.
std::vector<Elem> generating_sequence(const Subgroup& p) {
  GroupPtr g = p.parent();
  std::vector<Elem> gens;
  Subgroup cur = Subgroup::trivial(g);
  for (Elem x : p.elements()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<Elem> seed = cur.elements();
    seed.push_back(x);
    cur = Subgroup::generated(g, seed);
    if (cur.order() == p.order()) break;
  }
  return gens;
}

void backtrack_images(const Subgroup& p, const std::vector<Elem>& gens,
                      const std::vector<Subgroup>& chain,
                      const FiniteGroup& target,
                      const std::vector<std::vector<Elem>>& candidates,
                      std::vector<Elem>& chosen, std::size_t depth,
                      bool first_only,
                      std::vector<std::vector<Elem>>& results) {
  if (first_only && !results.empty()) return;
  if (depth == gens.size()) {
    auto full = extend_hom(p, gens, target, chosen);
    if (full) results.push_back(std::move(*full));
    return;
  }
  for (Elem v : candidates[depth]) {
    chosen.push_back(v);
    std::vector<Elem> partial_gens(gens.begin(), gens.begin() + depth + 1);
    if (extend_hom(chain[depth], partial_gens, target, chosen)) {
      backtrack_images(p, gens, chain, target, candidates, chosen, depth + 1,
                       first_only, results);
    }
    chosen.pop_back();
  }
}

std::vector<std::vector<Elem>> injective_hom_images(const Subgroup& p,
                                                    const FiniteGroup& target,
                                                    const std::vector<Elem>& allowed,
                                                    bool first_only) {
  std::vector<Elem> gens = generating_sequence(p);
  if (gens.empty()) return {{0}};  // trivial subgroup: identity only
  std::vector<Subgroup> chain;
  std::vector<Elem> acc;
  for (Elem g : gens) {
    acc.push_back(g);
    chain.push_back(Subgroup::generated(p.parent(), acc));
  }
  const FiniteGroup& src = *p.parent();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = src.element_order(gens[i]);
    for (Elem v : allowed)
      if (target.element_order(v) == ord) candidates[i].push_back(v);
  }
  std::vector<std::vector<Elem>> results;
  std::vector<Elem> chosen;
  backtrack_images(p, gens, chain, target, candidates, chosen, 0, first_only,
                   results);
  return results;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Caps& caps) {
  if (g->order() > caps.lattice_max)
    throw CapExceeded("full subgroup lattice needs order <= " +
                      std::to_string(caps.lattice_max));
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> cyclics;
  auto add = [&](Subgroup h) -> bool {
    if (seen.insert(h.elements()).second) {
      out.push_back(std::move(h));
      return true;
    }
    return false;
  };
  add(Subgroup::trivial(g));
  for (Elem x = 0; x < g->order(); ++x) {
    Subgroup c = Subgroup::generated(g, std::vector<Elem>{x});
    if (seen.find(c.elements()) == seen.end()) cyclics.push_back(c);
    add(std::move(c));
  }
  // extend every known subgroup by every cyclic subgroup until closed
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Subgroup& c : cyclics) {
      if (out[i].contains_all(c)) continue;
      std::vector<Elem> seed = out[i].elements();
      seed.insert(seed.end(), c.elements().begin(), c.elements().end());
      add(Subgroup::generated(g, seed));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const Subgroup& p) {
  const FiniteGroup& g = *p.parent();
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem a : p.elements())
      if (!p.contains(g.conj(x, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(p.parent(), std::move(out));
}

Subgroup centralizer(const Subgroup& p) {
  const FiniteGroup& g = *p.parent();
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem a : p.elements())
      if (g.mul(x, a) != g.mul(a, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(p.parent(), std::move(out));
}

Subgroup centralizer_in(const Subgroup& h, const Subgroup& p) {
  const FiniteGroup& g = *p.parent();
  std::vector<Elem> out;
  for (Elem x : h.elements()) {
    bool ok = true;
    for (Elem a : p.elements())
      if (g.mul(x, a) != g.mul(a, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(p.parent(), std::move(out));
}

Subgroup center(const Subgroup& p) { return centralizer_in(p, p); }

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
  if (!is_prime(p)) throw InputError("p must be prime");
  long long target = p_part(g->order(), p);
  Subgroup h = Subgroup::trivial(g);
  while (h.order() < target) {
    Subgroup n = h.order() == 1 ? Subgroup::full(g) : normalizer(h);
    bool grew = false;
    for (Elem x : n.elements()) {
      if (h.contains(x)) continue;
      if (!is_p_power(g->element_order(x), p)) continue;
      std::vector<Elem> seed = h.elements();
      seed.push_back(x);
      h = Subgroup::generated(g, seed);
      grew = true;
      break;
    }
    if (!grew) break;
  }
  if (h.order() != target)
    throw InternalError("sylow construction stalled below the p-part");
  return h;
}

bool is_sylow(const GroupPtr& g, const Subgroup& s, int p) {
  if (!is_prime(p)) return false;
  return is_p_power(s.order(), p) && s.order() == p_part(g->order(), p);
}

std::vector<GroupMap> automorphisms(const Subgroup& p, const Caps& caps) {
  if (p.order() > caps.aut_max)
    throw CapExceeded("automorphism enumeration needs order <= " +
                      std::to_string(caps.aut_max));
  auto images = injective_hom_images(p, *p.parent(), p.elements(), false);
  std::vector<GroupMap> out;
  out.reserve(images.size());
  for (auto& img : images)
    out.emplace_back(p, p.parent(), std::move(img), GroupMap::Unchecked{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> group_isomorphisms(const FiniteGroup& a,
                                                  const FiniteGroup& b,
                                                  bool first_only) {
  if (a.order() != b.order()) return {};
  // cheap invariant: element-order statistics must agree
  std::map<int, int> sa, sb;
  for (Elem x = 0; x < a.order(); ++x) ++sa[a.element_order(x)];
  for (Elem x = 0; x < b.order(); ++x) ++sb[b.element_order(x)];
  if (sa != sb) return {};
  // wrap a as a subgroup of itself; candidates are all of b
  auto ga = std::make_shared<FiniteGroup>(a);
  Subgroup full = Subgroup::full(ga);
  std::vector<Elem> allowed(b.order());
  for (Elem x = 0; x < b.order(); ++x) allowed[x] = x;
  return injective_hom_images(full, b, allowed, first_only);
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const Caps& caps) {
  std::vector<Subgroup> out;
  for (Subgroup& h : all_subgroups(g, caps)) {
    bool normal = true;
    for (Elem x = 0; x < g->order() && normal; ++x)
      for (Elem a : h.elements())
        if (!h.contains(g->conj(x, a))) {
          normal = false;
          break;
        }
    if (normal) out.push_back(std::move(h));
  }
  return out;
}

namespace {

Subgroup largest_normal_with(const GroupPtr& g, const Caps& caps,
                             const std::function<bool(int)>& order_ok) {
  Subgroup best = Subgroup::trivial(g);
  std::vector<Subgroup> passing;
  for (Subgroup& h : normal_subgroups(g, caps)) {
    if (!order_ok(h.order())) continue;
    if (h.order() > best.order()) best = h;
    passing.push_back(std::move(h));
  }
  // the largest must contain every other candidate
  for (const Subgroup& h : passing)
    if (!best.contains_all(h))
      throw InternalError("largest normal subgroup is not unique");
  return best;
}

}  // namespace

Subgroup op_subgroup(const GroupPtr& g, int p, const Caps& caps) {
  if (!is_prime(p)) throw InputError("p must be prime");
  return largest_normal_with(g, caps,
                             [p](int n) { return is_p_power(n, p); });
}

Subgroup op_prime_subgroup(const GroupPtr& g, int p, const Caps& caps) {
  if (!is_prime(p)) throw InputError("p must be prime");
  return largest_normal_with(g, caps, [p](int n) { return n % p != 0; });
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seed = a.elements();
  seed.insert(seed.end(), b.elements().begin(), b.elements().end());
  return Subgroup::generated(a.parent(), seed);
}

}  // namespace fusebiset
