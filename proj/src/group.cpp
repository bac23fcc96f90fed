#include "fusebiset/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace fusebiset {

namespace {

// Finds a generating set by greedily extending the generated subgroup.
std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<char> have(g.order(), 0);
  have[0] = 1;
  std::vector<Elem> in{0};
  std::vector<Elem> gens;
  for (Elem x = 1; x < g.order(); ++x) {
    if (have[x]) continue;
    gens.push_back(x);
    // close
    std::vector<Elem> work{x};
    have[x] = 1;
    in.push_back(x);
    while (!work.empty()) {
      Elem a = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < in.size(); ++i) {
        for (Elem p : {g.mul(a, in[i]), g.mul(in[i], a)}) {
          if (!have[p]) {
            have[p] = 1;
            in.push_back(p);
            work.push_back(p);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<Elem> table, std::string label)
    : table_(std::move(table)), label_(std::move(label)) {
  std::size_t n2 = table_.size();
  int n = int(std::lround(std::sqrt(double(n2))));
  if (n <= 0 || std::size_t(n) * n != n2)
    throw InputError("multiplication table is not square");
  order_ = n;
  for (Elem v : table_)
    if (v >= n) throw InputError("table entry out of range");
  // identity must be index 0
  for (Elem a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw InputError("element 0 is not a two-sided identity");
  // inverses
  inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InputError("element without two-sided inverse");
  }
  // associativity: exhaustive up to order 512, Light's test on generators
  // above that
  if (n <= 512) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem ab = mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw InputError("multiplication table is not associative");
      }
  } else {
    for (Elem gen : greedy_generators(*this)) {
      for (Elem a = 0; a < n; ++a) {
        Elem ag = mul(a, gen);
        for (Elem b = 0; b < n; ++b)
          if (mul(ag, b) != mul(a, mul(gen, b)))
            throw InputError("multiplication table is not associative");
      }
    }
  }
  elem_order_.assign(n, 1);
  for (Elem a = 0; a < n; ++a) {
    int k = 1;
    Elem x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = k;
  }
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elems)
    : parent_(std::move(parent)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  mask_.assign(parent_->order(), 0);
  for (Elem x : elems_) {
    if (x >= parent_->order()) throw InputError("subgroup element out of range");
    mask_[x] = 1;
  }
  if (elems_.empty() || elems_[0] != 0)
    throw InputError("subgroup does not contain the identity");
  for (Elem a : elems_) {
    if (!mask_[parent_->inv(a)])
      throw InputError("subgroup not closed under inverse");
    for (Elem b : elems_)
      if (!mask_[parent_->mul(a, b)])
        throw InputError("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::trivial(GroupPtr g) { return Subgroup(std::move(g), {0}); }

Subgroup Subgroup::full(GroupPtr g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), Elem(0));
  return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::generated(GroupPtr g, std::span<const Elem> gens) {
  std::vector<char> have(g->order(), 0);
  std::vector<Elem> in{0};
  have[0] = 1;
  std::vector<Elem> work;
  for (Elem x : gens) {
    if (x >= g->order()) throw InputError("generator out of range");
    if (!have[x]) {
      have[x] = 1;
      in.push_back(x);
      work.push_back(x);
    }
  }
  while (!work.empty()) {
    Elem a = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < in.size(); ++i) {
      for (Elem p : {g->mul(a, in[i]), g->mul(in[i], a)}) {
        if (!have[p]) {
          have[p] = 1;
          in.push_back(p);
          work.push_back(p);
        }
      }
    }
  }
  return Subgroup(std::move(g), std::move(in));
}

bool Subgroup::contains_all(const Subgroup& other) const {
  for (Elem x : other.elems_)
    if (!mask_[x]) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
  return elems_ < o.elems_;
}

Subgroup Subgroup::conjugate(Elem x) const {
  std::vector<Elem> out;
  out.reserve(elems_.size());
  for (Elem a : elems_) out.push_back(parent_->conj(x, a));
  return Subgroup(parent_, std::move(out));
}

GroupMap::GroupMap(Subgroup source, GroupPtr target_parent,
                   std::vector<Elem> images)
    : source_(std::move(source)),
      target_(std::move(target_parent)),
      images_(std::move(images)) {
  validate();
}

GroupMap::GroupMap(Subgroup source, GroupPtr target_parent,
                   std::vector<Elem> images, Unchecked)
    : source_(std::move(source)),
      target_(std::move(target_parent)),
      images_(std::move(images)) {}

void GroupMap::validate() const {
  const auto& elems = source_.elements();
  if (images_.size() != elems.size())
    throw InputError("map image list does not cover the source");
  for (Elem y : images_)
    if (y >= target_->order()) throw InputError("map image out of range");
  // injective
  std::vector<Elem> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("map is not injective");
  // multiplicative, exhaustively
  const FiniteGroup& src = *source_.parent();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      Elem prod = src.mul(elems[i], elems[j]);
      if (apply(prod) != target_->mul(images_[i], images_[j]))
        throw InputError("map is not a homomorphism");
    }
}

GroupMap GroupMap::inclusion(const Subgroup& p) {
  return GroupMap(p, p.parent(), p.elements(), Unchecked{});
}

GroupMap GroupMap::conjugation(const Subgroup& p, Elem g) {
  const FiniteGroup& gr = *p.parent();
  std::vector<Elem> img;
  img.reserve(p.order());
  for (Elem x : p.elements()) img.push_back(gr.conj(g, x));
  return GroupMap(p, p.parent(), std::move(img), Unchecked{});
}

Elem GroupMap::apply(Elem x) const {
  const auto& elems = source_.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), x);
  if (it == elems.end() || *it != x)
    throw InputError("element not in map source");
  return images_[std::size_t(it - elems.begin())];
}

std::vector<Elem> GroupMap::image_elements() const {
  std::vector<Elem> out = images_;
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup GroupMap::image() const { return Subgroup(target_, images_); }

GroupMap GroupMap::restrict_to(const Subgroup& sub) const {
  std::vector<Elem> img;
  img.reserve(sub.order());
  for (Elem x : sub.elements()) img.push_back(apply(x));
  return GroupMap(sub, target_, std::move(img), Unchecked{});
}

GroupMap GroupMap::inverse() const {
  const auto& elems = source_.elements();
  std::vector<std::pair<Elem, Elem>> pairs;  // (image, preimage)
  pairs.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    pairs.emplace_back(images_[i], elems[i]);
  std::sort(pairs.begin(), pairs.end());
  std::vector<Elem> src, img;
  src.reserve(pairs.size());
  img.reserve(pairs.size());
  for (auto& [y, x] : pairs) {
    src.push_back(y);
    img.push_back(x);
  }
  return GroupMap(Subgroup(target_, std::move(src)), source_.parent(),
                  std::move(img), Unchecked{});
}

GroupMap GroupMap::then(const GroupMap& next) const {
  std::vector<Elem> img;
  img.reserve(images_.size());
  for (Elem y : images_) img.push_back(next.apply(y));
  return GroupMap(source_, next.target_parent(), std::move(img), Unchecked{});
}

bool GroupMap::is_inclusion() const {
  return source_.parent() == target_ && images_ == source_.elements();
}

int GroupMap::automorphism_order() const {
  if (image_elements() != source_.elements())
    throw InputError("automorphism order needs image == source");
  GroupMap acc = *this;
  int k = 1;
  while (acc.images_ != source_.elements()) {
    acc = acc.then(*this);
    ++k;
  }
  return k;
}

bool GroupMap::fixes_setwise(const Subgroup& p) const {
  std::vector<Elem> img;
  img.reserve(p.order());
  for (Elem x : p.elements()) img.push_back(apply(x));
  std::sort(img.begin(), img.end());
  return img == p.elements();
}

bool GroupMap::operator<(const GroupMap& o) const {
  if (source_.elements() != o.source_.elements())
    return source_ < o.source_;
  return images_ < o.images_;
}

Subgroup EmbeddedGroup::push(const Subgroup& in_parent) const {
  std::vector<Elem> out;
  out.reserve(in_parent.order());
  for (Elem x : in_parent.elements()) {
    int m = from_parent[x];
    if (m < 0) throw InputError("subgroup not contained in embedded group");
    out.push_back(Elem(m));
  }
  return Subgroup(group, std::move(out));
}

Subgroup EmbeddedGroup::pull(const Subgroup& in_promoted) const {
  std::vector<Elem> out;
  out.reserve(in_promoted.order());
  for (Elem x : in_promoted.elements()) out.push_back(to_parent[x]);
  return Subgroup(parent, std::move(out));
}

GroupMap EmbeddedGroup::push_map(const GroupMap& in_parent) const {
  Subgroup src = push(in_parent.source());
  std::vector<Elem> img;
  img.reserve(src.order());
  for (Elem x : src.elements()) {
    int m = from_parent[in_parent.apply(to_parent[x])];
    if (m < 0) throw InputError("map image leaves the embedded group");
    img.push_back(Elem(m));
  }
  return GroupMap(std::move(src), group, std::move(img), GroupMap::Unchecked{});
}

EmbeddedGroup promote(const Subgroup& h, std::string label) {
  const FiniteGroup& g = *h.parent();
  const auto& elems = h.elements();  // sorted, identity first
  int n = int(elems.size());
  std::vector<int> from(g.order(), -1);
  for (int i = 0; i < n; ++i) from[elems[i]] = i;
  std::vector<Elem> table(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[std::size_t(i) * n + j] = Elem(from[g.mul(elems[i], elems[j])]);
  EmbeddedGroup out;
  out.group = std::make_shared<FiniteGroup>(std::move(table), std::move(label));
  out.parent = h.parent();
  out.to_parent = elems;
  out.from_parent = std::move(from);
  return out;
}

// --- constructors ---------------------------------------------------------

GroupPtr table_group(std::vector<std::vector<Elem>> table, std::string label,
                     const Caps& caps) {
  int n = int(table.size());
  if (n == 0 || n > caps.table_max) throw CapExceeded("table size out of range");
  std::vector<Elem> flat;
  flat.reserve(std::size_t(n) * n);
  for (auto& row : table) {
    if (int(row.size()) != n) throw InputError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<FiniteGroup>(std::move(flat), std::move(label));
}

GroupPtr make_cyclic(int n, const Caps& caps) {
  if (n < 1 || n > caps.table_max) throw CapExceeded("cyclic order out of range");
  std::vector<Elem> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = Elem((a + b) % n);
  return std::make_shared<FiniteGroup>(std::move(t), "C" + std::to_string(n));
}

GroupPtr make_dihedral(int order, const Caps& caps) {
  if (order < 4 || order % 2 != 0 || order > caps.table_max)
    throw InputError("dihedral order must be an even integer >= 4");
  int n = order / 2;
  // indices: r^a -> a, s r^a -> n + a
  auto idx = [n](bool refl, int a) {
    return Elem((refl ? n : 0) + ((a % n) + n) % n);
  };
  std::vector<Elem> t(std::size_t(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      bool rx = x >= n, ry = y >= n;
      int ax = x % n, ay = y % n;
      Elem z;
      if (!rx && !ry) z = idx(false, ax + ay);
      else if (!rx && ry) z = idx(true, ay - ax);
      else if (rx && !ry) z = idx(true, ax + ay);
      else z = idx(false, ay - ax);
      t[std::size_t(x) * order + y] = z;
    }
  return std::make_shared<FiniteGroup>(std::move(t),
                                       "D" + std::to_string(order));
}

GroupPtr make_quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto enc = [](int axis, int sign) {  // axis 0=1, 1=i, 2=j, 3=k
    return Elem(axis == 0 ? (sign > 0 ? 0 : 1)
                          : 2 * axis + (sign > 0 ? 0 : 1));
  };
  auto dec = [](Elem e, int& axis, int& sign) {
    if (e < 2) {
      axis = 0;
      sign = e == 0 ? 1 : -1;
    } else {
      axis = e / 2;
      sign = e % 2 == 0 ? 1 : -1;
    }
  };
  // basis products i*j=k etc.
  auto basis_mul = [](int a, int b, int& axis, int& sign) {
    if (a == 0) { axis = b; sign = 1; return; }
    if (b == 0) { axis = a; sign = 1; return; }
    if (a == b) { axis = 0; sign = -1; return; }
    // cyclic i->j->k
    static const int nxt[4] = {0, 2, 3, 1};
    axis = 6 - a - b;  // the remaining axis
    sign = nxt[a] == b ? 1 : -1;
  };
  std::vector<Elem> t(64);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      int ax, sx, ay, sy, az, sz;
      dec(x, ax, sx);
      dec(y, ay, sy);
      basis_mul(ax, ay, az, sz);
      t[std::size_t(x) * 8 + y] = enc(az, sx * sy * sz);
    }
  return std::make_shared<FiniteGroup>(std::move(t), "Q8");
}

namespace {

GroupPtr perm_table(std::vector<std::vector<Elem>> perms, std::string label) {
  std::sort(perms.begin(), perms.end());
  // identity is lexicographically least, hence index 0
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = Elem(i);
  int n = int(perms.size());
  std::size_t deg = perms.empty() ? 0 : perms[0].size();
  std::vector<Elem> t(std::size_t(n) * n);
  std::vector<Elem> comp(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t p = 0; p < deg; ++p) comp[p] = perms[a][perms[b][p]];
      t[std::size_t(a) * n + b] = index.at(comp);
    }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(label));
}

}  // namespace

GroupPtr make_perm_group(int degree, const std::vector<std::vector<Elem>>& gens,
                         const Caps& caps) {
  if (degree < 1 || degree > 16) throw InputError("permutation degree must be 1..16");
  std::vector<Elem> ident(degree);
  std::iota(ident.begin(), ident.end(), Elem(0));
  std::set<std::vector<Elem>> seen{ident};
  std::vector<std::vector<Elem>> work{ident};
  for (const auto& g : gens) {
    if (int(g.size()) != degree) throw InputError("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (Elem v : g) {
      if (v >= degree || hit[v]) throw InputError("generator is not a permutation");
      hit[v] = 1;
    }
    if (seen.insert(g).second) work.push_back(g);
  }
  std::vector<Elem> comp(degree);
  for (std::size_t w = 0; w < work.size(); ++w) {
    auto cur = work[w];
    for (const auto& g : gens) {
      for (int p = 0; p < degree; ++p) comp[p] = cur[g[p]];
      if (seen.insert(comp).second) {
        if (static_cast<long long>(seen.size()) > caps.table_max)
          throw CapExceeded("permutation closure exceeds the order cap");
        work.push_back(comp);
      }
    }
  }
  return perm_table(std::vector<std::vector<Elem>>(seen.begin(), seen.end()),
                    "perm" + std::to_string(degree));
}

GroupPtr make_symmetric(int n, const Caps& caps) {
  if (n < 1 || n > 6) throw InputError("symmetric group degree must be 1..6");
  (void)caps;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem(0));
  std::vector<std::vector<Elem>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perm_table(std::move(perms), "S" + std::to_string(n));
}

GroupPtr make_alternating(int n, const Caps& caps) {
  if (n < 1 || n > 6) throw InputError("alternating group degree must be 1..6");
  (void)caps;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem(0));
  std::vector<std::vector<Elem>> perms;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perm_table(std::move(perms), "A" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps) {
  long long n = (long long)a->order() * b->order();
  if (n > caps.table_max) throw CapExceeded("product exceeds the order cap");
  int nb = b->order();
  std::vector<Elem> t(std::size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem ax = Elem(x / nb), bx = Elem(x % nb);
      Elem ay = Elem(y / nb), by = Elem(y % nb);
      t[std::size_t(x) * n + y] =
          Elem(a->mul(ax, ay) * nb + b->mul(bx, by));
    }
  return std::make_shared<FiniteGroup>(
      std::move(t), a->label() + "x" + b->label());
}

GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<Elem>>& action,
                            const Caps& caps) {
  int nn = n->order(), nh = h->order();
  long long tot = (long long)nn * nh;
  if (tot > caps.table_max) throw CapExceeded("semidirect product exceeds the order cap");
  if (int(action.size()) != nh)
    throw InputError("semidirect action must give one automorphism per acting element");
  // each action[i] must be an automorphism of n
  for (const auto& perm : action) {
    if (int(perm.size()) != nn) throw InputError("semidirect action has wrong size");
    std::vector<char> hit(nn, 0);
    for (Elem v : perm) {
      if (v >= nn || hit[v]) throw InputError("semidirect action is not a permutation");
      hit[v] = 1;
    }
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        if (perm[n->mul(a, b)] != n->mul(perm[a], perm[b]))
          throw InputError("semidirect action is not by automorphisms");
  }
  // action must be a homomorphism h -> Aut(n)
  for (Elem x = 0; x < nh; ++x)
    for (Elem y = 0; y < nh; ++y) {
      const auto& ax = action[x];
      const auto& ay = action[y];
      const auto& axy = action[h->mul(x, y)];
      for (Elem a = 0; a < nn; ++a)
        if (axy[a] != ax[ay[a]])
          throw InputError("semidirect action is not a homomorphism");
    }
  // (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2); element index = n_idx * |H| + h_idx
  std::vector<Elem> t(std::size_t(tot) * tot);
  for (long long x = 0; x < tot; ++x)
    for (long long y = 0; y < tot; ++y) {
      Elem n1 = Elem(x / nh), h1 = Elem(x % nh);
      Elem n2 = Elem(y / nh), h2 = Elem(y % nh);
      t[std::size_t(x) * tot + y] =
          Elem(n->mul(n1, action[h1][n2]) * nh + h->mul(h1, h2));
    }
  return std::make_shared<FiniteGroup>(
      std::move(t), n->label() + ":" + h->label());
}

}  // namespace fusebiset
