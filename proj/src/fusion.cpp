#include "fusebiset/fusion.hpp"

#include <algorithm>
#include <set>

namespace fusebiset {

namespace {

ConjClasses build_classes(const FusionSystem& f,
                          const std::function<bool(int, int)>& related) {
  int n = f.subgroup_count();
  ConjClasses out;
  out.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (out.class_of[i] != -1) continue;
    int cid = out.class_count();
    out.members.push_back({});
    // subgroups are sorted by order, so classmates of i come at or after i
    out.class_of[i] = cid;
    out.members[cid].push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (out.class_of[j] != -1) continue;
      if (f.subgroup(j).order() != f.subgroup(i).order()) continue;
      if (related(i, j)) {
        out.class_of[j] = cid;
        out.members[cid].push_back(j);
      }
    }
  }
  for (const auto& cls : out.members) {
    int best_n = 0, best_c = 0;
    for (int id : cls) {
      best_n = std::max(best_n, f.normalizer_of(id).order());
      best_c = std::max(best_c, f.centralizer_of(id).order());
    }
    std::vector<int> fn, fc;
    int rep = -1;
    for (int id : cls) {
      if (f.normalizer_of(id).order() == best_n) {
        fn.push_back(id);
        if (rep == -1) rep = id;  // members are in canonical subgroup order
      }
      if (f.centralizer_of(id).order() == best_c) fc.push_back(id);
    }
    out.fully_normalized.push_back(std::move(fn));
    out.fully_centralized.push_back(std::move(fc));
    out.canonical_rep.push_back(rep);
  }
  return out;
}

}  // namespace

int FusionSystem::subgroup_id(const std::vector<Elem>& sorted_elems) const {
  auto it = index_.find(sorted_elems);
  if (it == index_.end()) throw InputError("not a subgroup of S");
  return it->second;
}

std::vector<GroupMap> FusionSystem::homs(int pid, int qid) const {
  const Subgroup& q = subgroups_[qid];
  std::vector<GroupMap> out;
  for (const GroupMap& m : homs_[pid]) {
    bool inside = true;
    for (Elem y : m.images())
      if (!q.contains(y)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(m);
  }
  return out;
}

bool FusionSystem::contains(const GroupMap& phi) const {
  auto it = index_.find(phi.source().elements());
  if (it == index_.end()) return false;
  const auto& maps = homs_[it->second];
  return std::binary_search(maps.begin(), maps.end(), phi);
}

std::vector<GroupMap> FusionSystem::aut_s(int pid) const {
  const Subgroup& p = subgroups_[pid];
  std::set<std::vector<Elem>> seen;
  std::vector<GroupMap> out;
  for (Elem x : normalizers_[pid].elements()) {
    GroupMap m = GroupMap::conjugation(p, x);
    if (seen.insert(m.images()).second) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long FusionSystem::out_s_order() const {
  long long aut = (long long)maps_from(full_id_).size();
  long long inn = (long long)aut_s(full_id_).size();
  if (aut % inn != 0) throw InternalError("Inn(S) does not divide Aut_F(S)");
  return aut / inn;
}

const ConjClasses& FusionSystem::s_classes() const {
  if (!s_classes_) {
    s_classes_ = build_classes(*this, [this](int i, int j) {
      const Subgroup& a = subgroups_[i];
      const auto& bj = subgroups_[j].elements();
      for (Elem x = 0; x < s_->order(); ++x)
        if (a.conjugate(x).elements() == bj) return true;
      return false;
    });
  }
  return *s_classes_;
}

const ConjClasses& FusionSystem::f_classes() const {
  if (!f_classes_) {
    f_classes_ = build_classes(*this, [this](int i, int j) {
      const auto& bj = subgroups_[j].elements();
      for (const GroupMap& m : homs_[i])
        if (m.image_elements() == bj) return true;
      return false;
    });
  }
  return *f_classes_;
}

bool FusionSystem::fully_normalized(int pid) const {
  const ConjClasses& fc = f_classes();
  const auto& fn = fc.fully_normalized[fc.class_of[pid]];
  return std::find(fn.begin(), fn.end(), pid) != fn.end();
}

bool FusionSystem::fully_centralized(int pid) const {
  const ConjClasses& fc = f_classes();
  const auto& list = fc.fully_centralized[fc.class_of[pid]];
  return std::find(list.begin(), list.end(), pid) != list.end();
}

int FusionSystem::fully_normalized_rep(int pid) const {
  const ConjClasses& fc = f_classes();
  return fc.canonical_rep[fc.class_of[pid]];
}

bool FusionSystem::operator==(const FusionSystem& o) const {
  if (p_ != o.p_ || s_->order() != o.s_->order()) return false;
  for (Elem a = 0; a < s_->order(); ++a)
    for (Elem b = 0; b < s_->order(); ++b)
      if (s_->mul(a, b) != o.s_->mul(a, b)) return false;
  if (subgroups_.size() != o.subgroups_.size()) return false;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i] != o.subgroups_[i]) return false;
    if (homs_[i].size() != o.homs_[i].size()) return false;
    for (std::size_t k = 0; k < homs_[i].size(); ++k)
      if (!(homs_[i][k] == o.homs_[i][k])) return false;
  }
  return true;
}

FusionSystem FusionSystem::from_store(GroupPtr s, int p,
                                      std::vector<std::vector<GroupMap>> store,
                                      std::optional<EmbeddedGroup> ambient,
                                      bool ambient_sylow, const Caps& caps) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (!is_p_power(s->order(), p))
    throw InputError("S must be a p-group");
  if (s->order() > caps.fusion_s_max)
    throw CapExceeded("fusion systems need |S| <= " +
                      std::to_string(caps.fusion_s_max));
  FusionSystem f;
  f.s_ = std::move(s);
  f.p_ = p;
  f.subgroups_ = all_subgroups(f.s_, caps);
  for (std::size_t i = 0; i < f.subgroups_.size(); ++i)
    f.index_[f.subgroups_[i].elements()] = int(i);
  f.full_id_ = f.index_.at(Subgroup::full(f.s_).elements());
  if (store.size() != f.subgroups_.size())
    throw InternalError("store does not match the subgroup lattice");
  for (auto& maps : store) std::sort(maps.begin(), maps.end());
  f.homs_ = std::move(store);
  for (const Subgroup& sub : f.subgroups_) {
    f.normalizers_.push_back(normalizer(sub));
    f.centralizers_.push_back(centralizer(sub));
  }
  f.ambient_ = std::move(ambient);
  f.ambient_sylow_ = ambient_sylow;
  return f;
}

FusionSystem fusion_of_group(const GroupPtr& g, const Subgroup& s, int p,
                             const Caps& caps) {
  if (s.parent() != g) throw InputError("S must be a subgroup of G");
  if (!is_prime(p)) throw InputError("p must be prime");
  if (s.order() % p != 0) throw InputError("p does not divide |S|");
  EmbeddedGroup emb = promote(s, g->label() + "-sylow");
  bool sylow = is_sylow(g, s, p);
  auto subgroups = all_subgroups(emb.group, caps);
  std::vector<std::vector<GroupMap>> store(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const Subgroup& sub = subgroups[i];
    std::set<std::vector<Elem>> seen;
    for (int gx = 0; gx < g->order(); ++gx) {
      Elem ge = Elem(gx);
      std::vector<Elem> img(sub.order());
      bool lands = true;
      for (std::size_t k = 0; k < img.size() && lands; ++k) {
        Elem y = g->conj(ge, emb.to_parent[sub.elements()[k]]);
        int m = emb.from_parent[y];
        if (m < 0)
          lands = false;
        else
          img[k] = Elem(m);
      }
      if (!lands) continue;
      if (seen.insert(img).second) {
        if ((long long)seen.size() > caps.hom_set_max)
          throw CapExceeded("morphism set exceeds the configured guard");
        store[i].emplace_back(sub, emb.group, std::move(img),
                              GroupMap::Unchecked{});
      }
    }
  }
  return FusionSystem::from_store(emb.group, p, std::move(store), emb, sylow,
                                  caps);
}

FusionSystem generate_fusion(const GroupPtr& s, int p,
                             const std::vector<GroupMap>& generators,
                             const Caps& caps) {
  auto subgroups = all_subgroups(s, caps);
  std::map<std::vector<Elem>, int> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    index[subgroups[i].elements()] = int(i);

  std::vector<std::set<std::vector<Elem>>> seen(subgroups.size());
  std::vector<std::vector<GroupMap>> store(subgroups.size());
  // byImage[j]: indices (pid, k) of stored maps with image subgroups_[j]
  std::vector<std::vector<std::pair<int, int>>> by_image(subgroups.size());
  std::vector<std::pair<int, int>> work;

  long long total = 0;
  auto insert = [&](int pid, GroupMap m) {
    if (!seen[pid].insert(m.images()).second) return;
    if (++total > caps.hom_set_max * (long long)subgroups.size() ||
        (long long)seen[pid].size() > caps.hom_set_max)
      throw CapExceeded("fusion closure exceeds the morphism guard");
    int k = int(store[pid].size());
    int img_id = index.at(m.image_elements());
    store[pid].push_back(std::move(m));
    by_image[img_id].emplace_back(pid, k);
    work.emplace_back(pid, k);
  };

  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (Elem x = 0; x < s->order(); ++x)
      insert(int(i), GroupMap::conjugation(subgroups[i], x));
  for (const GroupMap& gen : generators) {
    if (gen.source().parent() != s || gen.target_parent() != s)
      throw InputError("generator is not a map between subgroups of S");
    GroupMap copy(gen.source(), s, gen.images());  // re-validate
    insert(index.at(gen.source().elements()), std::move(copy));
  }

  while (!work.empty()) {
    auto [pid, k] = work.back();
    work.pop_back();
    GroupMap m = store[pid][k];  // copy: store may reallocate
    int img_id = index.at(m.image_elements());
    insert(img_id, m.inverse());
    for (std::size_t j = 0; j < subgroups.size(); ++j) {
      if (int(j) == pid) continue;
      if (subgroups[pid].contains_all(subgroups[j]))
        insert(int(j), m.restrict_to(subgroups[j]));
    }
    // post-compose: anything with source exactly image(m)
    for (std::size_t k2 = 0; k2 < store[img_id].size(); ++k2)
      insert(pid, m.then(store[img_id][k2]));
    // pre-compose: anything with image exactly source(m)
    auto feeders = by_image[pid];  // copy: grows during iteration
    for (auto [qid, k2] : feeders)
      insert(qid, store[qid][k2].then(m));
  }
  return FusionSystem::from_store(s, p, std::move(store), std::nullopt, true,
                                  caps);
}

Subgroup extender(const FusionSystem& f, const GroupMap& phi) {
  if (!f.contains(phi)) throw InputError("morphism is not in the fusion system");
  const FiniteGroup& s = *f.s();
  const Subgroup& p = phi.source();
  Subgroup ns = normalizer(p);
  std::vector<Elem> out;
  for (Elem x : ns.elements()) {
    // need y with phi(x a x^-1) = y phi(a) y^-1 for all a
    bool found = false;
    for (Elem y = 0; y < s.order() && !found; ++y) {
      bool ok = true;
      for (Elem a : p.elements())
        if (phi.apply(s.conj(x, a)) != s.conj(y, phi.apply(a))) {
          ok = false;
          break;
        }
      found = ok;
    }
    if (found) out.push_back(x);
  }
  return Subgroup(f.s(), std::move(out));
}

SaturationReport is_saturated(const FusionSystem& f) {
  SaturationReport rep;
  for (int pid = 0; pid < f.subgroup_count(); ++pid) {
    if (!f.fully_normalized(pid)) continue;
    // axiom 1: fully normalized => fully centralized, and Aut_S(P) is a
    // Sylow p-subgroup of Aut_F(P)
    if (!f.fully_centralized(pid)) {
      rep.axiom = 1;
      rep.witness = f.subgroup(pid);
      rep.detail = "fully normalized subgroup is not fully centralized";
      return rep;
    }
    long long aut_f = (long long)f.aut_f(pid).size();
    long long aut_s = (long long)f.aut_s(pid).size();
    if (aut_s != p_part(aut_f, f.p())) {
      rep.axiom = 1;
      rep.witness = f.subgroup(pid);
      rep.detail = "Aut_S(P) is not Sylow in Aut_F(P)";
      return rep;
    }
  }
  for (int pid = 0; pid < f.subgroup_count(); ++pid) {
    for (const GroupMap& phi : f.maps_from(pid)) {
      int img_id = f.subgroup_id(phi.image_elements());
      if (!f.fully_centralized(img_id)) continue;
      // axiom 2: phi extends to its extender
      Subgroup nphi = extender(f, phi);
      if (nphi.order() == phi.source().order()) continue;  // trivial extension
      bool extends = false;
      int nid = f.subgroup_id(nphi.elements());
      for (const GroupMap& psi : f.maps_from(nid)) {
        bool agrees = true;
        for (Elem a : phi.source().elements())
          if (psi.apply(a) != phi.apply(a)) {
            agrees = false;
            break;
          }
        if (agrees) {
          extends = true;
          break;
        }
      }
      if (!extends) {
        rep.axiom = 2;
        rep.witness = phi.source();
        rep.witness_map = phi;
        rep.witness_extender = nphi;
        rep.detail = "morphism with fully centralized image does not extend "
                     "to its extender";
        return rep;
      }
    }
  }
  rep.saturated = true;
  return rep;
}

NormalizerMapReport normalizer_map_check(const FusionSystem& f) {
  NormalizerMapReport rep;
  const ConjClasses& fc = f.f_classes();
  for (int cid = 0; cid < fc.class_count(); ++cid) {
    for (int pid : fc.fully_normalized[cid]) {
      const Subgroup& p = f.subgroup(pid);
      const Subgroup& np = f.normalizer_of(pid);
      for (int qid : fc.members[cid]) {
        const Subgroup& q = f.subgroup(qid);
        int nq_id = f.subgroup_id(normalizer(q).elements());
        bool found = false;
        for (const GroupMap& m : f.maps_from(nq_id)) {
          // must land in N_S(P) and carry Q onto P
          bool into = true;
          for (Elem y : m.images())
            if (!np.contains(y)) {
              into = false;
              break;
            }
          if (!into) continue;
          std::vector<Elem> img_q;
          for (Elem a : q.elements()) img_q.push_back(m.apply(a));
          std::sort(img_q.begin(), img_q.end());
          if (img_q == p.elements()) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.holds = false;
          rep.rep = p;
          rep.member = q;
          rep.detail = "no morphism N_S(Q) -> N_S(P) carries Q onto P";
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace fusebiset
