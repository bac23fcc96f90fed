#include "fusebiset/stable_sets.hpp"

#include <algorithm>

namespace fusebiset {

long long orbit_fixed_points(const Subgroup& q, const Subgroup& r) {
  const FiniteGroup& s = *q.parent();
  long long transporter = 0;
  for (Elem x = 0; x < s.order(); ++x) {
    Elem xi = s.inv(x);
    bool inside = true;
    for (Elem a : q.elements())
      if (!r.contains(s.mul3(xi, a, x))) {
        inside = false;
        break;
      }
    if (inside) ++transporter;
  }
  if (transporter % r.order() != 0)
    throw InternalError("transporter count not divisible by |R|");
  return transporter / r.order();
}

long long fixed_points(const FusionSystem& f, const SSet& x, int qid) {
  const ConjClasses& sc = f.s_classes();
  long long total = 0;
  for (const auto& [cls, mult] : x.coeffs) {
    const Subgroup& rep = f.subgroup(sc.canonical_rep[cls]);
    total += mult * orbit_fixed_points(f.subgroup(qid), rep);
  }
  return total;
}

StabilityReport is_f_stable(const FusionSystem& f, const SSet& x) {
  StabilityReport rep;
  const ConjClasses& sc = f.s_classes();
  // counts only depend on the S-class of the probe
  std::vector<long long> count(sc.class_count(), -1);
  auto count_of = [&](int pid) {
    int cls = sc.class_of[pid];
    if (count[cls] < 0) count[cls] = fixed_points(f, x, pid);
    return count[cls];
  };
  for (int pid = 0; pid < f.subgroup_count(); ++pid) {
    for (const GroupMap& m : f.maps_from(pid)) {
      int img = f.subgroup_id(m.image_elements());
      long long a = count_of(pid), b = count_of(img);
      if (a != b) {
        rep.stable = false;
        rep.source_id = pid;
        rep.image_id = img;
        rep.source_count = a;
        rep.image_count = b;
        return rep;
      }
    }
  }
  return rep;
}

SSet basis_element(const FusionSystem& f, int pid, BasisOptions* opts) {
  const ConjClasses& sc = f.s_classes();
  const ConjClasses& fc = f.f_classes();
  bool substituted = !f.fully_normalized(pid);
  if (substituted) pid = f.fully_normalized_rep(pid);
  if (opts) {
    opts->substituted = substituted;
    opts->used_subgroup = pid;
  }

  SSet x;
  long long n_rep = f.normalizer_of(pid).order();
  // top level: one S-class orbit per S-class inside the F-class, weighted by
  // the normalizer ratio
  {
    std::vector<char> seen(sc.class_count(), 0);
    for (int qid : fc.members[fc.class_of[pid]]) {
      int cls = sc.class_of[qid];
      if (seen[cls]) continue;
      seen[cls] = 1;
      long long n_q = f.normalizer_of(qid).order();
      if (n_rep % n_q != 0)
        throw NotSaturatedError("normalizer ratio is not integral",
                                f.subgroup(qid).elements());
      x.add(cls, n_rep / n_q);
    }
  }

  int level = f.subgroup(pid).order();
  for (int size = level / f.p(); size >= 1; size /= f.p()) {
    // deficiencies within one level are independent; compute then apply
    std::vector<std::pair<int, long long>> additions;
    std::vector<char> seen(sc.class_count(), 0);
    for (int qid = 0; qid < f.subgroup_count(); ++qid) {
      if (f.subgroup(qid).order() != size) continue;
      int cls = sc.class_of[qid];
      if (seen[cls]) continue;
      seen[cls] = 1;
      int fn = f.fully_normalized_rep(qid);
      long long want = fixed_points(f, x, fn);
      long long have = fixed_points(f, x, qid);
      long long deficiency = want - have;
      long long weyl = f.normalizer_of(qid).order() / size;
      if (deficiency < 0)
        throw NotSaturatedError("negative stabilization deficiency",
                                f.subgroup(qid).elements());
      if (deficiency % weyl != 0)
        throw NotSaturatedError("deficiency not divisible by the Weyl order",
                                f.subgroup(qid).elements());
      if (opts)
        opts->trace.push_back({cls, deficiency, weyl, deficiency / weyl});
      if (deficiency > 0) additions.emplace_back(cls, deficiency / weyl);
    }
    for (auto [cls, mult] : additions) x.add(cls, mult);
  }
  return x;
}

std::map<int, long long> decompose(const FusionSystem& f, const SSet& x) {
  StabilityReport stab = is_f_stable(f, x);
  if (!stab.stable) throw NotStable("S-set is not F-stable");
  const ConjClasses& sc = f.s_classes();
  const ConjClasses& fc = f.f_classes();

  std::map<int, SSet> basis_cache;
  auto basis_of = [&](int fcls) -> const SSet& {
    auto it = basis_cache.find(fcls);
    if (it == basis_cache.end())
      it = basis_cache.emplace(fcls, basis_element(f, fc.canonical_rep[fcls]))
               .first;
    return it->second;
  };

  SSet rest = x;
  std::map<int, long long> out;
  while (!rest.coeffs.empty()) {
    // largest outstanding class
    int top_cls = -1, top_order = 0;
    for (const auto& [cls, mult] : rest.coeffs) {
      int ord = f.subgroup(sc.canonical_rep[cls]).order();
      if (ord > top_order) {
        top_order = ord;
        top_cls = cls;
      }
    }
    int qid = sc.canonical_rep[top_cls];
    int fcls = fc.class_of[qid];
    int fn = fc.canonical_rep[fcls];
    long long d = rest.at(sc.class_of[fn]);
    if (d <= 0)
      throw InternalError("top-down subtraction found no leading coefficient");
    for (const auto& [cls, mult] : basis_of(fcls).coeffs) {
      rest.add(cls, -d * mult);
      if (rest.at(cls) < 0)
        throw InternalError("negative remainder while decomposing a stable set");
    }
    out[fcls] += d;
  }
  return out;
}

SSet combine(const FusionSystem& f, const std::map<int, long long>& coeffs) {
  const ConjClasses& fc = f.f_classes();
  SSet out;
  for (const auto& [fcls, mult] : coeffs) {
    if (mult < 0) throw InputError("combination coefficients must be >= 0");
    if (mult == 0) continue;
    SSet b = basis_element(f, fc.canonical_rep[fcls]);
    for (const auto& [cls, m] : b.coeffs) out.add(cls, mult * m);
  }
  return out;
}

}  // namespace fusebiset
