#include "pbw/spectop.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pbw {

namespace {

std::vector<ElementSet> sorted_unique(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return ElementSetLess{}(a, b);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string ideal_label(const FiniteRing& R, const Ideal& I) {
  std::string out = "{";
  bool first = true;
  for_each_member(I.members, [&](Elem e) {
    out += (first ? "" : ", ") + R.label(e);
    first = false;
  });
  return out + "}";
}

std::string points_text(const FiniteTopology& T, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](Elem e) {
    out += (first ? "" : ", ") + T.points[e];
    first = false;
  });
  return out + "}";
}

}  // namespace

bool FiniteTopology::is_open(const ElementSet& s) const { return std::find(opens.begin(), opens.end(), s) != opens.end(); }

ElementSet FiniteTopology::min_open(const ElementSet& s) const {
  ElementSet out(size());
  out.set();
  for (const auto& U : opens)
    if (s.is_subset_of(U)) out &= U;
  return out;
}

std::vector<ElementSet> FiniteTopology::subspace_opens(const ElementSet& sub) const {
  std::vector<ElementSet> out;
  for (const auto& U : opens) out.push_back(U & sub);
  return sorted_unique(std::move(out));
}

std::vector<ElementSet> union_closure(std::size_t n, const std::vector<ElementSet>& basis, std::size_t cap) {
  std::set<ElementSet, ElementSetLess> seen;
  ElementSet empty(n), full(n);
  full.set();
  seen.insert(empty);
  std::vector<ElementSet> frontier{empty};
  // breadth-first: every open is a union of basis sets, reached by adding one at a time
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& U : frontier)
      for (const auto& B : basis) {
        ElementSet V = U | B;
        if (seen.insert(V).second) {
          if (seen.size() > cap) throw TopologyError("topology has more than " + std::to_string(cap) + " open sets");
          next.push_back(std::move(V));
        }
      }
    frontier = std::move(next);
  }
  seen.insert(full);
  return sorted_unique({seen.begin(), seen.end()});
}

SpectrumBundle spectra(const FiniteRing& R, std::size_t cap) {
  SpectrumBundle B;
  B.primes = special_ideals(R, SpecialKind::Prime, cap);
  const auto strongly = special_ideals(R, SpecialKind::StronglyPrime, cap);
  const auto jprime = special_ideals(R, SpecialKind::JPrime, cap);
  const auto maximal = special_ideals(R, SpecialKind::Maximal, cap);
  const auto ideals = enumerate_ideals(R, IdealKind::TwoSided, cap);
  const std::size_t n = B.primes.size();

  FiniteTopology& T = B.spec;
  T.name = "Spec(" + R.name() + ")";
  T.ring_sourced = true;
  T.max = T.sspec = T.jspec = ElementSet(n);
  T.leq.assign(n, std::vector<bool>(n, false));
  auto has = [](const std::vector<Ideal>& v, const Ideal& I) { return std::find(v.begin(), v.end(), I) != v.end(); };
  for (std::size_t i = 0; i < n; ++i) {
    T.points.push_back(ideal_label(R, B.primes[i]));
    T.max[i] = has(maximal, B.primes[i]);
    T.sspec[i] = has(strongly, B.primes[i]);
    T.jspec[i] = has(jprime, B.primes[i]);
    for (std::size_t j = 0; j < n; ++j) T.leq[i][j] = B.primes[i].members.is_subset_of(B.primes[j].members);
  }

  auto W = [&](const Ideal& I) {
    ElementSet s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = !I.members.is_subset_of(B.primes[k].members);
    return s;
  };
  std::vector<ElementSet> basis;
  for (const auto& I : ideals) basis.push_back(W(I));
  T.opens = union_closure(n, basis);

  for (std::size_t a = 0; a < ideals.size() && !B.zariski_failure; ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      const ElementSet wa = W(ideals[a]), wb = W(ideals[b]);
      if ((wa & wb) != W(ideal_product(R, ideals[a], ideals[b]))) {
        B.zariski_failure = "W(I)W(J) law fails for I = " + ideal_label(R, ideals[a]) + ", J = " + ideal_label(R, ideals[b]);
        break;
      }
      if ((wa | wb) != W(ideal_sum(R, ideals[a], ideals[b]))) {
        B.zariski_failure = "W(I + J) law fails for I = " + ideal_label(R, ideals[a]) + ", J = " + ideal_label(R, ideals[b]);
        break;
      }
    }

  // O(I) = {P in SSpec : I not in P}, D(I) likewise on JSpec
  std::vector<ElementSet> ob, db;
  for (const auto& w : basis) {
    ob.push_back(w & T.sspec);
    db.push_back(w & T.jspec);
  }
  auto own = [&](const std::vector<ElementSet>& bs, const ElementSet& sub) {
    std::vector<ElementSet> out;
    for (const auto& U : union_closure(n, bs)) out.push_back(U & sub);  // full set traced to sub
    return sorted_unique(std::move(out));
  };
  B.o_topology = own(ob, T.sspec);
  B.d_topology = own(db, T.jspec);
  B.o_matches_subspace = B.o_topology == T.subspace_opens(T.sspec);
  B.d_matches_subspace = B.d_topology == T.subspace_opens(T.jspec);
  return B;
}

FiniteTopology synthetic_space(std::string name, const std::vector<PosetNode>& nodes,
                               const std::vector<std::pair<std::string, std::string>>& covers,
                               const std::vector<std::string>& max_tags) {
  const std::size_t n = nodes.size();
  if (n == 0) throw TopologyError(name + ": empty poset");
  if (n > 24) throw TopologyError(name + ": at most 24 nodes are supported");
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!idx.emplace(nodes[i].name, i).second) throw TopologyError(name + ": duplicate node " + nodes[i].name);
  auto at = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw TopologyError(name + ": unknown node " + s);
    return it->second;
  };

  FiniteTopology T;
  T.name = std::move(name);
  T.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) T.leq[i][i] = true;
  for (const auto& [lo, hi] : covers) {
    if (lo == hi) throw TopologyError(T.name + ": reflexive cover " + lo + " < " + hi);
    T.leq[at(lo)][at(hi)] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (T.leq[i][k] && T.leq[k][j]) T.leq[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (T.leq[i][j] && T.leq[j][i])
        throw TopologyError(T.name + ": not a partial order, " + nodes[i].name + " and " + nodes[j].name + " are below each other");

  T.max = T.sspec = T.jspec = ElementSet(n);
  for (std::size_t i = 0; i < n; ++i) {
    T.points.push_back(nodes[i].name);
    T.sspec[i] = nodes[i].sspec;
    T.jspec[i] = nodes[i].jspec;
  }
  for (const auto& m : max_tags) T.max[at(m)] = true;
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < n; ++j) maximal = maximal && (i == j || !T.leq[i][j]);
    if (maximal != T.max[i])
      throw TopologyError(T.name + ": max tag on " + nodes[i].name + (maximal ? " missing" : " on a non-maximal node"));
    // maximal points are strongly prime and J-prime
    if (maximal) T.sspec[i] = T.jspec[i] = true;
  }

  // opens are the down-sets, i.e. unions of principal down-sets
  std::vector<ElementSet> basis;
  for (std::size_t j = 0; j < n; ++j) {
    ElementSet d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = T.leq[i][j];
    basis.push_back(std::move(d));
  }
  T.opens = union_closure(n, basis);
  return T;
}

TopoReport topo_properties(const FiniteTopology& T) {
  TopoReport rep;
  const std::size_t n = T.size();
  auto single = [&](std::size_t i) { return singleton_set(n, static_cast<Elem>(i)); };
  rep.t0 = rep.t1 = true;
  for (std::size_t i = 0; i < n && rep.t0; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // i and j are indistinguishable iff each lies in the other's smallest neighbourhood
      if (T.min_open(single(i)).test(j) && T.min_open(single(j)).test(i)) {
        rep.t0 = false;
        rep.t0_witness = T.points[i] + ", " + T.points[j];
        break;
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    ElementSet rest = ~single(i);
    if (!T.is_open(rest)) {
      rep.t1 = false;
      rep.t1_witness = T.points[i] + " is not closed";
      break;
    }
  }
  std::vector<ElementSet> closed;
  for (const auto& U : T.opens) closed.push_back(~U);
  rep.normal = true;
  for (std::size_t a = 0; a < closed.size() && rep.normal; ++a)
    for (std::size_t b = a + 1; b < closed.size(); ++b) {
      if (closed[a].intersects(closed[b])) continue;
      if (T.min_open(closed[a]).intersects(T.min_open(closed[b]))) {
        rep.normal = false;
        rep.normal_witness = "closed sets " + points_text(T, closed[a]) + " and " + points_text(T, closed[b]) + " cannot be separated";
        break;
      }
    }
  // Hausdorff on Max with the subspace topology
  const auto sub = T.subspace_opens(T.max);
  auto sub_min = [&](std::size_t i) {
    ElementSet out = T.max;
    for (const auto& U : sub)
      if (U.test(i)) out &= U;
    return out;
  };
  rep.max_hausdorff = true;
  const auto maxpts = members_of(T.max);
  for (std::size_t a = 0; a < maxpts.size() && rep.max_hausdorff; ++a)
    for (std::size_t b = a + 1; b < maxpts.size(); ++b)
      if (sub_min(maxpts[a]).intersects(sub_min(maxpts[b]))) {
        rep.max_hausdorff = false;
        rep.hausdorff_witness = T.points[maxpts[a]] + ", " + T.points[maxpts[b]];
        break;
      }
  return rep;
}

PmReport pm_checks(const FiniteTopology& T) {
  PmReport rep;
  rep.degenerate = T.ring_sourced;
  auto check = [&](const ElementSet& pts) {
    PmVerdict v;
    for_each_member(pts, [&](Elem i) {
      if (!v.value) return;
      std::size_t above = 0;
      for_each_member(T.max, [&](Elem m) { above += T.leq[i][m] ? 1 : 0; });
      if (above != 1) {
        v.value = false;
        v.witness = T.points[i] + " lies below " + std::to_string(above) + " maximal points";
      }
    });
    return v;
  };
  ElementSet all(T.size());
  all.set();
  rep.pm = check(all);
  rep.weakly_pm = check(T.sspec);
  rep.j_pm = check(T.jspec);
  return rep;
}

std::string to_string(RetractVerdict::Kind k) {
  switch (k) {
    case RetractVerdict::Kind::Exists: return "exists";
    case RetractVerdict::Kind::None: return "none";
    case RetractVerdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

RetractVerdict retract_exists(const FiniteTopology& T, std::uint64_t budget) {
  RetractVerdict v;
  const std::size_t n = T.size();
  const auto maxpts = members_of(T.max);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!T.max.test(i)) rest.push_back(i);
  if (maxpts.empty()) {
    v.kind = RetractVerdict::Kind::None;
    v.note = "Max is empty";
    return v;
  }
  long double total = 1;
  for (std::size_t k = 0; k < rest.size(); ++k) total *= static_cast<long double>(maxpts.size());
  if (total > static_cast<long double>(budget)) {
    v.kind = RetractVerdict::Kind::Inconclusive;
    v.note = "|Max|^|Spec \\ Max| exceeds the budget of " + std::to_string(budget) + " maps";
    return v;
  }
  const auto sub = T.subspace_opens(T.max);
  std::vector<std::size_t> choice(rest.size(), 0);
  std::vector<std::size_t> r(n);
  while (true) {
    ++v.candidates;
    for (std::size_t i = 0; i < n; ++i) r[i] = i;
    for (std::size_t k = 0; k < rest.size(); ++k) r[rest[k]] = maxpts[choice[k]];
    bool continuous = true;
    for (const auto& U : sub) {
      ElementSet pre(n);
      for (std::size_t i = 0; i < n; ++i) pre[i] = U.test(r[i]);
      if (!T.is_open(pre)) {
        continuous = false;
        break;
      }
    }
    if (continuous) {
      v.kind = RetractVerdict::Kind::Exists;
      v.retraction = r;
      v.note = "continuous retraction found";
      return v;
    }
    std::size_t k = rest.size();
    while (k > 0 && ++choice[k - 1] == maxpts.size()) choice[--k] = 0;
    if (k == 0) break;
  }
  v.kind = RetractVerdict::Kind::None;
  v.note = "no continuous retraction among " + std::to_string(v.candidates) + " maps";
  return v;
}

std::vector<std::string> spectral_consistency(const FiniteTopology& T) {
  std::vector<std::string> out;
  const TopoReport tp = topo_properties(T);
  const PmReport pm = pm_checks(T);
  const RetractVerdict rv = retract_exists(T);
  if (rv.kind == RetractVerdict::Kind::Exists && !pm.pm.value)
    out.push_back(T.name + ": retraction exists but pm fails (" + pm.pm.witness.value_or("") + ")");
  if (tp.normal && !tp.max_hausdorff)
    out.push_back(T.name + ": normal but Max is not Hausdorff (" + tp.hausdorff_witness.value_or("") + ")");
  if (!T.max.is_subset_of(T.sspec) || !T.max.is_subset_of(T.jspec))
    out.push_back(T.name + ": a maximal point is not tagged strongly prime and J-prime");
  if (T.ring_sourced && !(pm.pm.value && pm.weakly_pm.value && pm.j_pm.value))
    out.push_back(T.name + ": finite ring spectrum is not pm");
  return out;
}

}  // namespace pbw
