#include <set>

#include "pbw/finring.hpp"

namespace pbw {

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::Right: return "right";
    case IdealKind::Left: return "left";
    case IdealKind::TwoSided: return "two-sided";
  }
  return "?";
}

bool is_ideal(const FiniteRing& R, const ElementSet& m, IdealKind kind) {
  if (!m.test(R.zero())) return false;
  for (Elem a = 0; a < R.order(); ++a) {
    if (!m.test(a)) continue;
    if (!m.test(R.neg(a))) return false;
    for (Elem b = 0; b < R.order(); ++b) {
      if (m.test(b) && !m.test(R.add(a, b))) return false;
      if (kind != IdealKind::Left && !m.test(R.mul(a, b))) return false;
      if (kind != IdealKind::Right && !m.test(R.mul(b, a))) return false;
    }
  }
  return true;
}

Ideal annihilator(const FiniteRing& R, Side side, const ElementSet& S) {
  if (S.none()) throw RingError("annihilator: the subset S must be nonempty");
  ElementSet out = R.full_set();
  for (Elem x = 0; x < R.order(); ++x) {
    bool kills = true;
    for (auto s = S.find_first(); s != ElementSet::npos && kills; s = S.find_next(s)) {
      const Elem prod = side == Side::Right ? R.mul(static_cast<Elem>(s), x) : R.mul(x, static_cast<Elem>(s));
      kills = prod == R.zero();
    }
    if (!kills) out.reset(x);
  }
  return Ideal{std::move(out), side == Side::Right ? IdealKind::Right : IdealKind::Left};
}

namespace {

/// Extends the additive subgroup `group` (in place) by the cyclic subgroup of g.
void adjoin(const FiniteRing& R, ElementSet& group, std::vector<Elem>& list, Elem g) {
  if (group.test(g)) return;
  // group + <g> is the closure of group under x -> x + g.
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Elem y = R.add(list[i], g);
    if (!group.test(y)) {
      group.set(y);
      list.push_back(y);
    }
  }
}

}  // namespace

ElementSet additive_span(const FiniteRing& R, const ElementSet& generators) {
  ElementSet group(R.order());
  group.set(R.zero());
  std::vector<Elem> list{R.zero()};
  for_each_member(generators, [&](Elem g) { adjoin(R, group, list, g); });
  return group;
}

Ideal principal_ideal(const FiniteRing& R, Elem a, IdealKind kind) {
  ElementSet m(R.order());
  switch (kind) {
    case IdealKind::Right:
      for (Elem r = 0; r < R.order(); ++r) m.set(R.mul(a, r));
      break;
    case IdealKind::Left:
      for (Elem r = 0; r < R.order(); ++r) m.set(R.mul(r, a));
      break;
    case IdealKind::TwoSided: {
      ElementSet gens(R.order());
      for (Elem r = 0; r < R.order(); ++r) {
        const Elem ra = R.mul(r, a);
        for (Elem s = 0; s < R.order(); ++s) gens.set(R.mul(ra, s));
      }
      m = additive_span(R, gens);
      break;
    }
  }
  return Ideal{std::move(m), kind};
}

Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  ElementSet group = I.members;
  std::vector<Elem> list = members_of(group);
  for_each_member(J.members, [&](Elem g) { adjoin(R, group, list, g); });
  return Ideal{std::move(group), I.kind == J.kind ? I.kind : IdealKind::Right};
}

Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  ElementSet gens(R.order());
  for_each_member(I.members, [&](Elem i) {
    for_each_member(J.members, [&](Elem j) { gens.set(R.mul(i, j)); });
  });
  return Ideal{additive_span(R, gens), IdealKind::TwoSided};
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& R, IdealKind kind, std::size_t cap) {
  if (R.order() > cap) throw CapError(R.order(), cap);
  std::vector<Ideal> ideals;
  std::set<ElementSet, ElementSetLess> seen;
  for (Elem a = 0; a < R.order(); ++a) {
    Ideal I = principal_ideal(R, a, kind);
    if (seen.insert(I.members).second) ideals.push_back(std::move(I));
  }
  // Close under pairwise sums; each pass only pairs new ideals with everything.
  std::size_t done = 0;
  while (done < ideals.size()) {
    const std::size_t end = ideals.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        if (j >= done && j <= i) continue;  // each unordered pair once per pass
        Ideal S = ideal_sum(R, ideals[i], ideals[j]);
        S.kind = kind;
        if (seen.insert(S.members).second) ideals.push_back(std::move(S));
      }
    }
    done = end;
  }
  return ideals;
}

bool is_prime_ideal(const FiniteRing& R, const Ideal& P) {
  if (P.members.all()) return false;
  // Unital: P prime iff aRb in P implies a in P or b in P.
  for (Elem a = 0; a < R.order(); ++a) {
    if (P.contains(a)) continue;
    for (Elem b = 0; b < R.order(); ++b) {
      if (P.contains(b)) continue;
      bool inside = true;
      for (Elem r = 0; r < R.order() && inside; ++r) inside = P.contains(R.mul(R.mul(a, r), b));
      if (inside) return false;
    }
  }
  return true;
}

namespace {

std::vector<Ideal> maximal_among_proper(const std::vector<Ideal>& ideals) {
  std::vector<Ideal> out;
  for (const auto& I : ideals) {
    if (I.members.all()) continue;
    bool maximal = true;
    for (const auto& J : ideals) {
      if (J.members.all() || J.members == I.members) continue;
      if (I.members.is_subset_of(J.members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(I);
  }
  return out;
}

bool is_nil_set(const ElementSet& set, const ElementSet& nil) { return set.is_subset_of(nil); }

Ideal upper_nilradical_of(const FiniteRing& R, const std::vector<Ideal>& two_sided, const ElementSet& nil) {
  Ideal acc{singleton_set(R.order(), R.zero()), IdealKind::TwoSided};
  for (const auto& I : two_sided)
    if (is_nil_set(I.members, nil)) acc = ideal_sum(R, acc, I);
  acc.kind = IdealKind::TwoSided;
  return acc;
}

Ideal intersection_of(const FiniteRing& R, const std::vector<Ideal>& ideals, IdealKind kind) {
  ElementSet acc = R.full_set();
  for (const auto& I : ideals) acc &= I.members;
  return Ideal{std::move(acc), kind};
}

}  // namespace

std::vector<Ideal> special_ideals(const FiniteRing& R, SpecialKind kind, std::size_t cap) {
  if (kind == SpecialKind::MaximalRight) return maximal_among_proper(enumerate_ideals(R, IdealKind::Right, cap));
  auto two_sided = enumerate_ideals(R, IdealKind::TwoSided, cap);
  if (kind == SpecialKind::Maximal) return maximal_among_proper(two_sided);

  std::vector<Ideal> out;
  for (const auto& P : two_sided) {
    if (!is_prime_ideal(R, P)) continue;
    if (kind == SpecialKind::Prime) {
      out.push_back(P);
      continue;
    }
    FiniteRing Q = quotient_ring(R, P);
    if (kind == SpecialKind::StronglyPrime) {
      auto q_ideals = enumerate_ideals(Q, IdealKind::TwoSided, cap);
      if (upper_nilradical_of(Q, q_ideals, nilpotents(Q)).size() == 1) out.push_back(P);
    } else {
      auto q_max_right = maximal_among_proper(enumerate_ideals(Q, IdealKind::Right, cap));
      if (intersection_of(Q, q_max_right, IdealKind::TwoSided).size() == 1) out.push_back(P);
    }
  }
  return out;
}

RadicalSet radicals(const FiniteRing& R, std::size_t cap) {
  auto two_sided = enumerate_ideals(R, IdealKind::TwoSided, cap);
  auto right = enumerate_ideals(R, IdealKind::Right, cap);
  RadicalSet rs;
  rs.nilpotents = nilpotents(R);
  std::vector<Ideal> primes;
  for (const auto& P : two_sided)
    if (is_prime_ideal(R, P)) primes.push_back(P);
  rs.prime_radical = intersection_of(R, primes, IdealKind::TwoSided);
  rs.upper_nilradical = upper_nilradical_of(R, two_sided, rs.nilpotents);
  rs.jacobson = intersection_of(R, maximal_among_proper(right), IdealKind::TwoSided);
  return rs;
}

Quotient quotient_with_projection(const FiniteRing& R, const Ideal& I) {
  if (!is_ideal(R, I.members, IdealKind::TwoSided)) throw RingError("quotient_ring: not a two-sided ideal");
  if (I.members.all()) throw RingError("quotient_ring: ideal is not proper");

  const std::size_t q = R.order();
  std::vector<Elem> proj(q, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem a = 0; a < q; ++a) {
    if (proj[a] != static_cast<Elem>(-1)) continue;
    const Elem coset = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for_each_member(I.members, [&](Elem i) { proj[R.add(a, i)] = coset; });
  }
  const std::size_t qq = reps.size();
  std::vector<Elem> add(qq * qq), mul(qq * qq);
  std::vector<std::string> labels(qq);
  for (std::size_t x = 0; x < qq; ++x) {
    labels[x] = "[" + R.label(reps[x]) + "]";
    for (std::size_t y = 0; y < qq; ++y) {
      add[x * qq + y] = proj[R.add(reps[x], reps[y])];
      mul[x * qq + y] = proj[R.mul(reps[x], reps[y])];
    }
  }
  FiniteRing Q = FiniteRing::from_tables(R.name() + "/I", qq, std::move(add), std::move(mul), proj[R.zero()],
                                         proj[R.one()], std::move(labels), {"raw"});
  return Quotient{std::move(Q), std::move(proj)};
}

FiniteRing quotient_ring(const FiniteRing& R, const Ideal& I) { return quotient_with_projection(R, I).ring; }

}  // namespace pbw
