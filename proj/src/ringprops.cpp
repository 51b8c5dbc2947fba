#include "pbw/ringprops.hpp"

#include <set>

namespace pbw {

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names{
      "reduced",          "abelian",          "semicommutative",       "symmetric",
      "reversible",       "reflexive",        "weak_symmetric",        "nil_reversible",
      "two_primal",       "NI",               "NJ",                    "baer",
      "quasi_baer",       "sigma_semicommutative", "sigma_rigid",      "sigma_compatible",
      "delta_compatible", "weak_sigma_compatible", "weak_delta_compatible", "skew_rnp_right",
      "skew_rnp_left"};
  return names;
}

const Verdict* ClassificationReport::find(const std::string& name) const {
  auto it = verdicts.find(name);
  return it == verdicts.end() ? nullptr : &it->second;
}

bool ClassificationReport::holds(const std::string& name) const {
  const Verdict* v = find(name);
  if (!v) throw RingError("classification of '" + ring + "' has no verdict for " + name);
  return v->value;
}

RingAnalyzer::RingAnalyzer(RingPtr R, std::size_t cap) : ring_(std::move(R)), cap_(cap) {
  const FiniteRing& r = *ring_;
  const std::size_t q = r.order();
  if (q > cap_) throw CapError(q, cap_);
  right_zero_.assign(q, ElementSet(q));
  left_zero_.assign(q, ElementSet(q));
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      if (r.mul(a, b) == r.zero()) {
        right_zero_[a].set(b);
        left_zero_[b].set(a);
      }
  // aRb = 0 iff b is killed on the right by every a*r.
  sandwich_.assign(q, ElementSet(q));
  for (Elem a = 0; a < q; ++a) {
    ElementSet acc = r.full_set();
    for (Elem x = 0; x < q && acc.any(); ++x) acc &= right_zero_[r.mul(a, x)];
    sandwich_[a] = std::move(acc);
  }
  nil_ = nilpotents(r);
  idem_ = idempotents(r);
  for_each_member(idem_, [&](Elem e) { idempotent_ideals_.emplace_back(e, principal_ideal(r, e, IdealKind::Right).members); });
}

ElementSet RingAnalyzer::left_annihilator(const ElementSet& S) const {
  ElementSet acc = ring_->full_set();
  for_each_member(S, [&](Elem s) { acc &= left_zero_[s]; });
  return acc;
}

ElementSet RingAnalyzer::right_annihilator(const ElementSet& S) const {
  ElementSet acc = ring_->full_set();
  for_each_member(S, [&](Elem s) { acc &= right_zero_[s]; });
  return acc;
}

std::optional<Elem> RingAnalyzer::generating_idempotent(const ElementSet& set) const {
  for (const auto& [e, ideal] : idempotent_ideals_)
    if (ideal == set) return e;
  return std::nullopt;
}

const RadicalSet& RingAnalyzer::radical_set() const {
  if (!radicals_) radicals_ = radicals(*ring_, cap_);
  return *radicals_;
}

namespace {

Witness elems(std::vector<Elem> e, std::string note) {
  Witness w;
  w.elements = std::move(e);
  w.note = std::move(note);
  return w;
}

Witness with_map(Witness w, const ClosureMember& m) {
  w.map = m.map.name;
  w.exponents = m.exponents;
  return w;
}

/// First r with a r b != 0; only called when b is outside sandwich(a).
Elem first_middle(const FiniteRing& R, Elem a, Elem b) {
  for (Elem r = 0; r < R.order(); ++r)
    if (R.mul(R.mul(a, r), b) != R.zero()) return r;
  return 0;
}

}  // namespace

Verdict RingAnalyzer::reduced() const {
  const FiniteRing& R = *ring_;
  for (Elem a = 0; a < R.order(); ++a)
    if (a != R.zero() && R.mul(a, a) == R.zero()) return Verdict::no(elems({a}, "a != 0 with a*a = 0"));
  return Verdict::yes();
}

Verdict RingAnalyzer::abelian() const {
  const FiniteRing& R = *ring_;
  for (auto e = idem_.find_first(); e != ElementSet::npos; e = idem_.find_next(e))
    for (Elem r = 0; r < R.order(); ++r)
      if (R.mul(static_cast<Elem>(e), r) != R.mul(r, static_cast<Elem>(e)))
        return Verdict::no(elems({static_cast<Elem>(e), r}, "idempotent e and r with e*r != r*e"));
  return Verdict::yes();
}

Verdict RingAnalyzer::semicommutative() const {
  const FiniteRing& R = *ring_;
  for (Elem a = 0; a < R.order(); ++a) {
    ElementSet bad = right_zero_[a] - sandwich_[a];
    if (auto b = bad.find_first(); b != ElementSet::npos) {
      const Elem bb = static_cast<Elem>(b);
      return Verdict::no(elems({a, first_middle(R, a, bb), bb}, "(a, r, b) with a*b = 0 but a*r*b != 0"));
    }
  }
  return Verdict::yes();
}

Verdict RingAnalyzer::symmetric() const {
  const FiniteRing& R = *ring_;
  const Elem z = R.zero();
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b) {
      const Elem ab = R.mul(a, b);
      for (Elem c = 0; c < R.order(); ++c)
        if (R.mul(ab, c) == z && R.mul(R.mul(a, c), b) != z)
          return Verdict::no(elems({a, b, c}, "(a, b, c) with a*b*c = 0 but a*c*b != 0"));
    }
  return Verdict::yes();
}

Verdict RingAnalyzer::reversible() const {
  for (Elem a = 0; a < ring_->order(); ++a) {
    ElementSet bad = right_zero_[a] - left_zero_[a];
    if (auto b = bad.find_first(); b != ElementSet::npos)
      return Verdict::no(elems({a, static_cast<Elem>(b)}, "(a, b) with a*b = 0 but b*a != 0"));
  }
  return Verdict::yes();
}

Verdict RingAnalyzer::reflexive() const {
  for (Elem a = 0; a < ring_->order(); ++a)
    for (auto b = sandwich_[a].find_first(); b != ElementSet::npos; b = sandwich_[a].find_next(b))
      if (!sandwich_[b].test(a))
        return Verdict::no(elems({a, static_cast<Elem>(b)}, "(a, b) with aRb = 0 but bRa != 0"));
  return Verdict::yes();
}

Verdict RingAnalyzer::weak_symmetric() const {
  const FiniteRing& R = *ring_;
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b) {
      const Elem ab = R.mul(a, b);
      for (Elem c = 0; c < R.order(); ++c)
        if (nil_.test(R.mul(ab, c)) && !nil_.test(R.mul(R.mul(a, c), b)))
          return Verdict::no(elems({a, b, c}, "(a, b, c) with a*b*c nilpotent but a*c*b not"));
    }
  return Verdict::yes();
}

Verdict RingAnalyzer::nil_reversible() const {
  for (Elem a = 0; a < ring_->order(); ++a) {
    ElementSet bad = (right_zero_[a] ^ left_zero_[a]) & nil_;
    if (auto b = bad.find_first(); b != ElementSet::npos)
      return Verdict::no(elems({a, static_cast<Elem>(b)}, "a, nilpotent b with exactly one of a*b, b*a zero"));
  }
  return Verdict::yes();
}

namespace {

Verdict set_equality(const ElementSet& n, const ElementSet& other, const char* what) {
  if (n == other) return Verdict::yes();
  ElementSet diff = n ^ other;
  Witness w;
  w.elements = {static_cast<Elem>(diff.find_first())};
  w.sets = {n, other};
  w.note = std::string("element in exactly one of N(R) and ") + what;
  return Verdict::no(std::move(w));
}

}  // namespace

Verdict RingAnalyzer::two_primal() const {
  return set_equality(nil_, radical_set().prime_radical.members, "the prime radical");
}

Verdict RingAnalyzer::ni() const {
  return set_equality(nil_, radical_set().upper_nilradical.members, "the upper nilradical");
}

Verdict RingAnalyzer::nj() const { return set_equality(nil_, radical_set().jacobson.members, "J(R)"); }

Verdict RingAnalyzer::baer() const {
  // {r(S)} is the intersection-closure of the element annihilators r(a).
  const FiniteRing& R = *ring_;
  std::vector<ElementSet> family;
  std::vector<std::optional<Elem>> origin;
  std::set<ElementSet, ElementSetLess> seen;
  for (Elem a = 0; a < R.order(); ++a)
    if (seen.insert(right_zero_[a]).second) {
      family.push_back(right_zero_[a]);
      origin.push_back(a);
    }
  std::size_t done = 0;
  while (done < family.size()) {
    const std::size_t end = family.size();
    for (std::size_t i = done; i < end; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        ElementSet meet = family[i] & family[j];
        if (seen.insert(meet).second) {
          family.push_back(std::move(meet));
          origin.push_back(std::nullopt);
        }
      }
    done = end;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (generating_idempotent(family[i])) continue;
    Witness w;
    if (origin[i]) {
      w.elements = {*origin[i]};
      w.note = "r({a}) is not eR for any idempotent e";
    } else {
      w.note = "an intersection of element annihilators is not eR for any idempotent e";
    }
    w.sets = {family[i]};
    return Verdict::no(std::move(w));
  }
  return Verdict::yes();
}

Verdict RingAnalyzer::quasi_baer() const {
  for (const auto& I : enumerate_ideals(*ring_, IdealKind::Right, cap_)) {
    ElementSet ann = right_annihilator(I.members);
    if (generating_idempotent(ann)) continue;
    Witness w;
    w.sets = {I.members, ann};
    w.note = "right ideal I whose right annihilator (second set) is not eR";
    return Verdict::no(std::move(w));
  }
  return Verdict::yes();
}

Verdict RingAnalyzer::sigma_semicommutative(const MapClosure& alpha) const {
  const FiniteRing& R = *ring_;
  for (Elem a = 0; a < R.order(); ++a)
    for (auto bi = right_zero_[a].find_first(); bi != ElementSet::npos; bi = right_zero_[a].find_next(bi)) {
      const Elem b = static_cast<Elem>(bi);
      for (const auto& m : alpha.members) {
        const Elem fb = m.map(b);
        if (sandwich_[a].test(fb)) continue;
        return Verdict::no(
            with_map(elems({a, b, first_middle(R, a, fb)}, "(a, b, r) with a*b = 0 but a*r*phi(b) != 0"), m));
      }
    }
  return Verdict::yes();
}

Verdict RingAnalyzer::sigma_rigid(const MapClosure& alpha) const {
  const FiniteRing& R = *ring_;
  for (Elem a = 0; a < R.order(); ++a) {
    if (a == R.zero()) continue;
    for (const auto& m : alpha.members)
      if (R.mul(a, m.map(a)) == R.zero()) return Verdict::no(with_map(elems({a}, "a != 0 with a*phi(a) = 0"), m));
  }
  return Verdict::yes();
}

Verdict RingAnalyzer::sigma_compatible(const MapClosure& alpha, bool weak) const {
  const FiniteRing& R = *ring_;
  auto small = [&](Elem x) { return weak ? nil_.test(x) : x == R.zero(); };
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b) {
      const bool lhs = small(R.mul(a, b));
      for (const auto& m : alpha.members)
        if (small(R.mul(a, m.map(b))) != lhs)
          return Verdict::no(with_map(
              elems({a, b}, lhs ? (weak ? "a*b nilpotent but a*phi(b) not" : "a*b = 0 but a*phi(b) != 0")
                                : (weak ? "a*phi(b) nilpotent but a*b not" : "a*phi(b) = 0 but a*b != 0")),
              m));
    }
  return Verdict::yes();
}

Verdict RingAnalyzer::delta_compatible(const MapClosure& beta, bool weak) const {
  const FiniteRing& R = *ring_;
  auto small = [&](Elem x) { return weak ? nil_.test(x) : x == R.zero(); };
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b) {
      if (!small(R.mul(a, b))) continue;
      for (const auto& m : beta.members)
        if (!small(R.mul(a, m.map(b))))
          return Verdict::no(
              with_map(elems({a, b}, weak ? "a*b nilpotent but a*d(b) not" : "a*b = 0 but a*d(b) != 0"), m));
    }
  return Verdict::yes();
}

Verdict RingAnalyzer::skew_rnp_right(const MapClosure& alpha) const {
  for (auto ai = nil_.find_first(); ai != ElementSet::npos; ai = nil_.find_next(ai)) {
    const Elem a = static_cast<Elem>(ai);
    ElementSet bs = sandwich_[a] & nil_;
    for (auto bi = bs.find_first(); bi != ElementSet::npos; bi = bs.find_next(bi))
      for (const auto& m : alpha.members)
        if (!sandwich_[bi].test(m.map(a)))
          return Verdict::no(
              with_map(elems({a, static_cast<Elem>(bi)}, "nilpotent (a, b) with aRb = 0 but bR phi(a) != 0"), m));
  }
  return Verdict::yes();
}

Verdict RingAnalyzer::skew_rnp_left(const MapClosure& alpha) const {
  for (auto ai = nil_.find_first(); ai != ElementSet::npos; ai = nil_.find_next(ai)) {
    const Elem a = static_cast<Elem>(ai);
    ElementSet bs = sandwich_[a] & nil_;
    for (auto bi = bs.find_first(); bi != ElementSet::npos; bi = bs.find_next(bi))
      for (const auto& m : alpha.members)
        if (!sandwich_[m.map(static_cast<Elem>(bi))].test(a))
          return Verdict::no(
              with_map(elems({a, static_cast<Elem>(bi)}, "nilpotent (a, b) with aRb = 0 but phi(b)Ra != 0"), m));
  }
  return Verdict::yes();
}

// ---------------------------------------------------------------------------

void classify_elementwise(const RingAnalyzer& an, ClassificationReport& out) {
  out.verdicts["reduced"] = an.reduced();
  out.verdicts["abelian"] = an.abelian();
  out.verdicts["semicommutative"] = an.semicommutative();
  out.verdicts["symmetric"] = an.symmetric();
  out.verdicts["reversible"] = an.reversible();
  out.verdicts["reflexive"] = an.reflexive();
  out.verdicts["weak_symmetric"] = an.weak_symmetric();
  out.verdicts["nil_reversible"] = an.nil_reversible();
}

void classify_radical(const RingAnalyzer& an, ClassificationReport& out) {
  out.verdicts["two_primal"] = an.two_primal();
  out.verdicts["NI"] = an.ni();
  out.verdicts["NJ"] = an.nj();
}

Verdict is_baer(const RingAnalyzer& an) { return an.baer(); }
Verdict is_quasi_baer(const RingAnalyzer& an) { return an.quasi_baer(); }

Verdict sigma_semicommutative(const RingAnalyzer& an, const MapFamily& family) {
  return an.sigma_semicommutative(closure(family, ClosureKind::SigmaAlpha, false));
}

Verdict sigma_rigid(const RingAnalyzer& an, const MapFamily& family) {
  return an.sigma_rigid(closure(family, ClosureKind::SigmaAlpha, true));
}

CompatibilityVerdicts compatibility(const RingAnalyzer& an, const MapFamily& family) {
  const MapClosure alpha = closure(family, ClosureKind::SigmaAlpha, true);
  const MapClosure beta = closure(family, ClosureKind::DeltaBeta, true);
  return {an.sigma_compatible(alpha, false), an.delta_compatible(beta, false), an.sigma_compatible(alpha, true),
          an.delta_compatible(beta, true)};
}

RnpVerdicts skew_rnp(const RingAnalyzer& an, const MapFamily& family) {
  const MapClosure alpha = closure(family, ClosureKind::SigmaAlpha, true);
  return {an.skew_rnp_right(alpha), an.skew_rnp_left(alpha)};
}

ClassificationReport classify(const RingAnalyzer& an, const MapFamily* family) {
  ClassificationReport out;
  out.ring = an.ring().name();
  classify_elementwise(an, out);
  classify_radical(an, out);
  out.verdicts["baer"] = an.baer();
  out.verdicts["quasi_baer"] = an.quasi_baer();
  if (!family) return out;

  family->validate();
  const MapClosure nonzero = closure(*family, ClosureKind::SigmaAlpha, false);
  const MapClosure all = closure(*family, ClosureKind::SigmaAlpha, true);
  const MapClosure beta = closure(*family, ClosureKind::DeltaBeta, true);
  out.verdicts["sigma_semicommutative"] = an.sigma_semicommutative(nonzero);
  out.verdicts["sigma_rigid"] = an.sigma_rigid(all);
  out.verdicts["sigma_compatible"] = an.sigma_compatible(all, false);
  out.verdicts["weak_sigma_compatible"] = an.sigma_compatible(all, true);
  out.verdicts["delta_compatible"] = an.delta_compatible(beta, false);
  out.verdicts["weak_delta_compatible"] = an.delta_compatible(beta, true);
  out.verdicts["skew_rnp_right"] = an.skew_rnp_right(all);
  out.verdicts["skew_rnp_left"] = an.skew_rnp_left(all);
  for (std::size_t i = 0; i < family->size(); ++i) {
    MapFamily single{family->ring, {family->sigma[i]}, {}};
    out.per_sigma.push_back(an.sigma_semicommutative(closure(single, ClosureKind::SigmaAlpha, false)));
  }
  return out;
}

}  // namespace pbw
