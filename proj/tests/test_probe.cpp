#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbw/corpus.hpp"
#include "pbw/skewpbw.hpp"

using namespace pbw;

namespace {

RingPtr ptr(FiniteRing R) { return std::make_shared<const FiniteRing>(std::move(R)); }

struct Fixtures {
  RingPtr F4 = ptr(make_gf(4));
  RingPtr Q2 = ptr(make_trunc_st(2, 3));
  RingPtr D2 = ptr(make_trunc_t2(2));
  RingPtr R5 = ptr(make_ut2_equal_diag(5));
  RingMap idD = identity_map(D2);
  Extension frob = Extension::build(SkewPBWData::with_defaults("F4[x;frob]", F4, {frobenius(F4)}));
  Extension swap = Extension::build(SkewPBWData::with_defaults("Q2[x;swap]", Q2, {trunc_swap(Q2)}));
  Extension deriv = Extension::build(SkewPBWData::with_defaults("D2[x;d]", D2, {idD}, {trunc_t2_derivation(D2)}));
  Extension neg = Extension::build(SkewPBWData::with_defaults("R5[x;negate_b]", R5, {ut2_negate_b(R5)}));
};

const Polynomial& part(const ProbeVerdict& v, const std::string& role) {
  for (const auto& [r, p] : v.witness)
    if (r == role) return p;
  FAIL("missing witness role " << role);
  static Polynomial none;
  return none;
}

Elem sigma_alpha(const Extension& A, const MultiIndex& a, Elem r) {
  for (unsigned k = A.n(); k-- > 0;)
    for (unsigned e = 0; e < a[k]; ++e) r = A.sigma(k, r);
  return r;
}

// Re-derives each counterexample from the definition of the property.
void recheck(const Extension& A, const ProbeVerdict& v) {
  REQUIRE(v.counterexample);
  const FiniteRing& R = A.ring();
  auto mul = [&](const Polynomial& f, const Polynomial& g) { return multiply(A, f, g); };
  switch (v.property) {
    case ProbeProperty::Semicommutative: {
      const auto &f = part(v, "f"), &h = part(v, "h"), &g = part(v, "g");
      CHECK(mul(f, g).is_zero());
      CHECK_FALSE(mul(mul(f, h), g).is_zero());
      CHECK(mul(mul(f, h), g) == part(v, "fhg"));
      break;
    }
    case ProbeProperty::Reduced:
      CHECK_FALSE(part(v, "f").is_zero());
      CHECK(mul(part(v, "f"), part(v, "f")).is_zero());
      break;
    case ProbeProperty::Abelian: {
      const auto &e = part(v, "e"), &g = part(v, "g");
      CHECK(mul(e, e) == e);
      CHECK(mul(e, g) != mul(g, e));
      break;
    }
    case ProbeProperty::SigmaBarSemicommutative: {
      const auto &f = part(v, "f"), &h = part(v, "h"), &g = part(v, "g");
      CHECK(mul(f, g).is_zero());
      const MapClosure c = closure(MapFamily{A.ring_ptr(), A.data().sigma, {}}, ClosureKind::SigmaAlpha, false);
      const RingMap* phi = nullptr;
      for (const auto& m : c.members)
        if (m.map.name == v.map) phi = &m.map;
      REQUIRE(phi != nullptr);
      const Polynomial fhpg = mul(mul(f, h), LiftedMaps(A).apply(*phi, g));
      CHECK_FALSE(fhpg.is_zero());
      CHECK(fhpg == part(v, "fh phi(g)"));
      break;
    }
    case ProbeProperty::SA1:
    case ProbeProperty::SigmaSkewArmendariz:
    case ProbeProperty::SkewArmendariz: {
      const auto &f = part(v, "f"), &g = part(v, "g");
      CHECK(mul(f, g).is_zero());
      bool broken = false;
      for (const auto& a : f.terms)
        for (const auto& b : g.terms) {
          if (v.property == ProbeProperty::SA1) broken |= R.mul(a.coeff, b.coeff) != R.zero();
          if (v.property == ProbeProperty::SigmaSkewArmendariz)
            broken |= R.mul(a.coeff, sigma_alpha(A, a.exponents, b.coeff)) != R.zero();
          if (v.property == ProbeProperty::SkewArmendariz)
            broken |= R.mul(f.coeff(A.zero_index(), R.zero()), b.coeff) != R.zero();
        }
      CHECK(broken);
      break;
    }
    case ProbeProperty::BoundedBaer: {
      // For every idempotent e of R: either h e != 0, or some listed g has hg = 0, eg != g.
      const auto& h = part(v, "h");
      for (Elem e = 0; e < R.order(); ++e) {
        if (R.mul(e, e) != e) continue;
        if (!mul(h, A.constant(e)).is_zero()) continue;
        bool refuted = false;
        for (const auto& [role, g] : v.witness)
          if (role == "g for e = " + R.label(e)) refuted = mul(h, g).is_zero() && mul(A.constant(e), g) != g;
        CHECK_MESSAGE(refuted, R.label(e));
      }
      break;
    }
    case ProbeProperty::SQA1:
      FAIL("SQA1 never reports a counterexample");
  }
}

ProbeBudget small_budget() {
  ProbeBudget b;
  b.max_evaluations = 2'000'000;
  return b;
}

}  // namespace

TEST_CASE("property names round-trip") {
  CHECK(all_probe_properties().size() == 9);
  for (auto p : all_probe_properties()) CHECK(probe_property_from_string(to_string(p)) == p);
  CHECK_FALSE(probe_property_from_string("commutative").has_value());
}

TEST_CASE("swap extension: s x t = s^2 x at degree 1") {
  Fixtures fx;
  const auto v = probe(fx.swap, ProbeProperty::Semicommutative, small_budget());
  recheck(fx.swap, v);
  const FiniteRing& Q = *fx.Q2;
  CHECK(part(v, "f") == fx.swap.constant(*Q.find_label("s")));
  CHECK(part(v, "h") == fx.swap.generator(0));
  CHECK(part(v, "g") == fx.swap.constant(*Q.find_label("t")));
  CHECK(to_string(Q, part(v, "fhg")) == "s^2*x");
}

TEST_CASE("every counterexample re-checks from the definition") {
  Fixtures fx;
  for (const Extension* A : {&fx.frob, &fx.swap, &fx.deriv, &fx.neg}) {
    const LiftedMaps L = lift_maps(*A);
    for (auto p : all_probe_properties()) {
      const auto v = probe(*A, p, small_budget(), &L);
      INFO(A->name(), " ", to_string(p));
      if (v.counterexample) recheck(*A, v);
      if (p == ProbeProperty::SQA1) CHECK_FALSE(v.counterexample);
    }
  }
}

TEST_CASE("GF(4) with Frobenius: nothing found, exhaustively") {
  Fixtures fx;
  const LiftedMaps L = lift_maps(fx.frob);
  for (auto p : all_probe_properties()) {
    const auto v = probe(fx.frob, p, ProbeBudget{}, &L);
    INFO(to_string(p));
    CHECK_FALSE(v.counterexample);
    CHECK(v.manifest.mode == "exhaustive");
    CHECK(v.manifest.candidates == 36);  // 1, x, x^2 with 3 nonzero coefficients: 9 singles + 3 pairs x 9
    CHECK_FALSE(v.manifest.budget_exhausted);
  }
}

TEST_CASE("derivation extension: t is nilpotent and t x is a non-central idempotent") {
  Fixtures fx;
  const FiniteRing& D = *fx.D2;
  const Elem t = *D.find_label("t");
  const auto r = probe(fx.deriv, ProbeProperty::Reduced, ProbeBudget{});
  recheck(fx.deriv, r);
  CHECK(part(r, "f") == fx.deriv.constant(t));
  const auto a = probe(fx.deriv, ProbeProperty::Abelian, ProbeBudget{});
  recheck(fx.deriv, a);
  CHECK(part(a, "e") == Polynomial::monomial(D, {1}, t));
}

TEST_CASE("triangular extension: the nilpotent matrix") {
  Fixtures fx;
  const auto v = probe(fx.neg, ProbeProperty::Reduced, ProbeBudget{});
  recheck(fx.neg, v);
  CHECK(part(v, "f") == fx.neg.constant(1));  // (0 1;0 0)
}

TEST_CASE("Sigma-bar probe needs lifted maps") {
  Fixtures fx;
  const auto v = probe(fx.swap, ProbeProperty::SigmaBarSemicommutative, ProbeBudget{});
  CHECK_FALSE(v.counterexample);
  CHECK(v.note.find("not run") != std::string::npos);
  const LiftedMaps L = lift_maps(fx.swap);
  const auto w = probe(fx.swap, ProbeProperty::SigmaBarSemicommutative, ProbeBudget{}, &L);
  recheck(fx.swap, w);
  CHECK(w.map == "swap");
}

TEST_CASE("SQA1 lists suspects instead of counterexamples") {
  Fixtures fx;
  ProbeBudget b;
  b.max_evaluations = 200'000;
  const auto v = probe(fx.swap, ProbeProperty::SQA1, b);
  CHECK_FALSE(v.counterexample);
  CHECK(v.note.find("suspects") != std::string::npos);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  Fixtures fx;
  ProbeBudget b;
  b.max_evaluations = 100;
  const auto v = probe(fx.neg, ProbeProperty::Semicommutative, b);
  CHECK(v.manifest.budget_exhausted);
  CHECK(v.manifest.evaluations <= 101);
  CHECK(v.manifest.describe().find("budget exhausted") != std::string::npos);
}

TEST_CASE("sampling is seeded and deterministic") {
  Fixtures fx;
  ProbeBudget b;
  b.exhaustive_limit = 10;
  b.sample_count = 64;
  b.max_evaluations = 1'000'000;
  b.seed = 17;
  const auto v1 = probe(fx.neg, ProbeProperty::Reduced, b);
  const auto v2 = probe(fx.neg, ProbeProperty::Reduced, b);
  CHECK(v1.manifest.mode == "sampled");
  CHECK(v1.manifest.candidates == 64);
  CHECK(v1.counterexample == v2.counterexample);
  CHECK(v1.witness == v2.witness);
  CHECK(v1.manifest.evaluations == v2.manifest.evaluations);
  if (v1.counterexample) recheck(fx.neg, v1);
}

TEST_CASE("degree overflow is counted, not fatal") {
  Fixtures fx;
  const RingPtr F = fx.F4;
  const Extension tiny = Extension::build(SkewPBWData::with_defaults("tiny", F, {frobenius(F)}, {}, 3));
  ProbeBudget b;
  b.max_degree = 2;
  const auto v = probe(tiny, ProbeProperty::Semicommutative, b);
  CHECK(v.manifest.skipped_overflow > 0);
  CHECK(v.manifest.max_degree == 2);
}
