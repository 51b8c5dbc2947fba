// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pbw/corpus.hpp"
#include "pbw/ringprops.hpp"
#include "pbw/run.hpp"
#include "pbw/skewpbw.hpp"
#include "pbw/spectop.hpp"

using namespace pbw;

namespace {

RingPtr ptr(FiniteRing R) { return std::make_shared<const FiniteRing>(std::move(R)); }

struct Ctx {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<void(Ctx&)> body;
};

const RingMap* find_map(const MapClosure& c, const std::string& name) {
  for (const auto& m : c.members)
    if (m.map.name == name) return &m.map;
  return nullptr;
}

const Polynomial* part(const ProbeVerdict& v, const std::string& role) {
  for (const auto& [r, p] : v.witness)
    if (r == role) return &p;
  return nullptr;
}

// Sigma-semicommutative witness (a, b, r) with map phi: ab = 0 but a r phi(b) != 0.
bool sigma_sc_witness_holds(const FiniteRing& R, const Verdict& v, const MapClosure& nonzero) {
  if (v.value || !v.witness || v.witness->elements.size() != 3) return false;
  const RingMap* phi = find_map(nonzero, v.witness->map);
  if (phi == nullptr) return false;
  const Elem a = v.witness->elements[0], b = v.witness->elements[1], r = v.witness->elements[2];
  return R.mul(a, b) == R.zero() && R.mul(R.mul(a, r), (*phi)(b)) != R.zero();
}

void triangular_family(Ctx& c) {
  const RingPtr R = ptr(make_ut2_equal_diag(5));
  MapFamily fam{R, {identity_map(R), ut2_negate_b(R), ut2_kill_b(R)}, {}};
  const auto rep = classify(RingAnalyzer(R), &fam);
  const Elem n = 1;  // (0 1;0 0)
  c.expect(rep.holds("sigma_semicommutative"), "sigma_semicommutative should hold");
  c.expect(rep.holds("abelian"), "abelian should hold");
  const Verdict* red = rep.find("reduced");
  c.expect(red && !red->value && red->witness && red->witness->elements == std::vector<Elem>{n},
           "reduced: expected false with witness (0 1;0 0)");
  const Verdict* rig = rep.find("sigma_rigid");
  c.expect(rig && !rig->value, "sigma_rigid should fail");
  if (rig && rig->witness && rig->witness->elements.size() == 1) {
    const MapClosure all = closure(fam, ClosureKind::SigmaAlpha, true);
    const RingMap* phi = find_map(all, rig->witness->map);
    const Elem a = rig->witness->elements[0];
    c.expect(phi && a != R->zero() && R->mul(a, (*phi)(a)) == R->zero(), "sigma_rigid witness does not re-verify");
  } else {
    c.expect(false, "sigma_rigid witness missing");
  }
  const RingMap kn = compose(ut2_kill_b(R), ut2_negate_b(R));
  c.expect(R->mul(n, kn(n)) == R->zero(), "n * kill_b(negate_b(n)) != 0");
  c.expect(closure(fam, ClosureKind::SigmaAlpha, true).contains(kn), "kill_b o negate_b not in the closure");
}

void upper_triangular(Ctx& c) {
  const RingPtr T = ptr(make_ut2(5));
  auto idx = [](unsigned a, unsigned b, unsigned cc) { return static_cast<Elem>((a * 5 + b) * 5 + cc); };
  const Elem E11 = idx(1, 0, 0), E12 = idx(0, 1, 0), E22 = idx(0, 0, 1), M = idx(1, 1, 1);
  const RingAnalyzer an(T);
  const Verdict sc = an.semicommutative();
  c.expect(!sc.value, "ut2(5) should not be semicommutative");
  if (sc.witness && sc.witness->elements.size() == 3) {
    const auto& w = sc.witness->elements;  // (a, r, b)
    c.expect(T->mul(w[0], w[2]) == T->zero() && T->mul(T->mul(w[0], w[1]), w[2]) != T->zero(),
             "engine semicommutative witness does not re-verify");
  }
  c.expect(T->mul(E11, E22) == T->zero() && T->mul(T->mul(E11, M), E22) == E12,
           "E11 (E11+E12+E22) E22 should be E12 with E11 E22 = 0");

  MapFamily one{T, {ut2_keep_a(T)}, {}};
  c.expect(sigma_semicommutative(an, one).value, "keep_a family should be sigma-semicommutative");

  MapFamily two{T, {ut2_keep_a(T), ut2_keep_c(T)}, {}};
  const Verdict v = sigma_semicommutative(an, two);
  c.expect(!v.value, "keep_a + keep_c family should not be sigma-semicommutative");
  c.expect(sigma_sc_witness_holds(*T, v, closure(two, ClosureKind::SigmaAlpha, false)),
           "engine phi-witness does not re-verify");
  const RingMap kc = ut2_keep_c(T);
  c.expect(T->mul(T->mul(E11, E12), kc(E22)) == E12, "E11 E12 keep_c(E22) should be E12");
}

void swap_quotient(Ctx& c) {
  const RingPtr Q = ptr(make_trunc_st(2, 3));
  const Elem s = *Q->find_label("s"), t = *Q->find_label("t");
  MapFamily fam{Q, {trunc_swap(Q), identity_map(Q)}, {}};
  const RingAnalyzer an(Q);
  c.expect(an.semicommutative().value, "Q2 should be semicommutative");
  const Verdict v = sigma_semicommutative(an, fam);
  c.expect(!v.value, "Q2 with swap should not be sigma-semicommutative");
  c.expect(v.witness && v.witness->elements.size() == 3 && v.witness->elements[0] == s && v.witness->elements[1] == t,
           "sigma-semicommutative witness should be (s, t)");
  c.expect(sigma_sc_witness_holds(*Q, v, closure(fam, ClosureKind::SigmaAlpha, false)),
           "sigma-semicommutative witness does not re-verify");

  const Extension A = Extension::build(SkewPBWData::with_defaults("Q2[x;swap]", Q, {trunc_swap(Q)}));
  const ProbeVerdict p = probe(A, ProbeProperty::Semicommutative, ProbeBudget{});
  c.expect(p.counterexample, "probe found no semicommutativity counterexample");
  const Polynomial *f = part(p, "f"), *h = part(p, "h"), *g = part(p, "g");
  if (f && h && g) {
    c.expect(*f == A.constant(s) && *h == A.generator(0) && *g == A.constant(t), "probe witness should be (s, x, t)");
    c.expect(multiply(A, *f, *g).is_zero(), "s t should vanish");
    const Polynomial fhg = multiply(A, multiply(A, *f, *h), *g);
    c.expect(to_string(*Q, fhg) == "s^2*x", "s x t should be s^2*x, got " + to_string(*Q, fhg));
    c.expect(h->degree() == 1, "counterexample should be at degree 1");
  } else {
    c.expect(false, "probe witness incomplete");
  }
}

std::vector<Fixture> corpus_fixtures(const Corpus& corpus) {
  std::vector<Fixture> fx;
  for (const auto& r : corpus.rings) fx.push_back({r.name, r.ring, std::nullopt});
  for (const auto& f : corpus.families) fx.push_back({f.name, f.family.ring, f.family});
  return fx;
}

void theorem_audit(Ctx& c) {
  const Corpus corpus = load_corpus_file(PBW_DEFAULT_CORPUS);
  const AuditReport ar = audit_theorems(corpus_fixtures(corpus));
  for (const char* id : {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10"})
    c.expect(ar.find(id) != nullptr, std::string("missing theorem ") + id);
  for (const auto& t : ar.theorems) {
    for (const auto& v : t.violations) c.expect(false, t.id + " on " + v.fixture + ": " + v.detail);
    c.expect(!t.vacuous, t.id + " was vacuous");
  }
  c.expect(ar.ok(), "audit not ok");
}

void oracle_agreement(Ctx& c) {
  const Corpus corpus = load_corpus_file(PBW_DEFAULT_CORPUS);
  c.expect(!corpus.extensions.empty(), "no corpus extensions");
  for (const auto& e : corpus.extensions) {
    const Extension A = Extension::build(e.data);
    const auto bad = oracle_mismatches(A, 4);
    for (const auto& m : bad) c.expect(false, e.name + ": " + m);
  }
}

void compatibility_counterexample(Ctx& c) {
  const RingPtr D = ptr(make_trunc_t2(2));
  const Elem t = *D->find_label("t");
  MapFamily fam{D, {identity_map(D)}, {trunc_t2_derivation(D)}};
  const auto cv = compatibility(RingAnalyzer(D), fam);
  c.expect(!cv.delta_compatible.value, "D2 should not be delta-compatible");
  c.expect(cv.delta_compatible.witness && cv.delta_compatible.witness->elements == std::vector<Elem>{t, t},
           "delta-compatible witness should be (t, t)");
  const Extension deriv = Extension::build(SkewPBWData::with_defaults("D2[x;d]", D, fam.sigma, fam.delta));

  const RingPtr F = ptr(make_gf(4));
  const Extension frob = Extension::build(SkewPBWData::with_defaults("F4[x;frob]", F, {frobenius(F)}));
  ProbeBudget b;
  b.max_degree = 2;
  const ProbeVerdict none = probe(frob, ProbeProperty::Reduced, b);
  c.expect(!none.counterexample && none.manifest.mode == "exhaustive" && !none.manifest.budget_exhausted,
           "F4 reduced probe should exhaust with nothing found");

  const ProbeVerdict red = probe(deriv, ProbeProperty::Reduced, b);
  const Polynomial* f = part(red, "f");
  c.expect(red.counterexample && f && *f == deriv.constant(t) && multiply(deriv, *f, *f).is_zero(),
           "D2[x;d] reduced witness should be t");
  const ProbeVerdict ab = probe(deriv, ProbeProperty::Abelian, b);
  const Polynomial *e = part(ab, "e"), *g = part(ab, "g");
  c.expect(ab.counterexample && e && g && multiply(deriv, *e, *e) == *e &&
               multiply(deriv, *e, *g) != multiply(deriv, *g, *e),
           "D2[x;d] abelian witness does not re-verify");

  const RingPtr Q = ptr(make_trunc_st(2, 3));
  const Extension swap = Extension::build(SkewPBWData::with_defaults("Q2[x;swap]", Q, {trunc_swap(Q)}));
  const ProbeVerdict sc = probe(swap, ProbeProperty::Semicommutative, b);
  const Polynomial *sf = part(sc, "f"), *sh = part(sc, "h"), *sg = part(sc, "g");
  c.expect(sc.counterexample && sf && sh && sg && multiply(swap, *sf, *sg).is_zero() &&
               !multiply(swap, multiply(swap, *sf, *sh), *sg).is_zero(),
           "Q2[x;swap] semicommutative witness does not re-verify");
}

void baer_lattice(Ctx& c) {
  c.expect(is_baer(RingAnalyzer(ptr(make_zn(6)))).value, "Z6 should be Baer");
  const RingAnalyzer z12(ptr(make_zn(12)));
  const Verdict q = is_quasi_baer(z12);
  c.expect(!q.value, "Z12 should not be quasi-Baer");
  c.expect(q.witness && q.witness->sets.size() == 2 && q.witness->sets[1] == set_from(12, {0, 6}),
           "Z12 witness should have annihilator {0, 6}");
  const Ideal two = principal_ideal(z12.ring(), 2, IdealKind::TwoSided);
  c.expect(annihilator(z12.ring(), Side::Right, two.members).members == set_from(12, {0, 6}), "ann((2)) != {0, 6}");
  const RingAnalyzer r5(ptr(make_ut2_equal_diag(5)));
  const Verdict b = is_baer(r5);
  c.expect(!b.value && b.witness && !b.witness->sets.empty() && b.witness->sets[0] == r5.nilpotent_set(),
           "R5 should not be Baer, witnessed by the nilradical");
}

void spectral(Ctx& c) {
  const Corpus corpus = load_corpus_file(PBW_DEFAULT_CORPUS);
  for (const auto& r : corpus.rings) {
    const auto B = spectra(*r.ring);
    c.expect(B.spec.max.count() == B.spec.size(), r.name + ": Spec != Max");
    c.expect(!B.zariski_failure.has_value(), r.name + ": " + B.zariski_failure.value_or(""));
  }
  const auto vee = synthetic_space("vee", {{"p"}, {"m1"}, {"m2"}}, {{"p", "m1"}, {"p", "m2"}}, {"m1", "m2"});
  c.expect(!pm_checks(vee).pm.value, "vee should not be pm");
  c.expect(retract_exists(vee).kind == RetractVerdict::Kind::None, "vee should have no retraction");
  const auto sier = synthetic_space("sierpinski", {{"p"}, {"m"}}, {{"p", "m"}}, {"m"});
  const TopoReport tp = topo_properties(sier);
  c.expect(tp.t0 && !tp.t1, "Sierpinski should be T0 and not T1");
  const RetractVerdict rv = retract_exists(sier);
  c.expect(rv.kind == RetractVerdict::Kind::Exists && rv.retraction == std::vector<std::size_t>{1, 1},
           "Sierpinski should retract constantly onto m");
}

void determinism(Ctx& c) {
  const Corpus corpus = load_corpus_file(PBW_DEFAULT_CORPUS);
  CorpusConfig one = corpus.config, many = corpus.config;
  one.jobs = 1;
  many.jobs = 8;
  const RunResult a = run(Command::All, corpus, one), b = run(Command::All, corpus, many);
  c.expect(a.report.dump(2) == b.report.dump(2), "reports differ between 1 and 8 jobs");
  c.expect(a.exit_code == 0, "run(all) exit code " + std::to_string(a.exit_code));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "triangular family {id, negate_b, kill_b}", 10, triangular_family},
      {"AC2", "ut2(5) with keep_a, then keep_c", 10, upper_triangular},
      {"AC3", "swap on the truncated quotient", 10, swap_quotient},
      {"AC4", "theorem audit on the default corpus", 60, theorem_audit},
      {"AC5", "multiplication oracle agreement", 30, oracle_agreement},
      {"AC6", "compatibility counterexample and probes", 10, compatibility_counterexample},
      {"AC7", "Baer lattice checks", 10, baer_lattice},
      {"AC8", "spectral degeneracy and synthetic topology", 5, spectral},
      {"AC9", "report determinism across worker counts", 300, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Ctx ctx;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(ctx);
    } catch (const std::exception& e) {
      ctx.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << cr.limit_s << " s";
      ctx.failures.push_back(os.str());
    }
    const bool ok = ctx.failures.empty();
    failed += !ok;
    std::printf("%s %s %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, secs);
    for (const auto& f : ctx.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
