#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "pbw/parallel.hpp"
#include "pbw/ringprops.hpp"

namespace pbw {

bool AuditReport::ok() const {
  for (const auto& t : theorems)
    if (!t.violations.empty()) return false;
  return true;
}

const TheoremResult* AuditReport::find(const std::string& id) const {
  for (const auto& t : theorems)
    if (t.id == id) return &t;
  return nullptr;
}

namespace {

struct Facts {
  const Fixture* fx = nullptr;
  std::unique_ptr<RingAnalyzer> an;
  ClassificationReport report;
  bool has_family = false;
  bool injective = false;
  std::optional<MapClosure> alpha_all;
  std::optional<MapClosure> beta_all;
  std::vector<RingMap> deltas;  // given derivations, or zero maps

  bool is(const std::string& p) const { return report.holds(p); }
};

std::string describe(const FiniteRing& R, const Verdict& v) {
  if (!v.witness) return "no witness";
  const Witness& w = *v.witness;
  std::ostringstream os;
  os << w.note;
  if (!w.elements.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < w.elements.size(); ++i) os << (i ? ", " : "") << R.label(w.elements[i]);
    os << ")";
  }
  if (!w.map.empty()) os << " with " << w.map;
  return os.str();
}

std::string set_text(const FiniteRing& R, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](Elem e) {
    out += (first ? "" : ", ") + R.label(e);
    first = false;
  });
  return out + "}";
}

ElementSet image(const RingMap& f, const ElementSet& S) {
  ElementSet out(S.size());
  for_each_member(S, [&](Elem s) { out.set(f(s)); });
  return out;
}

class Theorem {
 public:
  Theorem(std::string id, std::string statement) { result_.id = std::move(id), result_.statement = std::move(statement); }

  /// Runs `check` on each fixture satisfying `hyp`; check returns a violation detail or "".
  void run(const std::vector<Facts>& facts, const std::function<bool(const Facts&)>& hyp,
           const std::function<std::string(const Facts&)>& check) {
    for (const auto& f : facts) {
      if (!hyp(f)) {
        result_.skipped.push_back(f.fx->name);
        continue;
      }
      ++result_.tested;
      std::string bad = check(f);
      if (!bad.empty()) result_.violations.push_back({f.fx->name, std::move(bad)});
    }
    result_.vacuous = result_.tested == 0;
  }

  TheoremResult take() { return std::move(result_); }

 private:
  TheoremResult result_;
};

std::string annihilator_laws(const Facts& f, const AuditOptions& opt, std::size_t position) {
  const FiniteRing& R = f.an->ring();
  const MapFamily& fam = *f.fx->family;
  std::vector<ElementSet> subsets;
  for (Elem s = 0; s < R.order(); ++s) subsets.push_back(singleton_set(R.order(), s));
  std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ull + position);
  std::bernoulli_distribution coin(0.5);
  for (unsigned k = 0; k < opt.random_subsets; ++k) {
    ElementSet S(R.order());
    while (S.none())
      for (Elem s = 0; s < R.order(); ++s)
        if (coin(rng)) S.set(s);
    subsets.push_back(std::move(S));
  }

  for (const auto& S : subsets) {
    const ElementSet l = f.an->left_annihilator(S);
    for (const auto& m : f.alpha_all->members)
      if (f.an->left_annihilator(image(m.map, S)) != l)
        return "l(S) != l(phi(S)) for S = " + set_text(R, S) + ", phi = " + m.map.name;
    for (const auto& m : f.beta_all->members)
      if (!l.is_subset_of(f.an->left_annihilator(image(m.map, S))))
        return "l(S) not inside l(d(S)) for S = " + set_text(R, S) + ", d = " + m.map.name;
    for (const auto& s : fam.sigma)
      if (!image(s, l).is_subset_of(l)) return "sigma(l(S)) not inside l(S) for S = " + set_text(R, S) + ", sigma = " + s.name;
    for (const auto& d : f.deltas)
      if (!image(d, l).is_subset_of(l)) return "delta(l(S)) not inside l(S) for S = " + set_text(R, S) + ", delta = " + d.name;
  }
  return "";
}

}  // namespace

AuditReport audit_theorems(const std::vector<Fixture>& fixtures, const AuditOptions& opt,
                           const std::vector<ClassificationReport>* reports) {
  std::vector<Facts> facts(fixtures.size());
  parallel_for(fixtures.size(), opt.jobs, [&](std::size_t i) {
    Facts& f = facts[i];
    f.fx = &fixtures[i];
    f.an = std::make_unique<RingAnalyzer>(fixtures[i].ring, opt.cap);
    const MapFamily* fam = fixtures[i].family ? &*fixtures[i].family : nullptr;
    f.report = reports ? (*reports)[i] : classify(*f.an, fam);
    if (!fam) return;
    f.has_family = true;
    f.injective = fam->all_injective();
    f.alpha_all = closure(*fam, ClosureKind::SigmaAlpha, true);
    f.beta_all = closure(*fam, ClosureKind::DeltaBeta, true);
    if (fam->has_delta()) {
      f.deltas = fam->delta;
    } else {
      for (const auto& s : fam->sigma) f.deltas.push_back(zero_derivation(fam->ring, &s));
    }
  });

  auto fam_inj = [](const Facts& f) { return f.has_family && f.injective; };
  auto ssc_inj = [&](const Facts& f) { return fam_inj(f) && f.is("sigma_semicommutative"); };
  auto any_ring = [](const Facts&) { return true; };
  auto fail = [](const Facts& f, const std::string& pred) { return pred + " fails: " + describe(f.an->ring(), *f.report.find(pred)); };

  AuditReport out;
  auto add = [&](const char* id, const char* statement, auto hyp, auto check) {
    Theorem t(id, statement);
    t.run(facts, hyp, check);
    out.theorems.push_back(t.take());
  };

  add("T1", "sigma-semicommutative with injective Sigma: sigma^alpha fixes 1 and every idempotent", ssc_inj,
      [](const Facts& f) -> std::string {
        const FiniteRing& R = f.an->ring();
        for (const auto& m : f.alpha_all->members) {
          if (m.map(R.one()) != R.one()) return m.map.name + " moves 1";
          for (auto e = f.an->idempotent_set().find_first(); e != ElementSet::npos; e = f.an->idempotent_set().find_next(e))
            if (m.map(static_cast<Elem>(e)) != e) return m.map.name + " moves idempotent " + R.label(static_cast<Elem>(e));
        }
        return "";
      });
  add("T2", "sigma-semicommutative with injective Sigma implies abelian", ssc_inj,
      [&](const Facts& f) { return f.is("abelian") ? std::string() : fail(f, "abelian"); });
  add("T3", "injective Sigma: (sigma-semicommutative and reduced) iff sigma-rigid", fam_inj,
      [](const Facts& f) -> std::string {
        const bool lhs = f.is("sigma_semicommutative") && f.is("reduced");
        if (lhs == f.is("sigma_rigid")) return "";
        return lhs ? "sigma-semicommutative and reduced but not sigma-rigid" : "sigma-rigid but not (sigma-semicommutative and reduced)";
      });
  add("T4", "nil-reversible and sigma-semicommutative implies right sigma-skew RNP",
      [](const Facts& f) { return f.has_family && f.is("nil_reversible") && f.is("sigma_semicommutative"); },
      [&](const Facts& f) { return f.is("skew_rnp_right") ? std::string() : fail(f, "skew_rnp_right"); });
  add("T5", "semicommutative implies 2-primal", [](const Facts& f) { return f.is("semicommutative"); },
      [&](const Facts& f) { return f.is("two_primal") ? std::string() : fail(f, "two_primal"); });
  add("T6", "(reflexive and semicommutative) iff reversible", any_ring, [](const Facts& f) -> std::string {
    const bool lhs = f.is("reflexive") && f.is("semicommutative");
    if (lhs == f.is("reversible")) return "";
    return lhs ? "reflexive and semicommutative but not reversible" : "reversible but not (reflexive and semicommutative)";
  });
  add("T7", "abelian Baer rings are reduced", [](const Facts& f) { return f.is("abelian") && f.is("baer"); },
      [&](const Facts& f) { return f.is("reduced") ? std::string() : fail(f, "reduced"); });
  add("T8", "sigma-semicommutative and delta-compatible (injective Sigma): Baer iff quasi-Baer",
      [&](const Facts& f) { return ssc_inj(f) && f.is("delta_compatible"); },
      [](const Facts& f) -> std::string {
        if (f.is("baer") == f.is("quasi_baer")) return "";
        return f.is("baer") ? "Baer but not quasi-Baer" : "quasi-Baer but not Baer";
      });
  add("T9", "injective Sigma: (sigma-semicommutative and reduced) iff sigma-rigid iff (reduced and (Sigma,Delta)-compatible)",
      fam_inj, [](const Facts& f) -> std::string {
        const bool a = f.is("sigma_semicommutative") && f.is("reduced");
        const bool b = f.is("sigma_rigid");
        const bool c = f.is("reduced") && f.is("sigma_compatible") && f.is("delta_compatible");
        if (a == b && b == c) return "";
        return std::string("statements disagree: (1)=") + (a ? "true" : "false") + " (2)=" + (b ? "true" : "false") +
               " (5)=" + (c ? "true" : "false");
      });
  {
    Theorem t("T10", "sigma-semicommutative Baer (injective Sigma): annihilator laws for l(S)");
    t.run(facts, [&](const Facts& f) { return ssc_inj(f) && f.is("baer"); },
          [&](const Facts& f) { return annihilator_laws(f, opt, static_cast<std::size_t>(&f - facts.data())); });
    out.theorems.push_back(t.take());
  }

  add("C1", "reduced implies symmetric implies semicommutative", any_ring, [&](const Facts& f) -> std::string {
    if (f.is("reduced") && !f.is("symmetric")) return fail(f, "symmetric");
    if (f.is("symmetric") && !f.is("semicommutative")) return fail(f, "semicommutative");
    return "";
  });
  add("C2", "Baer implies quasi-Baer", [](const Facts& f) { return f.is("baer"); },
      [&](const Facts& f) { return f.is("quasi_baer") ? std::string() : fail(f, "quasi_baer"); });
  add("C3", "sigma-semicommutative iff sigma_i-semicommutative for every i", [](const Facts& f) { return f.has_family; },
      [](const Facts& f) -> std::string {
        bool all = true;
        for (const auto& v : f.report.per_sigma) all = all && v.value;
        return all == f.is("sigma_semicommutative") ? "" : "per-map verdicts disagree with the family verdict";
      });
  add("C4", "prime ideals are maximal and N_*(R) <= N^*(R) <= N(R)", any_ring, [&opt](const Facts& f) -> std::string {
    const FiniteRing& R = f.an->ring();
    const auto maximal = special_ideals(R, SpecialKind::Maximal, opt.cap);
    for (const auto& P : special_ideals(R, SpecialKind::Prime, opt.cap))
      if (std::find(maximal.begin(), maximal.end(), P) == maximal.end()) return "prime " + set_text(R, P.members) + " is not maximal";
    const RadicalSet& rs = f.an->radical_set();
    if (!rs.prime_radical.members.is_subset_of(rs.upper_nilradical.members)) return "prime radical not inside upper nilradical";
    if (!rs.upper_nilradical.members.is_subset_of(rs.nilpotents)) return "upper nilradical has a non-nilpotent";
    return "";
  });
  add("C5", "sigma-semicommutative Baer (injective Sigma): sigma-rigid, (Sigma,Delta)-compatible, reflexive, skew RNP",
      [&](const Facts& f) { return ssc_inj(f) && f.is("baer"); }, [&](const Facts& f) -> std::string {
        for (const char* p : {"sigma_rigid", "sigma_compatible", "delta_compatible", "reflexive", "skew_rnp_right", "skew_rnp_left"})
          if (!f.is(p)) return fail(f, p);
        return "";
      });
  return out;
}

}  // namespace pbw
