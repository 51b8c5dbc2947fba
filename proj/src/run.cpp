#include "pbw/run.hpp"

#include <sstream>

#include "pbw/parallel.hpp"
#include "pbw/ringprops.hpp"

namespace pbw {

using ojson = nlohmann::ordered_json;

std::optional<Command> command_from_string(const std::string& s) {
  if (s == "classify") return Command::Classify;
  if (s == "audit") return Command::Audit;
  if (s == "pbw") return Command::Pbw;
  if (s == "topo") return Command::Topo;
  if (s == "all") return Command::All;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Audit: return "audit";
    case Command::Pbw: return "pbw";
    case Command::Topo: return "topo";
    case Command::All: return "all";
  }
  return "?";
}

namespace {

ojson labels(const FiniteRing& R, const ElementSet& s) {
  ojson a = ojson::array();
  for_each_member(s, [&](Elem e) { a.push_back(R.label(e)); });
  return a;
}

ojson witness_json(const FiniteRing& R, const Witness& w) {
  ojson j;
  j["note"] = w.note;
  if (!w.elements.empty()) {
    ojson el = ojson::array();
    for (Elem e : w.elements) el.push_back(R.label(e));
    j["elements"] = el;
  }
  if (!w.sets.empty()) {
    ojson sets = ojson::array();
    for (const auto& s : w.sets) sets.push_back(labels(R, s));
    j["sets"] = sets;
  }
  if (!w.map.empty()) j["map"] = w.map;
  if (!w.exponents.empty()) j["exponents"] = w.exponents;
  return j;
}

ojson verdict_json(const FiniteRing& R, const Verdict& v) {
  ojson j;
  j["value"] = v.value;
  if (v.witness) j["witness"] = witness_json(R, *v.witness);
  return j;
}

ojson bool_verdict(bool value, const std::optional<std::string>& witness = std::nullopt) {
  ojson j;
  j["value"] = value;
  if (witness) j["witness"] = *witness;
  return j;
}

ojson poly_json(const FiniteRing& R, const Polynomial& p) {
  ojson a = ojson::array();
  for (const auto& t : p.terms) a.push_back(ojson::array({t.exponents, R.label(t.coeff)}));
  return a;
}

struct ItemResult {
  ojson json;
  std::string text;
  unsigned violations = 0;
  bool validation_error = false;
};

std::string classification_text(const ClassificationReport& rep) {
  std::string yes, no;
  for (const auto& name : predicate_names()) {
    const Verdict* v = rep.find(name);
    if (!v) continue;
    (v->value ? yes : no) += (v->value ? yes : no).empty() ? name : " " + name;
  }
  return "  holds: " + (yes.empty() ? "-" : yes) + "\n  fails: " + (no.empty() ? "-" : no) + "\n";
}

ojson classification_json(const std::string& name, const std::string& type, const FiniteRing& R,
                          const ClassificationReport& rep) {
  ojson j;
  j["name"] = name;
  j["type"] = type;
  j["ring"] = R.name();
  ojson v;
  for (const auto& p : predicate_names())
    if (const Verdict* x = rep.find(p)) v[p] = verdict_json(R, *x);
  j["verdicts"] = v;
  if (!rep.per_sigma.empty()) {
    ojson per = ojson::array();
    for (const auto& x : rep.per_sigma) per.push_back(verdict_json(R, x));
    j["per_sigma"] = per;
  }
  return j;
}

ProbeBudget probe_budget(const CorpusConfig& cfg, unsigned degree) {
  ProbeBudget b;
  b.max_degree = degree;
  b.max_evaluations = cfg.probe_budget;
  b.seed = cfg.seed;
  return b;
}

ojson probe_json(const FiniteRing& R, const ProbeVerdict& v) {
  ojson j;
  if (v.counterexample) {
    j["value"] = false;
    ojson w;
    for (const auto& [role, p] : v.witness) w[role] = poly_json(R, p);
    ojson wit;
    wit["polynomials"] = w;
    wit["note"] = v.note;
    if (!v.map.empty()) wit["map"] = v.map;
    j["witness"] = wit;
  } else {
    j["value"] = "inconclusive";
    if (!v.note.empty()) j["note"] = v.note;
    if (!v.suspects.empty()) j["suspects"] = v.suspects;
  }
  const auto& m = v.manifest;
  j["search"] = {{"mode", m.mode},         {"max_degree", m.max_degree},
                 {"max_support", m.max_support}, {"candidates", m.candidates},
                 {"evaluations", m.evaluations}, {"skipped_overflow", m.skipped_overflow},
                 {"budget_exhausted", m.budget_exhausted}};
  return j;
}

ItemResult extension_item(const ExtensionEntry& e, const CorpusConfig& cfg) {
  ItemResult out;
  ojson& j = out.json;
  j["name"] = e.name;
  j["type"] = "extension";
  j["ring"] = e.ring;
  const FiniteRing& R = *e.data.ring;
  std::ostringstream tx;
  tx << "[extension] " << e.name << " over " << R.name() << " (n = " << e.data.n << ")\n";
  std::optional<Extension> ext;
  try {
    ext.emplace(Extension::build(e.data));
  } catch (const std::exception& ex) {
    j["error"] = ex.what();
    out.validation_error = true;
    out.text = tx.str() + "  invalid: " + ex.what() + "\n";
    return out;
  }
  const auto& f = ext->flags();
  j["flags"] = {{"quasi_commutative", f.quasi_commutative},
                {"bijective", f.bijective},
                {"derivation_type", f.derivation_type},
                {"endomorphism_type", f.endomorphism_type}};

  ojson checks;
  auto record = [&](const char* name, const std::vector<std::string>& bad) {
    ojson c;
    c["violations"] = bad;
    checks[name] = c;
    out.violations += static_cast<unsigned>(bad.size());
    tx << "  " << name << ": " << (bad.empty() ? "ok" : std::to_string(bad.size()) + " violations") << "\n";
  };
  record("oracle_agreement", oracle_mismatches(*ext, 4));
  record("associativity", associativity_failures(*ext));

  // R-level facts for the transfer statements
  MapFamily fam{e.data.ring, e.data.sigma, e.data.delta};
  RingAnalyzer an(e.data.ring, cfg.ring_cap);
  const ClassificationReport rep = classify(an, &fam);
  const bool ssc = rep.holds("sigma_semicommutative");
  if (ssc) record("idempotent_transparency", idempotent_transparency_failures(*ext));

  std::optional<LiftedMaps> lifted;
  try {
    lifted.emplace(lift_maps(*ext));
    j["lift"] = {{"value", true}};
  } catch (const LiftError& ex) {
    j["lift"] = {{"value", false}, {"reason", ex.what()}};
  }
  tx << "  lift: " << (lifted ? "ok" : j["lift"]["reason"].get<std::string>()) << "\n";

  ojson verdicts;
  for (ProbeProperty p : all_probe_properties()) {
    const ProbeVerdict v = probe(*ext, p, probe_budget(cfg, cfg.probe_degree), lifted ? &*lifted : nullptr);
    verdicts[to_string(p)] = probe_json(R, v);
    tx << "  probe " << to_string(p) << ": ";
    if (v.counterexample) {
      tx << "counterexample";
      for (const auto& [role, poly] : v.witness) tx << " " << role << " = " << to_string(R, poly) << ";";
      if (!v.map.empty()) tx << " map " << v.map;
    } else {
      tx << "none found (inconclusive; " << v.manifest.describe() << ")";
    }
    tx << "\n";
    if (p == ProbeProperty::SigmaBarSemicommutative && lifted) {
      std::vector<std::string> bad;
      if (ssc && rep.holds("baer") && fam.all_injective() && v.counterexample)
        bad.push_back("R is sigma-semicommutative and Baer but the extension has a counterexample");
      if (!ssc) {
        const ProbeVerdict d1 = probe(*ext, p, probe_budget(cfg, 1), &*lifted);
        if (!d1.counterexample) bad.push_back("R is not sigma-semicommutative but no degree-1 counterexample was found");
      }
      record("sigma_bar_transfer", bad);
    }
  }
  j["verdicts"] = verdicts;
  j["checks"] = checks;
  out.text = tx.str();
  return out;
}

ItemResult spectrum_item(const RingEntry& r, const CorpusConfig& cfg) {
  ItemResult out;
  ojson& j = out.json;
  j["name"] = "Spec(" + r.name + ")";
  j["type"] = "ring_spectrum";
  j["ring"] = r.name;
  std::ostringstream tx;
  tx << "[spectrum] " << r.name << "\n";
  try {
    const SpectrumBundle B = spectra(*r.ring, cfg.ring_cap);
    const FiniteTopology& T = B.spec;
    ElementSet all(T.size());
    all.set();
    ojson pts = ojson::array();
    for (std::size_t i = 0; i < T.size(); ++i)
      pts.push_back({{"ideal", T.points[i]}, {"maximal", T.max.test(i)}, {"strongly_prime", T.sspec.test(i)},
                     {"j_prime", T.jspec.test(i)}});
    j["points"] = pts;
    const TopoReport tp = topo_properties(T);
    const PmReport pm = pm_checks(T);
    const RetractVerdict rv = retract_exists(T);
    ojson v;
    v["spec_equals_max"] = bool_verdict(T.max == all);
    v["zariski_axioms"] = bool_verdict(!B.zariski_failure, B.zariski_failure);
    v["sspec_jspec_contain_max"] = bool_verdict(T.max.is_subset_of(T.sspec) && T.max.is_subset_of(T.jspec));
    v["t0"] = bool_verdict(tp.t0, tp.t0_witness);
    v["t1"] = bool_verdict(tp.t1, tp.t1_witness);
    v["normal"] = bool_verdict(tp.normal, tp.normal_witness);
    v["max_hausdorff"] = bool_verdict(tp.max_hausdorff, tp.hausdorff_witness);
    v["compact"] = bool_verdict(true, std::string("finite space"));
    for (auto [name, pv] : {std::pair{"pm", pm.pm}, {"weakly_pm", pm.weakly_pm}, {"j_pm", pm.j_pm}}) {
      ojson x = bool_verdict(pv.value, pv.witness);
      x["note"] = "degenerate: finite ring";
      v[name] = x;
    }
    v["o_topology_is_subspace"] = bool_verdict(B.o_matches_subspace);
    v["d_topology_is_subspace"] = bool_verdict(B.d_matches_subspace);
    v["max_retract"] = {{"value", to_string(rv.kind)}, {"note", rv.note}};
    j["verdicts"] = v;
    std::vector<std::string> bad = spectral_consistency(T);
    if (T.max != all) bad.push_back("a prime ideal is not maximal");
    if (B.zariski_failure) bad.push_back(*B.zariski_failure);
    j["violations"] = bad;
    out.violations = static_cast<unsigned>(bad.size());
    tx << "  points: " << T.size() << ", Spec = Max: " << (T.max == all ? "yes" : "no")
       << ", Zariski laws: " << (B.zariski_failure ? "fail" : "ok") << ", T1: " << (tp.t1 ? "yes" : "no")
       << ", normal: " << (tp.normal ? "yes" : "no") << ", pm: " << (pm.pm.value ? "yes" : "no") << " (degenerate)\n";
  } catch (const CapError& ex) {
    j["error"] = ex.what();
    tx << "  skipped: " << ex.what() << "\n";
  }
  out.text = tx.str();
  return out;
}

ItemResult space_item(const SpaceEntry& s) {
  ItemResult out;
  ojson& j = out.json;
  const FiniteTopology& T = s.space;
  j["name"] = s.name;
  j["type"] = "space";
  const TopoReport tp = topo_properties(T);
  const PmReport pm = pm_checks(T);
  const RetractVerdict rv = retract_exists(T);
  ojson v;
  v["t0"] = bool_verdict(tp.t0, tp.t0_witness);
  v["t1"] = bool_verdict(tp.t1, tp.t1_witness);
  v["normal"] = bool_verdict(tp.normal, tp.normal_witness);
  v["max_hausdorff"] = bool_verdict(tp.max_hausdorff, tp.hausdorff_witness);
  v["compact"] = bool_verdict(true, std::string("finite space"));
  v["pm"] = bool_verdict(pm.pm.value, pm.pm.witness);
  v["weakly_pm"] = bool_verdict(pm.weakly_pm.value, pm.weakly_pm.witness);
  v["j_pm"] = bool_verdict(pm.j_pm.value, pm.j_pm.witness);
  ojson r{{"value", to_string(rv.kind)}, {"note", rv.note}};
  if (rv.kind == RetractVerdict::Kind::Exists) {
    ojson m;
    for (std::size_t i = 0; i < T.size(); ++i) m[T.points[i]] = T.points[rv.retraction[i]];
    r["map"] = m;
  }
  v["max_retract"] = r;
  j["verdicts"] = v;
  const auto bad = spectral_consistency(T);
  j["violations"] = bad;
  out.violations = static_cast<unsigned>(bad.size());
  std::ostringstream tx;
  tx << "[space] " << s.name << ": T0 " << (tp.t0 ? "yes" : "no") << ", T1 " << (tp.t1 ? "yes" : "no") << ", normal "
     << (tp.normal ? "yes" : "no") << ", pm " << (pm.pm.value ? "yes" : "no");
  if (pm.pm.witness) tx << " (" << *pm.pm.witness << ")";
  tx << ", retract " << to_string(rv.kind) << "\n";
  out.text = tx.str();
  return out;
}

}  // namespace

RunResult run(Command cmd, const Corpus& corpus, const CorpusConfig& cfg) {
  const bool want_classify = cmd == Command::Classify || cmd == Command::Audit || cmd == Command::All;
  const bool want_audit = cmd == Command::Audit || cmd == Command::All;
  const bool want_pbw = cmd == Command::Pbw || cmd == Command::All;
  const bool want_topo = cmd == Command::Topo || cmd == Command::All;

  RunResult res;
  ojson& rep = res.report;
  rep["command"] = to_string(cmd);
  rep["config"] = {{"seed", cfg.seed},
                   {"ring_cap", cfg.ring_cap},
                   {"probe_degree", cfg.probe_degree},
                   {"probe_budget", cfg.probe_budget}};
  std::vector<ItemResult> items;
  std::ostringstream tx;

  if (want_classify) {
    // fixtures: every ring on its own, then every family
    std::vector<Fixture> fixtures;
    for (const auto& r : corpus.rings) fixtures.push_back({r.name, r.ring, std::nullopt});
    for (const auto& f : corpus.families) fixtures.push_back({f.name, f.family.ring, f.family});
    std::vector<ClassificationReport> reports(fixtures.size());
    std::vector<std::optional<std::string>> errors(fixtures.size());
    parallel_for(fixtures.size(), cfg.jobs, [&](std::size_t i) {
      try {
        RingAnalyzer an(fixtures[i].ring, cfg.ring_cap);
        reports[i] = classify(an, fixtures[i].family ? &*fixtures[i].family : nullptr);
      } catch (const CapError& e) {
        errors[i] = e.what();
      }
    });
    std::vector<Fixture> ok_fixtures;
    std::vector<ClassificationReport> ok_reports;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
      ItemResult it;
      const char* type = fixtures[i].family ? "family" : "ring";
      if (errors[i]) {
        it.json = {{"name", fixtures[i].name}, {"type", type}, {"error", *errors[i]}};
        it.text = std::string("[") + type + "] " + fixtures[i].name + "\n  skipped: " + *errors[i] + "\n";
      } else {
        it.json = classification_json(fixtures[i].name, type, *fixtures[i].ring, reports[i]);
        it.text = std::string("[") + type + "] " + fixtures[i].name + " (" + fixtures[i].ring->name() + ")\n" +
                  classification_text(reports[i]);
        ok_fixtures.push_back(fixtures[i]);
        ok_reports.push_back(reports[i]);
      }
      items.push_back(std::move(it));
    }
    if (want_audit) {
      AuditOptions opt;
      opt.cap = cfg.ring_cap;
      opt.seed = cfg.seed;
      opt.jobs = cfg.jobs;
      const AuditReport ar = audit_theorems(ok_fixtures, opt, &ok_reports);
      ojson th = ojson::array();
      unsigned total = 0;
      std::ostringstream at;
      at << "[audit]\n";
      for (const auto& t : ar.theorems) {
        ojson viol = ojson::array();
        for (const auto& v : t.violations) viol.push_back({{"fixture", v.fixture}, {"detail", v.detail}});
        th.push_back({{"id", t.id},
                      {"statement", t.statement},
                      {"tested", t.tested},
                      {"vacuous", t.vacuous},
                      {"violations", viol},
                      {"skipped", t.skipped}});
        total += static_cast<unsigned>(t.violations.size());
        at << "  " << t.id << ": tested " << t.tested << (t.vacuous ? " (vacuous)" : "") << ", violations "
           << t.violations.size() << "  " << t.statement << "\n";
        for (const auto& v : t.violations) at << "    " << v.fixture << ": " << v.detail << "\n";
      }
      rep["audit"] = {{"theorems", th}};
      ItemResult audit_text;
      audit_text.text = at.str();
      audit_text.violations = total;
      items.push_back(std::move(audit_text));  // text and tally only; JSON lives under "audit"
    }
  }

  if (want_pbw) {
    std::vector<ItemResult> ext(corpus.extensions.size());
    parallel_for(ext.size(), cfg.jobs, [&](std::size_t i) { ext[i] = extension_item(corpus.extensions[i], cfg); });
    for (auto& e : ext) items.push_back(std::move(e));
  }

  if (want_topo) {
    std::vector<ItemResult> sp(corpus.rings.size());
    parallel_for(sp.size(), cfg.jobs, [&](std::size_t i) { sp[i] = spectrum_item(corpus.rings[i], cfg); });
    for (auto& s : sp) items.push_back(std::move(s));
    for (const auto& s : corpus.spaces) items.push_back(space_item(s));
  }

  ojson arr = ojson::array();
  unsigned violations = 0;
  bool invalid = false;
  for (auto& it : items) {
    if (!it.json.is_null()) arr.push_back(std::move(it.json));
    tx << it.text;
    violations += it.violations;
    invalid = invalid || it.validation_error;
  }
  rep["items"] = std::move(arr);
  const bool bad = violations > 0 || invalid;
  rep["status"] = bad ? "violation" : "ok";
  tx << "status: " << (bad ? "violation" : "ok") << " (" << violations << " violations"
     << (invalid ? ", validation errors" : "") << ")\n";
  res.text = tx.str();
  res.exit_code = bad ? 1 : 0;
  // keep the documented key order: items, audit, status
  ojson ordered;
  ordered["command"] = rep["command"];
  ordered["config"] = rep["config"];
  ordered["items"] = rep["items"];
  if (rep.contains("audit")) ordered["audit"] = rep["audit"];
  ordered["status"] = rep["status"];
  res.report = std::move(ordered);
  return res;
}

}  // namespace pbw
