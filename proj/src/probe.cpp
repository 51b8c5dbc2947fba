#include <algorithm>
#include <random>
#include <sstream>

#include "pbw/skewpbw.hpp"

namespace pbw {

namespace {

const std::vector<std::pair<ProbeProperty, std::string>>& property_names() {
  static const std::vector<std::pair<ProbeProperty, std::string>> names = {
      {ProbeProperty::Semicommutative, "semicommutative"},
      {ProbeProperty::Reduced, "reduced"},
      {ProbeProperty::Abelian, "abelian"},
      {ProbeProperty::SigmaBarSemicommutative, "sigma_bar_semicommutative"},
      {ProbeProperty::SA1, "sa1"},
      {ProbeProperty::SQA1, "sqa1"},
      {ProbeProperty::SigmaSkewArmendariz, "sigma_skew_armendariz"},
      {ProbeProperty::SkewArmendariz, "skew_armendariz"},
      {ProbeProperty::BoundedBaer, "bounded_baer"},
  };
  return names;
}

}  // namespace

std::string to_string(ProbeProperty p) {
  for (const auto& [k, v] : property_names())
    if (k == p) return v;
  return "?";
}

std::optional<ProbeProperty> probe_property_from_string(const std::string& s) {
  for (const auto& [k, v] : property_names())
    if (v == s) return k;
  return std::nullopt;
}

const std::vector<ProbeProperty>& all_probe_properties() {
  static const std::vector<ProbeProperty> all = [] {
    std::vector<ProbeProperty> v;
    for (const auto& [k, _] : property_names()) v.push_back(k);
    return v;
  }();
  return all;
}

std::string SearchManifest::describe() const {
  std::ostringstream os;
  os << mode << " search over " << candidates << " candidates (degree <= " << max_degree << ", support <= "
     << max_support << "), " << evaluations << " products";
  if (skipped_overflow) os << ", " << skipped_overflow << " skipped on degree overflow";
  if (budget_exhausted) os << ", budget exhausted";
  return os.str();
}

namespace {

struct BudgetExhausted {};

class Search {
 public:
  Search(const Extension& ext, const ProbeBudget& budget, ProbeProperty prop)
      : ext_(ext), R_(ext.ring()), budget_(budget), M_(ext) {
    verdict.property = prop;
    verdict.manifest.max_degree = std::min(budget.max_degree, ext.degree_cap());
    verdict.manifest.max_support = std::max(1u, budget.max_support);
    build_candidates(static_cast<unsigned>(prop));
  }

  ProbeVerdict verdict;
  std::vector<Sparse> cands;  // probe candidates, nonzero
  std::vector<Sparse> singles;  // r x^a with r != 0, |a| <= d

  /// Product with budget accounting; nullopt when the product overflows the degree cap.
  std::optional<Sparse> mul(const Sparse& f, const Sparse& g) {
    if (M_.products() >= budget_.max_evaluations) throw BudgetExhausted{};
    try {
      return M_.multiply(f, g);
    } catch (const DegreeOverflow&) {
      ++verdict.manifest.skipped_overflow;
      return std::nullopt;
    }
  }

  Polynomial poly(const Sparse& s) const { return M_.to_polynomial(s); }
  std::string text(const Sparse& s) const { return to_string(R_, poly(s)); }
  const MultiIndex& mono(std::uint32_t i) const { return M_.monomials()[i]; }
  Elem coeff_at(const Sparse& s, std::uint32_t i) const {
    for (const auto& [m, c] : s)
      if (m == i) return c;
    return R_.zero();
  }

  void found(std::vector<std::pair<std::string, Sparse>> parts, std::string note, std::string map = "") {
    verdict.counterexample = true;
    for (auto& [role, s] : parts) verdict.witness.emplace_back(role, poly(s));
    verdict.note = std::move(note);
    verdict.map = std::move(map);
  }

  void finish() { verdict.manifest.evaluations = M_.products(); }

  const Extension& ext() const { return ext_; }
  const FiniteRing& ring() const { return R_; }

 private:
  void build_candidates(unsigned salt) {
    const unsigned d = verdict.manifest.max_degree;
    const unsigned s = verdict.manifest.max_support;
    std::uint32_t m = 0;
    while (m < M_.monomials().size() && total_degree(M_.monomials()[m]) <= d) ++m;
    const std::uint64_t q1 = R_.order() - 1;
    std::vector<Elem> nonzero;
    for (Elem r = 0; r < R_.order(); ++r)
      if (r != R_.zero()) nonzero.push_back(r);
    for (std::uint32_t i = 0; i < m; ++i)
      for (Elem r : nonzero) singles.push_back({{i, r}});

    // supports: size, then degree of the top monomial, then lexicographic
    std::vector<std::vector<std::uint32_t>> supports;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t from, unsigned k) -> void {
      if (cur.size() == k) {
        supports.push_back(cur);
        return;
      }
      for (std::uint32_t i = from; i < m; ++i) {
        cur.push_back(i);
        self(self, i + 1, k);
        cur.pop_back();
      }
    };
    for (unsigned k = 1; k <= std::min<unsigned>(s, m); ++k) rec(rec, 0, k);
    std::stable_sort(supports.begin(), supports.end(), [&](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return total_degree(M_.monomials()[a.back()]) < total_degree(M_.monomials()[b.back()]);
    });

    long double total = 0;
    for (const auto& sup : supports) {
      long double c = 1;
      for (std::size_t i = 0; i < sup.size(); ++i) c *= static_cast<long double>(q1);
      total += c;
    }
    if (q1 == 0) total = 0;
    if (total <= static_cast<long double>(budget_.exhaustive_limit)) {
      verdict.manifest.mode = "exhaustive";
      for (const auto& sup : supports) {
        std::vector<std::size_t> odo(sup.size(), 0);
        while (true) {
          Sparse p;
          for (std::size_t i = 0; i < sup.size(); ++i) p.emplace_back(sup[i], nonzero[odo[i]]);
          cands.push_back(std::move(p));
          std::size_t i = sup.size();
          while (i > 0 && ++odo[i - 1] == nonzero.size()) odo[--i] = 0;
          if (i == 0) break;
        }
      }
    } else {
      verdict.manifest.mode = "sampled";
      std::mt19937_64 rng(budget_.seed * 0x9E3779B97F4A7C15ull + salt);
      std::uniform_int_distribution<std::size_t> pick_sup(0, supports.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_coef(0, nonzero.size() - 1);
      for (std::uint64_t k = 0; k < budget_.sample_count; ++k) {
        const auto& sup = supports[pick_sup(rng)];
        Sparse p;
        for (std::uint32_t i : sup) p.emplace_back(i, nonzero[pick_coef(rng)]);
        cands.push_back(std::move(p));
      }
    }
    verdict.manifest.candidates = cands.size();
  }

  const Extension& ext_;
  const FiniteRing& R_;
  ProbeBudget budget_;
  Multiplier M_;
};

Sparse constant_one(const FiniteRing& R) { return {{0u, R.one()}}; }

// sigma^a = sigma_1^{a_1} o ... o sigma_n^{a_n}
Elem sigma_power(const Extension& ext, const MultiIndex& a, Elem r) {
  for (unsigned k = ext.n(); k-- > 0;)
    for (unsigned e = 0; e < a[k]; ++e) r = ext.sigma(k, r);
  return r;
}

Sparse apply_map(const RingMap& m, const Sparse& s, Elem zero) {
  Sparse out;
  for (const auto& [i, c] : s)
    if (m(c) != zero) out.emplace_back(i, m(c));
  return out;
}

void run_semicommutative(Search& S, const std::vector<RingMap>* maps) {
  const FiniteRing& R = S.ring();
  std::vector<Sparse> middles{constant_one(R)};
  middles.insert(middles.end(), S.singles.begin(), S.singles.end());
  for (const auto& f : S.cands)
    for (const auto& g : S.cands) {
      auto fg = S.mul(f, g);
      if (!fg || !fg->empty()) continue;
      for (const auto& h : middles) {
        auto fh = S.mul(f, h);
        if (!fh) continue;
        if (!maps) {
          auto fhg = S.mul(*fh, g);
          if (fhg && !fhg->empty()) {
            S.found({{"f", f}, {"h", h}, {"g", g}, {"fhg", *fhg}}, "fg = 0 but fhg != 0");
            return;
          }
          continue;
        }
        for (const auto& m : *maps) {
          const Sparse mg = apply_map(m, g, R.zero());
          auto v = S.mul(*fh, mg);
          if (v && !v->empty()) {
            S.found({{"f", f}, {"h", h}, {"g", g}, {"fh phi(g)", *v}}, "fg = 0 but f h phi(g) != 0", m.name);
            return;
          }
        }
      }
    }
}

void run_reduced(Search& S) {
  for (const auto& f : S.cands) {
    auto ff = S.mul(f, f);
    if (ff && ff->empty()) {
      S.found({{"f", f}}, "f^2 = 0 with f != 0");
      return;
    }
  }
}

void run_abelian(Search& S) {
  std::vector<Sparse> others = S.cands;
  others.insert(others.end(), S.singles.begin(), S.singles.end());
  for (const auto& e : S.cands) {
    auto ee = S.mul(e, e);
    if (!ee || *ee != e) continue;
    for (const auto& g : others) {
      auto eg = S.mul(e, g), ge = S.mul(g, e);
      if (eg && ge && *eg != *ge) {
        S.found({{"e", e}, {"g", g}}, "e^2 = e but eg != ge");
        return;
      }
    }
  }
}

/// Coefficient conditions following fg = 0. `cond` returns a failing description or "".
template <class Cond>
void run_coefficient(Search& S, Cond cond) {
  for (const auto& f : S.cands)
    for (const auto& g : S.cands) {
      auto fg = S.mul(f, g);
      if (!fg || !fg->empty()) continue;
      const std::string bad = cond(f, g);
      if (!bad.empty()) {
        S.found({{"f", f}, {"g", g}}, "fg = 0 but " + bad);
        return;
      }
    }
}

void run_sqa1(Search& S) {
  // set up front: the budget can cut the scan short
  S.verdict.note = "fAg = 0 cannot be confirmed by finite search; violations are reported as suspects only";
  const FiniteRing& R = S.ring();
  std::vector<Sparse> middles{constant_one(R)};
  middles.insert(middles.end(), S.singles.begin(), S.singles.end());
  for (const auto& f : S.cands)
    for (const auto& g : S.cands) {
      // coefficient condition first: only pairs violating it matter
      std::string bad;
      for (const auto& [i, a] : f)
        for (const auto& [j, b] : g)
          for (Elem r = 0; r < R.order() && bad.empty(); ++r)
            if (R.mul(R.mul(a, r), b) != R.zero())
              bad = R.label(a) + " R " + R.label(b) + " != 0";
      if (bad.empty()) continue;
      bool all_zero = true;
      for (const auto& h : middles) {
        auto fh = S.mul(f, h);
        if (!fh) continue;
        auto fhg = S.mul(*fh, g);
        if (fhg && !fhg->empty()) {
          all_zero = false;
          break;
        }
      }
      if (all_zero && S.verdict.suspects.size() < 8)
        S.verdict.suspects.push_back("f = " + S.text(f) + ", g = " + S.text(g) + ": fhg = 0 for every sampled h but " + bad);
    }
}

void run_bounded_baer(Search& S) {
  const FiniteRing& R = S.ring();
  const ElementSet idem = idempotents(R);
  for (const auto& h : S.cands) {
    std::vector<std::pair<std::string, Sparse>> parts{{"h", h}};
    std::string reasons;
    bool every_e_fails = true;
    for_each_member(idem, [&](Elem e) {
      if (!every_e_fails) return;
      const Sparse pe = e == R.zero() ? Sparse{} : Sparse{{0u, e}};
      auto he = S.mul(h, pe);
      if (!he) {
        every_e_fails = false;
        return;
      }
      if (!he->empty()) {
        reasons += "; h*" + R.label(e) + " != 0";
        return;
      }
      for (const auto& g : S.cands) {
        auto hg = S.mul(h, g);
        if (!hg || !hg->empty()) continue;
        auto eg = S.mul(pe, g);
        if (eg && *eg != g) {
          parts.emplace_back("g for e = " + R.label(e), g);
          reasons += "; hg = 0 but " + R.label(e) + "*g != g";
          return;
        }
      }
      every_e_fails = false;
    });
    if (every_e_fails) {
      S.found(std::move(parts), "right annihilator of h is not eA for any idempotent e of R" + reasons);
      return;
    }
  }
}

void recheck(const Extension& ext, const ProbeVerdict& v) {
  // a fresh multiplier guards against cache corruption in the search
  Multiplier M(ext);
  auto get = [&](const std::string& role) -> const Polynomial& {
    for (const auto& [r, p] : v.witness)
      if (r == role) return p;
    throw std::logic_error("probe witness lacks " + role);
  };
  auto fail = [&] { throw std::logic_error("probe witness for " + to_string(v.property) + " does not re-check"); };
  switch (v.property) {
    case ProbeProperty::Semicommutative:
      if (!M.multiply(get("f"), get("g")).is_zero() || M.multiply(M.multiply(get("f"), get("h")), get("g")).is_zero()) fail();
      break;
    case ProbeProperty::Reduced:
      if (get("f").is_zero() || !M.multiply(get("f"), get("f")).is_zero()) fail();
      break;
    case ProbeProperty::Abelian:
      if (M.multiply(get("e"), get("e")) != get("e") || M.multiply(get("e"), get("g")) == M.multiply(get("g"), get("e"))) fail();
      break;
    case ProbeProperty::SigmaBarSemicommutative:
    case ProbeProperty::SA1:
    case ProbeProperty::SigmaSkewArmendariz:
    case ProbeProperty::SkewArmendariz:
      if (!M.multiply(get("f"), get("g")).is_zero()) fail();
      break;
    case ProbeProperty::SQA1:
    case ProbeProperty::BoundedBaer:
      break;
  }
}

}  // namespace

ProbeVerdict probe(const Extension& ext, ProbeProperty property, const ProbeBudget& budget, const LiftedMaps* lifted) {
  Search S(ext, budget, property);
  const FiniteRing& R = ext.ring();
  try {
    switch (property) {
      case ProbeProperty::Semicommutative:
        run_semicommutative(S, nullptr);
        break;
      case ProbeProperty::SigmaBarSemicommutative: {
        if (!lifted) {
          S.verdict.note = "not run: the maps do not lift to the extension";
          break;
        }
        MapFamily fam{ext.ring_ptr(), ext.data().sigma, {}};
        std::vector<RingMap> maps;
        for (auto& m : closure(fam, ClosureKind::SigmaAlpha, false).members) maps.push_back(std::move(m.map));
        run_semicommutative(S, &maps);
        break;
      }
      case ProbeProperty::Reduced:
        run_reduced(S);
        break;
      case ProbeProperty::Abelian:
        run_abelian(S);
        break;
      case ProbeProperty::SA1:
        run_coefficient(S, [&](const Sparse& f, const Sparse& g) -> std::string {
          for (const auto& [i, a] : f)
            for (const auto& [j, b] : g)
              if (R.mul(a, b) != R.zero()) return R.label(a) + "*" + R.label(b) + " != 0";
          return "";
        });
        break;
      case ProbeProperty::SigmaSkewArmendariz:
        run_coefficient(S, [&](const Sparse& f, const Sparse& g) -> std::string {
          for (const auto& [i, a] : f)
            for (const auto& [j, b] : g) {
              const Elem sb = sigma_power(ext, S.mono(i), b);
              if (R.mul(a, sb) != R.zero()) return R.label(a) + "*sigma^alpha(" + R.label(b) + ") != 0";
            }
          return "";
        });
        break;
      case ProbeProperty::SkewArmendariz:
        run_coefficient(S, [&](const Sparse& f, const Sparse& g) -> std::string {
          const Elem a0 = S.coeff_at(f, 0);
          for (const auto& [j, b] : g)
            if (R.mul(a0, b) != R.zero()) return "a_0*" + R.label(b) + " = " + R.label(a0) + "*" + R.label(b) + " != 0";
          return "";
        });
        break;
      case ProbeProperty::SQA1:
        run_sqa1(S);
        break;
      case ProbeProperty::BoundedBaer:
        run_bounded_baer(S);
        break;
    }
  } catch (const BudgetExhausted&) {
    S.verdict.manifest.budget_exhausted = true;
  }
  S.finish();
  if (S.verdict.counterexample) recheck(ext, S.verdict);
  return S.verdict;
}

}  // namespace pbw
