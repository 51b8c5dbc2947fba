#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbw/endo.hpp"
#include "pbw/finring.hpp"

namespace pbw {

/// Evidence attached to a verdict. Which fields are filled depends on the predicate;
/// `note` says how to read them.
struct Witness {
  std::vector<Elem> elements;
  std::vector<ElementSet> sets;
  std::string map;
  std::vector<unsigned> exponents;
  std::string note;
};

struct Verdict {
  bool value = true;
  std::optional<Witness> witness;

  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, std::move(w)}; }
};

/// Predicate names, in report order.
const std::vector<std::string>& predicate_names();

struct ClassificationReport {
  std::string ring;
  /// Only applicable predicates are present; Sigma/Delta ones need a family.
  std::map<std::string, Verdict> verdicts;
  /// sigma_semicommutative for each {sigma_i} on its own.
  std::vector<Verdict> per_sigma;

  const Verdict* find(const std::string& name) const;
  bool holds(const std::string& name) const;
};

/// Caches the annihilator bitsets that the aRb-style predicates share.
class RingAnalyzer {
 public:
  explicit RingAnalyzer(RingPtr R, std::size_t cap = kDefaultRingCap);

  const FiniteRing& ring() const { return *ring_; }
  RingPtr ring_ptr() const { return ring_; }
  std::size_t cap() const { return cap_; }

  /// {b : ab = 0}
  const ElementSet& right_zero(Elem a) const { return right_zero_[a]; }
  /// {b : ba = 0}
  const ElementSet& left_zero(Elem a) const { return left_zero_[a]; }
  /// {b : aRb = 0}
  const ElementSet& sandwich(Elem a) const { return sandwich_[a]; }
  const ElementSet& nilpotent_set() const { return nil_; }
  const ElementSet& idempotent_set() const { return idem_; }
  /// {x : x s = 0 for all s in S}
  ElementSet left_annihilator(const ElementSet& S) const;
  /// {x : s x = 0 for all s in S}
  ElementSet right_annihilator(const ElementSet& S) const;
  /// An idempotent e with eR equal to `set`, if one exists (smallest index).
  std::optional<Elem> generating_idempotent(const ElementSet& set) const;
  const RadicalSet& radical_set() const;

  Verdict reduced() const;
  Verdict abelian() const;
  Verdict semicommutative() const;
  Verdict symmetric() const;
  Verdict reversible() const;
  Verdict reflexive() const;
  Verdict weak_symmetric() const;
  Verdict nil_reversible() const;
  Verdict two_primal() const;
  Verdict ni() const;
  Verdict nj() const;
  Verdict baer() const;
  Verdict quasi_baer() const;

  Verdict sigma_semicommutative(const MapClosure& alpha_nonzero) const;
  Verdict sigma_rigid(const MapClosure& alpha_all) const;
  Verdict sigma_compatible(const MapClosure& alpha_all, bool weak) const;
  Verdict delta_compatible(const MapClosure& beta_all, bool weak) const;
  Verdict skew_rnp_right(const MapClosure& alpha_all) const;
  Verdict skew_rnp_left(const MapClosure& alpha_all) const;

 private:
  RingPtr ring_;
  std::size_t cap_;
  std::vector<ElementSet> right_zero_, left_zero_, sandwich_;
  ElementSet nil_, idem_;
  std::vector<std::pair<Elem, ElementSet>> idempotent_ideals_;
  mutable std::optional<RadicalSet> radicals_;
};

/// Eight element-wise predicates.
void classify_elementwise(const RingAnalyzer& an, ClassificationReport& out);
/// two_primal, NI, NJ.
void classify_radical(const RingAnalyzer& an, ClassificationReport& out);
Verdict is_baer(const RingAnalyzer& an);
Verdict is_quasi_baer(const RingAnalyzer& an);

Verdict sigma_semicommutative(const RingAnalyzer& an, const MapFamily& family);
Verdict sigma_rigid(const RingAnalyzer& an, const MapFamily& family);

struct CompatibilityVerdicts {
  Verdict sigma_compatible, delta_compatible, weak_sigma_compatible, weak_delta_compatible;
};
/// Delta defaults to the zero derivations when the family carries none.
CompatibilityVerdicts compatibility(const RingAnalyzer& an, const MapFamily& family);

struct RnpVerdicts {
  Verdict right, left;
};
RnpVerdicts skew_rnp(const RingAnalyzer& an, const MapFamily& family);

ClassificationReport classify(const RingAnalyzer& an, const MapFamily* family = nullptr);

// ---------------------------------------------------------------------------
// Theorem audit.

struct Fixture {
  std::string name;
  RingPtr ring;
  std::optional<MapFamily> family;
};

struct Violation {
  std::string fixture;
  std::string detail;
};

struct TheoremResult {
  std::string id;
  std::string statement;
  std::size_t tested = 0;
  bool vacuous = false;
  std::vector<Violation> violations;
  /// Fixtures not meeting the hypotheses.
  std::vector<std::string> skipped;
};

struct AuditReport {
  std::vector<TheoremResult> theorems;
  bool ok() const;
  const TheoremResult* find(const std::string& id) const;
};

struct AuditOptions {
  std::size_t cap = kDefaultRingCap;
  std::uint64_t seed = 0;
  /// Random subsets per fixture for the annihilator laws.
  unsigned random_subsets = 32;
  unsigned jobs = 1;
};

/// Checks T1-T10 and the consistency checks C1-C5 on every fixture. Classification
/// reports can be passed in to avoid recomputation (same order as fixtures).
AuditReport audit_theorems(const std::vector<Fixture>& fixtures, const AuditOptions& opt = {},
                           const std::vector<ClassificationReport>* reports = nullptr);

}  // namespace pbw
