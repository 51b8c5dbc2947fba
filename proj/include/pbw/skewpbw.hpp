#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbw/endo.hpp"
#include "pbw/finring.hpp"

namespace pbw {

/// Exponent vector (alpha_1..alpha_n) of the standard monomial x_1^alpha_1 ... x_n^alpha_n.
using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& a);

/// Total degree first, then lexicographic on the exponent vector.
struct MonomialLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All exponent vectors of length n with total degree <= d, in MonomialLess order.
std::vector<MultiIndex> monomials_up_to(unsigned n, unsigned d);

struct Term {
  MultiIndex exponents;
  Elem coeff;
  bool operator==(const Term&) const = default;
};

/// Left-coefficient normal form: terms sorted by MonomialLess, coefficients nonzero,
/// each monomial at most once.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  unsigned degree() const;
  /// Coefficient of x^a (zero if absent); `zero` is the ring's zero index.
  Elem coeff(const MultiIndex& a, Elem zero) const;
  bool operator==(const Polynomial&) const = default;

  static Polynomial constant(const FiniteRing& R, unsigned n, Elem r);
  static Polynomial monomial(const FiniteRing& R, MultiIndex a, Elem c);
  /// Builds the normal form from a coefficient map, dropping zeros.
  static Polynomial from_map(const FiniteRing& R, const std::map<MultiIndex, Elem, MonomialLess>& m);
};

std::string to_string(const FiniteRing& R, const Polynomial& p);
Polynomial add(const FiniteRing& R, const Polynomial& f, const Polynomial& g);

class ExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeOverflow : public std::runtime_error {
 public:
  DegreeOverflow(unsigned degree, unsigned cap);
  unsigned degree() const { return degree_; }
  unsigned cap() const { return cap_; }

 private:
  unsigned degree_, cap_;
};

/// Generators are 0-based here: x_{i+1} in the usual notation is generator i.
struct SkewPBWData {
  std::string name;
  unsigned n = 1;
  RingPtr ring;
  std::vector<RingMap> sigma;
  std::vector<RingMap> delta;
  /// d[i][j] for i < j: x_j x_i = d[i][j] x_i x_j + r[i][j][0] + sum_l r[i][j][l] x_l.
  std::vector<std::vector<Elem>> d;
  /// r[i][j] has n + 1 entries; entry 0 is the constant, entry l the coefficient of generator l-1.
  std::vector<std::vector<std::vector<Elem>>> r;
  unsigned degree_cap = 6;

  /// Defaults: d = 1, r = 0, delta = 0 (paired with sigma).
  static SkewPBWData with_defaults(std::string name, RingPtr R, std::vector<RingMap> sigma,
                                   std::vector<RingMap> delta = {}, unsigned degree_cap = 6);
};

struct ExtensionFlags {
  bool quasi_commutative = false;
  bool bijective = false;
  bool derivation_type = false;
  bool endomorphism_type = false;
};

class Extension {
 public:
  /// Validates the data and runs the associativity probe; throws ExtensionError.
  static Extension build(SkewPBWData data);

  const SkewPBWData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  const FiniteRing& ring() const { return *data_.ring; }
  RingPtr ring_ptr() const { return data_.ring; }
  unsigned n() const { return data_.n; }
  unsigned degree_cap() const { return data_.degree_cap; }
  const ExtensionFlags& flags() const { return flags_; }

  Elem sigma(unsigned i, Elem r) const { return data_.sigma[i](r); }
  Elem delta(unsigned i, Elem r) const { return data_.delta[i](r); }
  /// Constants of x_j x_i for i < j.
  Elem d(unsigned i, unsigned j) const { return data_.d[i][j]; }
  Elem r(unsigned i, unsigned j, unsigned l) const { return data_.r[i][j][l]; }

  Polynomial constant(Elem r) const { return Polynomial::constant(ring(), n(), r); }
  Polynomial generator(unsigned i) const;
  MultiIndex zero_index() const { return MultiIndex(n(), 0); }

 private:
  explicit Extension(SkewPBWData data) : data_(std::move(data)) {}
  SkewPBWData data_;
  ExtensionFlags flags_;
};

/// Sparse polynomial over monomial indices of a fixed table.
using Sparse = std::vector<std::pair<std::uint32_t, Elem>>;

/// Rewriting multiplier with memoized monomial actions. Not thread-safe; use one per thread.
class Multiplier {
 public:
  explicit Multiplier(const Extension& ext, std::optional<unsigned> cap = std::nullopt);

  const Extension& extension() const { return ext_; }
  unsigned cap() const { return cap_; }
  const std::vector<MultiIndex>& monomials() const { return monos_; }
  /// Index of a monomial; throws DegreeOverflow past the cap.
  std::uint32_t index_of(const MultiIndex& a) const;

  Sparse to_sparse(const Polynomial& p) const;
  Polynomial to_polynomial(const Sparse& s) const;

  /// x^a r
  const Sparse& mono_elem(std::uint32_t a, Elem r);
  /// x^a x^b
  const Sparse& mono_mono(std::uint32_t a, std::uint32_t b);
  /// x^a b x^c
  const Sparse& triple(std::uint32_t a, Elem b, std::uint32_t c);

  Sparse multiply(const Sparse& f, const Sparse& g);
  Polynomial multiply(const Polynomial& f, const Polynomial& g);
  std::uint64_t products() const { return products_; }

 private:
  const Sparse& mono_gen(std::uint32_t a, unsigned j);
  void accumulate(Elem c, const Sparse& s);
  Sparse flush();
  Sparse times_generator(const Sparse& p, unsigned j);

  const Extension& ext_;
  const FiniteRing& R_;
  unsigned cap_;
  std::vector<MultiIndex> monos_;
  std::map<MultiIndex, std::uint32_t> index_;
  std::vector<int> last_gen_;

  std::vector<std::vector<std::optional<Sparse>>> elem_cache_;
  std::vector<std::vector<std::optional<Sparse>>> gen_cache_;
  std::unordered_map<std::uint64_t, Sparse> mono_cache_;
  std::unordered_map<std::uint64_t, Sparse> triple_cache_;
  std::vector<Elem> acc_;
  std::vector<std::uint32_t> touched_;
  std::vector<char> is_touched_;
  std::uint64_t products_ = 0;
};

Polynomial multiply(const Extension& ext, const Polynomial& f, const Polynomial& g);

/// x^a r by the closed nested-sum formula for monomial actions; uses only the
/// sigma/delta rule, never the reordering rule.
Polynomial monomial_action_oracle(const Extension& ext, const MultiIndex& a, Elem r);

// ---------------------------------------------------------------------------
// Lifted maps.

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient-wise extensions of sigma_k and delta_k to the extension.
class LiftedMaps {
 public:
  explicit LiftedMaps(const Extension& ext) : ext_(&ext) {}
  Polynomial sigma_bar(unsigned k, const Polynomial& f) const;
  Polynomial delta_bar(unsigned k, const Polynomial& f) const;
  /// Applies an arbitrary map of R coefficient-wise.
  Polynomial apply(const RingMap& m, const Polynomial& f) const;
  const Extension& extension() const { return *ext_; }

 private:
  const Extension* ext_;
};

/// Checks the lifting hypotheses (commutation of the maps, constants killed by every
/// delta_k and fixed by every sigma_k), then re-validates the lifted laws on products of
/// single-term polynomials of degree <= 2 up to `validation_budget` products.
LiftedMaps lift_maps(const Extension& ext, std::uint64_t validation_budget = 200000);

// ---------------------------------------------------------------------------
// Desk-scale structural checks on an extension.

/// Mismatches between multiply(x^a, r) and the oracle, for |a| <= max_degree.
std::vector<std::string> oracle_mismatches(const Extension& ext, unsigned max_degree = 4);
/// Associativity on triples x^a, b x^c, e x^g of degree <= 1 each.
std::vector<std::string> associativity_failures(const Extension& ext, std::uint64_t budget = 200000);
/// For every idempotent e of R: delta_i(e) = 0, x^a e = e x^a (|a| <= 3), r x^a e = e r x^a (|a| <= 2).
std::vector<std::string> idempotent_transparency_failures(const Extension& ext);

// ---------------------------------------------------------------------------
// Bounded probes of properties of the (infinite) extension.

enum class ProbeProperty {
  Semicommutative,
  Reduced,
  Abelian,
  SigmaBarSemicommutative,
  SA1,
  SQA1,
  SigmaSkewArmendariz,
  SkewArmendariz,
  BoundedBaer
};

std::string to_string(ProbeProperty p);
std::optional<ProbeProperty> probe_property_from_string(const std::string& s);
const std::vector<ProbeProperty>& all_probe_properties();

struct ProbeBudget {
  unsigned max_degree = 2;
  unsigned max_support = 2;
  /// Enumerate every candidate when there are at most this many; otherwise sample.
  std::uint64_t exhaustive_limit = 4096;
  std::uint64_t sample_count = 1024;
  /// Cap on multiplications performed by one probe.
  std::uint64_t max_evaluations = 10'000'000;
  std::uint64_t seed = 0;
};

struct SearchManifest {
  std::string mode;  // "exhaustive" or "sampled"
  unsigned max_degree = 0;
  unsigned max_support = 0;
  std::uint64_t candidates = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t skipped_overflow = 0;
  bool budget_exhausted = false;

  std::string describe() const;
};

struct ProbeVerdict {
  ProbeProperty property = ProbeProperty::Reduced;
  /// True: definitive counterexample in `witness`. False: none found (inconclusive).
  bool counterexample = false;
  std::vector<std::pair<std::string, Polynomial>> witness;
  std::string map;
  std::string note;
  SearchManifest manifest;
  /// Candidates that look like violations but cannot be confirmed by finite search.
  std::vector<std::string> suspects;
};

/// `lifted` is needed for SigmaBarSemicommutative (otherwise the probe reports why it did not run).
ProbeVerdict probe(const Extension& ext, ProbeProperty property, const ProbeBudget& budget,
                   const LiftedMaps* lifted = nullptr);

}  // namespace pbw
