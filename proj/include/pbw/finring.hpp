#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/element_set.hpp"

namespace pbw {

inline constexpr std::size_t kDefaultRingCap = 512;
/// Hard limit on table construction; the configurable cap applies to lattice work.
inline constexpr std::size_t kMaxTableOrder = 4096;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive procedure would exceed the configured ring-size cap.
class CapError : public std::runtime_error {
 public:
  CapError(std::size_t order, std::size_t cap);
  std::size_t order() const { return order_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::optional<std::array<Elem, 3>> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool multiplication_commutative = false;

  bool ok() const;
  /// First failing check, if any.
  const AxiomCheck* first_failure() const;
};

AxiomReport verify_ring_axioms(std::size_t order, std::span<const Elem> add,
                               std::span<const Elem> mul, Elem zero, Elem one);

/// How a ring was built. Built-in endomorphisms consult this to locate coordinates.
struct RingShape {
  std::string kind;  // "zn", "gf", "ut2_equal_diag", "ut2", "trunc_st", "trunc_t2", "product", "raw"
  unsigned n = 0;
  unsigned p = 0;
  unsigned k = 0;
};

/// A finite unital ring given by addition and multiplication tables over 0..q-1.
/// Immutable once constructed; every instance has passed verify_ring_axioms.
class FiniteRing {
 public:
  static FiniteRing from_tables(std::string name, std::size_t order, std::vector<Elem> add,
                                std::vector<Elem> mul, Elem zero, Elem one,
                                std::vector<std::string> labels = {}, RingShape shape = {"raw"});

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const RingShape& shape() const { return shape_; }

  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, unsigned k) const;
  /// a + a + ... + a (k times).
  Elem times(unsigned k, Elem a) const;

  std::span<const Elem> add_table() const { return add_; }
  std::span<const Elem> mul_table() const { return mul_; }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(std::string_view label) const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const;
  bool is_commutative() const { return commutative_; }
  /// Additive order of the identity.
  unsigned characteristic() const;
  bool is_unit(Elem a) const;

 private:
  FiniteRing() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<std::string> labels_;
  RingShape shape_;
  bool commutative_ = false;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// ---------------------------------------------------------------------------
// Constructors for the standard finite rings.

struct RingSpec {
  enum class Kind { Zn, GF, Ut2EqualDiag, Ut2, TruncST, TruncT2, Product, Raw };

  Kind kind = Kind::Zn;
  std::string name;
  unsigned n = 0;  // modulus for zn / ut2*, field order for gf
  unsigned p = 0;  // coefficient modulus for trunc_*
  unsigned k = 0;  // truncation degree for trunc_st
  std::vector<RingSpec> factors;
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 1;
  std::vector<std::string> labels;
};

FiniteRing build_ring(const RingSpec& spec);

FiniteRing make_zn(unsigned n);
/// Fields of order 4, 8, 9 from fixed irreducible moduli (and primes, as Z_p).
FiniteRing make_gf(unsigned q);
/// {(a b; 0 a)} over Z_n. Index of (a b; 0 a) is a*n + b.
FiniteRing make_ut2_equal_diag(unsigned n);
/// {(a b; 0 c)} over Z_n. Index of (a b; 0 c) is (a*n + b)*n + c.
FiniteRing make_ut2(unsigned n);
/// Z_p[s,t]/(st, s^k, t^k) with basis 1, s..s^{k-1}, t..t^{k-1}; index is the
/// base-p number whose digits are the coordinates in that basis order.
FiniteRing make_trunc_st(unsigned p, unsigned k);
/// Z_p[t]/(t^2); index of a + b t is a + p*b.
FiniteRing make_trunc_t2(unsigned p);
/// R1 x R2; index of (x, y) is x*|R2| + y.
FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2);

// ---------------------------------------------------------------------------
// Element inventory.

ElementSet idempotents(const FiniteRing& R);
ElementSet nilpotents(const FiniteRing& R);
bool is_nilpotent(const FiniteRing& R, Elem a);

enum class Side { Left, Right };
enum class IdealKind { Right, Left, TwoSided };

std::string to_string(IdealKind kind);

/// An additive subgroup closed under multiplication on the declared side(s).
/// Members are indices into the ring it was computed from.
struct Ideal {
  ElementSet members;
  IdealKind kind = IdealKind::TwoSided;

  std::size_t size() const { return members.count(); }
  bool contains(Elem a) const { return members.test(a); }
  bool operator==(const Ideal& o) const { return members == o.members; }
};

bool is_ideal(const FiniteRing& R, const ElementSet& members, IdealKind kind);

/// right: {x : s x = 0 for all s in S}; left: {x : x s = 0 for all s in S}.
Ideal annihilator(const FiniteRing& R, Side side, const ElementSet& S);

ElementSet additive_span(const FiniteRing& R, const ElementSet& generators);
Ideal principal_ideal(const FiniteRing& R, Elem a, IdealKind kind);
Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J);
/// Additive span of {ij}; two-sided when I and J are.
Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J);

/// All ideals of the given kind, as the sum-closure of the principal ones.
/// Order: principal ideals by generator index, then sums in discovery order.
std::vector<Ideal> enumerate_ideals(const FiniteRing& R, IdealKind kind,
                                    std::size_t cap = kDefaultRingCap);

enum class SpecialKind { Prime, Maximal, MaximalRight, StronglyPrime, JPrime };

bool is_prime_ideal(const FiniteRing& R, const Ideal& P);
std::vector<Ideal> special_ideals(const FiniteRing& R, SpecialKind kind,
                                  std::size_t cap = kDefaultRingCap);

struct RadicalSet {
  ElementSet nilpotents;
  Ideal prime_radical;
  Ideal upper_nilradical;
  Ideal jacobson;
};

RadicalSet radicals(const FiniteRing& R, std::size_t cap = kDefaultRingCap);

struct Quotient {
  FiniteRing ring;
  std::vector<Elem> projection;  // element of R -> coset index
};

Quotient quotient_with_projection(const FiniteRing& R, const Ideal& I);
FiniteRing quotient_ring(const FiniteRing& R, const Ideal& I);

}  // namespace pbw
