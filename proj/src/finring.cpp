#include "pbw/finring.hpp"

#include <algorithm>
#include <unordered_set>

namespace pbw {

CapError::CapError(std::size_t order, std::size_t cap)
    : std::runtime_error("ring of order " + std::to_string(order) + " exceeds the ring-size cap of " +
                         std::to_string(cap)),
      order_(order),
      cap_(cap) {}

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

AxiomCheck check_triples(const char* name, std::size_t q, auto&& holds) {
  AxiomCheck c{name, true, std::nullopt};
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem d = 0; d < q; ++d)
        if (!holds(a, b, d)) {
          c.passed = false;
          c.witness = std::array<Elem, 3>{a, b, d};
          return c;
        }
  return c;
}

AxiomCheck check_singles(const char* name, std::size_t q, auto&& holds) {
  AxiomCheck c{name, true, std::nullopt};
  for (Elem a = 0; a < q; ++a)
    if (!holds(a)) {
      c.passed = false;
      c.witness = std::array<Elem, 3>{a, a, a};
      return c;
    }
  return c;
}

}  // namespace

AxiomReport verify_ring_axioms(std::size_t q, std::span<const Elem> add, std::span<const Elem> mul,
                               Elem zero, Elem one) {
  AxiomReport report;
  AxiomCheck shape{"table-shape", true, std::nullopt};
  if (q < 2 || add.size() != q * q || mul.size() != q * q || zero >= q || one >= q) {
    shape.passed = false;
    report.checks.push_back(shape);
    return report;
  }
  for (std::size_t i = 0; i < q * q; ++i) {
    if (add[i] >= q || mul[i] >= q) {
      shape.passed = false;
      shape.witness = std::array<Elem, 3>{static_cast<Elem>(i / q), static_cast<Elem>(i % q), 0};
      report.checks.push_back(shape);
      return report;
    }
  }
  report.checks.push_back(shape);

  auto A = [&](Elem a, Elem b) { return add[a * q + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * q + b]; };

  report.checks.push_back(check_singles("additive-identity", q, [&](Elem a) {
    return A(a, zero) == a && A(zero, a) == a;
  }));
  report.checks.push_back(check_triples("additive-commutativity", q, [&](Elem a, Elem b, Elem) {
    return A(a, b) == A(b, a);
  }));
  report.checks.push_back(check_triples("additive-associativity", q, [&](Elem a, Elem b, Elem c) {
    return A(A(a, b), c) == A(a, A(b, c));
  }));
  report.checks.push_back(check_singles("additive-inverse", q, [&](Elem a) {
    for (Elem b = 0; b < q; ++b)
      if (A(a, b) == zero) return true;
    return false;
  }));
  report.checks.push_back(check_triples("multiplicative-associativity", q,
                                        [&](Elem a, Elem b, Elem c) {
                                          return M(M(a, b), c) == M(a, M(b, c));
                                        }));
  report.checks.push_back(check_triples("left-distributivity", q, [&](Elem a, Elem b, Elem c) {
    return M(a, A(b, c)) == A(M(a, b), M(a, c));
  }));
  report.checks.push_back(check_triples("right-distributivity", q, [&](Elem a, Elem b, Elem c) {
    return M(A(a, b), c) == A(M(a, c), M(b, c));
  }));
  report.checks.push_back(check_singles("multiplicative-identity", q, [&](Elem a) {
    return M(a, one) == a && M(one, a) == a;
  }));
  AxiomCheck nontrivial{"one-neq-zero", true, std::nullopt};
  nontrivial.passed = one != zero;
  report.checks.push_back(nontrivial);

  report.multiplication_commutative = true;
  for (Elem a = 0; a < q && report.multiplication_commutative; ++a)
    for (Elem b = a + 1; b < q; ++b)
      if (M(a, b) != M(b, a)) {
        report.multiplication_commutative = false;
        break;
      }
  return report;
}

FiniteRing FiniteRing::from_tables(std::string name, std::size_t order, std::vector<Elem> add,
                                   std::vector<Elem> mul, Elem zero, Elem one,
                                   std::vector<std::string> labels, RingShape shape) {
  if (order < 2) throw RingError("ring '" + name + "': order must be at least 2");
  if (order > kMaxTableOrder)
    throw RingError("ring '" + name + "': order " + std::to_string(order) +
                    " exceeds the table limit " + std::to_string(kMaxTableOrder));
  AxiomReport report = verify_ring_axioms(order, add, mul, zero, one);
  if (const AxiomCheck* bad = report.first_failure()) {
    std::string msg = "ring '" + name + "' fails axiom " + bad->axiom;
    if (bad->witness) {
      const auto& w = *bad->witness;
      msg += " at (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
             std::to_string(w[2]) + ")";
    }
    throw RingError(msg);
  }
  if (!labels.empty() && labels.size() != order)
    throw RingError("ring '" + name + "': label count does not match order");

  FiniteRing R;
  R.name_ = std::move(name);
  R.order_ = order;
  R.add_ = std::move(add);
  R.mul_ = std::move(mul);
  R.zero_ = zero;
  R.one_ = one;
  R.shape_ = std::move(shape);
  R.commutative_ = report.multiplication_commutative;
  R.neg_.resize(order);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      if (R.add(a, b) == zero) {
        R.neg_[a] = b;
        break;
      }
  if (labels.empty()) {
    labels.reserve(order);
    for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  }
  R.labels_ = std::move(labels);
  return R;
}

Elem FiniteRing::pow(Elem a, unsigned k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

Elem FiniteRing::times(unsigned k, Elem a) const {
  Elem acc = zero_;
  for (unsigned i = 0; i < k; ++i) acc = add(acc, a);
  return acc;
}

std::optional<Elem> FiniteRing::find_label(std::string_view label) const {
  for (Elem i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ElementSet FiniteRing::full_set() const {
  ElementSet s(order_);
  s.set();
  return s;
}

unsigned FiniteRing::characteristic() const {
  unsigned c = 1;
  for (Elem acc = one_; acc != zero_; acc = add(acc, one_)) ++c;
  return c;
}

bool FiniteRing::is_unit(Elem a) const {
  for (Elem b = 0; b < order_; ++b)
    if (mul(a, b) == one_ && mul(b, a) == one_) return true;
  return false;
}

// ---------------------------------------------------------------------------

ElementSet idempotents(const FiniteRing& R) {
  ElementSet s(R.order());
  for (Elem a = 0; a < R.order(); ++a)
    if (R.mul(a, a) == a) s.set(a);
  return s;
}

bool is_nilpotent(const FiniteRing& R, Elem a) {
  // a is nilpotent iff some repeated square vanishes; the nilpotency index is at
  // most q, so ceil(log2 q) + 1 squarings suffice. Cycle detection stops early.
  std::unordered_set<Elem> seen;
  Elem x = a;
  std::size_t bound = 2;
  for (std::size_t q = R.order(); q > 1; q >>= 1) ++bound;
  for (std::size_t step = 0; step <= bound + R.order(); ++step) {
    if (x == R.zero()) return true;
    if (!seen.insert(x).second) return false;
    x = R.mul(x, x);
  }
  return x == R.zero();
}

ElementSet nilpotents(const FiniteRing& R) {
  ElementSet s(R.order());
  for (Elem a = 0; a < R.order(); ++a)
    if (is_nilpotent(R, a)) s.set(a);
  return s;
}

}  // namespace pbw
