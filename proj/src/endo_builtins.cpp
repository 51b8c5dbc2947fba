#include "pbw/endo.hpp"

namespace pbw {

namespace {

void require_shape(const FiniteRing& R, const std::string& kind, const char* map) {
  if (R.shape().kind != kind)
    throw RingError(std::string("built-in '") + map + "' needs a " + kind + " ring, got '" + R.name() + "'");
}

std::vector<Elem> tabulate(const FiniteRing& R, auto&& f) {
  std::vector<Elem> img(R.order());
  for (Elem a = 0; a < R.order(); ++a) img[a] = f(a);
  return img;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingMap builtin_identity(RingPtr R) { return identity_map(std::move(R)); }

RingMap ut2_kill_b(RingPtr R) {
  require_shape(*R, "ut2_equal_diag", "ut2_kill_b");
  const unsigned n = R->shape().n;
  auto img = tabulate(*R, [&](Elem x) { return static_cast<Elem>((x / n) * n); });
  return build_map(R, "kill_b", std::move(img), MapRole::Endomorphism);
}

RingMap ut2_negate_b(RingPtr R) {
  require_shape(*R, "ut2_equal_diag", "ut2_negate_b");
  const unsigned n = R->shape().n;
  auto img = tabulate(*R, [&](Elem x) { return static_cast<Elem>((x / n) * n + (n - x % n) % n); });
  return build_map(R, "negate_b", std::move(img), MapRole::Endomorphism);
}

RingMap ut2_keep_a(RingPtr R) {
  require_shape(*R, "ut2", "ut2_keep_a");
  const unsigned n = R->shape().n;
  auto img = tabulate(*R, [&](Elem x) { return static_cast<Elem>((x / (n * n)) * n * n); });
  return build_map(R, "keep_a", std::move(img), MapRole::Endomorphism);
}

RingMap ut2_keep_c(RingPtr R) {
  require_shape(*R, "ut2", "ut2_keep_c");
  const unsigned n = R->shape().n;
  auto img = tabulate(*R, [&](Elem x) { return static_cast<Elem>(x % n); });
  return build_map(R, "keep_c", std::move(img), MapRole::Endomorphism);
}

RingMap trunc_swap(RingPtr R) {
  require_shape(*R, "trunc_st", "trunc_swap");
  const unsigned p = R->shape().p;
  const unsigned k = R->shape().k;
  const unsigned dims = 2 * k - 1;
  auto img = tabulate(*R, [&](Elem x) {
    std::vector<unsigned> d(dims);
    for (unsigned i = 0; i < dims; ++i, x /= p) d[i] = x % p;
    for (unsigned i = 1; i < k; ++i) std::swap(d[i], d[i + k - 1]);
    Elem y = 0;
    for (unsigned i = dims; i-- > 0;) y = y * p + d[i];
    return y;
  });
  return build_map(R, "swap", std::move(img), MapRole::Endomorphism);
}

RingMap frobenius(RingPtr R) {
  const unsigned p = R->characteristic();
  if (!is_prime(p)) throw RingError("frobenius: characteristic " + std::to_string(p) + " of '" + R->name() + "' is not prime");
  auto img = tabulate(*R, [&](Elem x) { return R->pow(x, p); });
  return build_map(R, "frobenius", std::move(img), MapRole::Endomorphism);
}

RingMap trunc_t2_derivation(RingPtr R) {
  require_shape(*R, "trunc_t2", "trunc_t2_derivation");
  const unsigned p = R->shape().p;
  RingMap id = identity_map(R);
  auto img = tabulate(*R, [&](Elem x) { return static_cast<Elem>(x / p); });
  return build_map(R, "d/dt", std::move(img), MapRole::Derivation, &id);
}

RingMap inner_derivation(RingPtr R, Elem c, const RingMap& sigma) {
  if (c >= R->order()) throw RingError("inner_derivation: element index out of range");
  auto img = tabulate(*R, [&](Elem a) { return R->sub(R->mul(c, a), R->mul(sigma(a), c)); });
  return build_map(R, "inner(" + R->label(c) + ")", std::move(img), MapRole::Derivation, &sigma);
}

std::optional<RingMap> builtin_by_name(RingPtr R, const std::string& name) {
  if (name == "identity" || name == "id") return builtin_identity(R);
  if (name == "ut2_kill_b") return ut2_kill_b(R);
  if (name == "ut2_negate_b") return ut2_negate_b(R);
  if (name == "ut2_keep_a") return ut2_keep_a(R);
  if (name == "ut2_keep_c") return ut2_keep_c(R);
  if (name == "trunc_swap" || name == "swap") return trunc_swap(R);
  if (name == "frobenius") return frobenius(R);
  if (name == "trunc_t2_derivation") return trunc_t2_derivation(R);
  return std::nullopt;
}

}  // namespace pbw
