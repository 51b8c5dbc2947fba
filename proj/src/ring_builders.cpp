#include <functional>
#include <optional>

#include "pbw/finring.hpp"

namespace pbw {

namespace {

std::vector<unsigned> digits(std::size_t index, unsigned base, std::size_t len) {
  std::vector<unsigned> d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<unsigned>(index % base);
    index /= base;
  }
  return d;
}

std::size_t undigits(const std::vector<unsigned>& d, unsigned base) {
  std::size_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * base + d[i];
  return idx;
}

std::size_t checked_power(unsigned base, std::size_t exp, const std::string& what) {
  std::size_t q = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    q *= base;
    if (q > kMaxTableOrder) throw RingError(what + ": order exceeds table limit");
  }
  return q;
}

std::string linear_label(const std::vector<unsigned>& coeffs, const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (basis[i].empty()) {
      out += std::to_string(coeffs[i]);
    } else {
      if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
      out += basis[i];
    }
  }
  return out.empty() ? "0" : out;
}

/// Commutative Z_p-algebra whose basis products are single basis vectors or zero.
FiniteRing monomial_algebra(std::string name, unsigned p, const std::vector<std::string>& basis,
                            const std::function<std::optional<std::size_t>(std::size_t, std::size_t)>& basis_product,
                            RingShape shape) {
  const std::size_t m = basis.size();
  const std::size_t q = checked_power(p, m, name);
  std::vector<Elem> add(q * q), mul(q * q);
  std::vector<std::vector<unsigned>> coords(q);
  for (std::size_t i = 0; i < q; ++i) coords[i] = digits(i, p, m);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      std::vector<unsigned> s(m), pr(m, 0);
      for (std::size_t t = 0; t < m; ++t) s[t] = (coords[i][t] + coords[j][t]) % p;
      for (std::size_t u = 0; u < m; ++u) {
        if (coords[i][u] == 0) continue;
        for (std::size_t v = 0; v < m; ++v) {
          if (coords[j][v] == 0) continue;
          if (auto w = basis_product(u, v)) pr[*w] = (pr[*w] + coords[i][u] * coords[j][v]) % p;
        }
      }
      add[i * q + j] = static_cast<Elem>(undigits(s, p));
      mul[i * q + j] = static_cast<Elem>(undigits(pr, p));
    }
  }
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) labels[i] = linear_label(coords[i], basis);
  return FiniteRing::from_tables(std::move(name), q, std::move(add), std::move(mul), 0, 1,
                                 std::move(labels), std::move(shape));
}

std::string matrix_label(unsigned a, unsigned b, unsigned c) {
  return "(" + std::to_string(a) + " " + std::to_string(b) + ";0 " + std::to_string(c) + ")";
}

}  // namespace

FiniteRing make_zn(unsigned n) {
  if (n < 2) throw RingError("zn: modulus must be at least 2");
  if (n > kMaxTableOrder) throw RingError("zn: order exceeds table limit");
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % n);
    }
  return FiniteRing::from_tables("Z" + std::to_string(n), n, std::move(add), std::move(mul), 0, 1, {},
                                 {"zn", n, n, 0});
}

FiniteRing make_gf(unsigned q) {
  unsigned p = 0;
  std::vector<unsigned> modulus;  // monic, low degree first, leading coefficient omitted
  switch (q) {
    case 4: p = 2; modulus = {1, 1}; break;     // a^2 + a + 1
    case 8: p = 2; modulus = {1, 1, 0}; break;  // a^3 + a + 1
    case 9: p = 3; modulus = {1, 0}; break;     // a^2 + 1
    default: {
      bool prime = q >= 2;
      for (unsigned d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
      if (!prime) throw RingError("gf: supported orders are primes and 4, 8, 9");
      FiniteRing Zp = make_zn(q);
      return FiniteRing::from_tables("GF" + std::to_string(q), q,
                                     {Zp.add_table().begin(), Zp.add_table().end()},
                                     {Zp.mul_table().begin(), Zp.mul_table().end()}, 0, 1, {},
                                     {"gf", q, q, 1});
    }
  }
  const std::size_t m = modulus.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    auto x = digits(i, p, m);
    for (std::size_t j = 0; j < q; ++j) {
      auto y = digits(j, p, m);
      std::vector<unsigned> s(m);
      for (std::size_t t = 0; t < m; ++t) s[t] = (x[t] + y[t]) % p;
      std::vector<unsigned> prod(2 * m - 1, 0);
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) prod[u + v] = (prod[u + v] + x[u] * y[v]) % p;
      // a^m = -(modulus) ; reduce from the top.
      for (std::size_t d = prod.size(); d-- > m;) {
        unsigned c = prod[d];
        prod[d] = 0;
        for (std::size_t t = 0; t < m; ++t)
          prod[d - m + t] = (prod[d - m + t] + (p - modulus[t]) % p * c) % p;
      }
      prod.resize(m);
      add[i * q + j] = static_cast<Elem>(undigits(s, p));
      mul[i * q + j] = static_cast<Elem>(undigits(prod, p));
    }
  }
  std::vector<std::string> basis{""};
  for (std::size_t t = 1; t < m; ++t) basis.push_back(t == 1 ? "a" : "a^" + std::to_string(t));
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) {
    // Highest power first reads naturally: a+1, a^2+a+1.
    auto d = digits(i, p, m);
    std::vector<unsigned> rd(d.rbegin(), d.rend());
    std::vector<std::string> rb(basis.rbegin(), basis.rend());
    labels[i] = linear_label(rd, rb);
  }
  return FiniteRing::from_tables("GF" + std::to_string(q), q, std::move(add), std::move(mul), 0, 1,
                                 std::move(labels), {"gf", q, p, static_cast<unsigned>(m)});
}

FiniteRing make_ut2_equal_diag(unsigned n) {
  if (n < 2) throw RingError("ut2_equal_diag: modulus must be at least 2");
  const std::size_t q = checked_power(n, 2, "ut2_equal_diag");
  std::vector<Elem> add(q * q), mul(q * q);
  std::vector<std::string> labels(q);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      const std::size_t i = a * n + b;
      labels[i] = matrix_label(a, b, a);
      for (unsigned c = 0; c < n; ++c)
        for (unsigned d = 0; d < n; ++d) {
          const std::size_t j = c * n + d;
          add[i * q + j] = static_cast<Elem>(((a + c) % n) * n + (b + d) % n);
          mul[i * q + j] = static_cast<Elem>(((a * c) % n) * n + (a * d + b * c) % n);
        }
    }
  return FiniteRing::from_tables("UT2eq(Z" + std::to_string(n) + ")", q, std::move(add), std::move(mul),
                                 0, static_cast<Elem>(n), std::move(labels), {"ut2_equal_diag", n, n, 0});
}

FiniteRing make_ut2(unsigned n) {
  if (n < 2) throw RingError("ut2: modulus must be at least 2");
  const std::size_t q = checked_power(n, 3, "ut2");
  std::vector<Elem> add(q * q), mul(q * q);
  std::vector<std::string> labels(q);
  auto idx = [n](unsigned a, unsigned b, unsigned c) { return static_cast<Elem>((a * n + b) * n + c); };
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c) {
        const Elem i = idx(a, b, c);
        labels[i] = matrix_label(a, b, c);
        for (unsigned x = 0; x < n; ++x)
          for (unsigned y = 0; y < n; ++y)
            for (unsigned z = 0; z < n; ++z) {
              const Elem j = idx(x, y, z);
              add[i * q + j] = idx((a + x) % n, (b + y) % n, (c + z) % n);
              // (a b;0 c)(x y;0 z) = (ax, ay + bz; 0, cz)
              mul[i * q + j] = idx((a * x) % n, (a * y + b * z) % n, (c * z) % n);
            }
      }
  return FiniteRing::from_tables("UT2(Z" + std::to_string(n) + ")", q, std::move(add), std::move(mul), 0,
                                 idx(1, 0, 1), std::move(labels), {"ut2", n, n, 0});
}

FiniteRing make_trunc_st(unsigned p, unsigned k) {
  if (p < 2) throw RingError("trunc_st: coefficient modulus must be at least 2");
  if (k < 1) throw RingError("trunc_st: truncation degree must be at least 1");
  std::vector<std::string> basis{""};
  for (unsigned i = 1; i < k; ++i) basis.push_back(i == 1 ? "s" : "s^" + std::to_string(i));
  for (unsigned i = 1; i < k; ++i) basis.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
  // Basis slot -> (variable, power); variable 0 = none, 1 = s, 2 = t.
  auto decode = [k](std::size_t u) -> std::pair<int, unsigned> {
    if (u == 0) return {0, 0};
    if (u < k) return {1, static_cast<unsigned>(u)};
    return {2, static_cast<unsigned>(u - k + 1)};
  };
  auto product = [&](std::size_t u, std::size_t v) -> std::optional<std::size_t> {
    auto [xu, pu] = decode(u);
    auto [xv, pv] = decode(v);
    if (xu == 0) return v;
    if (xv == 0) return u;
    if (xu != xv) return std::nullopt;  // st = 0
    const unsigned e = pu + pv;
    if (e >= k) return std::nullopt;
    return xu == 1 ? e : k - 1 + e;
  };
  std::string name = "Z" + std::to_string(p) + "[s,t]/(st,s^" + std::to_string(k) + ",t^" +
                     std::to_string(k) + ")";
  return monomial_algebra(std::move(name), p, basis, product, {"trunc_st", 0, p, k});
}

FiniteRing make_trunc_t2(unsigned p) {
  if (p < 2) throw RingError("trunc_t2: coefficient modulus must be at least 2");
  std::vector<std::string> basis{"", "t"};
  auto product = [](std::size_t u, std::size_t v) -> std::optional<std::size_t> {
    if (u == 0) return v;
    if (v == 0) return u;
    return std::nullopt;
  };
  return monomial_algebra("Z" + std::to_string(p) + "[t]/(t^2)", p, basis, product,
                          {"trunc_t2", 0, p, 2});
}

FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2) {
  const std::size_t q1 = r1.order(), q2 = r2.order();
  const std::size_t q = q1 * q2;
  if (q > kMaxTableOrder) throw RingError("product: order exceeds table limit");
  std::vector<Elem> add(q * q), mul(q * q);
  std::vector<std::string> labels(q);
  for (Elem a1 = 0; a1 < q1; ++a1)
    for (Elem a2 = 0; a2 < q2; ++a2) {
      const std::size_t i = a1 * q2 + a2;
      labels[i] = "(" + r1.label(a1) + "," + r2.label(a2) + ")";
      for (Elem b1 = 0; b1 < q1; ++b1)
        for (Elem b2 = 0; b2 < q2; ++b2) {
          const std::size_t j = b1 * q2 + b2;
          add[i * q + j] = static_cast<Elem>(r1.add(a1, b1) * q2 + r2.add(a2, b2));
          mul[i * q + j] = static_cast<Elem>(r1.mul(a1, b1) * q2 + r2.mul(a2, b2));
        }
    }
  return FiniteRing::from_tables(r1.name() + "x" + r2.name(), q, std::move(add), std::move(mul),
                                 static_cast<Elem>(r1.zero() * q2 + r2.zero()),
                                 static_cast<Elem>(r1.one() * q2 + r2.one()), std::move(labels),
                                 {"product", 0, 0, 0});
}

namespace {

FiniteRing rename(FiniteRing R, const std::string& name) {
  if (name.empty() || name == R.name()) return R;
  const auto add = R.add_table();
  const auto mul = R.mul_table();
  return FiniteRing::from_tables(name, R.order(), {add.begin(), add.end()}, {mul.begin(), mul.end()},
                                 R.zero(), R.one(), R.labels(), R.shape());
}

}  // namespace

FiniteRing build_ring(const RingSpec& spec) {
  using K = RingSpec::Kind;
  switch (spec.kind) {
    case K::Zn: return rename(make_zn(spec.n), spec.name);
    case K::GF: return rename(make_gf(spec.n), spec.name);
    case K::Ut2EqualDiag: return rename(make_ut2_equal_diag(spec.n), spec.name);
    case K::Ut2: return rename(make_ut2(spec.n), spec.name);
    case K::TruncST: return rename(make_trunc_st(spec.p, spec.k), spec.name);
    case K::TruncT2: return rename(make_trunc_t2(spec.p), spec.name);
    case K::Product: {
      if (spec.factors.size() < 2) throw RingError("product: needs at least two factors");
      FiniteRing acc = build_ring(spec.factors[0]);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) acc = make_product(acc, build_ring(spec.factors[i]));
      return rename(std::move(acc), spec.name);
    }
    case K::Raw:
      return FiniteRing::from_tables(spec.name.empty() ? "raw" : spec.name, spec.order, spec.add, spec.mul,
                                     spec.zero, spec.one, spec.labels, {"raw"});
  }
  throw RingError("unknown ring kind");
}

}  // namespace pbw
