#include "pbw/skewpbw.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pbw {

unsigned total_degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); }

bool MonomialLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::vector<MultiIndex> monomials_up_to(unsigned n, unsigned d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // depth-first over exponent vectors, pruned by the degree budget
  auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

unsigned Polynomial::degree() const { return terms.empty() ? 0 : total_degree(terms.back().exponents); }

Elem Polynomial::coeff(const MultiIndex& a, Elem zero) const {
  for (const auto& t : terms)
    if (t.exponents == a) return t.coeff;
  return zero;
}

Polynomial Polynomial::constant(const FiniteRing& R, unsigned n, Elem r) { return monomial(R, MultiIndex(n, 0), r); }

Polynomial Polynomial::monomial(const FiniteRing& R, MultiIndex a, Elem c) {
  Polynomial p;
  if (c != R.zero()) p.terms.push_back({std::move(a), c});
  return p;
}

Polynomial Polynomial::from_map(const FiniteRing& R, const std::map<MultiIndex, Elem, MonomialLess>& m) {
  Polynomial p;
  for (const auto& [a, c] : m)
    if (c != R.zero()) p.terms.push_back({a, c});
  return p;
}

std::string to_string(const FiniteRing& R, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += t.exponents.size() == 1 ? "x" : "x" + std::to_string(i + 1);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty())
      os << R.label(t.coeff);
    else if (t.coeff == R.one())
      os << mono;
    else if (const auto& l = R.label(t.coeff); l.find_first_of("+ ") != std::string::npos && l.front() != '(')
      os << "(" << l << ")*" << mono;
    else
      os << l << "*" << mono;
  }
  return os.str();
}

Polynomial add(const FiniteRing& R, const Polynomial& f, const Polynomial& g) {
  std::map<MultiIndex, Elem, MonomialLess> m;
  for (const auto& t : f.terms) m[t.exponents] = t.coeff;
  for (const auto& t : g.terms) {
    auto [it, fresh] = m.try_emplace(t.exponents, t.coeff);
    if (!fresh) it->second = R.add(it->second, t.coeff);
  }
  return Polynomial::from_map(R, m);
}

DegreeOverflow::DegreeOverflow(unsigned degree, unsigned cap)
    : std::runtime_error("degree overflow: monomial of degree " + std::to_string(degree) + " exceeds cap " +
                         std::to_string(cap)),
      degree_(degree),
      cap_(cap) {}

SkewPBWData SkewPBWData::with_defaults(std::string name, RingPtr R, std::vector<RingMap> sigma,
                                       std::vector<RingMap> delta, unsigned degree_cap) {
  SkewPBWData d;
  d.name = std::move(name);
  d.n = static_cast<unsigned>(sigma.size());
  d.ring = R;
  if (delta.empty())
    for (const auto& s : sigma) delta.push_back(zero_derivation(R, &s));
  d.sigma = std::move(sigma);
  d.delta = std::move(delta);
  d.d.assign(d.n, std::vector<Elem>(d.n, R->one()));
  d.r.assign(d.n, std::vector<std::vector<Elem>>(d.n, std::vector<Elem>(d.n + 1, R->zero())));
  d.degree_cap = degree_cap;
  return d;
}

Polynomial Extension::generator(unsigned i) const {
  MultiIndex a = zero_index();
  a.at(i) = 1;
  return Polynomial::monomial(ring(), std::move(a), ring().one());
}

namespace {

std::string gen_name(unsigned i) { return "x" + std::to_string(i + 1); }

void check_shape(const SkewPBWData& D) {
  if (!D.ring) throw ExtensionError(D.name + ": no coefficient ring");
  if (D.n == 0) throw ExtensionError(D.name + ": at least one generator is required");
  if (D.sigma.size() != D.n || D.delta.size() != D.n)
    throw ExtensionError(D.name + ": expected " + std::to_string(D.n) + " sigma and delta maps");
  if (D.degree_cap == 0) throw ExtensionError(D.name + ": degree cap must be positive");
  const FiniteRing& R = *D.ring;
  const std::size_t q = R.order();
  for (unsigned i = 0; i < D.n; ++i) {
    const RingMap& s = D.sigma[i];
    const RingMap& d = D.delta[i];
    if (s.size() != q || d.size() != q) throw ExtensionError(D.name + ": map size mismatch at " + gen_name(i));
    if (!s.flags.additive || !s.flags.multiplicative)
      throw ExtensionError(D.name + ": sigma_" + std::to_string(i + 1) + " (" + s.name + ") is not an endomorphism");
    if (!s.flags.injective)
      throw ExtensionError(D.name + ": sigma_" + std::to_string(i + 1) + " (" + s.name + ") is not injective");
    if (!s.flags.unital)
      throw ExtensionError(D.name + ": sigma_" + std::to_string(i + 1) + " (" + s.name + ") is not unital");
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        if (d(R.add(a, b)) != R.add(d(a), d(b)) ||
            d(R.mul(a, b)) != R.add(R.mul(s(a), d(b)), R.mul(d(a), b)))
          throw ExtensionError(D.name + ": delta_" + std::to_string(i + 1) + " (" + d.name + ") is not a sigma_" +
                               std::to_string(i + 1) + "-derivation at (" + R.label(a) + ", " + R.label(b) + ")");
      }
  }
  if (D.d.size() != D.n || D.r.size() != D.n) throw ExtensionError(D.name + ": d and r must be n x n");
  for (unsigned i = 0; i < D.n; ++i) {
    if (D.d[i].size() != D.n || D.r[i].size() != D.n) throw ExtensionError(D.name + ": d and r must be n x n");
    for (unsigned j = i + 1; j < D.n; ++j) {
      if (D.d[i][j] >= q) throw ExtensionError(D.name + ": d out of range");
      if (D.d[i][j] == R.zero())
        throw ExtensionError(D.name + ": d_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} is zero");
      if (D.r[i][j].size() != D.n + 1)
        throw ExtensionError(D.name + ": r constants for a pair need n + 1 entries");
      for (Elem c : D.r[i][j])
        if (c >= q) throw ExtensionError(D.name + ": r constant out of range");
    }
  }
}

void associativity_probe(const Extension& ext) {
  Multiplier M(ext, std::max(ext.degree_cap(), 3u));
  const FiniteRing& R = ext.ring();
  const unsigned n = ext.n();
  std::vector<Polynomial> x;
  for (unsigned i = 0; i < n; ++i) x.push_back(ext.generator(i));
  auto fail = [&](const std::string& what, const Polynomial& l, const Polynomial& r) {
    throw ExtensionError(ext.name() + ": associativity fails for " + what + ": " + to_string(R, l) + " vs " +
                         to_string(R, r));
  };
  for (unsigned k = 0; k < n; ++k)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned i = 0; i < n; ++i) {
        const Polynomial l = M.multiply(M.multiply(x[k], x[j]), x[i]);
        const Polynomial r = M.multiply(x[k], M.multiply(x[j], x[i]));
        if (l != r) fail("(" + gen_name(k) + gen_name(j) + ")" + gen_name(i), l, r);
      }
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) {
      const Polynomial xji = M.multiply(x[j], x[i]);
      for (Elem r = 0; r < R.order(); ++r) {
        const Polynomial c = ext.constant(r);
        const Polynomial lhs = M.multiply(xji, c);
        const Polynomial rhs = M.multiply(x[j], M.multiply(x[i], c));
        if (lhs != rhs) fail("(" + gen_name(j) + gen_name(i) + ")" + R.label(r), lhs, rhs);
      }
    }
  for (unsigned i = 0; i < n; ++i)
    for (Elem r = 0; r < R.order(); ++r) {
      const Polynomial xr = M.multiply(x[i], ext.constant(r));
      for (Elem s = 0; s < R.order(); ++s) {
        const Polynomial lhs = M.multiply(xr, ext.constant(s));
        const Polynomial rhs = M.multiply(x[i], ext.constant(R.mul(r, s)));
        if (lhs != rhs) fail("(" + gen_name(i) + R.label(r) + ")" + R.label(s), lhs, rhs);
      }
    }
}

}  // namespace

Extension Extension::build(SkewPBWData data) {
  check_shape(data);
  Extension ext(std::move(data));
  const auto& D = ext.data_;
  const FiniteRing& R = *D.ring;
  ExtensionFlags& f = ext.flags_;
  f.derivation_type = std::all_of(D.sigma.begin(), D.sigma.end(), [](const RingMap& s) { return s.is_identity(); });
  f.endomorphism_type = std::all_of(D.delta.begin(), D.delta.end(), [](const RingMap& d) { return d.is_zero(); });
  bool r_zero = true, d_units = true;
  for (unsigned i = 0; i < D.n; ++i)
    for (unsigned j = i + 1; j < D.n; ++j) {
      d_units = d_units && R.is_unit(D.d[i][j]);
      for (Elem c : D.r[i][j]) r_zero = r_zero && c == R.zero();
    }
  f.quasi_commutative = f.endomorphism_type && r_zero;
  f.bijective = d_units && std::all_of(D.sigma.begin(), D.sigma.end(), [](const RingMap& s) { return s.flags.surjective; });
  associativity_probe(ext);
  return ext;
}

// ---------------------------------------------------------------------------
// Multiplier

Multiplier::Multiplier(const Extension& ext, std::optional<unsigned> cap)
    : ext_(ext), R_(ext.ring()), cap_(cap.value_or(ext.degree_cap())) {
  monos_ = monomials_up_to(ext.n(), cap_);
  for (std::uint32_t i = 0; i < monos_.size(); ++i) {
    index_.emplace(monos_[i], i);
    int last = -1;
    for (unsigned g = 0; g < ext.n(); ++g)
      if (monos_[i][g] > 0) last = static_cast<int>(g);
    last_gen_.push_back(last);
  }
  elem_cache_.assign(monos_.size(), std::vector<std::optional<Sparse>>(R_.order()));
  gen_cache_.assign(monos_.size(), std::vector<std::optional<Sparse>>(ext.n()));
  acc_.assign(monos_.size(), R_.zero());
  is_touched_.assign(monos_.size(), 0);
}

std::uint32_t Multiplier::index_of(const MultiIndex& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw DegreeOverflow(total_degree(a), cap_);
  return it->second;
}

Sparse Multiplier::to_sparse(const Polynomial& p) const {
  Sparse s;
  s.reserve(p.terms.size());
  for (const auto& t : p.terms) s.emplace_back(index_of(t.exponents), t.coeff);
  return s;  // terms already follow the table order
}

Polynomial Multiplier::to_polynomial(const Sparse& s) const {
  Polynomial p;
  p.terms.reserve(s.size());
  for (const auto& [i, c] : s) p.terms.push_back({monos_[i], c});
  return p;
}

void Multiplier::accumulate(Elem c, const Sparse& s) {
  if (c == R_.zero()) return;
  for (const auto& [i, v] : s) {
    if (!is_touched_[i]) {
      is_touched_[i] = 1;
      touched_.push_back(i);
    }
    acc_[i] = R_.add(acc_[i], R_.mul(c, v));
  }
}

Sparse Multiplier::flush() {
  std::sort(touched_.begin(), touched_.end());
  Sparse out;
  for (std::uint32_t i : touched_) {
    if (acc_[i] != R_.zero()) out.emplace_back(i, acc_[i]);
    acc_[i] = R_.zero();
    is_touched_[i] = 0;
  }
  touched_.clear();
  return out;
}

Sparse Multiplier::times_generator(const Sparse& p, unsigned j) {
  // mono_gen results must be copied out before accumulation: the cache may grow
  std::vector<std::pair<Elem, Sparse>> parts;
  for (const auto& [i, c] : p) parts.emplace_back(c, mono_gen(i, j));
  for (const auto& [c, s] : parts) accumulate(c, s);
  return flush();
}

const Sparse& Multiplier::mono_elem(std::uint32_t a, Elem r) {
  auto& slot = elem_cache_[a][r];
  if (slot) return *slot;
  Sparse out;
  if (r == R_.zero()) {
  } else if (last_gen_[a] < 0) {
    out.emplace_back(a, r);
  } else {
    // x^a r = (x^a' sigma_k(r)) x_k + x^a' delta_k(r), k the last generator of a
    const unsigned k = static_cast<unsigned>(last_gen_[a]);
    MultiIndex prev = monos_[a];
    --prev[k];
    const std::uint32_t ap = index_.at(prev);
    const Sparse head = times_generator(Sparse(mono_elem(ap, ext_.sigma(k, r))), k);
    const Sparse tail = mono_elem(ap, ext_.delta(k, r));
    accumulate(R_.one(), head);
    accumulate(R_.one(), tail);
    out = flush();
  }
  elem_cache_[a][r] = std::move(out);
  return *elem_cache_[a][r];
}

const Sparse& Multiplier::mono_gen(std::uint32_t a, unsigned j) {
  auto& slot = gen_cache_[a][j];
  if (slot) return *slot;
  Sparse out;
  const int last = last_gen_[a];
  if (last <= static_cast<int>(j)) {
    MultiIndex b = monos_[a];
    ++b[j];
    out.emplace_back(index_of(b), R_.one());
  } else {
    // x^a' x_k x_j with j < k: x_k x_j = d_jk x_j x_k + r_0 + sum_l r_l x_l
    const unsigned k = static_cast<unsigned>(last);
    MultiIndex prev = monos_[a];
    --prev[k];
    const std::uint32_t ap = index_.at(prev);
    std::vector<Sparse> parts;
    parts.push_back(times_generator(times_generator(Sparse(mono_elem(ap, ext_.d(j, k))), j), k));
    parts.push_back(mono_elem(ap, ext_.r(j, k, 0)));
    for (unsigned l = 1; l <= ext_.n(); ++l) {
      const Elem c = ext_.r(j, k, l);
      if (c != R_.zero()) parts.push_back(times_generator(Sparse(mono_elem(ap, c)), l - 1));
    }
    for (const auto& p : parts) accumulate(R_.one(), p);
    out = flush();
  }
  gen_cache_[a][j] = std::move(out);
  return *gen_cache_[a][j];
}

const Sparse& Multiplier::mono_mono(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t key = static_cast<std::uint64_t>(a) * monos_.size() + b;
  if (auto it = mono_cache_.find(key); it != mono_cache_.end()) return it->second;
  Sparse out;
  if (last_gen_[b] < 0) {
    out.emplace_back(a, R_.one());
  } else {
    // (x^a x_j) x^b', j the first generator of b
    unsigned j = 0;
    while (monos_[b][j] == 0) ++j;
    MultiIndex rest = monos_[b];
    --rest[j];
    const std::uint32_t bp = index_.at(rest);
    const Sparse step = mono_gen(a, j);
    std::vector<std::pair<Elem, Sparse>> parts;
    for (const auto& [g, c] : step) parts.emplace_back(c, mono_mono(g, bp));
    for (const auto& [c, s] : parts) accumulate(c, s);
    out = flush();
  }
  return mono_cache_.emplace(key, std::move(out)).first->second;
}

const Sparse& Multiplier::triple(std::uint32_t a, Elem b, std::uint32_t c) {
  const std::uint64_t key = (static_cast<std::uint64_t>(a) * R_.order() + b) * monos_.size() + c;
  if (auto it = triple_cache_.find(key); it != triple_cache_.end()) return it->second;
  const Sparse left = mono_elem(a, b);
  std::vector<std::pair<Elem, Sparse>> parts;
  for (const auto& [g, v] : left) parts.emplace_back(v, mono_mono(g, c));
  for (const auto& [v, s] : parts) accumulate(v, s);
  return triple_cache_.emplace(key, flush()).first->second;
}

Sparse Multiplier::multiply(const Sparse& f, const Sparse& g) {
  ++products_;
  // f g = sum a_i (X_i b_j Y_j); triple() uses the accumulator itself, so fill the cache first
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) triple(a, cb, b);
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) accumulate(ca, triple(a, cb, b));
  return flush();
}

Polynomial Multiplier::multiply(const Polynomial& f, const Polynomial& g) {
  return to_polynomial(multiply(to_sparse(f), to_sparse(g)));
}

Polynomial multiply(const Extension& ext, const Polynomial& f, const Polynomial& g) {
  Multiplier M(ext);
  return M.multiply(f, g);
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

using CoeffMap = std::map<MultiIndex, Elem, MonomialLess>;

void oracle_into(const Extension& ext, const MultiIndex& a, Elem r, Elem scale, const MultiIndex& suffix,
                 CoeffMap& out) {
  const FiniteRing& R = ext.ring();
  const unsigned n = ext.n();
  if (r == R.zero() || scale == R.zero()) return;
  auto add_term = [&](MultiIndex m, Elem c) {
    for (unsigned i = 0; i < n; ++i) m[i] += suffix[i];
    if (total_degree(m) > ext.degree_cap()) throw DegreeOverflow(total_degree(m), ext.degree_cap());
    auto [it, fresh] = out.try_emplace(std::move(m), c);
    if (!fresh) it->second = R.add(it->second, c);
  };
  // leading term sigma^a(r) x^a, with sigma^a = sigma_1^{a_1} o ... o sigma_n^{a_n}
  Elem lead = r;
  for (unsigned k = n; k-- > 0;)
    for (unsigned e = 0; e < a[k]; ++e) lead = ext.sigma(k, lead);
  add_term(a, R.mul(scale, lead));
  // rho_k = sigma_{k+1}^{a_{k+1}} ... sigma_n^{a_n}(r)
  Elem rho = r;
  for (unsigned k = n; k-- > 0;) {
    Elem pw = rho;  // sigma_k^{j-1}(rho_k)
    for (unsigned j = 1; j <= a[k]; ++j) {
      const Elem c = ext.delta(k, pw);
      // x_1^{a_1}..x_k^{a_k - j} c x_k^{j-1} x_{k+1}^{a_{k+1}}..x_n^{a_n}; the prefix times c
      // only involves x_1..x_k, so appending the suffix keeps monomials standard
      MultiIndex prefix(n, 0), tail(n, 0);
      for (unsigned i = 0; i < k; ++i) prefix[i] = a[i];
      prefix[k] = a[k] - j;
      tail[k] = j - 1;
      for (unsigned i = k + 1; i < n; ++i) tail[i] = a[i];
      for (unsigned i = 0; i < n; ++i) tail[i] += suffix[i];
      oracle_into(ext, prefix, c, scale, tail, out);
      pw = ext.sigma(k, pw);
    }
    for (unsigned e = 0; e < a[k]; ++e) rho = ext.sigma(k, rho);
  }
}

}  // namespace

Polynomial monomial_action_oracle(const Extension& ext, const MultiIndex& a, Elem r) {
  if (a.size() != ext.n()) throw ExtensionError("oracle: exponent vector has the wrong length");
  if (total_degree(a) > ext.degree_cap()) throw DegreeOverflow(total_degree(a), ext.degree_cap());
  CoeffMap out;
  oracle_into(ext, a, r, ext.ring().one(), MultiIndex(ext.n(), 0), out);
  return Polynomial::from_map(ext.ring(), out);
}

// ---------------------------------------------------------------------------
// Lifted maps

Polynomial LiftedMaps::apply(const RingMap& m, const Polynomial& f) const {
  std::map<MultiIndex, Elem, MonomialLess> out;
  for (const auto& t : f.terms) out[t.exponents] = m(t.coeff);
  return Polynomial::from_map(ext_->ring(), out);
}

Polynomial LiftedMaps::sigma_bar(unsigned k, const Polynomial& f) const { return apply(ext_->data().sigma.at(k), f); }
Polynomial LiftedMaps::delta_bar(unsigned k, const Polynomial& f) const { return apply(ext_->data().delta.at(k), f); }

LiftedMaps lift_maps(const Extension& ext, std::uint64_t validation_budget) {
  const auto& D = ext.data();
  const FiniteRing& R = ext.ring();
  const unsigned n = ext.n();
  auto idx = [](unsigned i) { return std::to_string(i + 1); };
  auto commute = [&](const RingMap& f, const RingMap& g) {
    for (Elem a = 0; a < R.order(); ++a)
      if (f(g(a)) != g(f(a))) return false;
    return true;
  };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (!commute(D.sigma[i], D.delta[j]))
        throw LiftError(ext.name() + ": sigma_" + idx(i) + " and delta_" + idx(j) + " do not commute");
      if (i < j && !commute(D.delta[i], D.delta[j]))
        throw LiftError(ext.name() + ": delta_" + idx(i) + " and delta_" + idx(j) + " do not commute");
      if (i < j && !commute(D.sigma[i], D.sigma[j]))
        throw LiftError(ext.name() + ": sigma_" + idx(i) + " and sigma_" + idx(j) + " do not commute");
    }
  for (unsigned k = 0; k < n; ++k)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        const std::string pair = "{" + idx(i) + "," + idx(j) + "}";
        if (D.delta[k](D.d[i][j]) != R.zero())
          throw LiftError(ext.name() + ": delta_" + idx(k) + " does not vanish on d_" + pair);
        if (D.sigma[k](D.d[i][j]) != D.d[i][j])
          throw LiftError(ext.name() + ": sigma_" + idx(k) + " does not fix d_" + pair);
        for (unsigned l = 0; l <= n; ++l) {
          const Elem c = D.r[i][j][l];
          if (D.delta[k](c) != R.zero())
            throw LiftError(ext.name() + ": delta_" + idx(k) + " does not vanish on r_" + std::to_string(l) + "^" + pair);
          if (D.sigma[k](c) != c)
            throw LiftError(ext.name() + ": sigma_" + idx(k) + " does not fix r_" + std::to_string(l) + "^" + pair);
        }
      }

  LiftedMaps L(ext);
  // Both laws are additive in each argument, so single terms c x^a suffice.
  Multiplier M(ext);
  std::vector<Polynomial> singles;
  for (const auto& a : monomials_up_to(n, std::min(2u, ext.degree_cap() / 2)))
    for (Elem c = 0; c < R.order(); ++c)
      if (c != R.zero()) singles.push_back(Polynomial::monomial(R, a, c));
  std::uint64_t used = 0;
  for (const auto& f : singles) {
    for (const auto& g : singles) {
      if (used++ >= validation_budget) return L;
      const Polynomial fg = M.multiply(f, g);
      for (unsigned k = 0; k < n; ++k) {
        const Polynomial sf = L.sigma_bar(k, f), sg = L.sigma_bar(k, g);
        if (L.sigma_bar(k, fg) != M.multiply(sf, sg))
          throw std::logic_error("lifted sigma_" + idx(k) + " is not multiplicative on (" + to_string(R, f) + ", " +
                                 to_string(R, g) + ")");
        const Polynomial rhs = add(R, M.multiply(sf, L.delta_bar(k, g)), M.multiply(L.delta_bar(k, f), g));
        if (L.delta_bar(k, fg) != rhs)
          throw std::logic_error("lifted delta_" + idx(k) + " breaks the derivation law on (" + to_string(R, f) + ", " +
                                 to_string(R, g) + ")");
      }
    }
  }
  return L;
}

// ---------------------------------------------------------------------------
// Structural checks

std::vector<std::string> oracle_mismatches(const Extension& ext, unsigned max_degree) {
  std::vector<std::string> out;
  Multiplier M(ext);
  const FiniteRing& R = ext.ring();
  for (const auto& a : monomials_up_to(ext.n(), std::min(max_degree, ext.degree_cap()))) {
    const std::uint32_t ai = M.index_of(a);
    for (Elem r = 0; r < R.order(); ++r) {
      const Polynomial got = M.to_polynomial(M.mono_elem(ai, r));
      const Polynomial want = monomial_action_oracle(ext, a, r);
      if (got != want)
        out.push_back(to_string(R, Polynomial::monomial(R, a, R.one())) + " * " + R.label(r) + ": rewriting " +
                      to_string(R, got) + ", oracle " + to_string(R, want));
    }
  }
  return out;
}

std::vector<std::string> associativity_failures(const Extension& ext, std::uint64_t budget) {
  std::vector<std::string> out;
  Multiplier M(ext);
  const FiniteRing& R = ext.ring();
  const auto monos = monomials_up_to(ext.n(), 1);
  // the product is left R-linear in its first factor, so the first factor can be a bare monomial
  std::vector<Polynomial> singles;
  for (const auto& a : monos)
    for (Elem c = 0; c < R.order(); ++c)
      if (c != R.zero()) singles.push_back(Polynomial::monomial(R, a, c));
  std::uint64_t used = 0;
  for (const auto& a : monos) {
    const Polynomial f = Polynomial::monomial(R, a, R.one());
    for (const auto& g : singles) {
      const Polynomial fg = M.multiply(f, g);
      for (const auto& h : singles) {
        if (used++ >= budget) return out;
        const Polynomial l = M.multiply(fg, h);
        const Polynomial r = M.multiply(f, M.multiply(g, h));
        if (l != r)
          out.push_back("(" + to_string(R, f) + ")(" + to_string(R, g) + ")(" + to_string(R, h) + "): " +
                        to_string(R, l) + " vs " + to_string(R, r));
      }
    }
  }
  return out;
}

std::vector<std::string> idempotent_transparency_failures(const Extension& ext) {
  std::vector<std::string> out;
  const FiniteRing& R = ext.ring();
  Multiplier M(ext);
  const ElementSet idem = idempotents(R);
  for_each_member(idem, [&](Elem e) {
    const std::string el = R.label(e);
    for (unsigned i = 0; i < ext.n(); ++i)
      if (ext.delta(i, e) != R.zero()) out.push_back("delta_" + std::to_string(i + 1) + "(" + el + ") != 0");
    const Polynomial pe = ext.constant(e);
    for (const auto& a : monomials_up_to(ext.n(), std::min(3u, ext.degree_cap()))) {
      const Polynomial x = Polynomial::monomial(R, a, R.one());
      if (M.multiply(x, pe) != M.multiply(pe, x)) out.push_back(to_string(R, x) + " does not commute with " + el);
    }
    // f e = e f is additive in f; single terms r x^a cover every degree <= 2 polynomial
    for (const auto& a : monomials_up_to(ext.n(), std::min(2u, ext.degree_cap())))
      for (Elem r = 0; r < R.order(); ++r) {
        if (r == R.zero()) continue;
        const Polynomial f = Polynomial::monomial(R, a, r);
        if (M.multiply(f, pe) != M.multiply(pe, f)) out.push_back(to_string(R, f) + " does not commute with " + el);
      }
  });
  return out;
}

}  // namespace pbw
