// Brute-force reference implementations straight from the definitions. Nothing here
// calls into ringprops or the closure code, so agreement is meaningful.
#pragma once

#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pbw/endo.hpp"
#include "pbw/finring.hpp"

namespace oracle {

using pbw::Elem;
using pbw::FiniteRing;
using Images = std::vector<Elem>;

inline std::size_t q(const FiniteRing& R) { return R.order(); }

inline std::vector<bool> nil(const FiniteRing& R) {
  std::vector<bool> out(q(R));
  for (Elem a = 0; a < q(R); ++a) {
    Elem p = a;
    for (std::size_t k = 0; k <= q(R) && p != R.zero(); ++k) p = R.mul(p, a);
    out[a] = p == R.zero();
  }
  return out;
}

inline bool reduced(const FiniteRing& R) {
  for (Elem a = 0; a < q(R); ++a)
    if (a != R.zero() && R.mul(a, a) == R.zero()) return false;
  return true;
}

inline bool abelian(const FiniteRing& R) {
  for (Elem e = 0; e < q(R); ++e) {
    if (R.mul(e, e) != e) continue;
    for (Elem r = 0; r < q(R); ++r)
      if (R.mul(e, r) != R.mul(r, e)) return false;
  }
  return true;
}

inline bool semicommutative(const FiniteRing& R) {
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (R.mul(a, b) == R.zero())
        for (Elem r = 0; r < q(R); ++r)
          if (R.mul(R.mul(a, r), b) != R.zero()) return false;
  return true;
}

inline bool symmetric(const FiniteRing& R) {
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      for (Elem c = 0; c < q(R); ++c)
        if (R.mul(R.mul(a, b), c) == R.zero() && R.mul(R.mul(a, c), b) != R.zero()) return false;
  return true;
}

inline bool reversible(const FiniteRing& R) {
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (R.mul(a, b) == R.zero() && R.mul(b, a) != R.zero()) return false;
  return true;
}

inline bool aRb_zero(const FiniteRing& R, Elem a, Elem b) {
  for (Elem r = 0; r < q(R); ++r)
    if (R.mul(R.mul(a, r), b) != R.zero()) return false;
  return true;
}

inline bool reflexive(const FiniteRing& R) {
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (aRb_zero(R, a, b) && !aRb_zero(R, b, a)) return false;
  return true;
}

inline bool weak_symmetric(const FiniteRing& R) {
  const auto N = nil(R);
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      for (Elem c = 0; c < q(R); ++c)
        if (N[R.mul(R.mul(a, b), c)] && !N[R.mul(R.mul(a, c), b)]) return false;
  return true;
}

inline bool nil_reversible(const FiniteRing& R) {
  const auto N = nil(R);
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (N[b] && ((R.mul(a, b) == R.zero()) != (R.mul(b, a) == R.zero()))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Map closures by nested loops over power lists.

inline Images compose(const Images& f, const Images& g) {
  Images out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

inline Images identity(std::size_t n) {
  Images id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Elem>(i);
  return id;
}

/// f^1, f^2, ... up to and including the first repeated image vector.
inline std::vector<Images> positive_powers(const Images& f) {
  std::vector<Images> out;
  std::set<Images> seen{identity(f.size())};
  Images cur = f;
  while (true) {
    out.push_back(cur);
    if (!seen.insert(cur).second) break;
    cur = compose(f, cur);
  }
  return out;
}

/// Every f_1^{a_1} o ... o f_n^{a_n}; nonzero_only drops the all-zero exponent tuple.
inline std::set<Images> ordered_products(const std::vector<Images>& maps, bool nonzero_only) {
  const std::size_t n = maps.empty() ? 0 : maps[0].size();
  std::set<Images> out;
  std::vector<std::vector<Images>> opts;
  for (const auto& m : maps) opts.push_back(positive_powers(m));
  std::function<void(std::size_t, Images, bool)> rec = [&](std::size_t i, Images acc, bool any) {
    if (i == maps.size()) {
      if (any || !nonzero_only) out.insert(acc);
      return;
    }
    rec(i + 1, acc, any);  // exponent 0
    for (const auto& p : opts[i]) rec(i + 1, compose(acc, p), true);
  };
  rec(0, identity(n), false);
  return out;
}

inline std::vector<Images> images_of(const std::vector<pbw::RingMap>& maps) {
  std::vector<Images> out;
  for (const auto& m : maps) out.push_back(m.images);
  return out;
}

inline bool sigma_semicommutative(const FiniteRing& R, const std::vector<pbw::RingMap>& sigma) {
  const auto phis = ordered_products(images_of(sigma), true);
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (R.mul(a, b) == R.zero())
        for (const auto& phi : phis)
          if (!aRb_zero(R, a, phi[b])) return false;
  return true;
}

inline bool sigma_rigid(const FiniteRing& R, const std::vector<pbw::RingMap>& sigma) {
  const auto phis = ordered_products(images_of(sigma), false);
  for (Elem a = 0; a < q(R); ++a)
    for (const auto& phi : phis)
      if (a != R.zero() && R.mul(a, phi[a]) == R.zero()) return false;
  return true;
}

inline bool sigma_compatible(const FiniteRing& R, const std::vector<pbw::RingMap>& sigma, bool weak) {
  const auto phis = ordered_products(images_of(sigma), false);
  const auto N = nil(R);
  auto small = [&](Elem x) { return weak ? static_cast<bool>(N[x]) : x == R.zero(); };
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      for (const auto& phi : phis)
        if (small(R.mul(a, b)) != small(R.mul(a, phi[b]))) return false;
  return true;
}

inline bool delta_compatible(const FiniteRing& R, const std::vector<pbw::RingMap>& delta, bool weak) {
  const auto ds = ordered_products(images_of(delta), false);
  const auto N = nil(R);
  auto small = [&](Elem x) { return weak ? static_cast<bool>(N[x]) : x == R.zero(); };
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (small(R.mul(a, b)))
        for (const auto& d : ds)
          if (!small(R.mul(a, d[b]))) return false;
  return true;
}

inline bool skew_rnp(const FiniteRing& R, const std::vector<pbw::RingMap>& sigma, bool right) {
  const auto phis = ordered_products(images_of(sigma), false);
  const auto N = nil(R);
  for (Elem a = 0; a < q(R); ++a)
    for (Elem b = 0; b < q(R); ++b)
      if (N[a] && N[b] && aRb_zero(R, a, b))
        for (const auto& phi : phis)
          if (right ? !aRb_zero(R, b, phi[a]) : !aRb_zero(R, phi[b], a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subsets of small rings.

/// All two-sided ideals by subset enumeration (q <= 16).
inline std::set<std::vector<bool>> ideals_by_subsets(const FiniteRing& R) {
  std::set<std::vector<bool>> out;
  const std::size_t n = q(R);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
    if (!s[R.zero()]) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!s[a]) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (s[b] && !s[R.sub(a, b)]) ok = false;
        if (!s[R.mul(a, b)] || !s[R.mul(b, a)]) ok = false;
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random fixtures.

inline std::vector<std::function<FiniteRing()>> small_ring_pool() {
  using namespace pbw;
  return {
      [] { return make_zn(2); },  [] { return make_zn(4); },  [] { return make_zn(6); },
      [] { return make_zn(8); },  [] { return make_zn(9); },  [] { return make_zn(12); },
      [] { return make_gf(4); },  [] { return make_gf(8); },  [] { return make_gf(9); },
      [] { return make_ut2(2); }, [] { return make_ut2_equal_diag(2); }, [] { return make_ut2_equal_diag(3); },
      [] { return make_trunc_t2(2); }, [] { return make_trunc_t2(3); }, [] { return make_trunc_st(2, 2); },
      [] { return make_product(make_zn(2), make_zn(2)); }, [] { return make_product(make_zn(2), make_zn(3)); },
      [] { return make_product(make_zn(2), make_trunc_t2(2)); },
  };
}

inline pbw::RingPtr random_ring(std::mt19937& rng) {
  auto pool = small_ring_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return std::make_shared<const FiniteRing>(pool[pick(rng)]());
}

/// Family trials can afford larger rings; these add truncations with long nilpotent chains.
inline pbw::RingPtr random_family_ring(std::mt19937& rng) {
  using namespace pbw;
  auto pool = small_ring_pool();
  pool.push_back([] { return make_trunc_st(2, 3); });
  pool.push_back([] { return make_trunc_st(3, 2); });
  pool.push_back([] { return make_ut2(3); });
  pool.push_back([] { return make_ut2_equal_diag(4); });
  pool.push_back([] { return make_ut2_equal_diag(5); });
  pool.push_back([] { return make_trunc_t2(4); });
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return std::make_shared<const FiniteRing>(pool[pick(rng)]());
}

/// A sigma-derivation for s: d/dt on Z2[t]/(t^2) (a derivation only in characteristic 2) when s is the identity,
/// otherwise an inner derivation with a random c.
inline pbw::RingMap random_derivation(const pbw::RingPtr& R, const pbw::RingMap& s, std::mt19937& rng) {
  if (R->shape().kind == "trunc_t2" && R->shape().p == 2 && s.is_identity() && rng() % 2 == 0) return pbw::trunc_t2_derivation(R);
  return pbw::inner_derivation(R, static_cast<Elem>(rng() % R->order()), s);
}

/// Endomorphisms available on any ring: identity, multiplication by a central idempotent,
/// Frobenius when it is one, and the shape-specific built-ins.
inline std::vector<pbw::RingMap> candidate_endomorphisms(const pbw::RingPtr& R) {
  using namespace pbw;
  std::vector<RingMap> out{identity_map(R)};
  for (Elem e = 0; e < R->order(); ++e) {
    if (R->mul(e, e) != e || e == R->one()) continue;
    Images im(R->order());
    for (Elem r = 0; r < R->order(); ++r) im[r] = R->mul(e, r);
    try {
      out.push_back(build_map(R, "mul_" + R->label(e), im, MapRole::Endomorphism));
    } catch (const MapError&) {
    }
  }
  for (const char* name : {"frobenius", "ut2_kill_b", "ut2_negate_b", "ut2_keep_a", "ut2_keep_c", "trunc_swap"}) {
    try {
      if (auto m = builtin_by_name(R, name)) out.push_back(*m);
    } catch (const std::exception&) {
    }
  }
  return out;
}

inline std::vector<pbw::RingMap> random_family(const pbw::RingPtr& R, std::mt19937& rng, std::size_t max_size = 3) {
  const auto cands = candidate_endomorphisms(R);
  std::uniform_int_distribution<std::size_t> len(1, max_size), pick(0, cands.size() - 1);
  std::vector<pbw::RingMap> out;
  for (std::size_t k = len(rng); k > 0; --k) out.push_back(cands[pick(rng)]);
  return out;
}

}  // namespace oracle
