#include "pbw/endo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pbw {

std::string to_string(MapRole role) {
  switch (role) {
    case MapRole::Endomorphism: return "endomorphism";
    case MapRole::Derivation: return "derivation";
    case MapRole::Additive: return "additive";
  }
  return "?";
}

MapError::MapError(std::string map, std::string law, Elem a, Elem b)
    : std::runtime_error("map '" + map + "' violates the " + law + " law at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")"),
      law_(std::move(law)),
      a_(a),
      b_(b) {}

bool RingMap::is_identity() const {
  for (Elem a = 0; a < images.size(); ++a)
    if (images[a] != a) return false;
  return true;
}

bool RingMap::is_zero() const {
  return std::all_of(images.begin(), images.end(), [&](Elem x) { return x == ring->zero(); });
}

namespace {

struct LawFailure {
  Elem a, b;
};

std::optional<LawFailure> additive_failure(const FiniteRing& R, const std::vector<Elem>& f) {
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b)
      if (f[R.add(a, b)] != R.add(f[a], f[b])) return LawFailure{a, b};
  return std::nullopt;
}

std::optional<LawFailure> multiplicative_failure(const FiniteRing& R, const std::vector<Elem>& f) {
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b)
      if (f[R.mul(a, b)] != R.mul(f[a], f[b])) return LawFailure{a, b};
  return std::nullopt;
}

std::optional<LawFailure> derivation_failure(const FiniteRing& R, const std::vector<Elem>& d,
                                             const std::vector<Elem>& s) {
  for (Elem a = 0; a < R.order(); ++a)
    for (Elem b = 0; b < R.order(); ++b)
      if (d[R.mul(a, b)] != R.add(R.mul(s[a], d[b]), R.mul(d[a], b))) return LawFailure{a, b};
  return std::nullopt;
}

}  // namespace

MapFlags compute_flags(const FiniteRing& R, const std::vector<Elem>& images) {
  MapFlags fl;
  fl.additive = !additive_failure(R, images);
  fl.multiplicative = !multiplicative_failure(R, images);
  fl.unital = images[R.one()] == R.one();
  ElementSet hit(R.order());
  for (Elem x : images) hit.set(x);
  fl.injective = hit.count() == R.order();
  fl.surjective = fl.injective;  // finite set, self-map
  return fl;
}

RingMap build_map(RingPtr R, std::string name, std::vector<Elem> images, MapRole role, const RingMap* paired_sigma) {
  if (images.size() != R->order())
    throw RingError("map '" + name + "': expected " + std::to_string(R->order()) + " images, got " +
                    std::to_string(images.size()));
  for (Elem x : images)
    if (x >= R->order()) throw RingError("map '" + name + "': image index " + std::to_string(x) + " out of range");

  if (auto f = additive_failure(*R, images)) throw MapError(name, "additive", f->a, f->b);
  RingMap m;
  if (role == MapRole::Endomorphism) {
    if (auto f = multiplicative_failure(*R, images)) throw MapError(name, "multiplicative", f->a, f->b);
  } else if (role == MapRole::Derivation) {
    if (!paired_sigma) throw RingError("map '" + name + "': a derivation needs a paired endomorphism");
    if (paired_sigma->size() != R->order())
      throw RingError("map '" + name + "': paired endomorphism lives on another ring");
    if (auto f = derivation_failure(*R, images, paired_sigma->images))
      throw MapError(name, "sigma-derivation (paired with " + paired_sigma->name + ")", f->a, f->b);
    m.paired_sigma = paired_sigma->images;
  }
  m.flags = compute_flags(*R, images);
  m.ring = std::move(R);
  m.name = std::move(name);
  m.images = std::move(images);
  m.role = role;
  return m;
}

RingMap compose(const RingMap& f, const RingMap& g) {
  if (f.ring->order() != g.ring->order() || f.ring.get() != g.ring.get())
    throw RingError("compose: maps '" + f.name + "' and '" + g.name + "' live on different rings");
  RingMap h;
  h.ring = f.ring;
  h.name = f.name + "∘" + g.name;
  h.images.resize(g.size());
  for (Elem a = 0; a < g.size(); ++a) h.images[a] = f.images[g.images[a]];
  h.role = f.role == MapRole::Endomorphism && g.role == MapRole::Endomorphism ? MapRole::Endomorphism
                                                                             : MapRole::Additive;
  h.flags = compute_flags(*h.ring, h.images);
  return h;
}

RingMap identity_map(RingPtr R) {
  std::vector<Elem> img(R->order());
  std::iota(img.begin(), img.end(), Elem{0});
  RingMap m;
  m.flags = compute_flags(*R, img);
  m.ring = std::move(R);
  m.name = "id";
  m.images = std::move(img);
  m.role = MapRole::Endomorphism;
  return m;
}

RingMap power(const RingMap& f, unsigned k) {
  if (k == 0) return identity_map(f.ring);
  RingMap acc = f;
  for (unsigned i = 1; i < k; ++i) acc = compose(f, acc);
  acc.name = k == 1 ? f.name : f.name + "^" + std::to_string(k);
  return acc;
}

RingMap zero_derivation(RingPtr R, const RingMap* sigma) {
  RingMap id;
  if (!sigma) {
    id = identity_map(R);
    sigma = &id;
  }
  std::vector<Elem> img(R->order(), R->zero());
  return build_map(R, "zero", std::move(img), MapRole::Derivation, sigma);
}

bool MapFamily::all_injective() const {
  return std::all_of(sigma.begin(), sigma.end(), [](const RingMap& m) { return m.flags.injective; });
}

void MapFamily::validate() const {
  if (sigma.empty()) throw RingError("map family is empty");
  if (!delta.empty() && delta.size() != sigma.size())
    throw RingError("map family: " + std::to_string(delta.size()) + " derivations for " +
                    std::to_string(sigma.size()) + " endomorphisms");
  for (const auto& s : sigma) {
    if (s.ring.get() != ring.get()) throw RingError("map '" + s.name + "' belongs to a different ring");
    if (s.role != MapRole::Endomorphism) throw RingError("map '" + s.name + "' is not an endomorphism");
  }
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto& d = delta[i];
    if (d.ring.get() != ring.get()) throw RingError("map '" + d.name + "' belongs to a different ring");
    if (auto f = derivation_failure(*ring, d.images, sigma[i].images))
      throw MapError(d.name, "sigma-derivation (paired with " + sigma[i].name + ")", f->a, f->b);
  }
}

bool MapClosure::contains(const RingMap& m) const {
  return std::any_of(members.begin(), members.end(), [&](const ClosureMember& c) { return c.map == m; });
}

std::vector<RingMap> distinct_powers(const RingMap& f) {
  constexpr std::size_t kMaxPowers = 1u << 16;
  std::vector<RingMap> out{power(f, 1)};
  std::set<std::vector<Elem>> seen{f.images};
  for (unsigned k = 2;; ++k) {
    RingMap next = compose(f, out.back());
    if (!seen.insert(next.images).second) break;
    next.name = f.name + "^" + std::to_string(k);
    out.push_back(std::move(next));
    if (out.size() > kMaxPowers) throw RingError("powers of '" + f.name + "' do not cycle within the limit");
  }
  return out;
}

namespace {

MapClosure ordered_products(const MapFamily& family, const std::vector<RingMap>& gens, ClosureKind kind,
                            bool include_identity) {
  const std::size_t n = gens.size();
  // powers[i][e] = gens[i]^e; index 0 is the identity.
  std::vector<std::vector<RingMap>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(identity_map(family.ring));
    for (auto& p : distinct_powers(gens[i])) powers[i].push_back(std::move(p));
  }

  std::vector<std::vector<unsigned>> tuples{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& t : tuples)
      for (unsigned e = 0; e < powers[i].size(); ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
    if (tuples.size() > (1u << 20)) throw RingError("closure: too many exponent combinations");
  }
  std::stable_sort(tuples.begin(), tuples.end(), [](const auto& x, const auto& y) {
    const auto sx = std::accumulate(x.begin(), x.end(), 0u);
    const auto sy = std::accumulate(y.begin(), y.end(), 0u);
    if (sx != sy) return sx < sy;
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  });

  MapClosure out;
  out.kind = kind;
  out.includes_identity = include_identity;
  std::set<std::vector<Elem>> seen;
  for (const auto& t : tuples) {
    const bool all_zero = std::all_of(t.begin(), t.end(), [](unsigned e) { return e == 0; });
    if (all_zero && !include_identity) continue;
    RingMap m = powers[n - 1][t[n - 1]];
    std::string name = t[n - 1] ? m.name : "";
    for (std::size_t i = n - 1; i-- > 0;) {
      if (t[i] == 0) continue;
      m = compose(powers[i][t[i]], m);
      name = name.empty() ? powers[i][t[i]].name : powers[i][t[i]].name + "∘" + name;
    }
    m.name = name.empty() ? "id" : name;
    if (kind == ClosureKind::DeltaBeta && !all_zero) m.role = MapRole::Additive;
    if (seen.insert(m.images).second) out.members.push_back({std::move(m), t});
  }
  return out;
}

}  // namespace

MapClosure closure(const MapFamily& family, ClosureKind kind, bool include_identity, std::size_t word_cap) {
  if (family.sigma.empty()) throw RingError("closure: empty family");
  switch (kind) {
    case ClosureKind::SigmaAlpha:
      return ordered_products(family, family.sigma, kind, include_identity);
    case ClosureKind::DeltaBeta: {
      if (family.delta.empty()) {
        std::vector<RingMap> zeros;
        for (const auto& s : family.sigma) zeros.push_back(zero_derivation(family.ring, &s));
        return ordered_products(family, zeros, kind, include_identity);
      }
      return ordered_products(family, family.delta, kind, include_identity);
    }
    case ClosureKind::MixedWords: break;
  }

  // Breadth-first over words in all sigma_i and delta_i, shortest first.
  std::vector<RingMap> letters = family.sigma;
  for (const auto& d : family.delta) letters.push_back(d);
  MapClosure out;
  out.kind = kind;
  out.includes_identity = include_identity;
  std::set<std::vector<Elem>> seen;
  if (include_identity) {
    RingMap id = identity_map(family.ring);
    seen.insert(id.images);
    out.members.push_back({std::move(id), {}});
  }
  std::size_t frontier_begin = out.members.size();
  for (unsigned l = 0; l < letters.size(); ++l)
    if (seen.insert(letters[l].images).second) out.members.push_back({letters[l], {l}});
  while (frontier_begin < out.members.size()) {
    const std::size_t frontier_end = out.members.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (unsigned l = 0; l < letters.size(); ++l) {
        RingMap m = compose(letters[l], out.members[i].map);
        if (!seen.insert(m.images).second) continue;
        auto word = out.members[i].exponents;
        word.insert(word.begin(), l);
        out.members.push_back({std::move(m), std::move(word)});
        if (out.members.size() > word_cap)
          throw RingError("closure: mixed-word closure exceeds the cap of " + std::to_string(word_cap));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace pbw
