#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbw/finring.hpp"

namespace pbw {

/// Endomorphism: additive and multiplicative. Derivation: additive and satisfies
/// d(ab) = s(a) d(b) + d(a) b for its paired endomorphism s. Additive: only the
/// additive law is asserted (composites of derivations land here).
enum class MapRole { Endomorphism, Derivation, Additive };

std::string to_string(MapRole role);

/// A map failed the law required by its role, at the witness pair (a, b).
class MapError : public std::runtime_error {
 public:
  MapError(std::string map, std::string law, Elem a, Elem b);
  const std::string& law() const { return law_; }
  Elem a() const { return a_; }
  Elem b() const { return b_; }

 private:
  std::string law_;
  Elem a_;
  Elem b_;
};

struct MapFlags {
  bool additive = false;
  bool multiplicative = false;
  bool unital = false;
  bool injective = false;
  bool surjective = false;
};

/// A map R -> R given by its image array. Equality is extensional.
struct RingMap {
  RingPtr ring;
  std::string name;
  std::vector<Elem> images;
  MapRole role = MapRole::Endomorphism;
  /// Images of the paired endomorphism (derivation role only).
  std::vector<Elem> paired_sigma;
  MapFlags flags;

  Elem operator()(Elem a) const { return images[a]; }
  std::size_t size() const { return images.size(); }
  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const RingMap& o) const { return images == o.images; }
};

MapFlags compute_flags(const FiniteRing& R, const std::vector<Elem>& images);

/// Validates images against the role's laws; throws MapError with the first
/// failing pair in (a, b) scan order.
RingMap build_map(RingPtr R, std::string name, std::vector<Elem> images, MapRole role,
                  const RingMap* paired_sigma = nullptr);

/// f after g. Two endomorphisms compose to an endomorphism; anything else is Additive.
RingMap compose(const RingMap& f, const RingMap& g);
RingMap power(const RingMap& f, unsigned k);

RingMap identity_map(RingPtr R);
/// The zero map, as a derivation paired with `sigma` (identity when null).
RingMap zero_derivation(RingPtr R, const RingMap* sigma = nullptr);

/// Sigma_1..Sigma_n and optionally Delta_1..Delta_n (delta_i paired with sigma_i).
struct MapFamily {
  RingPtr ring;
  std::vector<RingMap> sigma;
  std::vector<RingMap> delta;

  std::size_t size() const { return sigma.size(); }
  bool has_delta() const { return !delta.empty(); }
  bool all_injective() const;
  /// Checks ring agreement, roles, and each delta_i's law against sigma_i.
  void validate() const;
};

enum class ClosureKind { SigmaAlpha, DeltaBeta, MixedWords };

struct ClosureMember {
  RingMap map;
  /// Exponent vector for ordered products; letter sequence for mixed words
  /// (letters 0..n-1 are sigma_i, n..2n-1 are delta_i).
  std::vector<unsigned> exponents;
};

struct MapClosure {
  ClosureKind kind = ClosureKind::SigmaAlpha;
  bool includes_identity = false;
  std::vector<ClosureMember> members;

  std::size_t size() const { return members.size(); }
  bool contains(const RingMap& m) const;
};

inline constexpr std::size_t kDefaultWordCap = 4096;

/// Ordered products s_1^{a_1} o ... o s_n^{a_n} (or the delta analogue), deduplicated
/// by images and listed by total degree, then with earlier generators first. The
/// all-zero exponent is excluded unless include_identity; the identity can still
/// appear through a nonzero exponent (e.g. an involution squared).
MapClosure closure(const MapFamily& family, ClosureKind kind, bool include_identity = false,
                   std::size_t word_cap = kDefaultWordCap);

/// Distinct powers f^1, f^2, ... up to the first repeat (f^0 not included).
std::vector<RingMap> distinct_powers(const RingMap& f);

// Built-in maps on the standard rings. Each throws RingError when the ring has the wrong shape.
RingMap builtin_identity(RingPtr R);
RingMap ut2_kill_b(RingPtr R);     // ut2_equal_diag: (a b;0 a) -> (a 0;0 a)
RingMap ut2_negate_b(RingPtr R);   // ut2_equal_diag: (a b;0 a) -> (a -b;0 a)
RingMap ut2_keep_a(RingPtr R);     // ut2: (a b;0 c) -> (a 0;0 0)
RingMap ut2_keep_c(RingPtr R);     // ut2: (a b;0 c) -> (0 0;0 c)
RingMap trunc_swap(RingPtr R);     // trunc_st: s^i <-> t^i
RingMap frobenius(RingPtr R);      // x -> x^p, p the (prime) characteristic
/// trunc_t2: d(a + b t) = b, paired with the identity.
RingMap trunc_t2_derivation(RingPtr R);
/// d(a) = c a - s(a) c, an s-derivation for any endomorphism s.
RingMap inner_derivation(RingPtr R, Elem c, const RingMap& sigma);

/// Looks up a parameterless built-in by corpus name; nullopt if unknown.
std::optional<RingMap> builtin_by_name(RingPtr R, const std::string& name);

}  // namespace pbw
