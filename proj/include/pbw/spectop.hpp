#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pbw/finring.hpp"

namespace pbw {

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite space together with the containment order of its points. Opens are point bitsets.
struct FiniteTopology {
  std::string name;
  std::vector<std::string> points;
  /// leq[i][j] iff point i is below point j (P subset of Q for primes).
  std::vector<std::vector<bool>> leq;
  /// Deduplicated, sorted by size then bits; always contains the empty and the full set.
  std::vector<ElementSet> opens;
  ElementSet max;
  /// Points tagged strongly prime / J-prime.
  ElementSet sspec, jspec;
  bool ring_sourced = false;

  std::size_t size() const { return points.size(); }
  bool is_open(const ElementSet& s) const;
  /// Smallest open set containing s (intersection of all opens containing it).
  ElementSet min_open(const ElementSet& s) const;
  /// Trace of the opens on a subset, deduplicated.
  std::vector<ElementSet> subspace_opens(const ElementSet& sub) const;
};

/// Closes a family under unions and adds the empty and full sets.
std::vector<ElementSet> union_closure(std::size_t n, const std::vector<ElementSet>& basis, std::size_t cap = 1u << 16);

struct SpectrumBundle {
  std::vector<Ideal> primes;
  FiniteTopology spec;  // sspec/jspec/max tags are subsets of spec's points
  /// O(I) on SSpec and D(I) on JSpec, built from their own bases.
  std::vector<ElementSet> o_topology, d_topology;
  bool o_matches_subspace = false, d_matches_subspace = false;
  /// W(I1) n W(I2) = W(I1 I2), W(I1) u W(I2) = W(I1 + I2); first failure if any.
  std::optional<std::string> zariski_failure;
};

/// Exact spectra of a finite ring.
SpectrumBundle spectra(const FiniteRing& R, std::size_t cap = kDefaultRingCap);

struct PosetNode {
  std::string name;
  bool sspec = false;
  bool jspec = false;
};

/// Down-set topology of a finite poset. `covers` are (lower, upper) pairs; max_tags must
/// be exactly the maximal nodes. Throws TopologyError with a violating pair otherwise.
FiniteTopology synthetic_space(std::string name, const std::vector<PosetNode>& nodes,
                               const std::vector<std::pair<std::string, std::string>>& covers,
                               const std::vector<std::string>& max_tags);

struct TopoReport {
  bool t0 = false, t1 = false, normal = false, max_hausdorff = false;
  bool compact = true;
  std::string compact_note = "finite space";
  std::optional<std::string> t0_witness, t1_witness, normal_witness, hausdorff_witness;
};

TopoReport topo_properties(const FiniteTopology& T);

struct PmVerdict {
  bool value = true;
  std::optional<std::string> witness;  // point with a number of maximal points above it other than 1
};

struct PmReport {
  PmVerdict pm, weakly_pm, j_pm;
  /// Set for ring spectra: every prime of a finite ring is maximal.
  bool degenerate = false;
};

PmReport pm_checks(const FiniteTopology& T);

struct RetractVerdict {
  enum class Kind { Exists, None, Inconclusive } kind = Kind::None;
  /// point index -> image point index (identity on Max)
  std::vector<std::size_t> retraction;
  std::uint64_t candidates = 0;
  std::string note;
};

std::string to_string(RetractVerdict::Kind k);

RetractVerdict retract_exists(const FiniteTopology& T, std::uint64_t budget = 1'000'000);

/// retract => pm, normal => Max Hausdorff. Violations as text.
std::vector<std::string> spectral_consistency(const FiniteTopology& T);

}  // namespace pbw
