#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbw/endo.hpp"
#include "pbw/finring.hpp"
#include "pbw/skewpbw.hpp"
#include "pbw/spectop.hpp"

namespace pbw {

/// Schema or reference error; `where` is a JSON-pointer-style location.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string where, const std::string& what);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct CorpusConfig {
  std::size_t ring_cap = kDefaultRingCap;
  std::uint64_t seed = 0;
  unsigned probe_degree = 2;
  std::uint64_t probe_budget = 10'000'000;
  unsigned jobs = 1;
};

struct RingEntry {
  std::string name;
  RingPtr ring;
};

struct FamilyEntry {
  std::string name;
  std::string ring;
  MapFamily family;
};

/// Extension data is validated (and the associativity probe run) by the driver, so a
/// failing extension is reported as an item error rather than aborting the load.
struct ExtensionEntry {
  std::string name;
  std::string ring;
  SkewPBWData data;
};

struct SpaceEntry {
  std::string name;
  FiniteTopology space;
};

struct Corpus {
  std::vector<RingEntry> rings;
  std::vector<FamilyEntry> families;
  std::vector<ExtensionEntry> extensions;
  std::vector<SpaceEntry> spaces;
  CorpusConfig config;

  const RingEntry* find_ring(const std::string& name) const;
};

/// Parses a corpus document. Keys: "rings", "families", "extensions", "spaces", "config".
Corpus load_corpus(const nlohmann::json& doc);
Corpus load_corpus_file(const std::string& path);

/// Element reference: an index or a label.
Elem parse_element(const FiniteRing& R, const nlohmann::json& j, const std::string& where);

}  // namespace pbw
