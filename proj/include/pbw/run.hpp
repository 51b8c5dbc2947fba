#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pbw/corpus.hpp"

namespace pbw {

enum class Command { Classify, Audit, Pbw, Topo, All };

std::optional<Command> command_from_string(const std::string& s);
std::string to_string(Command c);

struct RunResult {
  nlohmann::ordered_json report;
  std::string text;
  /// 0 iff no audit violation and no validation error.
  int exit_code = 0;
};

/// Runs the pipelines for `cmd` over the corpus. Items are computed in parallel and
/// assembled in corpus order, so the report does not depend on `config.jobs`.
RunResult run(Command cmd, const Corpus& corpus, const CorpusConfig& config);

}  // namespace pbw
