// pbwlab: batch driver over a corpus of finite rings, map families, skew PBW
// extensions and synthetic spectra.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pbw/run.hpp"

#ifndef PBW_DEFAULT_CORPUS
#define PBW_DEFAULT_CORPUS "corpus/default.json"
#endif

int main(int argc, char** argv) {
  CLI::App app{"Classify finite rings, audit implications, probe skew PBW extensions, check spectra"};
  std::string command;
  std::string corpus_path = PBW_DEFAULT_CORPUS;
  std::string out_path;
  std::optional<std::uint64_t> seed, probe_budget;
  std::optional<std::size_t> ring_cap;
  std::optional<unsigned> probe_degree, jobs;
  bool quiet = false;

  app.add_option("command", command, "classify | audit | pbw | topo | all")
      ->required()
      ->check(CLI::IsMember({"classify", "audit", "pbw", "topo", "all"}));
  app.add_option("corpus", corpus_path, "corpus JSON file")->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report here");
  app.add_option("--seed", seed, "seed for sampled searches (default 0)");
  app.add_option("--ring-cap", ring_cap, "largest ring order analysed (default 512)");
  app.add_option("--probe-degree", probe_degree, "max total degree of probe candidates (default 2)");
  app.add_option("--probe-budget", probe_budget, "max products per probe (default 10^7)");
  app.add_option("--jobs", jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", quiet, "suppress the text report");
  CLI11_PARSE(app, argc, argv);

  try {
    const pbw::Corpus corpus = pbw::load_corpus_file(corpus_path);
    pbw::CorpusConfig cfg = corpus.config;
    if (seed) cfg.seed = *seed;
    if (ring_cap) cfg.ring_cap = *ring_cap;
    if (probe_degree) cfg.probe_degree = *probe_degree;
    if (probe_budget) cfg.probe_budget = *probe_budget;
    if (jobs) cfg.jobs = *jobs;

    const pbw::RunResult res = pbw::run(*pbw::command_from_string(command), corpus, cfg);
    if (!quiet) std::cout << res.text;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      out << res.report.dump(2) << "\n";
    }
    return res.exit_code;
  } catch (const pbw::CorpusError& e) {
    std::cerr << "corpus error at " << (e.where().empty() ? "/" : e.where()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
