#pragma once

// Verification campaigns: each claim is checked on every corpus instance that
// meets its hypotheses, against brute-force oracles.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixlab/corpus.hpp"

namespace fixlab {

struct ClaimConfig {
  // 0 selects the claim's default bound on |G|.
  std::size_t max_order = 0;
  // 0 selects the hardware concurrency.
  std::size_t jobs = 0;
  std::uint64_t seed = 1;
};

struct ClaimFailure {
  std::string instance_id;
  std::string instance_name;
  std::string stage;
  nlohmann::json witness;
};

struct ClaimSkip {
  std::string instance_id;
  std::string instance_name;
  std::string reason;
};

struct ClaimReport {
  std::string claim;
  std::size_t max_order = 0;
  std::uint64_t seed = 0;
  std::size_t considered = 0;
  std::size_t tested = 0;
  std::vector<ClaimSkip> skipped;
  std::vector<ClaimFailure> failures;
  std::map<std::string, std::size_t> stats;
  // Noteworthy instances that are not failures (search hits).
  std::vector<nlohmann::json> finds;
  std::vector<CorpusSkip> corpus_skips;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& claim_ids();
bool is_claim_id(const std::string& id);
std::size_t default_max_order(const std::string& id);

// Throws PreconditionError for an unknown claim id.
ClaimReport run_claim(const std::string& id, const ClaimConfig& config);

// Locally conjugate but non-conjugate complement pairs in soluble,
// non-supersoluble instances with nilpotent N and supersoluble J.
ClaimReport search_ls_counterexample(const ClaimConfig& config);

// Wall time is left out unless requested so that reports are reproducible.
nlohmann::json report_to_json(const ClaimReport& report, bool include_timing = false);

// Corpus shared by the claims, built once per configuration.
const Corpus& cached_corpus(const CorpusConfig& config);

}  // namespace fixlab
