#pragma once

// Runs a set of checks over a corpus and every requested prime, writing one
// JSONL line per report in (instance, check, p) order. The ledger doubles as
// the resume cursor: complete instances already on disk are kept and the run
// continues after them.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcx/checks.hpp"
#include "flagcx/corpus.hpp"
#include "flagcx/report.hpp"

namespace flagcx {

struct SuiteConfig {
  std::vector<CheckId> checks = all_checks();
  std::vector<unsigned> primes{2};
  CheckOptions options;
  std::optional<std::string> ledger_path;
  bool resume = false;
  bool timestamps = false;
  /// Stop after the instance that produced the first theorem failure.
  bool stop_on_failure = true;
  unsigned workers = 1;
  /// Process at most this many instances (counting resumed ones) and stop.
  std::optional<std::size_t> max_instances;
  std::ostream* progress = nullptr;
};

struct SuiteSummary {
  std::size_t instances_total = 0;
  std::size_t instances_done = 0;
  std::size_t resumed_from = 0;
  bool aborted = false;
  std::map<std::string, std::map<Verdict, std::size_t>> counts;
  std::vector<CheckReport> failures;
  /// Conjecture counterexamples.
  std::vector<CheckReport> certificates;
  /// Instance ids with an equality verdict, per check, in ledger order.
  std::map<std::string, std::vector<std::string>> equality;

  std::size_t count(const std::string& check, Verdict v) const;
  std::size_t failure_count() const noexcept { return failures.size(); }
};

nlohmann::ordered_json to_json(const SuiteSummary& s);

/// Throws Error(io) on ledger problems, naming the instance to resume from,
/// and Error(parse) when a ledger being resumed does not match the
/// configuration.
SuiteSummary run_suite(const Corpus& corpus, const SuiteConfig& config);

}  // namespace flagcx
