#include "flagcx/suite.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "flagcx/error.hpp"

namespace flagcx {

namespace {

struct Loaded {
  std::vector<CheckReport> reports;
  std::vector<std::uintmax_t> ends;  // byte offset after each report line
};

// Reads whole parseable lines; a torn or malformed tail ends the scan.
Loaded load_ledger(const std::string& path) {
  Loaded out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::string line;
  std::uintmax_t offset = 0;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: the write was interrupted
    offset += line.size() + 1;
    try {
      out.reports.push_back(report_from_json(nlohmann::ordered_json::parse(line)));
    } catch (const std::exception&) {
      break;
    }
    out.ends.push_back(offset);
  }
  return out;
}

void tally(SuiteSummary& s, const CheckReport& r) {
  ++s.counts[r.check][r.verdict];
  if (r.verdict == Verdict::fail) s.failures.push_back(r);
  if (r.verdict == Verdict::violation) s.certificates.push_back(r);
  if (r.verdict == Verdict::equality) s.equality[r.check].push_back(r.instance);
}

std::vector<CheckReport> run_instance(const Corpus& corpus, std::size_t i, const SuiteConfig& config) {
  InstanceContext ctx(corpus.instance(i));
  std::vector<CheckReport> out;
  out.reserve(config.checks.size() * config.primes.size());
  for (auto id : config.checks) {
    for (auto p : config.primes) {
      auto r = run_check(id, ctx, p, config.options);
      if (config.timestamps) r.timestamp = utc_timestamp();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::size_t SuiteSummary::count(const std::string& check, Verdict v) const {
  auto it = counts.find(check);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? 0 : jt->second;
}

nlohmann::ordered_json to_json(const SuiteSummary& s) {
  nlohmann::ordered_json j;
  j["instances_total"] = s.instances_total;
  j["instances_done"] = s.instances_done;
  j["resumed_from"] = s.resumed_from;
  j["aborted"] = s.aborted;
  auto& counts = j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [check, by_verdict] : s.counts) {
    auto& c = counts[check] = nlohmann::ordered_json::object();
    for (const auto& [v, n] : by_verdict) c[std::string(to_string(v))] = n;
  }
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& r : s.failures) j["failures"].push_back(to_json(r));
  j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& r : s.certificates) j["certificates"].push_back(to_json(r));
  j["equality"] = s.equality;
  return j;
}

SuiteSummary run_suite(const Corpus& corpus, const SuiteConfig& config) {
  if (config.checks.empty()) throw Error(Errc::domain, "no checks selected");
  if (config.primes.empty()) throw Error(Errc::domain, "no primes selected");
  for (auto p : config.primes) PrimeField{p};

  SuiteSummary summary;
  summary.instances_total = corpus.size();
  const std::size_t per = config.checks.size() * config.primes.size();
  std::size_t limit = corpus.size();
  if (config.max_instances) limit = std::min(limit, *config.max_instances);

  std::ofstream ledger;
  std::size_t start = 0;
  if (config.ledger_path) {
    const auto& path = *config.ledger_path;
    if (config.resume) {
      auto loaded = load_ledger(path);
      start = std::min(loaded.reports.size() / per, corpus.size());
      loaded.reports.resize(start * per);
      const std::uintmax_t keep = start == 0 ? 0 : loaded.ends[start * per - 1];
      for (std::size_t k = 0; k < loaded.reports.size(); ++k) {
        const auto& r = loaded.reports[k];
        const auto want_check = std::string(to_string(config.checks[(k / config.primes.size()) % config.checks.size()]));
        const auto want_p = config.primes[k % config.primes.size()];
        if (k % per == 0 && r.instance != corpus.instance(k / per).id) {
          throw Error(Errc::parse, "ledger line " + std::to_string(k + 1) + " is for instance " + r.instance +
                                       ", expected " + corpus.instance(k / per).id);
        }
        if (r.check != want_check || r.p != want_p) {
          throw Error(Errc::parse, "ledger line " + std::to_string(k + 1) + " does not match the selected checks/primes");
        }
        tally(summary, r);
      }
      // Drop any partial instance after the last complete one.
      if (std::filesystem::exists(path)) std::filesystem::resize_file(path, keep);
      ledger.open(path, std::ios::binary | std::ios::app);
    } else {
      ledger.open(path, std::ios::binary | std::ios::trunc);
    }
    if (!ledger) throw Error(Errc::io, "cannot open ledger " + path);
  }
  summary.resumed_from = start;
  summary.instances_done = start;
  if (!summary.failures.empty() && config.stop_on_failure) {
    summary.aborted = true;
    return summary;
  }

  const unsigned workers = std::max(1U, config.workers);
  const std::size_t batch = workers * 4;
  std::size_t seq = start * per;
  for (std::size_t begin = start; begin < limit; begin += batch) {
    const std::size_t end = std::min(limit, begin + batch);
    std::vector<std::vector<CheckReport>> results(end - begin);
    std::atomic<std::size_t> next{begin};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < end;) results[i - begin] = run_instance(corpus, i, config);
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, end - begin); ++w) pool.emplace_back(work);
    }
    for (std::size_t i = begin; i < end; ++i) {
      bool failed = false;
      for (const auto& r : results[i - begin]) {
        if (ledger.is_open()) ledger << to_json(r, seq).dump() << '\n';
        ++seq;
        tally(summary, r);
        failed = failed || r.verdict == Verdict::fail;
      }
      if (ledger.is_open()) {
        ledger.flush();
        if (!ledger) throw Error(Errc::io, "ledger write failed; resume from instance " + std::to_string(i));
      }
      summary.instances_done = i + 1;
      if (failed && config.stop_on_failure) {
        summary.aborted = true;
        return summary;
      }
    }
    if (config.progress) *config.progress << summary.instances_done << "/" << summary.instances_total << " instances\n";
  }
  if (summary.instances_done < corpus.size()) summary.aborted = true;
  return summary;
}

}  // namespace flagcx
