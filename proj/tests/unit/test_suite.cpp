#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagcx/error.hpp"
#include "flagcx/suite.hpp"

using namespace flagcx;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("flagcx-suite-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

SuiteConfig config_for(const fs::path& ledger) {
  SuiteConfig c;
  c.primes = {2, 3};
  c.ledger_path = ledger.string();
  return c;
}

}  // namespace

TEST_SUITE("suite") {
  TEST_CASE("empty corpus") {
    SuiteConfig c;
    const auto s = run_suite(Corpus::empty(), c);
    CHECK(s.instances_total == 0);
    CHECK(s.counts.empty());
    CHECK_FALSE(s.aborted);
  }

  TEST_CASE("theorem checks pass on graphs up to five vertices") {
    SuiteConfig c;
    c.checks = theorem_checks();
    const auto s = run_suite(Corpus::internal(5).append_balanced(1, 40), c);
    CHECK(s.failure_count() == 0);
    CHECK(s.instances_done == s.instances_total);
    CHECK(s.count("zykov", Verdict::equality) > 0);
  }

  TEST_CASE("ledgers are deterministic across worker counts") {
    TempDir dir;
    const auto corpus = Corpus::internal(5).append_balanced(2, 20);
    auto a = config_for(dir.path / "a.jsonl");
    auto b = config_for(dir.path / "b.jsonl");
    b.workers = 4;
    run_suite(corpus, a);
    run_suite(corpus, b);
    CHECK(slurp(dir.path / "a.jsonl") == slurp(dir.path / "b.jsonl"));
    CHECK_FALSE(slurp(dir.path / "a.jsonl").empty());
  }

  TEST_CASE("resume reproduces the uninterrupted ledger") {
    TempDir dir;
    const auto corpus = Corpus::internal(5);
    const auto full_path = dir.path / "full.jsonl";
    const auto part_path = dir.path / "part.jsonl";
    run_suite(corpus, config_for(full_path));

    auto part = config_for(part_path);
    part.max_instances = corpus.size() / 2;
    const auto first = run_suite(corpus, part);
    CHECK(first.aborted);
    // Simulate a torn write in the middle of a line.
    {
      const auto text = slurp(part_path);
      std::ofstream out(part_path, std::ios::binary | std::ios::trunc);
      out << text.substr(0, text.size() - 20);
    }
    auto resume = config_for(part_path);
    resume.resume = true;
    resume.workers = 3;
    const auto second = run_suite(corpus, resume);
    CHECK(second.resumed_from == corpus.size() / 2 - 1);
    CHECK(second.instances_done == corpus.size());
    CHECK(slurp(part_path) == slurp(full_path));

    auto fresh = to_json(run_suite(corpus, config_for(full_path)));
    auto resumed = to_json(second);
    fresh.erase("resumed_from");
    resumed.erase("resumed_from");
    CHECK(fresh.dump() == resumed.dump());
  }

  TEST_CASE("resume rejects a ledger written with other settings") {
    TempDir dir;
    const auto path = dir.path / "l.jsonl";
    run_suite(Corpus::internal(3), config_for(path));
    auto other = config_for(path);
    other.primes = {2};
    other.resume = true;
    CHECK_THROWS_AS(run_suite(Corpus::internal(3), other), Error);
  }

  TEST_CASE("timestamps are optional") {
    TempDir dir;
    auto c = config_for(dir.path / "t.jsonl");
    c.timestamps = true;
    run_suite(Corpus::internal(2), c);
    CHECK(slurp(dir.path / "t.jsonl").find("\"ts\":") != std::string::npos);
  }

  TEST_CASE("unwritable ledgers surface as I/O errors") {
    SuiteConfig c;
    c.ledger_path = "/nonexistent-dir/ledger.jsonl";
    CHECK_THROWS_AS(run_suite(Corpus::internal(2), c), Error);
  }
}
