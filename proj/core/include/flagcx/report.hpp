#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "flagcx/bigint.hpp"

namespace flagcx {

enum class Verdict {
  pass,       // inequality holds strictly (or the identity holds)
  equality,   // inequality holds with equality somewhere
  fail,       // a proven statement was violated
  skipped,    // the instance does not meet the statement's hypotheses
  violation,  // conjecture counterexample certificate
};

std::string_view to_string(Verdict v) noexcept;
std::optional<Verdict> parse_verdict(std::string_view s) noexcept;

inline bool is_failure(Verdict v) noexcept { return v == Verdict::fail; }

/// One executed check on one instance over one field.
struct CheckReport {
  std::string check;
  std::string instance;
  unsigned p = 2;
  Verdict verdict = Verdict::pass;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::string timestamp;  // empty when timestamps are disabled
  std::string note;       // human-readable reason for skipped/fail verdicts
};

/// Numbers that fit in int64 become JSON integers, larger ones strings.
nlohmann::ordered_json json_number(const BigInt& x);
BigInt bigint_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const CheckReport& r, std::optional<std::size_t> seq = std::nullopt);
CheckReport report_from_json(const nlohmann::ordered_json& j);

/// Current UTC time as ISO-8601 with second resolution.
std::string utc_timestamp();

}  // namespace flagcx
