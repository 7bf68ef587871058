#include "flagcx/report.hpp"

#include <chrono>
#include <ctime>

#include "flagcx/error.hpp"

namespace flagcx {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::equality: return "equality";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    case Verdict::violation: return "violation";
  }
  return "pass";
}

std::optional<Verdict> parse_verdict(std::string_view s) noexcept {
  for (auto v : {Verdict::pass, Verdict::equality, Verdict::fail, Verdict::skipped, Verdict::violation}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

nlohmann::ordered_json json_number(const BigInt& x) {
  if (auto v = to_int64(x)) return *v;
  return x.str();
}

BigInt bigint_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw Error(Errc::parse, "expected an integer, got " + j.dump());
}

nlohmann::ordered_json to_json(const CheckReport& r, std::optional<std::size_t> seq) {
  nlohmann::ordered_json j;
  if (seq) j["seq"] = *seq;
  j["check"] = r.check;
  j["instance"] = r.instance;
  j["p"] = r.p;
  j["verdict"] = std::string(to_string(r.verdict));
  j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.timestamp.empty()) j["ts"] = r.timestamp;
  return j;
}

CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport r;
  try {
    r.check = j.at("check").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.p = j.at("p").get<unsigned>();
    auto v = parse_verdict(j.at("verdict").get<std::string>());
    if (!v) throw Error(Errc::parse, "unknown verdict in " + j.dump());
    r.verdict = *v;
    r.witness = j.at("witness");
    if (j.contains("note")) r.note = j["note"].get<std::string>();
    if (j.contains("ts")) r.timestamp = j["ts"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed check report: ") + e.what());
  }
  return r;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace flagcx
