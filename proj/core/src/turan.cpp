#include "flagcx/turan.hpp"

#include "flagcx/complex.hpp"
#include "flagcx/error.hpp"

namespace flagcx {

std::vector<std::int64_t> turan_part_sizes(std::int64_t n, std::int64_t d) {
  if (d < 1) throw Error(Errc::domain, "Turan graphs need d >= 1");
  if (n < 0) throw Error(Errc::domain, "Turan graphs need n >= 0");
  std::vector<std::int64_t> parts(static_cast<std::size_t>(d), n / d);
  for (std::int64_t i = 0; i < n % d; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

BigInt turan_coeff(std::int64_t n, std::int64_t k, std::int64_t d) {
  if (d < 1) throw Error(Errc::domain, "turan_coeff needs d >= 1");
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > d) return 0;
  // e_j over a growing prefix of the parts; empty parts contribute nothing.
  std::vector<BigInt> e(static_cast<std::size_t>(k + 1), 0);
  e[0] = 1;
  for (std::int64_t size : turan_part_sizes(n, d)) {
    if (size == 0) break;
    for (auto j = static_cast<std::size_t>(k); j >= 1; --j) e[j] += e[j - 1] * size;
  }
  return e[static_cast<std::size_t>(k)];
}

TuranRow turan_row(std::int64_t n, std::int64_t d) {
  if (n < 1) throw Error(Errc::domain, "turan_row needs n >= 1");
  TuranRow row{n, d, {}};
  row.values.reserve(static_cast<std::size_t>(d + 1));
  for (std::int64_t k = 0; k <= d; ++k) row.values.push_back(turan_coeff(n, k, d));
  return row;
}

std::vector<BigInt> pascal_step(const std::vector<BigInt>& row) {
  const std::size_t d = row.size() - 1;
  // Triangle rows 0..d+1; row t has t+1 entries, first entry 1, last entry
  // row[t] (zero for t = d + 1), interior entries summed from above.
  std::vector<BigInt> prev{1};
  for (std::size_t t = 1; t <= d + 1; ++t) {
    std::vector<BigInt> cur(t + 1);
    cur[0] = 1;
    for (std::size_t c = 1; c < t; ++c) cur[c] = prev[c - 1] + prev[c];
    cur[t] = t <= d ? row[t] : BigInt(0);
    prev = std::move(cur);
  }
  prev.pop_back();
  return prev;
}

TuranRow turan_row_pascal(std::int64_t n, std::int64_t d) {
  if (n < 1) throw Error(Errc::domain, "turan_row_pascal needs n >= 1");
  if (d < 1) throw Error(Errc::domain, "turan_row_pascal needs d >= 1");
  std::int64_t m = n % d == 0 ? d : n % d;
  // T_d(m) is the complete graph K_m for m <= d.
  std::vector<BigInt> values;
  for (std::int64_t k = 0; k <= d; ++k) values.push_back(binomial(m, k));
  while (m < n) {
    values = pascal_step(values);
    m += d;
  }
  return TuranRow{n, d, std::move(values)};
}

CheckReport check_h_equals_f(std::int64_t n, std::int64_t d) {
  if (n < d) throw Error(Errc::domain, "check_h_equals_f needs n >= d");
  CheckReport report;
  report.check = "turan-h-equals-f";
  report.instance = "T_" + std::to_string(d) + "(" + std::to_string(n) + ")";
  const auto f = FVector(turan_row(n, d).values);
  const auto h = h_vector(f);
  std::vector<BigInt> expected;
  for (std::int64_t k = 0; k <= d; ++k) expected.push_back(turan_coeff(n - d, k, d));
  report.verdict = h.entries() == expected ? Verdict::pass : Verdict::fail;
  auto& w = report.witness;
  w["h"] = nlohmann::ordered_json::array();
  w["f_smaller"] = nlohmann::ordered_json::array();
  for (const auto& x : h.entries()) w["h"].push_back(json_number(x));
  for (const auto& x : expected) w["f_smaller"].push_back(json_number(x));
  return report;
}

CheckReport check_sum_identity(std::int64_t m, std::int64_t d) {
  if (m < 1 || d < 1) throw Error(Errc::domain, "check_sum_identity needs m, d >= 1");
  CheckReport report;
  report.check = "turan-sum-identity";
  report.instance = "m=" + std::to_string(m) + ",d=" + std::to_string(d);
  BigInt lhs = 0;
  for (std::int64_t k = 0; k <= d; ++k) lhs += turan_coeff(m, k, d);
  const BigInt rhs = turan_coeff(m + d, d, d);
  report.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  report.witness["lhs"] = json_number(lhs);
  report.witness["rhs"] = json_number(rhs);
  return report;
}

}  // namespace flagcx
