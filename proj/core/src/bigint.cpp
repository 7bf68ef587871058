#include "flagcx/bigint.hpp"

#include <limits>

#include "flagcx/error.hpp"

namespace flagcx {

std::string to_string(const BigInt& x) { return x.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw Error(Errc::parse, "empty integer");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw Error(Errc::parse, "not an integer: '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return x.convert_to<std::int64_t>();
}

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

BigInt iroot_floor(const BigInt& x, unsigned n) {
  if (x < 0 || n == 0) throw Error(Errc::domain, "iroot_floor needs x >= 0 and n >= 1");
  if (x < 2 || n == 1) return x;
  // Bisection on [0, 2^(bits/n + 1)).
  const auto bits = boost::multiprecision::msb(x) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / n + 1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, n) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace flagcx
