#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagcx {

/// Arbitrary-precision signed integer used for every face count and
/// Turan coefficient. Small values stay in inline storage.
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& x);

/// Parses a decimal integer with optional leading '-'. Throws Error(parse).
BigInt parse_bigint(std::string_view text);

/// Returns the value when it fits in int64.
std::optional<std::int64_t> to_int64(const BigInt& x);

/// floor(x^(1/n)) for x >= 0, n >= 1.
BigInt iroot_floor(const BigInt& x, unsigned n);

/// Ordinary binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt ipow(const BigInt& base, unsigned exp);

}  // namespace flagcx
