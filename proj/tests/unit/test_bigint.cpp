#include <doctest.h>

#include "flagcx/bigint.hpp"
#include "flagcx/error.hpp"

using namespace flagcx;

TEST_SUITE("bigint") {
  TEST_CASE("parse and print round trip") {
    CHECK(to_string(parse_bigint("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(parse_bigint("-17") == -17);
    CHECK_THROWS_AS(parse_bigint("12x"), Error);
    CHECK_THROWS_AS(parse_bigint(""), Error);
  }

  TEST_CASE("int64 narrowing") {
    CHECK(to_int64(BigInt(42)) == 42);
    CHECK_FALSE(to_int64(ipow(2, 64)).has_value());
  }

  TEST_CASE("integer roots bracket the input") {
    for (unsigned n = 1; n <= 6; ++n) {
      for (int x = 0; x < 3000; x += 7) {
        const auto r = iroot_floor(x, n);
        CHECK(ipow(r, n) <= x);
        CHECK(ipow(r + 1, n) > x);
      }
    }
    CHECK(iroot_floor(ipow(BigInt(12345), 5), 5) == 12345);
    CHECK(iroot_floor(ipow(BigInt(12345), 5) - 1, 5) == 12344);
  }

  TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(60, 30) == parse_bigint("118264581564861424"));
  }
}
