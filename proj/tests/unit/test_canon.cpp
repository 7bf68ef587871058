#include <doctest.h>

#include "flagcx/canon.hpp"
#include "flagcx/error.hpp"
#include "flagcx/turan.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flagcx;

namespace {

using Indices = std::vector<std::int64_t>;

BigInt truncated_sum(const CanonRep& rep, int from) {
  BigInt total = 0;
  const auto& idx = rep.indices();
  for (int i = from; i < static_cast<int>(idx.size()); ++i) {
    total += turan_coeff(idx[static_cast<std::size_t>(i)], rep.k() - i, rep.r() - i);
  }
  return total;
}

}  // namespace

TEST_SUITE("canon") {
  TEST_CASE("small representations") {
    CHECK(canonical_rep(5, 2, 3).indices() == Indices{4});
    const auto four = canonical_rep(4, 2, 3);
    CHECK(four.indices() == Indices{3, 1});
    CHECK(four.terms() == std::vector<CanonTerm>{{3, 2, 3}, {1, 1, 2}});
    for (int k = 1; k <= 4; ++k) {
      for (int m = k; m <= 12; ++m) CHECK(canonical_rep(turan_coeff(m, k, k), k, k).indices() == Indices{m});
    }
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(canonical_rep(0, 2, 3), Error);
    CHECK_THROWS_AS(canonical_rep(5, 3, 2), Error);
    CHECK_THROWS_AS(CanonRep(2, 2, {2, 2}), Error);
    CHECK_NOTHROW(CanonRep(2, 2, {3, 1}));
  }

  TEST_CASE("greedy matches the unique representation found by exhaustive search") {
    for (int r = 1; r <= 5; ++r) {
      for (int k = 1; k <= r; ++k) {
        for (std::int64_t n = 1; n <= 300; ++n) {
          const auto all = oracle::canonical_reps(n, k, r);
          REQUIRE(all.size() == 1);
          CHECK(canonical_rep(n, k, r).indices() == all.front());
          CHECK(eval_rep(canonical_rep(n, k, r)) == n);
        }
      }
    }
  }

  TEST_CASE("shifted quantities") {
    CHECK(shift_up(canonical_rep(1, 2, 2)) == 4);
    const auto three = canonical_rep(3, 2, 2);
    CHECK(three.indices() == Indices{3, 1});
    CHECK(shift_up(three) == 8);
    for (int d = 1; d <= 8; ++d) CHECK(shift_up(canonical_rep(1, d, d)) == ipow(2, static_cast<unsigned>(d)));
    CHECK(shift_down(canonical_rep(4, 2, 2)) == 1);
    CHECK(shift_down(canonical_rep(6, 2, 2)) == 2);
    CHECK(shift_down(canonical_rep(1, 2, 2)) == 0);
    CHECK_FALSE(shifted_down_rep(canonical_rep(1, 2, 2)).has_value());
  }

  TEST_CASE("structure of the shifted representations") {
    for (int r = 1; r <= 5; ++r) {
      for (int k = 1; k <= r; ++k) {
        for (std::int64_t n = 1; n <= 400; ++n) {
          const auto rep = canonical_rep(n, k, r);
          const auto up = shift_up(rep);
          CHECK(canonical_rep(up, k, r) == shifted_up_rep(rep));
          const auto down = shifted_down_rep(rep);
          if (rep.indices().front() - r >= k) {
            REQUIRE(down.has_value());
            CHECK(canonical_rep(shift_down(rep), k, r) == *down);
          } else {
            CHECK_FALSE(down.has_value());
            CHECK(shift_down(rep) == 0);
          }
          // Truncation: raising term m by one exceeds the tail from m on.
          for (int m = 0; m <= rep.s(); ++m) {
            const auto idx = rep.indices()[static_cast<std::size_t>(m)];
            CHECK(turan_coeff(idx + 1, k - m, r - m) > truncated_sum(rep, m));
          }
        }
      }
    }
  }

  TEST_CASE("representation order matches integer order") {
    for (int r = 1; r <= 4; ++r) {
      for (int k = 1; k <= r; ++k) {
        std::vector<CanonRep> reps;
        for (std::int64_t n = 1; n <= 120; ++n) reps.push_back(canonical_rep(n, k, r));
        for (std::size_t a = 0; a < reps.size(); ++a) {
          for (std::size_t b = 0; b < reps.size(); ++b) CHECK(rep_less(reps[a], reps[b]) == (a < b));
        }
      }
    }
  }

  TEST_CASE("L+ <= N iff L <= N-") {
    auto c = compare_shift(1, 4, 2, 2);
    CHECK(c.up_le);
    CHECK(c.le_down);
    c = compare_shift(2, 4, 2, 2);
    CHECK_FALSE(c.up_le);
    CHECK_FALSE(c.le_down);
    for (int r = 1; r <= 4; ++r) {
      for (int k = 1; k <= r; ++k) {
        for (std::int64_t n = 1; n <= 120; ++n) {
          const auto down = shift_down(canonical_rep(n, k, r));
          for (std::int64_t l = 1; l <= 120; ++l) CHECK_NOTHROW(compare_shift(l, n, k, r));
          if (down >= 1) {
            const auto at = compare_shift(down, n, k, r);
            CHECK(at.up_le);
            CHECK(at.le_down);
          }
        }
      }
    }
  }

  TEST_CASE("shadow values") {
    CHECK(shadow_down(4, 2, 2) == 4);
    CHECK(shadow_down(8, 2, 3) == 5);
    CHECK(shadow_up(8, 2, 3) == 4);
    CHECK(shadow_down(0, 3, 4) == 0);
    CHECK(shadow_up(0, 3, 4) == 0);
    for (int m = 2; m <= 10; ++m) CHECK(shadow_up(m, 1, 2) == turan_coeff(m, 2, 2));
    CHECK(iterate_shadow_up(4, 2, 2, 0) == 0);
    CHECK(iterate_shadow_down(8, 2, 3, 0) == shadow_down(8, 2, 3));
  }

  TEST_CASE("lower shadows count the shadow of a revlex segment") {
    for (int r = 1; r <= 4; ++r) {
      for (int k = 1; k <= r; ++k) {
        const int n = 3 * r;
        const auto total = static_cast<std::int64_t>(oracle::revlex_order(n, k, r).size());
        for (std::int64_t count = 1; count <= total; ++count) {
          CHECK(shadow_down(count, k, r) == oracle::revlex_shadow_size(count, n, k, r));
        }
      }
    }
  }

  TEST_CASE("upper shadows count the rainbow sets spanned by a revlex segment") {
    for (int r = 2; r <= 4; ++r) {
      for (int k = 1; k < r; ++k) {
        const int n = 3 * r;
        // Only segments that stay inside the ground set, so no larger set is cut off.
        const auto inside = static_cast<std::int64_t>(oracle::revlex_order(2 * r, k, r).size());
        for (std::int64_t count = 1; count <= inside; ++count) {
          CHECK(shadow_up(count, k, r) == oracle::revlex_upper_shadow_size(count, n, k, r));
        }
      }
    }
  }

  TEST_CASE("iterated shadows agree with step-by-step composition") {
    for (int r = 1; r <= 5; ++r) {
      for (int k = 1; k <= r; ++k) {
        for (std::int64_t n = 1; n <= 300; ++n) {
          BigInt step = n;
          for (int j = 0; j < k; ++j) {
            step = shadow_down(step, k - j, r);
            CHECK(iterate_shadow_down(n, k, r, j) == step);
          }
          step = n;
          for (int j = 0; k + j <= r; ++j) {
            step = shadow_up(step, k + j, r);
            CHECK(iterate_shadow_up(n, k, r, j) == step);
            if (step == 0) break;
          }
        }
      }
    }
  }

  TEST_CASE("Betti and face bounds") {
    CHECK(top_betti_upper_bound(4, 2, 2) == 1);
    CHECK(face_lower_bounds(2, 2) == testing::big({1, 5, 6}));
    CHECK(face_lower_bounds(1, 3) == testing::big({1, 6, 12, 8}));
    // Turán complexes meet the face bounds.
    for (int d = 1; d <= 4; ++d) {
      for (int n = d; n <= 10; ++n) {
        const auto a = turan_coeff(n - d, d, d);
        if (a == 0) continue;
        CHECK(face_lower_bounds(a, d) == turan_row(n, d).values);
      }
    }
  }
}
