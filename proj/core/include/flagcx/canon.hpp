#pragma once

// (k, r)-canonical representations
//
//   N = binom(N_k, k)_r + binom(N_{k-1}, k-1)_{r-1} + ... + binom(N_{k-s}, k-s)_{r-s}
//
// with N_{k-i} - floor(N_{k-i} / (r-i)) > N_{k-i-1} and N_{k-s} >= k-s > 0,
// together with the shifted quantities N_+ / N_- and the shadow operators
// built from them.

#include <cstdint>
#include <optional>
#include <vector>

#include "flagcx/bigint.hpp"

namespace flagcx {

/// One summand binom(index, k)_r.
struct CanonTerm {
  std::int64_t index = 0;
  int k = 0;
  int r = 0;

  friend bool operator==(const CanonTerm&, const CanonTerm&) = default;
};

class CanonRep {
 public:
  /// Validates the side conditions; throws Error(domain) when violated.
  CanonRep(int k, int r, std::vector<std::int64_t> indices);

  int k() const noexcept { return k_; }
  int r() const noexcept { return r_; }
  /// Number of terms minus one.
  int s() const noexcept { return static_cast<int>(indices_.size()) - 1; }
  /// indices()[i] is N_{k-i}.
  const std::vector<std::int64_t>& indices() const noexcept { return indices_; }
  std::vector<CanonTerm> terms() const;

  /// True iff the indices satisfy the side conditions for (k, r).
  static bool satisfies_conditions(int k, int r, const std::vector<std::int64_t>& indices);

  friend bool operator==(const CanonRep&, const CanonRep&) = default;

 private:
  int k_;
  int r_;
  std::vector<std::int64_t> indices_;
};

/// Greedy construction: the largest N_k with binom(N_k, k)_r <= N, then the
/// remainder with (k-1, r-1). Requires N >= 1 and r >= k >= 1.
CanonRep canonical_rep(const BigInt& n, int k, int r);

BigInt eval_rep(const CanonRep& rep);

/// N_+: every index N_{k-i} replaced by N_{k-i} + (r-i).
BigInt shift_up(const CanonRep& rep);
/// N_-: every index N_{k-i} replaced by N_{k-i} - (r-i), zero convention.
BigInt shift_down(const CanonRep& rep);

/// The representation of N_+ predicted by shifting each index.
CanonRep shifted_up_rep(const CanonRep& rep);
/// The representation of N_- predicted by truncating at
/// s0 = max{t : N_{k-t} - (r-t) >= k-t}; empty when N_k - r < k.
std::optional<CanonRep> shifted_down_rep(const CanonRep& rep);

/// Lower shadow ∂_k^{(r)}(N): each binom(N_{k-i}, k-i)_{r-i} becomes
/// binom(N_{k-i}, k-i-1)_{r-i}. Zero maps to zero.
BigInt shadow_down(const BigInt& n, int k, int r);
/// Upper shadow ∂^k_{(r)}(N): each term's lower argument grows by one.
BigInt shadow_up(const BigInt& n, int k, int r);

/// ∂_{k-j}^{(r)} ∘ ... ∘ ∂_k^{(r)} (N) via the closed form, 0 <= j < k.
BigInt iterate_shadow_down(const BigInt& n, int k, int r, int j);
/// ∂^{k+j}_{(r)} ∘ ... ∘ ∂^k_{(r)} (N) via the closed form, j >= 0.
BigInt iterate_shadow_up(const BigInt& n, int k, int r, int j);

struct ShiftComparison {
  bool up_le = false;    // L_+ <= N
  bool le_down = false;  // L <= N_-
};

/// Evaluates both sides of the L_+ <= N  <=>  L <= N_- equivalence;
/// throws Error(invariant) if they disagree.
ShiftComparison compare_shift(const BigInt& l, const BigInt& n, int k, int r);

/// The term-sequence rule that orders representations: L < N iff L is a
/// proper prefix of N, or the first differing index is smaller in L.
bool rep_less(const CanonRep& l, const CanonRep& n);

/// Upper bound on the top Betti number of a (d-1)-dimensional flag or
/// balanced complex with f_{k-1} = N: sum_i binom(N_{d-i} - (d-i), d-i)_{d-i}
/// over the (k, d)-canonical representation of N.
BigInt top_betti_upper_bound(const BigInt& n, int k, int d);

/// Lower bounds on f_{i-1}, i = 0..d, for a (d-1)-complex whose top Betti
/// number is a > 0: sum_j binom(a_{d-j} + d-j, i-j)_{d-j} over the
/// (d, d)-canonical representation of a.
std::vector<BigInt> face_lower_bounds(const BigInt& a, int d);

}  // namespace flagcx
