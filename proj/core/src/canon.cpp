#include "flagcx/canon.hpp"

#include <limits>

#include "flagcx/error.hpp"
#include "flagcx/turan.hpp"

namespace flagcx {

namespace {

void require_kr(int k, int r) {
  if (k < 1 || r < k) {
    throw Error(Errc::domain, "canonical representations need r >= k >= 1, got k=" + std::to_string(k) +
                                  " r=" + std::to_string(r));
  }
}

// Largest m >= k with binom(m, k)_r <= n, for n >= 1.
std::int64_t largest_index(const BigInt& n, int k, int r) {
  std::int64_t lo = k;  // binom(k, k)_r = 1 <= n
  std::int64_t step = 1;
  std::int64_t hi = lo + step;
  while (turan_coeff(hi, k, r) <= n) {
    lo = hi;
    if (step > std::numeric_limits<std::int64_t>::max() / 4) {
      throw Error(Errc::domain, "canonical representation index exceeds int64 range");
    }
    step *= 2;
    hi = lo + step;
  }
  // binom(lo)_r <= n < binom(hi)_r
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (turan_coeff(mid, k, r) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

bool CanonRep::satisfies_conditions(int k, int r, const std::vector<std::int64_t>& indices) {
  if (k < 1 || r < k || indices.empty()) return false;
  const auto s = static_cast<int>(indices.size()) - 1;
  if (k - s <= 0) return false;
  for (int i = 0; i < s; ++i) {
    const auto cur = indices[static_cast<std::size_t>(i)];
    if (cur - cur / (r - i) <= indices[static_cast<std::size_t>(i + 1)]) return false;
  }
  return indices.back() >= k - s;
}

CanonRep::CanonRep(int k, int r, std::vector<std::int64_t> indices)
    : k_(k), r_(r), indices_(std::move(indices)) {
  require_kr(k, r);
  if (!satisfies_conditions(k, r, indices_)) {
    throw Error(Errc::domain, "index sequence violates the canonical side conditions");
  }
}

std::vector<CanonTerm> CanonRep::terms() const {
  std::vector<CanonTerm> out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    out.push_back({indices_[i], k_ - static_cast<int>(i), r_ - static_cast<int>(i)});
  }
  return out;
}

CanonRep canonical_rep(const BigInt& n, int k, int r) {
  require_kr(k, r);
  if (n < 1) throw Error(Errc::domain, "canonical_rep needs N >= 1, got " + n.str());
  std::vector<std::int64_t> indices;
  BigInt rem = n;
  int kk = k;
  int rr = r;
  while (rem > 0) {
    if (kk < 1) throw Error(Errc::invariant, "greedy canonical representation ran out of terms");
    const auto m = largest_index(rem, kk, rr);
    indices.push_back(m);
    rem -= turan_coeff(m, kk, rr);
    --kk;
    --rr;
  }
  if (!CanonRep::satisfies_conditions(k, r, indices)) {
    throw Error(Errc::invariant, "greedy representation of " + n.str() + " violates the side conditions");
  }
  return CanonRep(k, r, std::move(indices));
}

BigInt eval_rep(const CanonRep& rep) {
  BigInt total = 0;
  for (const auto& t : rep.terms()) total += turan_coeff(t.index, t.k, t.r);
  return total;
}

BigInt shift_up(const CanonRep& rep) {
  BigInt total = 0;
  for (const auto& t : rep.terms()) total += turan_coeff(t.index + t.r, t.k, t.r);
  return total;
}

BigInt shift_down(const CanonRep& rep) {
  BigInt total = 0;
  for (const auto& t : rep.terms()) total += turan_coeff(t.index - t.r, t.k, t.r);
  return total;
}

CanonRep shifted_up_rep(const CanonRep& rep) {
  std::vector<std::int64_t> idx;
  for (const auto& t : rep.terms()) idx.push_back(t.index + t.r);
  return CanonRep(rep.k(), rep.r(), std::move(idx));
}

std::optional<CanonRep> shifted_down_rep(const CanonRep& rep) {
  const auto terms = rep.terms();
  if (terms.front().index - terms.front().r < terms.front().k) return std::nullopt;
  std::size_t s0 = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].index - terms[t].r >= terms[t].k) s0 = t;
  }
  std::vector<std::int64_t> idx;
  for (std::size_t t = 0; t <= s0; ++t) idx.push_back(terms[t].index - terms[t].r);
  return CanonRep(rep.k(), rep.r(), std::move(idx));
}

BigInt shadow_down(const BigInt& n, int k, int r) { return iterate_shadow_down(n, k, r, 0); }

BigInt shadow_up(const BigInt& n, int k, int r) { return iterate_shadow_up(n, k, r, 0); }

BigInt iterate_shadow_down(const BigInt& n, int k, int r, int j) {
  require_kr(k, r);
  if (j < 0 || j >= k) throw Error(Errc::domain, "iterated lower shadow needs 0 <= j < k");
  if (n < 0) throw Error(Errc::domain, "shadow of a negative number");
  if (n == 0) return 0;
  BigInt total = 0;
  for (const auto& t : canonical_rep(n, k, r).terms()) total += turan_coeff(t.index, t.k - j - 1, t.r);
  return total;
}

BigInt iterate_shadow_up(const BigInt& n, int k, int r, int j) {
  require_kr(k, r);
  if (j < 0) throw Error(Errc::domain, "iterated upper shadow needs j >= 0");
  if (n < 0) throw Error(Errc::domain, "shadow of a negative number");
  if (n == 0) return 0;
  BigInt total = 0;
  for (const auto& t : canonical_rep(n, k, r).terms()) total += turan_coeff(t.index, t.k + j + 1, t.r);
  return total;
}

ShiftComparison compare_shift(const BigInt& l, const BigInt& n, int k, int r) {
  ShiftComparison out;
  out.up_le = shift_up(canonical_rep(l, k, r)) <= n;
  out.le_down = l <= shift_down(canonical_rep(n, k, r));
  if (out.up_le != out.le_down) {
    throw Error(Errc::invariant, "L_+ <= N and L <= N_- disagree for L=" + l.str() + " N=" + n.str());
  }
  return out;
}

bool rep_less(const CanonRep& l, const CanonRep& n) {
  if (l.k() != n.k() || l.r() != n.r()) throw Error(Errc::domain, "rep_less on different (k, r)");
  const auto& a = l.indices();
  const auto& b = n.indices();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

BigInt top_betti_upper_bound(const BigInt& n, int k, int d) {
  BigInt total = 0;
  for (const auto& t : canonical_rep(n, k, d).terms()) total += turan_coeff(t.index - t.r, t.r, t.r);
  return total;
}

std::vector<BigInt> face_lower_bounds(const BigInt& a, int d) {
  const auto terms = canonical_rep(a, d, d).terms();
  std::vector<BigInt> bounds;
  for (int i = 0; i <= d; ++i) {
    BigInt total = 0;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      total += turan_coeff(terms[j].index + terms[j].r, i - static_cast<int>(j), terms[j].r);
    }
    bounds.push_back(total);
  }
  return bounds;
}

}  // namespace flagcx
