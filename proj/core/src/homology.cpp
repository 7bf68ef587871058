#include "flagcx/homology.hpp"

#include <bit>

#include "flagcx/error.hpp"

namespace flagcx {

bool is_prime(unsigned p) noexcept {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::domain, std::to_string(p) + " is not prime");
  if (p > 65521) throw Error(Errc::unsupported, "field characteristic above 65521");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(Errc::domain, "zero has no inverse");
  // a^(p-2) by square and multiply.
  std::uint32_t result = 1;
  std::uint32_t base = a % p_;
  for (unsigned e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::uint32_t PrimeField::from_int(std::int64_t x) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(((x % p) + p) % p);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

bool FieldMatrix::is_zero() const noexcept {
  for (auto x : data_) {
    if (x != 0) return false;
  }
  return true;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw Error(Errc::domain, "matrix shapes or fields do not match");
  }
  const auto& f = a.field();
  FieldMatrix out(a.rows(), b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  }
  return out;
}

namespace {

std::size_t rank_gf2(const FieldMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  // pivots[c] holds a reduced row whose lowest set bit is c.
  std::vector<std::vector<std::uint64_t>> pivots(m.cols());
  std::vector<std::uint64_t> row(words);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) & 1U) row[c / 64] |= std::uint64_t{1} << (c % 64);
    }
    std::size_t w = 0;
    while (true) {
      while (w < words && row[w] == 0) ++w;
      if (w == words) break;
      const std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      auto& pivot = pivots[lead];
      if (pivot.empty()) {
        pivot = row;
        ++rank;
        break;
      }
      for (std::size_t i = w; i < words; ++i) row[i] ^= pivot[i];
    }
  }
  return rank;
}

std::size_t rank_mod_p(FieldMatrix m) {
  const auto& f = m.field();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const auto scale = f.inv(m(rank, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), scale);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const auto factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().p() == 2) return rank_gf2(m);
  return rank_mod_p(m);
}

std::size_t rank_by_columns(const FieldMatrix& m) { return rank(m.transposed()); }

FieldMatrix boundary_matrix(const Complex& c, int k, PrimeField field) {
  if (k < 0) throw Error(Errc::domain, "boundary matrices start at k = 0");
  const auto rows = c.faces(k - 1);
  const auto cols = c.faces(k);
  FieldMatrix m(rows.size(), cols.size(), field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Face& face = cols[j];
    for (std::size_t t = 0; t < face.size(); ++t) {
      const auto row = c.index_of(face.without_position(t));
      if (!row) throw Error(Errc::invariant, "boundary face missing from complex");
      m(*row, j) = field.from_int(t % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::int64_t BettiVector::operator()(int k) const noexcept {
  const auto i = static_cast<std::size_t>(k + 1);
  if (k < -1 || i >= entries_.size()) return 0;
  return entries_[i];
}

BettiVector betti_vector(const Complex& c, PrimeField field) {
  const int top = c.dim();
  // ranks[k] = rank ∂_k for k = 0..top; ∂_{-1} and ∂_{top+1} vanish.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int k = 0; k <= top; ++k) {
    ranks[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rank(boundary_matrix(c, k, field)));
  }
  std::vector<std::int64_t> betti;
  for (int k = -1; k <= top; ++k) {
    const auto below = k >= 0 ? ranks[static_cast<std::size_t>(k)] : 0;
    const auto above = ranks[static_cast<std::size_t>(k + 1)];
    betti.push_back(static_cast<std::int64_t>(c.num_faces(k)) - below - above);
  }
  return BettiVector(std::move(betti));
}

std::int64_t betti(const Complex& c, int k, PrimeField field) {
  if (k < -1 || k > c.dim()) return 0;
  const auto below = k >= 0 ? static_cast<std::int64_t>(rank(boundary_matrix(c, k, field))) : 0;
  const auto above =
      k + 1 <= c.dim() ? static_cast<std::int64_t>(rank(boundary_matrix(c, k + 1, field))) : 0;
  return static_cast<std::int64_t>(c.num_faces(k)) - below - above;
}

}  // namespace flagcx
