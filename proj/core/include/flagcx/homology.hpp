#pragma once

// Reduced simplicial homology over a prime field via exact ranks of the
// augmented boundary matrices.

#include <cstdint>
#include <vector>

#include "flagcx/complex.hpp"

namespace flagcx {

class PrimeField {
 public:
  /// Throws Error(domain) unless p is prime.
  explicit PrimeField(unsigned p = 2);
  unsigned p() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  /// The residue of a signed integer.
  std::uint32_t from_int(std::int64_t x) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  unsigned p_;
};

bool is_prime(unsigned p) noexcept;

/// Dense row-major matrix over F_p.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const noexcept;
  FieldMatrix transposed() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint32_t> data_;
};

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);

/// Rank by row reduction. Over F_2 rows are packed into 64-bit words and
/// eliminated with word-level XOR.
std::size_t rank(const FieldMatrix& m);
/// Rank by reducing the transpose, i.e. pivoting along the other axis.
std::size_t rank_by_columns(const FieldMatrix& m);

/// ∂_k: rows indexed by the (k-1)-faces (the empty face when k = 0), columns
/// by the k-faces, both in canonical order; the entry for deleting the
/// vertex at position t is (-1)^t.
FieldMatrix boundary_matrix(const Complex& c, int k, PrimeField field = PrimeField{});

/// (β_{-1}, β_0, ..., β_{dim}).
class BettiVector {
 public:
  explicit BettiVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  /// β_k for k >= -1; zero outside the stored range.
  std::int64_t operator()(int k) const noexcept;
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

BettiVector betti_vector(const Complex& c, PrimeField field = PrimeField{});
/// β_k alone (two ranks instead of all of them).
std::int64_t betti(const Complex& c, int k, PrimeField field = PrimeField{});

}  // namespace flagcx
