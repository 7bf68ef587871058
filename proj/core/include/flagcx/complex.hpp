#pragma once

// Finite abstract simplicial complexes stored as their full face family.
//
// Faces live in per-dimension buckets sorted lexicographically, so the
// canonical iteration order is (dimension, lex). The empty face is always
// present; a complex with no faces at all cannot be constructed.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "flagcx/bigint.hpp"

namespace flagcx {

/// A ground-set element: either a plain positive id or a colored vertex
/// u_{i,j} (color i, within-class index j).
///
/// Ordering compares (index, color). For colored vertices that is the order
/// u_{i,j} < u_{i',j'} iff j < j', or j == j' and i < i'; for vertices of
/// the canonical partition it coincides with the integer order of i + (j-1)d.
class Vertex {
 public:
  constexpr Vertex() = default;

  static Vertex plain(std::int64_t id);
  static Vertex colored(int color, std::int64_t index);

  bool is_colored() const noexcept { return color_ != 0; }
  int color() const noexcept { return color_; }
  std::int64_t index() const noexcept { return index_; }

  friend constexpr std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) noexcept {
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    return a.color_ <=> b.color_;
  }
  friend constexpr bool operator==(const Vertex&, const Vertex&) noexcept = default;

 private:
  constexpr Vertex(std::int64_t index, int color) : index_(index), color_(color) {}

  std::int64_t index_ = 0;
  int color_ = 0;
};

/// "7" for plain vertices, "i.j" for colored ones.
std::string to_string(const Vertex& v);
Vertex parse_vertex(std::string_view text);

/// Sorted, duplicate-free vertex set. Default-constructed is the empty face.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::vector<Vertex> vertices);

  /// Convenience for plain-vertex faces: Face::of({1, 2, 3}).
  static Face of(std::initializer_list<std::int64_t> ids);
  static Face from_sorted(std::vector<Vertex> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(const Vertex& v) const;
  bool is_subset_of(const Face& other) const;
  bool is_disjoint_from(const Face& other) const;

  /// The face with the vertex at position `pos` removed.
  Face without_position(std::size_t pos) const;
  Face with(const Vertex& v) const;
  Face unite(const Face& other) const;
  Face intersect(const Face& other) const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const Face& f);

/// Calls `visit` on every subset of `f` (including the empty set and f).
void for_each_subface(const Face& f, const std::function<void(const Face&)>& visit);

/// f-vector (f_{-1}, f_0, ..., f_{d-1}); f_{-1} = 1 and the last entry is
/// positive.
class FVector {
 public:
  FVector() : entries_{1} {}
  explicit FVector(std::vector<BigInt> entries);

  /// f_k for k >= -1; zero above the dimension.
  BigInt operator()(int k) const;
  /// Dimension of the complex: size() - 2.
  int dim() const noexcept { return static_cast<int>(entries_.size()) - 2; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<BigInt> entries_;
};

/// h-vector (h_0, ..., h_d) of a (d-1)-dimensional complex.
class HVector {
 public:
  explicit HVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}

  const BigInt& operator[](std::size_t i) const { return entries_.at(i); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<BigInt> entries_;
};

std::string to_string(const FVector& f);
std::string to_string(const HVector& h);

class Complex;

namespace detail {
/// Trusted construction from a family already known to be closed.
Complex complex_from_closed(std::set<Face>&& faces);
}  // namespace detail

class Complex {
 public:
  /// The trivial complex {∅}.
  Complex();

  /// Builds a complex from an explicit face family, verifying that it is
  /// closed under inclusion (throws Error(precondition) otherwise). The
  /// empty face is added if missing.
  static Complex from_faces(std::vector<Face> faces);

  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 2; }
  std::size_t num_faces(int k) const noexcept;
  std::size_t size() const noexcept;
  std::span<const Face> faces(int k) const noexcept;
  /// All faces in canonical (dimension, lex) order.
  std::vector<Face> all_faces() const;

  bool contains(const Face& f) const;
  /// Position of `f` within faces(f.dim()).
  std::optional<std::size_t> index_of(const Face& f) const;

  std::vector<Vertex> vertices() const;
  std::vector<Face> facets() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  explicit Complex(std::vector<std::vector<Face>> by_dim);
  friend Complex detail::complex_from_closed(std::set<Face>&& faces);

  std::vector<std::vector<Face>> by_dim_;  // by_dim_[k + 1] holds the k-faces
};

/// ⟨F_1, ..., F_k⟩: the smallest complex containing every input face.
/// Throws Error(domain) on an empty input list.
Complex generate(std::span<const Face> faces);
Complex generate(std::initializer_list<Face> faces);

FVector f_vector(const Complex& c);
HVector h_vector(const FVector& f);
/// Inverse of h_vector.
FVector f_from_h(const HVector& h);

Complex link(const Complex& c, const Face& f);
Complex antistar(const Complex& c, const Face& f);
Complex closed_star(const Complex& c, const Face& f);
Complex induced(const Complex& c, std::span<const Vertex> ground);

/// Union and intersection of face families; both are again complexes.
Complex unite(const Complex& a, const Complex& b);
Complex intersect(const Complex& a, const Complex& b);

/// Γ₁ * Γ₂ on disjoint vertex sets (throws Error(not_disjoint)).
Complex join(const Complex& a, const Complex& b);
Complex cone(const Complex& c, const Vertex& apex);

/// Removes, for a in `dims` taken in decreasing order, the facets of
/// dimension a of the current complex.
Complex facet_free_reduction(const Complex& c, const std::set<int>& dims);

bool is_pure(const Complex& c);

}  // namespace flagcx
