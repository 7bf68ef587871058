#pragma once

// Colored complexes over an ordered partition (U_1, ..., U_d) with
// U_i = {u_{i,1} < u_{i,2} < ...}; vertices are Vertex::colored(i, j).
//
// The canonical partition Π_d puts the positive integer k into class
// ((k-1) mod d) + 1 at index ((k-1) div d) + 1, so that the vertex order
// (index, color) is the integer order.

#include <compare>
#include <cstdint>
#include <vector>

#include "flagcx/bigint.hpp"
#include "flagcx/complex.hpp"

namespace flagcx {

struct ColoredGround {
  int d = 0;
  /// sizes[i-1] is λ_i, the number of vertices in class i.
  std::vector<std::int64_t> sizes;

  friend bool operator==(const ColoredGround&, const ColoredGround&) = default;
};

Vertex pi_vertex(std::int64_t k, int d);
std::int64_t pi_value(const Vertex& v, int d);

/// True iff every vertex is colored with a color in [d] and every face
/// meets each color class at most once.
bool is_colored(const Complex& c, int d);

class ColoredComplex {
 public:
  /// Throws Error(precondition) unless `complex` is d-colored over `ground`.
  ColoredComplex(ColoredGround ground, Complex complex);
  /// Ground sizes taken as the largest index used in each class.
  static ColoredComplex over(int d, Complex complex);

  const ColoredGround& ground() const noexcept { return ground_; }
  const Complex& complex() const noexcept { return complex_; }
  int d() const noexcept { return ground_.d; }
  bool is_balanced() const noexcept { return complex_.dim() == ground_.d - 1; }

  friend bool operator==(const ColoredComplex&, const ColoredComplex&) = default;

 private:
  ColoredGround ground_;
  Complex complex_;
};

/// Every face survives replacing u_{i,j} by any u_{i,j'} with j' < j.
bool is_color_shifted(const ColoredComplex& cc);

/// A > B iff max(A △ B) lies in A. Throws Error(domain) on a size mismatch.
std::strong_ordering revlex_compare(const Face& a, const Face& b);

/// The first `count` rainbow k-subsets of Π_d in revlex order (k <= d).
/// With `limits`, class i is restricted to indices <= limits[i-1] and the
/// result may be shorter than `count`.
std::vector<Face> revlex_prefix(std::int64_t count, int k, int d,
                                const std::vector<std::int64_t>* limits = nullptr);

/// For each k, the (k-1)-faces form an initial segment of the revlex order
/// on rainbow k-sets of the ground.
bool is_revlex(const ColoredComplex& cc);

/// Downward closure of the first N rainbow d-sets of Π_d.
ColoredComplex revlex_complex_top(std::int64_t n, int d);

/// The revlex complex over Π_d with f-vector f. Throws
/// Error(invalid_f_vector) if f fails the colorability conditions, and
/// Error(invariant) if the prefixes are not closed under inclusion.
ColoredComplex revlex_complex_fvec(const FVector& f, int d);

struct FfkConditions {
  bool lower = false;  // f_{k-1} >= ∂_{k+1}^{(r)}(f_k) for k in [d-1]
  bool upper = false;  // ∂^k_{(r)}(f_{k-1}) >= f_k for k in [d-1]
};

/// Both forms of the r-colorability criterion for f (dim f + 1 <= r).
FfkConditions ffk_conditions(const FVector& f, int r);
/// The criterion itself; throws Error(invariant) if the two forms disagree.
bool ffk_check(const FVector& f, int r);

/// {F ∩ Û : F a top face}, Û the vertices of index != 1. Requires a
/// color-shifted balanced complex; verifies the result is a subcomplex whose
/// face count equals the number of top faces.
Complex hat_complex(const ColoredComplex& cc);

/// Number of (d-1)-faces avoiding every u_{i,1}. Requires color-shifted.
BigInt shifted_betti_top(const ColoredComplex& cc);

/// Δ(T_d(n)) with vertex k of T_d(n) named pi_vertex(k, d).
ColoredComplex colored_turan_complex(int n, int d);

/// Smallest color-shifted complex containing the given rainbow faces.
ColoredComplex color_shifted_closure(const std::vector<Face>& generators, int d);

/// The union of Σ_i * <u_i> from a flag d-complex (d >= 1).
struct SigmaResult {
  ColoredComplex sigma;
  Vertex v0;
  std::vector<Vertex> peeled;            // v_1 .. v_s
  std::vector<std::int64_t> a;           // a_0 .. a_s
  std::vector<ColoredComplex> parts;     // Σ_0 .. Σ_s over d colors
  std::vector<Complex> links;            // Lk_Δ(v_0), Lk_{Δ_{i+1}}(v_i)
};

/// Throws Error(precondition) on non-flag input and Error(invariant) if the
/// top face count or the a_0 >= a_i chain fails.
SigmaResult build_sigma(const Complex& flag);

}  // namespace flagcx
