#include "flagcx/colored.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "flagcx/canon.hpp"
#include "flagcx/error.hpp"
#include "flagcx/graph.hpp"

namespace flagcx {

Vertex pi_vertex(std::int64_t k, int d) {
  if (k < 1 || d < 1) throw Error(Errc::domain, "pi_vertex needs k, d >= 1");
  return Vertex::colored(static_cast<int>((k - 1) % d) + 1, (k - 1) / d + 1);
}

std::int64_t pi_value(const Vertex& v, int d) {
  if (!v.is_colored() || v.color() > d) {
    throw Error(Errc::domain, "vertex " + to_string(v) + " is not in the canonical partition");
  }
  return v.color() + (v.index() - 1) * d;
}

bool is_colored(const Complex& c, int d) {
  for (const auto& v : c.vertices()) {
    if (!v.is_colored() || v.color() > d) return false;
  }
  // Faces are rainbow iff their edges are.
  for (const auto& e : c.faces(1)) {
    if (e[0].color() == e[1].color()) return false;
  }
  return true;
}

ColoredComplex::ColoredComplex(ColoredGround ground, Complex complex)
    : ground_(std::move(ground)), complex_(std::move(complex)) {
  if (ground_.d < 1 || ground_.sizes.size() != static_cast<std::size_t>(ground_.d)) {
    throw Error(Errc::precondition, "colored ground needs d >= 1 and one size per class");
  }
  if (!is_colored(complex_, ground_.d)) {
    throw Error(Errc::precondition, "complex is not " + std::to_string(ground_.d) + "-colored");
  }
  for (const auto& v : complex_.vertices()) {
    if (v.index() > ground_.sizes[static_cast<std::size_t>(v.color() - 1)]) {
      throw Error(Errc::precondition, "vertex " + to_string(v) + " lies outside the ground set");
    }
  }
}

ColoredComplex ColoredComplex::over(int d, Complex complex) {
  if (d < 1) throw Error(Errc::precondition, "colored complexes need d >= 1");
  ColoredGround ground{d, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0)};
  for (const auto& v : complex.vertices()) {
    if (!v.is_colored() || v.color() > d) {
      throw Error(Errc::precondition, "vertex " + to_string(v) + " has no color in [d]");
    }
    auto& size = ground.sizes[static_cast<std::size_t>(v.color() - 1)];
    size = std::max(size, v.index());
  }
  return ColoredComplex(std::move(ground), std::move(complex));
}

bool is_color_shifted(const ColoredComplex& cc) {
  const auto& c = cc.complex();
  for (const auto& face : c.all_faces()) {
    for (std::size_t t = 0; t < face.size(); ++t) {
      const auto& v = face[t];
      if (v.index() == 1) continue;
      // One step down suffices: the shifted face is checked in turn.
      const Face lower = face.without_position(t).with(Vertex::colored(v.color(), v.index() - 1));
      if (!c.contains(lower)) return false;
    }
  }
  return true;
}

std::strong_ordering revlex_compare(const Face& a, const Face& b) {
  if (a.size() != b.size()) throw Error(Errc::domain, "revlex comparison of faces of different sizes");
  auto ia = a.vertices().rbegin();
  auto ib = b.vertices().rbegin();
  while (ia != a.vertices().rend()) {
    if (*ia != *ib) return *ia <=> *ib;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

namespace {

class RevlexEnumerator {
 public:
  RevlexEnumerator(int d, const std::vector<std::int64_t>* limits, std::function<bool(const Face&)> emit)
      : d_(d), limits_(limits), emit_(std::move(emit)) {}

  /// Rainbow k-subsets of [1, upper] avoiding the banned classes, in colex
  /// order; returns false once emit asked to stop.
  bool run(int k, std::int64_t upper, std::uint64_t banned) {
    if (k == 0) {
      std::vector<Vertex> vs;
      for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) vs.push_back(pi_vertex(*it, d_));
      return emit_(Face::from_sorted(std::move(vs)));
    }
    for (std::int64_t m = 1; m <= upper; ++m) {
      const auto cls = static_cast<int>((m - 1) % d_);
      if ((banned >> cls) & 1U) continue;
      if (limits_ != nullptr && (m - 1) / d_ + 1 > (*limits_)[static_cast<std::size_t>(cls)]) continue;
      stack_.push_back(m);
      const bool more = run(k - 1, m - 1, banned | (std::uint64_t{1} << cls));
      stack_.pop_back();
      if (!more) return false;
    }
    return true;
  }

 private:
  int d_;
  const std::vector<std::int64_t>* limits_;
  std::function<bool(const Face&)> emit_;
  std::vector<std::int64_t> stack_;  // chosen elements, decreasing
};

}  // namespace

std::vector<Face> revlex_prefix(std::int64_t count, int k, int d, const std::vector<std::int64_t>* limits) {
  if (d < 1 || d > 64) throw Error(Errc::domain, "revlex_prefix needs 1 <= d <= 64");
  if (k < 0 || k > d) throw Error(Errc::domain, "rainbow k-sets need 0 <= k <= d");
  if (limits != nullptr && limits->size() != static_cast<std::size_t>(d)) {
    throw Error(Errc::domain, "revlex_prefix needs one limit per class");
  }
  std::vector<Face> out;
  if (count <= 0) return out;
  RevlexEnumerator gen(d, limits, [&](const Face& f) {
    out.push_back(f);
    return static_cast<std::int64_t>(out.size()) < count;
  });
  std::int64_t upper = std::numeric_limits<std::int64_t>::max();
  if (limits != nullptr) {
    upper = 0;
    for (int c = 0; c < d; ++c) {
      const auto lambda = (*limits)[static_cast<std::size_t>(c)];
      if (lambda > 0) upper = std::max(upper, c + 1 + (lambda - 1) * d);
    }
  }
  gen.run(k, upper, 0);
  return out;
}

bool is_revlex(const ColoredComplex& cc) {
  const auto& c = cc.complex();
  for (int k = 1; k <= c.dim() + 1; ++k) {
    const auto faces = c.faces(k - 1);
    if (k > cc.d()) return false;
    auto prefix = revlex_prefix(static_cast<std::int64_t>(faces.size()), k, cc.d(), &cc.ground().sizes);
    std::sort(prefix.begin(), prefix.end());
    if (!std::equal(prefix.begin(), prefix.end(), faces.begin(), faces.end())) return false;
  }
  return true;
}

ColoredComplex revlex_complex_top(std::int64_t n, int d) {
  if (n < 1) throw Error(Errc::domain, "revlex_complex_top needs N >= 1");
  const auto top = revlex_prefix(n, d, d);
  return ColoredComplex::over(d, generate(top));
}

ColoredComplex revlex_complex_fvec(const FVector& f, int d) {
  if (d < 1) throw Error(Errc::domain, "revlex_complex_fvec needs d >= 1");
  if (f.dim() + 1 > d) throw Error(Errc::invalid_f_vector, "f-vector " + to_string(f) + " is too long");
  if (!ffk_check(f, d)) {
    throw Error(Errc::invalid_f_vector,
                to_string(f) + " is not the f-vector of a " + std::to_string(d) + "-colorable complex");
  }
  std::vector<Face> faces{Face{}};
  for (int k = 1; k <= f.dim() + 1; ++k) {
    const auto count = to_int64(f(k - 1));
    if (!count) throw Error(Errc::unsupported, "face count exceeds int64");
    auto prefix = revlex_prefix(*count, k, d);
    faces.insert(faces.end(), prefix.begin(), prefix.end());
  }
  try {
    return ColoredComplex::over(d, Complex::from_faces(std::move(faces)));
  } catch (const Error& e) {
    if (e.code() != Errc::precondition) throw;
    throw Error(Errc::invariant, "revlex prefixes of " + to_string(f) + " are not closed under inclusion");
  }
}

FfkConditions ffk_conditions(const FVector& f, int r) {
  const int d = f.dim() + 1;
  if (r < 1 || d > r) throw Error(Errc::domain, "colorability criterion needs dim f + 1 <= r");
  FfkConditions out{true, true};
  for (int k = 1; k <= d - 1; ++k) {
    if (f(k - 1) < shadow_down(f(k), k + 1, r)) out.lower = false;
    if (shadow_up(f(k - 1), k, r) < f(k)) out.upper = false;
  }
  return out;
}

bool ffk_check(const FVector& f, int r) {
  const auto c = ffk_conditions(f, r);
  if (c.lower != c.upper) {
    throw Error(Errc::invariant, "the two colorability criteria disagree on " + to_string(f));
  }
  return c.lower;
}

Complex hat_complex(const ColoredComplex& cc) {
  if (!cc.is_balanced() || !is_color_shifted(cc)) {
    throw Error(Errc::precondition, "hat_complex needs a color-shifted balanced complex");
  }
  const auto& c = cc.complex();
  const int top = cc.d() - 1;
  std::vector<Face> faces;
  for (const auto& f : c.faces(top)) {
    std::vector<Vertex> kept;
    for (const auto& v : f.vertices()) {
      if (v.index() != 1) kept.push_back(v);
    }
    faces.push_back(Face::from_sorted(std::move(kept)));
  }
  Complex hat;
  try {
    hat = Complex::from_faces(faces);
  } catch (const Error& e) {
    if (e.code() != Errc::precondition) throw;
    throw Error(Errc::invariant, "hat complex is not closed under inclusion");
  }
  for (const auto& f : hat.all_faces()) {
    if (!c.contains(f)) throw Error(Errc::invariant, "hat complex face " + to_string(f) + " missing");
  }
  if (hat.size() != c.num_faces(top)) {
    throw Error(Errc::invariant, "hat complex size differs from the number of top faces");
  }
  return hat;
}

BigInt shifted_betti_top(const ColoredComplex& cc) {
  if (!is_color_shifted(cc)) throw Error(Errc::precondition, "shifted_betti_top needs a color-shifted complex");
  std::int64_t count = 0;
  for (const auto& f : cc.complex().faces(cc.d() - 1)) {
    if (std::none_of(f.vertices().begin(), f.vertices().end(), [](const Vertex& v) { return v.index() == 1; })) {
      ++count;
    }
  }
  return count;
}

ColoredComplex colored_turan_complex(int n, int d) {
  const auto plain = turan_complex(n, d);
  std::set<Face> faces;
  for (const auto& f : plain.all_faces()) {
    std::vector<Vertex> vs;
    for (const auto& v : f.vertices()) vs.push_back(pi_vertex(v.index(), d));
    faces.insert(Face(std::move(vs)));
  }
  return ColoredComplex::over(d, detail::complex_from_closed(std::move(faces)));
}

ColoredComplex color_shifted_closure(const std::vector<Face>& generators, int d) {
  std::set<Face> faces{Face{}};
  std::vector<Face> work(generators.begin(), generators.end());
  while (!work.empty()) {
    Face f = std::move(work.back());
    work.pop_back();
    if (!faces.insert(f).second) continue;
    for (std::size_t t = 0; t < f.size(); ++t) {
      work.push_back(f.without_position(t));
      const auto& v = f[t];
      if (v.index() > 1) work.push_back(f.without_position(t).with(Vertex::colored(v.color(), v.index() - 1)));
    }
  }
  return ColoredComplex::over(d, detail::complex_from_closed(std::move(faces)));
}

SigmaResult build_sigma(const Complex& flag) {
  const int d = flag.dim();
  if (d < 1) throw Error(Errc::domain, "build_sigma needs dimension >= 1");
  if (!is_flag(flag)) throw Error(Errc::precondition, "build_sigma needs a flag complex");

  std::map<Vertex, std::int64_t> top_degree;
  for (const auto& v : flag.vertices()) top_degree[v] = 0;
  for (const auto& f : flag.faces(d)) {
    for (const auto& v : f.vertices()) ++top_degree[v];
  }
  Vertex v0 = top_degree.begin()->first;
  for (const auto& [v, count] : top_degree) {
    if (count > top_degree[v0]) v0 = v;
  }

  const auto star_vertices = closed_star(flag, Face{v0}).vertices();
  std::vector<Vertex> outside;
  for (const auto& v : flag.vertices()) {
    if (!std::binary_search(star_vertices.begin(), star_vertices.end(), v)) outside.push_back(v);
  }
  const std::size_t s = outside.size();

  std::vector<std::int64_t> a(s + 1, 0);
  std::vector<Complex> links(s + 1);
  links[0] = link(flag, Face{v0});
  a[0] = static_cast<std::int64_t>(links[0].num_faces(d - 1));
  Complex current = flag;  // Δ_{i+1}
  for (std::size_t i = s; i >= 1; --i) {
    const Face vi{outside[i - 1]};
    links[i] = link(current, vi);
    a[i] = static_cast<std::int64_t>(links[i].num_faces(d - 1));
    current = antistar(current, vi);
  }

  for (std::size_t i = 1; i <= s; ++i) {
    if (a[i] > a[0]) throw Error(Errc::invariant, "a_0 is not the largest link count");
  }

  std::vector<ColoredComplex> parts;
  Complex sigma;
  for (std::size_t i = 0; i <= s; ++i) {
    parts.push_back(a[i] > 0 ? revlex_complex_top(a[i], d)
                             : ColoredComplex(ColoredGround{d, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0)},
                                              Complex()));
    const Vertex apex = Vertex::colored(d + 1, static_cast<std::int64_t>(i) + 1);
    sigma = unite(sigma, cone(parts.back().complex(), apex));
  }

  std::int64_t total = 0;
  for (auto x : a) total += x;
  if (static_cast<std::int64_t>(sigma.num_faces(d)) != total ||
      total != static_cast<std::int64_t>(flag.num_faces(d))) {
    throw Error(Errc::invariant, "Σ does not reproduce the top face count");
  }
  return SigmaResult{ColoredComplex::over(d + 1, std::move(sigma)), v0, std::move(outside), std::move(a),
                     std::move(parts), std::move(links)};
}

}  // namespace flagcx
