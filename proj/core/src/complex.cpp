#include "flagcx/complex.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "flagcx/error.hpp"

namespace flagcx {

// ---------------------------------------------------------------- Vertex

Vertex Vertex::plain(std::int64_t id) {
  if (id < 1) throw Error(Errc::domain, "plain vertex ids are positive, got " + std::to_string(id));
  return Vertex(id, 0);
}

Vertex Vertex::colored(int color, std::int64_t index) {
  if (color < 1 || index < 1) {
    throw Error(Errc::domain, "colored vertex needs color >= 1 and index >= 1, got " +
                                  std::to_string(color) + "." + std::to_string(index));
  }
  return Vertex(index, color);
}

std::string to_string(const Vertex& v) {
  if (v.is_colored()) return std::to_string(v.color()) + "." + std::to_string(v.index());
  return std::to_string(v.index());
}

namespace {

std::int64_t parse_positive(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(Errc::parse, "bad vertex '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Vertex parse_vertex(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Vertex::plain(parse_positive(text, text));
  const auto color = parse_positive(text.substr(0, dot), text);
  const auto index = parse_positive(text.substr(dot + 1), text);
  return Vertex::colored(static_cast<int>(color), index);
}

// ---------------------------------------------------------------- Face

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(Errc::malformed_face, "duplicate vertex in face");
  }
}

Face Face::of(std::initializer_list<std::int64_t> ids) {
  std::vector<Vertex> vs;
  vs.reserve(ids.size());
  for (auto id : ids) vs.push_back(Vertex::plain(id));
  return Face(std::move(vs));
}

Face Face::from_sorted(std::vector<Vertex> vertices) {
  Face f;
  f.vertices_ = std::move(vertices);
  return f;
}

bool Face::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Face::is_disjoint_from(const Face& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Face Face::without_position(std::size_t pos) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != pos) out.push_back(vertices_[i]);
  }
  return from_sorted(std::move(out));
}

Face Face::with(const Vertex& v) const {
  if (contains(v)) throw Error(Errc::malformed_face, "vertex " + to_string(v) + " already in face");
  std::vector<Vertex> out = vertices_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return from_sorted(std::move(out));
}

Face Face::unite(const Face& other) const {
  std::vector<Vertex> out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

Face Face::intersect(const Face& other) const {
  std::vector<Vertex> out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::string to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += to_string(f[i]);
  }
  return s + "}";
}

void for_each_subface(const Face& f, const std::function<void(const Face&)>& visit) {
  const auto n = f.size();
  if (n >= 30) throw Error(Errc::unsupported, "face too large to enumerate subfaces");
  std::vector<Vertex> buf;
  buf.reserve(n);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    buf.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) buf.push_back(f[i]);
    }
    visit(Face::from_sorted(buf));
  }
}

// ---------------------------------------------------------------- vectors

FVector::FVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) {
    throw Error(Errc::domain, "f-vector must start with f_{-1} = 1");
  }
  for (const auto& e : entries_) {
    if (e < 0) throw Error(Errc::domain, "negative face count");
  }
  if (entries_.back() <= 0) throw Error(Errc::domain, "f-vector must end with a positive entry");
}

BigInt FVector::operator()(int k) const {
  if (k < -1 || k + 1 >= static_cast<int>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(k + 1)];
}

namespace {

std::string join_bigints(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

std::string to_string(const FVector& f) { return join_bigints(f.entries()); }
std::string to_string(const HVector& h) { return join_bigints(h.entries()); }

HVector h_vector(const FVector& f) {
  // h_j = sum_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<BigInt> h(static_cast<std::size_t>(d + 1));
  for (std::int64_t j = 0; j <= d; ++j) {
    BigInt acc = 0;
    for (std::int64_t i = 0; i <= j; ++i) {
      BigInt term = binomial(d - i, j - i) * f(static_cast<int>(i) - 1);
      if ((j - i) % 2) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    h[static_cast<std::size_t>(j)] = acc;
  }
  return HVector(std::move(h));
}

FVector f_from_h(const HVector& h) {
  // f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i
  const auto d = static_cast<std::int64_t>(h.size()) - 1;
  std::vector<BigInt> f(static_cast<std::size_t>(d + 1));
  for (std::int64_t j = 0; j <= d; ++j) {
    BigInt acc = 0;
    for (std::int64_t i = 0; i <= j; ++i) acc += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(j)] = acc;
  }
  return FVector(std::move(f));
}

// ---------------------------------------------------------------- Complex

Complex::Complex() : by_dim_{{Face{}}} {}

Complex::Complex(std::vector<std::vector<Face>> by_dim) : by_dim_(std::move(by_dim)) {}

namespace detail {

Complex complex_from_closed(std::set<Face>&& faces) {
  faces.insert(Face{});
  std::vector<std::vector<Face>> by_dim;
  for (auto it = faces.begin(); it != faces.end();) {
    auto node = faces.extract(it++);
    const auto slot = static_cast<std::size_t>(node.value().dim() + 1);
    if (by_dim.size() <= slot) by_dim.resize(slot + 1);
    by_dim[slot].push_back(std::move(node.value()));
  }
  // std::set order on Face is lexicographic on vertex lists, so each bucket
  // is already sorted.
  return Complex(std::move(by_dim));
}

}  // namespace detail

Complex Complex::from_faces(std::vector<Face> faces) {
  std::set<Face> family(std::make_move_iterator(faces.begin()), std::make_move_iterator(faces.end()));
  family.insert(Face{});
  for (const auto& f : family) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!family.count(f.without_position(i))) {
        throw Error(Errc::precondition, "face family not closed under inclusion: " + to_string(f) +
                                            " lacks boundary face " + to_string(f.without_position(i)));
      }
    }
  }
  return detail::complex_from_closed(std::move(family));
}

std::size_t Complex::num_faces(int k) const noexcept { return faces(k).size(); }

std::size_t Complex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : by_dim_) n += b.size();
  return n;
}

std::span<const Face> Complex::faces(int k) const noexcept {
  if (k < -1 || k + 1 >= static_cast<int>(by_dim_.size())) return {};
  return by_dim_[static_cast<std::size_t>(k + 1)];
}

std::vector<Face> Complex::all_faces() const {
  std::vector<Face> out;
  out.reserve(size());
  for (const auto& b : by_dim_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<std::size_t> Complex::index_of(const Face& f) const {
  const auto bucket = faces(f.dim());
  auto it = std::lower_bound(bucket.begin(), bucket.end(), f);
  if (it == bucket.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - bucket.begin());
}

bool Complex::contains(const Face& f) const { return index_of(f).has_value(); }

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& f : faces(0)) out.push_back(f[0]);
  return out;
}

std::vector<Face> Complex::facets() const {
  std::vector<Face> out;
  for (int k = -1; k <= dim(); ++k) {
    const auto bucket = faces(k);
    std::vector<char> covered(bucket.size(), 0);
    for (const auto& g : faces(k + 1)) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (auto idx = index_of(g.without_position(i))) covered[*idx] = 1;
      }
    }
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      if (!covered[i]) out.push_back(bucket[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- constructions

Complex generate(std::span<const Face> faces) {
  if (faces.empty()) throw Error(Errc::domain, "cannot generate a complex from an empty face list");
  std::set<Face> family;
  for (const auto& f : faces) {
    if (family.count(f)) continue;
    for_each_subface(f, [&](const Face& g) { family.insert(g); });
  }
  return detail::complex_from_closed(std::move(family));
}

Complex generate(std::initializer_list<Face> faces) {
  return generate(std::span<const Face>(faces.begin(), faces.size()));
}

FVector f_vector(const Complex& c) {
  std::vector<BigInt> entries;
  for (int k = -1; k <= c.dim(); ++k) entries.emplace_back(c.num_faces(k));
  return FVector(std::move(entries));
}

namespace {

void require_face(const Complex& c, const Face& f) {
  if (!c.contains(f)) throw Error(Errc::not_a_face, to_string(f) + " is not a face");
}

template <class Pred>
Complex filter(const Complex& c, Pred keep) {
  std::set<Face> out;
  for (int k = -1; k <= c.dim(); ++k) {
    for (const auto& g : c.faces(k)) {
      if (keep(g)) out.insert(g);
    }
  }
  return detail::complex_from_closed(std::move(out));
}

}  // namespace

Complex link(const Complex& c, const Face& f) {
  require_face(c, f);
  return filter(c, [&](const Face& g) { return g.is_disjoint_from(f) && c.contains(g.unite(f)); });
}

Complex antistar(const Complex& c, const Face& f) {
  require_face(c, f);
  return filter(c, [&](const Face& g) { return g.is_disjoint_from(f); });
}

Complex closed_star(const Complex& c, const Face& f) {
  require_face(c, f);
  return filter(c, [&](const Face& g) { return c.contains(g.unite(f)); });
}

Complex induced(const Complex& c, std::span<const Vertex> ground) {
  std::vector<Vertex> w(ground.begin(), ground.end());
  std::sort(w.begin(), w.end());
  return filter(c, [&](const Face& g) {
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [&](const Vertex& v) { return std::binary_search(w.begin(), w.end(), v); });
  });
}

Complex unite(const Complex& a, const Complex& b) {
  std::set<Face> out;
  for (auto& f : a.all_faces()) out.insert(std::move(f));
  for (auto& f : b.all_faces()) out.insert(std::move(f));
  return detail::complex_from_closed(std::move(out));
}

Complex intersect(const Complex& a, const Complex& b) {
  return filter(a, [&](const Face& g) { return b.contains(g); });
}

Complex join(const Complex& a, const Complex& b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  std::vector<Vertex> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw Error(Errc::not_disjoint, "join of complexes sharing vertex " + to_string(common.front()));
  }
  std::set<Face> out;
  const auto fa = a.all_faces();
  const auto fb = b.all_faces();
  for (const auto& x : fa) {
    for (const auto& y : fb) out.insert(x.unite(y));
  }
  return detail::complex_from_closed(std::move(out));
}

Complex cone(const Complex& c, const Vertex& apex) {
  if (c.contains(Face{apex})) {
    throw Error(Errc::not_disjoint, "cone point " + to_string(apex) + " is already a vertex");
  }
  return join(c, generate({Face{apex}}));
}

Complex facet_free_reduction(const Complex& c, const std::set<int>& dims) {
  for (int a : dims) {
    if (a < 0) throw Error(Errc::domain, "facet-free reduction takes non-negative dimensions");
  }
  Complex current = c;
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
    const int a = *it;
    std::set<Face> doomed;
    for (auto& f : current.facets()) {
      if (f.dim() == a) doomed.insert(std::move(f));
    }
    if (doomed.empty()) continue;
    current = filter(current, [&](const Face& g) { return !doomed.count(g); });
  }
  return current;
}

bool is_pure(const Complex& c) {
  const auto fs = c.facets();
  return std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return f.dim() == c.dim(); });
}

}  // namespace flagcx
