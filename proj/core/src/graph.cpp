#include "flagcx/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "flagcx/error.hpp"
#include "flagcx/turan.hpp"

namespace flagcx {

namespace {

void require_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw Error(Errc::domain, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices) {
    throw Error(Errc::unsupported, "graphs are limited to 0..64 vertices, got " + std::to_string(n));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  require_vertex(n_, u);
  require_vertex(n_, v);
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

void Graph::add_edge(int u, int v) {
  require_vertex(n_, u);
  require_vertex(n_, v);
  if (u == v) throw Error(Errc::domain, "loops are not allowed");
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  require_vertex(n_, u);
  require_vertex(n_, v);
  rows_[static_cast<std::size_t>(u)] &= ~bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (auto row : rows_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::domain, "cycles need at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

void extend_cliques(const Graph& g, std::uint64_t clique, std::uint64_t candidates,
                    const std::function<void(std::uint64_t)>& visit) {
  visit(clique);
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Only larger vertices may follow, so every clique is built in
    // increasing vertex order exactly once.
    extend_cliques(g, clique | bit(v), candidates & g.neighbors(v), visit);
  }
}

std::uint64_t all_vertices(int n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

}  // namespace

void for_each_clique(const Graph& g, const std::function<void(std::uint64_t)>& visit) {
  extend_cliques(g, 0, all_vertices(g.n()), visit);
}

std::vector<BigInt> clique_counts(const Graph& g) {
  std::vector<std::uint64_t> counts;
  for_each_clique(g, [&](std::uint64_t mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (counts.size() <= size) counts.resize(size + 1, 0);
    ++counts[size];
  });
  return {counts.begin(), counts.end()};
}

Complex clique_complex(const Graph& g) {
  std::set<Face> faces;
  for_each_clique(g, [&](std::uint64_t mask) {
    std::vector<Vertex> vs;
    for (auto m = mask; m != 0; m &= m - 1) vs.push_back(Vertex::plain(std::countr_zero(m) + 1));
    faces.insert(Face::from_sorted(std::move(vs)));
  });
  return detail::complex_from_closed(std::move(faces));
}

Graph underlying_graph(const Complex& c) {
  const auto vs = c.vertices();
  Graph g(static_cast<int>(vs.size()));
  for (const auto& e : c.faces(1)) {
    const auto u = std::lower_bound(vs.begin(), vs.end(), e[0]) - vs.begin();
    const auto v = std::lower_bound(vs.begin(), vs.end(), e[1]) - vs.begin();
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

bool is_flag(const Complex& c) {
  // Every face of c is a clique of its 1-skeleton, so equality of the
  // clique counts per size means equality of the face families.
  const auto counts = clique_counts(underlying_graph(c));
  if (static_cast<int>(counts.size()) != c.dim() + 2) return false;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != c.num_faces(static_cast<int>(k) - 1)) return false;
  }
  return true;
}

Graph turan_graph(int n, int d) {
  if (n < 1 || d < 1) throw Error(Errc::domain, "turan_graph needs n, d >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u % d != v % d) g.add_edge(u, v);
    }
  }
  return g;
}

Complex turan_complex(int n, int d) { return clique_complex(turan_graph(n, d)); }

bool is_turan_graph(const Graph& g, int d) {
  if (d < 1) throw Error(Errc::domain, "is_turan_graph needs d >= 1");
  const int n = g.n();
  const Graph co = complement(g);
  std::uint64_t seen = 0;
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (seen & bit(v)) continue;
    // Complete multipartite iff the complement is a disjoint union of
    // cliques: each vertex's closed complement neighborhood is its part.
    const std::uint64_t part = co.neighbors(v) | bit(v);
    for (auto m = part; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if ((co.neighbors(w) | bit(w)) != part) return false;
    }
    seen |= part;
    sizes.push_back(std::popcount(part));
  }
  if (static_cast<int>(sizes.size()) != std::min(n, d)) return false;
  if (sizes.empty()) return true;
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo <= 1;
}

namespace {

bool color_from(const Graph& g, int v, int k, std::vector<int>& colors) {
  if (v == g.n()) return true;
  // Symmetry breaking: vertex v may open at most one new color.
  const int used = v == 0 ? 0 : *std::max_element(colors.begin(), colors.begin() + v) + 1;
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (auto m = g.neighbors(v) & (bit(v) - 1); m != 0; m &= m - 1) {
      if (colors[static_cast<std::size_t>(std::countr_zero(m))] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colors[static_cast<std::size_t>(v)] = c;
    if (color_from(g, v + 1, k, colors)) return true;
  }
  return false;
}

}  // namespace

std::vector<int> optimal_coloring(const Graph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.n()), 0);
  for (int k = 1; k <= g.n(); ++k) {
    if (color_from(g, 0, k, colors)) return colors;
  }
  return colors;  // n == 0
}

int chromatic_number(const Graph& g) {
  if (g.n() == 0) return 0;
  const auto colors = optimal_coloring(g);
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

CheckReport zykov_check(const Complex& c) {
  if (!is_flag(c)) throw Error(Errc::precondition, "zykov_check needs a flag complex");
  CheckReport report;
  report.check = "zykov";
  const auto f = f_vector(c);
  const int d = c.dim() + 1;
  const auto n = static_cast<std::int64_t>(c.num_faces(0));
  auto& w = report.witness;
  w["d"] = d;
  w["n"] = n;
  w["f"] = nlohmann::ordered_json::array();
  w["bound"] = nlohmann::ordered_json::array();
  bool violated = false;
  bool tight = false;
  for (int i = 0; i <= d - 1; ++i) {
    const auto bound = turan_coeff(n, i + 1, d);
    w["f"].push_back(json_number(f(i)));
    w["bound"].push_back(json_number(bound));
    if (i == 0) continue;
    if (f(i) > bound) violated = true;
    if (f(i) == bound) tight = true;
  }
  if (violated) {
    report.verdict = Verdict::fail;
    report.note = "face count exceeds the Turan bound";
  } else if (tight) {
    const bool iso = is_turan_graph(underlying_graph(c), d);
    w["turan_isomorphic"] = iso;
    report.verdict = iso ? Verdict::equality : Verdict::fail;
    if (!iso) report.note = "bound attained by a non-Turan complex";
  } else {
    report.verdict = Verdict::pass;
  }
  return report;
}

}  // namespace flagcx
