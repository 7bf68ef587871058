#include "flagcx/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "flagcx/error.hpp"
#include "flagcx/json_io.hpp"

namespace flagcx {

namespace {

// Stable vertex classes from iterated degree refinement, numbered by the
// sorted class signatures so the numbering is isomorphism-invariant.
std::vector<int> refine(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = color[static_cast<std::size_t>(v)];
      for (auto m = g.neighbors(v); m != 0; m &= m - 1) {
        s.second.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
      }
      std::sort(s.second.begin(), s.second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    }
    if (sorted.size() == classes) return color;
    classes = sorted.size();
  }
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::vector<int>> cells;  // vertices of each class, in class order
  std::vector<int> slot_cell;           // class occupying each position
  std::vector<int> order;               // chosen vertices by position
  std::vector<bool> used;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_order;
  int total_bits = 0;

  // Bits of columns 1..j are fixed once positions 0..j are filled; `code`
  // holds them left-aligned in `bits` bits.
  void search(std::size_t pos, std::uint64_t code, int bits) {
    const auto n = slot_cell.size();
    if (pos == n) {
      if (code < best || best_order.empty()) {
        best = code;
        best_order = order;
      }
      return;
    }
    for (int v : cells[static_cast<std::size_t>(slot_cell[pos])]) {
      if (used[static_cast<std::size_t>(v)]) continue;
      std::uint64_t next = code;
      for (std::size_t i = 0; i < pos; ++i) next = (next << 1) | (g.has_edge(order[i], v) ? 1U : 0U);
      const int next_bits = bits + static_cast<int>(pos);
      // Compare with the same-length prefix of the best code.
      if (!best_order.empty()) {
        const std::uint64_t best_prefix = total_bits == 0 ? 0 : best >> (total_bits - next_bits);
        if (next > best_prefix) continue;
      }
      used[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      search(pos + 1, next, next_bits);
      order.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

std::vector<int> canonical_order(const Graph& g) {
  const int n = g.n();
  if (n > 11) throw Error(Errc::unsupported, "canonical forms are limited to 11 vertices");
  const auto color = refine(g);
  const int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  CanonSearch s{g, std::vector<std::vector<int>>(static_cast<std::size_t>(classes)), {}, {}, {}, 0, {}, 0};
  for (int v = 0; v < n; ++v) s.cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  for (int c = 0; c < classes; ++c) {
    for (std::size_t k = 0; k < s.cells[static_cast<std::size_t>(c)].size(); ++k) s.slot_cell.push_back(c);
  }
  s.used.assign(static_cast<std::size_t>(n), false);
  s.total_bits = n * (n - 1) / 2;
  s.search(0, 0, 0);
  return s.best_order;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  Graph out(g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) out.add_edge(i, j);
    }
  }
  return out;
}

std::uint64_t code_of(const Graph& g) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
  }
  return code;
}

}  // namespace

Graph canonical_form(const Graph& g) { return relabel(g, canonical_order(g)); }

std::uint64_t canonical_code(const Graph& g) { return code_of(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1) throw Error(Errc::domain, "enumerate_graphs needs n >= 1");
  if (n > 8) {
    throw Error(Errc::unsupported,
                "internal enumeration stops at 8 vertices; supply larger graphs as a graph6 file");
  }
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::uint64_t, Graph> seen;
    for (const auto& base : level) {
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (m - 1)); ++subset) {
        Graph g(m);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u) {
          if ((subset >> u) & 1U) g.add_edge(u, m - 1);
        }
        auto canon = canonical_form(g);
        seen.emplace(code_of(canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

Instance graph_instance(const Graph& g) { return Instance{to_graph6(g), clique_complex(g), g, std::nullopt}; }

std::string complex_hash(const ColoredComplex& cc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(cc).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Instance colored_instance(const ColoredComplex& cc, const std::string& origin) {
  std::string id = "h:" + complex_hash(cc);
  if (!origin.empty()) id += "@" + origin;
  return Instance{std::move(id), cc.complex(), std::nullopt, cc};
}

ColoredComplex random_color_shifted(std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + index);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const int d = static_cast<int>(uniform(1, 4));
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(d));
  std::int64_t box = 1;
  for (auto& s : sizes) {
    s = uniform(1, 3);
    box *= s;
  }
  auto random_face = [&](int k) {
    // A rainbow k-set inside the box on k random classes.
    std::vector<int> classes(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) classes[static_cast<std::size_t>(c)] = c;
    std::shuffle(classes.begin(), classes.end(), rng);
    std::vector<Vertex> vs;
    for (int t = 0; t < k; ++t) {
      const int c = classes[static_cast<std::size_t>(t)];
      vs.push_back(Vertex::colored(c + 1, uniform(1, sizes[static_cast<std::size_t>(c)])));
    }
    return Face(std::move(vs));
  };

  std::vector<Face> generators;
  const auto mode = uniform(0, 2);
  if (mode != 1) {
    // A revlex prefix of the box's top faces.
    auto prefix = revlex_prefix(uniform(1, box), d, d, &sizes);
    generators.insert(generators.end(), prefix.begin(), prefix.end());
  }
  if (mode != 0) {
    const auto tops = uniform(1, 4);
    for (std::int64_t t = 0; t < tops; ++t) generators.push_back(random_face(d));
    // Lower-dimensional extras make the complex non-pure.
    const auto extras = d > 1 ? uniform(0, 2) : 0;
    for (std::int64_t t = 0; t < extras; ++t) generators.push_back(random_face(static_cast<int>(uniform(1, d - 1))));
  }
  auto closed = color_shifted_closure(generators, d);
  return ColoredComplex(ColoredGround{d, sizes}, closed.complex());
}

Corpus Corpus::internal(int max_n) {
  Corpus c;
  c.description_ = "all graphs on 1.." + std::to_string(max_n) + " vertices";
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs(n);
    c.graphs_.insert(c.graphs_.end(), level.begin(), level.end());
  }
  return c;
}

Corpus Corpus::from_graph6(const std::string& path) {
  return from_graphs(read_graph6_file(path), "graph6 file " + path);
}

Corpus Corpus::from_graphs(std::vector<Graph> graphs, std::string description) {
  Corpus c;
  c.graphs_ = std::move(graphs);
  c.description_ = std::move(description);
  return c;
}

Corpus Corpus::balanced(std::uint64_t seed, std::size_t count) {
  Corpus c;
  c.seed_ = seed;
  c.count_ = count;
  c.description_ = std::to_string(count) + " random color-shifted balanced complexes, seed " + std::to_string(seed);
  return c;
}

Corpus Corpus::append_balanced(std::uint64_t seed, std::size_t count) const {
  if (count_ != 0) throw Error(Errc::domain, "corpus already has a balanced part");
  Corpus c = *this;
  c.seed_ = seed;
  c.count_ = count;
  c.description_ += " + " + balanced(seed, count).description_;
  return c;
}

Corpus Corpus::empty() { return from_graphs({}, "empty corpus"); }

std::size_t Corpus::size() const noexcept { return graphs_.size() + count_; }

Instance Corpus::instance(std::size_t i) const {
  if (i >= size()) throw Error(Errc::domain, "corpus index out of range");
  if (i < graphs_.size()) return graph_instance(graphs_[i]);
  const auto j = i - graphs_.size();
  return colored_instance(random_color_shifted(seed_, j), std::to_string(seed_) + "/" + std::to_string(j));
}

}  // namespace flagcx
