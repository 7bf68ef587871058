#pragma once

// Simple undirected graphs on vertices 0..n-1 (n <= 64) stored as adjacency
// bit rows, their clique complexes, Turan graphs and the Zykov bound.
//
// Clique complexes name graph vertex v by the plain vertex v + 1.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "flagcx/complex.hpp"
#include "flagcx/report.hpp"

namespace flagcx {

class Graph {
 public:
  static constexpr int max_vertices = 64;

  explicit Graph(int n = 0);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const noexcept { return n_; }
  std::uint64_t neighbors(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  std::size_t num_edges() const;
  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complement(const Graph& g);

/// Visits every clique (including the empty one) as a vertex bit mask.
/// Cliques are produced in increasing order of their smallest vertex
/// extension, i.e. each clique appears exactly once.
void for_each_clique(const Graph& g, const std::function<void(std::uint64_t)>& visit);

/// Number of cliques of each size 0..ω.
std::vector<BigInt> clique_counts(const Graph& g);

Complex clique_complex(const Graph& g);

/// The 1-skeleton of `c` on c.vertices() in sorted order: graph vertex i is
/// c.vertices()[i].
Graph underlying_graph(const Complex& c);

/// True iff every minimal non-face has at most two elements.
bool is_flag(const Complex& c);

/// T_d(n): vertex v lies in part v mod d, so the first n mod d parts are the
/// larger ones.
Graph turan_graph(int n, int d);
Complex turan_complex(int n, int d);

/// True iff g is complete multipartite with min(n, d) non-empty parts whose
/// sizes differ by at most one, i.e. g is isomorphic to T_d(n).
bool is_turan_graph(const Graph& g, int d);

/// A proper coloring with the fewest colors (colors 0..χ-1); exact
/// backtracking, intended for small graphs.
std::vector<int> optimal_coloring(const Graph& g);
int chromatic_number(const Graph& g);

/// f_i(c) <= binom(n, i+1)_d for i = 1..d-1, where dim c = d-1 and n = f_0;
/// equality anywhere additionally requires c ≅ Δ(T_d(n)).
/// Throws Error(precondition) if c is not flag.
CheckReport zykov_check(const Complex& c);

/// graph6 encoding (no ">>graph6<<" header).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
/// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace flagcx
