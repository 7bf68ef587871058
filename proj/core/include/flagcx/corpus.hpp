#pragma once

// Instance sources for the verification suite: isomorph-free graphs on up to
// 8 vertices, graph6 files, and seeded random color-shifted balanced
// complexes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagcx/colored.hpp"
#include "flagcx/complex.hpp"
#include "flagcx/graph.hpp"

namespace flagcx {

/// Adjacency bits in graph6 column order after relabeling by the canonical
/// permutation; two graphs are isomorphic iff their codes (and orders)
/// agree. Supports n <= 11.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// One representative (in canonical form) per isomorphism class of graphs on
/// exactly n vertices, sorted by canonical code. Throws Error(unsupported)
/// for n > 8; larger orders must come from a graph6 file.
std::vector<Graph> enumerate_graphs(int n);

struct Instance {
  std::string id;  // graph6 string, or "h:<hash>@<seed>/<index>"
  Complex complex;
  std::optional<Graph> graph;
  std::optional<ColoredComplex> colored;
};

Instance graph_instance(const Graph& g);
Instance colored_instance(const ColoredComplex& cc, const std::string& origin);

/// FNV-1a 64 of the compact JSON form, as 16 hex digits.
std::string complex_hash(const ColoredComplex& cc);

/// A random color-shifted balanced complex with d in [1, 4] and every class
/// size in [1, 3], determined by (seed, index).
ColoredComplex random_color_shifted(std::uint64_t seed, std::size_t index);

/// Graph instances first, then the seeded balanced complexes.
class Corpus {
 public:
  /// Every graph on 1..max_n vertices, by order then canonical code.
  static Corpus internal(int max_n);
  static Corpus from_graph6(const std::string& path);
  static Corpus from_graphs(std::vector<Graph> graphs, std::string description);
  static Corpus balanced(std::uint64_t seed, std::size_t count);
  static Corpus empty();

  /// This corpus followed by `count` random balanced complexes.
  Corpus append_balanced(std::uint64_t seed, std::size_t count) const;

  std::size_t size() const noexcept;
  Instance instance(std::size_t i) const;
  const std::string& description() const noexcept { return description_; }

 private:
  std::vector<Graph> graphs_;
  std::uint64_t seed_ = 0;
  std::size_t count_ = 0;
  std::string description_;
};

}  // namespace flagcx
