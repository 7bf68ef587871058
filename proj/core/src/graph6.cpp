#include <fstream>

#include "flagcx/error.hpp"
#include "flagcx/graph.hpp"

namespace flagcx {

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte = [&](std::size_t pos) {
    if (pos >= text.size()) throw Error(Errc::parse, "graph6 string too short");
    const int v = static_cast<unsigned char>(text[pos]) - 63;
    if (v < 0 || v > 63) throw Error(Errc::parse, "graph6 byte out of range");
    return v;
  };
  if (text.empty()) throw Error(Errc::parse, "empty graph6 string");
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      throw Error(Errc::unsupported, "graph6 graphs above 258047 vertices are not supported");
    }
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  Graph g(n);
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (text.size() != expected) throw Error(Errc::parse, "graph6 string has the wrong length");
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
    if (view.empty()) continue;
    out.push_back(from_graph6(view));
  }
  return out;
}

}  // namespace flagcx
