#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

std::vector<BigInt> turan_clique_counts(int n, int d) {
  std::vector<BigInt> counts(static_cast<std::size_t>(d + 1), 0);
  std::vector<int> chosen;
  std::function<void(int)> grow = [&](int from) {
    ++counts[chosen.size()];
    if (static_cast<int>(chosen.size()) == d) return;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : chosen) ok = ok && (u % d != v % d);
      if (!ok) continue;
      chosen.push_back(v);
      grow(v + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return counts;
}

BigInt turan_by_subsets(std::int64_t n, std::int64_t k, std::int64_t d) {
  if (n < 0 || k < 0 || k > d) return 0;
  std::vector<std::int64_t> parts;
  for (std::int64_t i = 0; i < d; ++i) parts.push_back(n / d + (i < n % d ? 1 : 0));
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    if (std::popcount(mask) != k) continue;
    BigInt product = 1;
    for (std::int64_t i = 0; i < d; ++i) {
      if (mask >> i & 1U) product *= parts[static_cast<std::size_t>(i)];
    }
    total += product;
  }
  return total;
}

std::vector<std::vector<std::int64_t>> canonical_reps(std::int64_t n, int k, int r) {
  // Subset-product values memoized per (k, r); entries saturate at n + 1.
  static std::map<std::pair<int, int>, std::vector<std::int64_t>> memo;
  auto value = [&](std::int64_t x, int kk, int rr) {
    auto& row = memo[{kk, rr}];
    while (static_cast<std::int64_t>(row.size()) <= x) {
      const BigInt v = turan_by_subsets(static_cast<std::int64_t>(row.size()), kk, rr);
      row.push_back(v > std::numeric_limits<std::int64_t>::max() / 2 ? std::numeric_limits<std::int64_t>::max() / 2
                                                                       : v.convert_to<std::int64_t>());
    }
    return row[static_cast<std::size_t>(x)];
  };
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> seq;
  std::function<void(std::int64_t)> extend = [&](std::int64_t remaining) {
    const int i = static_cast<int>(seq.size());
    if (remaining == 0 && i > 0) {
      const int s = i - 1;
      if (seq.back() >= k - s && k - s > 0) found.push_back(seq);
    }
    if (k - i < 1) return;
    std::int64_t upper = std::numeric_limits<std::int64_t>::max();
    if (i > 0) {
      const std::int64_t prev = seq.back();
      upper = prev - prev / (r - i + 1) - 1;
    }
    for (std::int64_t x = 0; x <= upper; ++x) {
      const std::int64_t term = value(x, k - i, r - i);
      if (term > remaining) break;
      seq.push_back(x);
      extend(remaining - term);
      seq.pop_back();
    }
  };
  extend(n);
  return found;
}

namespace {

std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  }
  return out;
}

std::uint64_t relabeled_code(std::uint64_t mask, const std::vector<std::pair<int, int>>& ps,
                             const std::vector<int>& perm, int n) {
  // Adjacency of the permuted graph, then read back in pair order.
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (std::size_t e = 0; e < ps.size(); ++e) {
    if (mask >> e & 1U) {
      const auto a = static_cast<std::size_t>(perm[static_cast<std::size_t>(ps[e].first)]);
      const auto b = static_cast<std::size_t>(perm[static_cast<std::size_t>(ps[e].second)]);
      adj[a][b] = adj[b][a] = true;
    }
  }
  std::uint64_t code = 0;
  for (std::size_t e = 0; e < ps.size(); ++e) {
    if (adj[static_cast<std::size_t>(ps[e].first)][static_cast<std::size_t>(ps[e].second)]) code |= std::uint64_t{1} << e;
  }
  return code;
}

std::vector<std::int64_t> subset_without(const std::vector<std::int64_t>& s, std::size_t skip) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != skip) out.push_back(s[i]);
  }
  return out;
}

bool rainbow(const std::vector<std::int64_t>& s, int d) {
  std::set<std::int64_t> colors;
  for (auto x : s) colors.insert((x - 1) % d);
  return colors.size() == s.size();
}

void subsets(int n, int k, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> s;
  std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
    if (static_cast<int>(s.size()) == k) {
      visit(s);
      return;
    }
    for (std::int64_t x = from; x <= n; ++x) {
      s.push_back(x);
      rec(x + 1);
      s.pop_back();
    }
  };
  rec(1);
}

std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::int64_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    // Inverse by Fermat.
    std::int64_t inv = 1, base = ((m[row][c] % p) + p) % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1, base = base * base % p) {
      if (e & 1) inv = inv * base % p;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] % p == 0) continue;
      const std::int64_t factor = ((m[r][c] % p) + p) % p * inv % p;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - factor * m[row][j]) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t graph_classes(int n) {
  const auto ps = pairs(n);
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ps.size()); ++mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = mask;
    do {
      best = std::min(best, relabeled_code(mask, ps, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

bool isomorphic(const flagcx::Graph& a, const flagcx::Graph& b) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  const int n = a.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u) {
      for (int v = u + 1; v < n && same; ++v) {
        same = a.has_edge(u, v) == b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<std::int64_t>> revlex_order(int n, int k, int d) {
  std::vector<std::vector<std::int64_t>> sets;
  subsets(n, k, [&](const std::vector<std::int64_t>& s) {
    if (rainbow(s, d)) sets.push_back(s);
  });
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    std::int64_t top = 0;
    bool in_b = false;
    for (auto x : a) {
      if (!std::binary_search(b.begin(), b.end(), x) && x > top) top = x, in_b = false;
    }
    for (auto x : b) {
      if (!std::binary_search(a.begin(), a.end(), x) && x > top) top = x, in_b = true;
    }
    return top != 0 && in_b;
  });
  return sets;
}

std::int64_t revlex_shadow_size(std::int64_t count, int n, int k, int d) {
  const auto order = revlex_order(n, k, d);
  std::set<std::vector<std::int64_t>> shadow;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& s = order.at(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < s.size(); ++j) shadow.insert(subset_without(s, j));
  }
  return static_cast<std::int64_t>(shadow.size());
}

std::int64_t revlex_upper_shadow_size(std::int64_t count, int n, int k, int d) {
  const auto order = revlex_order(n, k, d);
  const std::set<std::vector<std::int64_t>> segment(order.begin(), order.begin() + count);
  std::int64_t total = 0;
  subsets(n, k + 1, [&](const std::vector<std::int64_t>& s) {
    if (!rainbow(s, d)) return;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!segment.contains(subset_without(s, j))) return;
    }
    ++total;
  });
  return total;
}

std::vector<std::int64_t> betti(const flagcx::Complex& c, unsigned p) {
  const int dim = c.dim();
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(dim + 3), 0);  // ranks[k + 1] = rank of ∂_k
  for (int k = 0; k <= dim; ++k) {
    const auto lower = c.faces(k - 1);
    const auto upper = c.faces(k);
    std::map<flagcx::Face, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      for (std::size_t t = 0; t < upper[j].size(); ++t) {
        m[row_of.at(upper[j].without_position(t))][j] = t % 2 == 0 ? 1 : -1;
      }
    }
    ranks[static_cast<std::size_t>(k + 1)] = rank_mod_p(std::move(m), p);
  }
  std::vector<std::int64_t> b;
  for (int k = -1; k <= dim; ++k) {
    const auto f = static_cast<std::int64_t>(c.num_faces(k));
    b.push_back(f - ranks[static_cast<std::size_t>(k + 1)] - ranks[static_cast<std::size_t>(k + 2)]);
  }
  return b;
}

std::vector<BigInt> clique_counts(const flagcx::Graph& g) {
  std::vector<BigInt> counts(static_cast<std::size_t>(g.n() + 1), 0);
  std::size_t top = 0;
  for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask) {
    bool clique = true;
    for (int u = 0; u < g.n() && clique; ++u) {
      if (!(mask >> u & 1U)) continue;
      for (int v = u + 1; v < g.n() && clique; ++v) {
        if (mask >> v & 1U) clique = g.has_edge(u, v);
      }
    }
    if (clique) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      ++counts[size];
      top = std::max(top, size);
    }
  }
  counts.resize(top + 1);
  return counts;
}

}  // namespace oracle
