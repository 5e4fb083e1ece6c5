#pragma once

// Brute-force reference implementations the tests trust instead of the
// library's fast paths.  Everything here is written for clarity over speed
// and only works at desk scale; keep it free of jchroma internals beyond
// the basic vertex types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jchroma/constructions.hpp"
#include "jchroma/graph.hpp"

namespace oracles {

// Pascal's triangle, no tricks.
inline std::uint64_t binomial_by_pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> row(n + 1);
  for (int i = 0; i <= n; ++i) {
    row[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return row[n][k];
}

// Most significant differing bit by scanning from the top.
inline int msb_diff_by_scan(std::uint64_t a, std::uint64_t b) {
  for (int pos = 63; pos >= 0; --pos) {
    if (((a >> pos) & 1u) != ((b >> pos) & 1u)) return pos + 1;
  }
  throw std::logic_error("msb_diff_by_scan: equal inputs");
}

// Every edge, by testing all unordered pairs of vertices.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> edges_by_pairs(
    const jchroma::GraphSpec& spec) {
  jchroma::VertexSet all = jchroma::enumerate_vertices(spec);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (jchroma::scalar_product(all[i], all[j]) == spec.t) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

// Properness by the same pairwise scan.
inline bool proper_by_pairs(const jchroma::GraphSpec& spec,
                            const jchroma::Coloring& coloring) {
  jchroma::VertexSet all = jchroma::enumerate_vertices(spec);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (jchroma::scalar_product(all[i], all[j]) == spec.t &&
          coloring.ids.at(i) == coloring.ids.at(j)) {
        return false;
      }
    }
  }
  return true;
}

// Adjacency as one bitmask per vertex; only for graphs small enough that a
// vertex index fits in the mask width.
inline std::vector<std::uint64_t> masks_by_pairs(
    const jchroma::GraphSpec& spec) {
  jchroma::VertexSet all = jchroma::enumerate_vertices(spec);
  if (all.size() > 63) throw std::logic_error("masks_by_pairs: too large");
  std::vector<std::uint64_t> adj(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (jchroma::scalar_product(all[i], all[j]) == spec.t) {
        adj[i] |= 1ull << j;
        adj[j] |= 1ull << i;
      }
    }
  }
  return adj;
}

// Maximum independent set size by memoized recursion over vertex subsets.
// Usable up to ~24 vertices.
class MisOracle {
 public:
  explicit MisOracle(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {
    if (adj_.size() > 24) throw std::logic_error("MisOracle: too large");
    memo_.assign(std::size_t{1} << adj_.size(), kUnknown);
  }

  int alpha() { return solve(((std::size_t{1} << adj_.size()) - 1)); }

 private:
  static constexpr std::uint8_t kUnknown = 0xff;

  int solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    std::uint8_t& slot = memo_[mask];
    if (slot != kUnknown) return slot;
    int v = std::countr_zero(mask);
    std::uint64_t bit = 1ull << v;
    int skip = solve(mask & ~bit);
    int take = 1 + solve(mask & ~bit & ~adj_[v]);
    slot = static_cast<std::uint8_t>(std::max(skip, take));
    return slot;
  }

  std::vector<std::uint64_t> adj_;
  std::vector<std::uint8_t> memo_;
};

inline int alpha_by_masks(const jchroma::GraphSpec& spec) {
  MisOracle oracle(masks_by_pairs(spec));
  return oracle.alpha();
}

// Chromatic number by plain backtracking in fixed vertex order, with the
// usual canonical rule that a vertex may open at most one fresh color.
inline bool colorable_rec(const std::vector<std::uint64_t>& adj,
                          std::vector<int>& color, std::size_t v, int q,
                          int used) {
  if (v == adj.size()) return true;
  std::uint64_t forbidden = 0;
  for (std::size_t u = 0; u < v; ++u) {
    if ((adj[v] >> u) & 1u) forbidden |= 1ull << color[u];
  }
  int limit = std::min(q, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((forbidden >> c) & 1u) continue;
    color[v] = c;
    if (colorable_rec(adj, color, v + 1, q, std::max(used, c + 1))) {
      return true;
    }
  }
  return false;
}

inline int chromatic_by_backtracking(const std::vector<std::uint64_t>& adj) {
  if (adj.empty()) return 0;
  std::vector<int> color(adj.size(), -1);
  for (int q = 1;; ++q) {
    if (colorable_rec(adj, color, 0, q, 0)) return q;
  }
}

inline int chi_by_backtracking(const jchroma::GraphSpec& spec) {
  return chromatic_by_backtracking(masks_by_pairs(spec));
}

// Contest constraint checked straight from its statement: for every
// a < b < c < d the triples {a,b,c} and {b,c,d} get different colors.
inline bool contest_proper_by_quadruples(
    const jchroma::TripleColoring& coloring) {
  int n = coloring.n;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          if (coloring.color_of(a, b, c) == coloring.color_of(b, c, d)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Adjacency masks of the contest constraint graph (nodes are triples in
// rank order), for cross-checking the exact optimum at small n.
inline std::vector<std::uint64_t> contest_masks(int n) {
  std::uint64_t triples = jchroma::binomial(n, 3);
  if (triples > 63) throw std::logic_error("contest_masks: too large");
  std::vector<std::uint64_t> adj(triples, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          std::uint64_t i = jchroma::triple_rank(a, b, c);
          std::uint64_t j = jchroma::triple_rank(b, c, d);
          adj[i] |= 1ull << j;
          adj[j] |= 1ull << i;
        }
      }
    }
  }
  return adj;
}

}  // namespace oracles
