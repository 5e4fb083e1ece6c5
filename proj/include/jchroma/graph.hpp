#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <vector>

#include "jchroma/errors.hpp"

namespace jchroma {

using Coord = int;  // 1-based coordinate position in [1..n]
using Sign = int;   // +1 or -1
using VertexIndex = std::uint64_t;

// C(n, k) in exact 64-bit arithmetic; throws EnumerationError on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Smallest p >= 0 with 2^p >= x.  Requires x >= 1.
int ceil_log2(std::uint64_t x);

// A vector in {-1, 0, +1}^n, stored as its sorted support plus the sign at
// each support position.  "1+3-" means +1 at coordinate 1, -1 at coordinate 3.
struct SignedVertex {
  std::vector<Coord> support;  // strictly increasing, 1-based
  std::vector<Sign> signs;     // aligned with support, entries +1 / -1

  int k() const { return static_cast<int>(support.size()); }
  Sign sign_of(Coord c) const;  // 0 when c is outside the support
  std::string to_string() const;

  bool operator==(const SignedVertex&) const = default;
};

struct GraphSpec {
  int n = 0;
  int k = 0;
  int t = 0;

  // Throws InvalidSpecError unless 1 <= k <= n and -k <= t < k.
  void validate() const;

  // 2^k * C(n, k)
  VertexIndex vertex_count() const;

  bool operator==(const GraphSpec&) const = default;
  std::string to_string() const;  // "J(n=5,k=2,t=-1)"
};

// Throws InvalidInputError unless v is a well-formed vertex of spec's graph.
void validate_vertex(const GraphSpec& spec, const SignedVertex& v);

// Sum over shared coordinates of the product of signs.
int scalar_product(const SignedVertex& u, const SignedVertex& v);

// True iff <u, v> == t.  Validates both endpoints.
bool adjacent(const GraphSpec& spec, const SignedVertex& u,
              const SignedVertex& v);

// Canonical order: supports in colexicographic order; within a support, sign
// words ascending where the FIRST (smallest) support coordinate is the most
// significant bit and + encodes as 0.  So for n=k=2 the order is
// 1+2+, 1+2-, 1-2+, 1-2-.
VertexIndex vertex_index(const GraphSpec& spec, const SignedVertex& v);
SignedVertex vertex_at(const GraphSpec& spec, VertexIndex index);
std::vector<SignedVertex> enumerate_vertices(const GraphSpec& spec);

using VertexSet = std::vector<SignedVertex>;

struct Edge {
  SignedVertex u, v;  // vertex_index(u) < vertex_index(v)
};

// Exact number of edges.  Closed forms cover the families with fast
// enumeration paths; everything else falls back to a pairwise count.
std::uint64_t edge_count(const GraphSpec& spec);

// Image of v under the signed permutation (perm, flips): coordinate c moves
// to perm[c-1] and its sign is multiplied by flips[c-1].  Signed permutations
// are automorphisms of every J(n,k,t).  Throws InvalidInputError when perm is
// not a bijection of [1..n] or flips has entries other than +1/-1.
SignedVertex apply_signed_permutation(const SignedVertex& v,
                                      const std::vector<Coord>& perm,
                                      const std::vector<Sign>& flips);

namespace detail {

// Colex rank of a strictly increasing support: sum_j C(support[j]-1, j+1).
std::uint64_t support_rank(const std::vector<Coord>& support);

// Inverse of support_rank for k elements; appends 1-based coordinates.
std::vector<Coord> support_unrank(std::uint64_t rank, int k);

// Visitors may return void ("keep going") or bool (false stops enumeration).
template <class F>
bool keep_going(F&& emit, VertexIndex a, VertexIndex b) {
  VertexIndex i = std::min(a, b);
  VertexIndex j = std::max(a, b);
  if constexpr (std::is_void_v<std::invoke_result_t<F&, VertexIndex,
                                                    VertexIndex>>) {
    emit(i, j);
    return true;
  } else {
    return emit(i, j);
  }
}

// k = 2, t = -1: endpoints share exactly one coordinate, with opposite signs
// there.  Enumerate the shared coordinate x and give u the + sign on x, which
// names each edge exactly once.
template <class F>
void edges_k2_t1(int n, F&& emit) {
  // Rank of support {a < b} is C(b-1,2) + (a-1); the sign word has the first
  // coordinate as bit 1 and the second as bit 0, with 1 meaning negative.
  auto pair_base = [](VertexIndex a, VertexIndex b) {
    return ((b - 1) * (b - 2) / 2 + (a - 1)) << 2;
  };
  for (VertexIndex x = 1; x <= static_cast<VertexIndex>(n); ++x) {
    for (VertexIndex a = 1; a <= static_cast<VertexIndex>(n); ++a) {
      if (a == x) continue;
      for (VertexIndex sa = 0; sa < 2; ++sa) {
        // u = {x:+, a:sa}
        VertexIndex iu = a < x ? pair_base(a, x) | (sa << 1)
                               : pair_base(x, a) | sa;
        for (VertexIndex b = 1; b <= static_cast<VertexIndex>(n); ++b) {
          if (b == x || b == a) continue;
          for (VertexIndex sb = 0; sb < 2; ++sb) {
            // v = {x:-, b:sb}
            VertexIndex iv = b < x ? pair_base(b, x) | (sb << 1) | 1
                                   : pair_base(x, b) | (1 << 1) | sb;
            if (!keep_going(emit, iu, iv)) return;
          }
        }
      }
    }
  }
}

// Rank of support {a < b < c} shifted past the 3 sign bits.
inline VertexIndex triple_base(VertexIndex a, VertexIndex b, VertexIndex c) {
  return ((c - 1) * (c - 2) * (c - 3) / 6 + (b - 1) * (b - 2) / 2 + (a - 1))
         << 3;
}

// Sign-bit position of coordinate c within sorted support {x, y, c}-style
// triples: position 0 (first) maps to bit 2, position 2 to bit 0.
struct TripleSlot {
  VertexIndex base = 0;
  int bit_third = 0;  // bit of the coordinate that is unique to one endpoint
  int bit_x = 0;
  int bit_y = 0;
};

// k = 3, t = -2: endpoints share exactly two coordinates {x < y}, opposed at
// both, and their third coordinates differ.  u takes + on x.
template <class F>
void edges_k3_t2(int n, F&& emit) {
  std::vector<TripleSlot> slot(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      for (int c = 1; c <= n; ++c) {
        if (c == x || c == y) continue;
        TripleSlot s;
        if (c < x) {
          s.base = triple_base(c, x, y);
          s.bit_third = 2, s.bit_x = 1, s.bit_y = 0;
        } else if (c < y) {
          s.base = triple_base(x, c, y);
          s.bit_x = 2, s.bit_third = 1, s.bit_y = 0;
        } else {
          s.base = triple_base(x, y, c);
          s.bit_x = 2, s.bit_y = 1, s.bit_third = 0;
        }
        slot[c] = s;
      }
      for (VertexIndex p = 0; p < 2; ++p) {  // u's sign on y (1 = negative)
        for (int a = 1; a <= n; ++a) {
          if (a == x || a == y) continue;
          const TripleSlot& sa = slot[a];
          for (VertexIndex i = 0; i < 2; ++i) {
            VertexIndex iu =
                sa.base | (p << sa.bit_y) | (i << sa.bit_third);
            for (int b = 1; b <= n; ++b) {
              if (b == x || b == y || b == a) continue;
              const TripleSlot& sb = slot[b];
              VertexIndex iv_common = sb.base |
                                      (VertexIndex{1} << sb.bit_x) |
                                      ((p ^ 1) << sb.bit_y);
              if (!keep_going(emit, iu, iv_common)) return;
              if (!keep_going(emit, iu,
                              iv_common | (VertexIndex{1} << sb.bit_third)))
                return;
            }
          }
        }
      }
    }
  }
}

inline VertexIndex indexed_triple(std::array<Coord, 3> coords,
                                  std::array<VertexIndex, 3> neg) {
  // Sort the three (coordinate, sign) pairs by coordinate.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2 - i; ++j) {
      if (coords[j] > coords[j + 1]) {
        std::swap(coords[j], coords[j + 1]);
        std::swap(neg[j], neg[j + 1]);
      }
    }
  }
  return triple_base(coords[0], coords[1], coords[2]) | (neg[0] << 2) |
         (neg[1] << 1) | neg[2];
}

// k = 3, t = -1.  Two shapes: (a) exactly one shared coordinate, opposed
// there, all other coordinates distinct; (b) identical support with signs
// differing in exactly two of the three positions.
template <class F>
void edges_k3_t1(int n, F&& emit) {
  // Shape (a): shared coordinate x; u takes + on x.
  for (int x = 1; x <= n; ++x) {
    for (int a1 = 1; a1 <= n; ++a1) {
      if (a1 == x) continue;
      for (int a2 = a1 + 1; a2 <= n; ++a2) {
        if (a2 == x) continue;
        for (VertexIndex wa = 0; wa < 4; ++wa) {
          VertexIndex iu = indexed_triple({x, a1, a2},
                                          {0, wa >> 1, wa & 1});
          for (int b1 = 1; b1 <= n; ++b1) {
            if (b1 == x || b1 == a1 || b1 == a2) continue;
            for (int b2 = b1 + 1; b2 <= n; ++b2) {
              if (b2 == x || b2 == a1 || b2 == a2) continue;
              for (VertexIndex wb = 0; wb < 4; ++wb) {
                VertexIndex iv = indexed_triple({x, b1, b2},
                                                {1, wb >> 1, wb & 1});
                if (!keep_going(emit, iu, iv)) return;
              }
            }
          }
        }
      }
    }
  }
  // Shape (b): same support, exactly two sign flips.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        VertexIndex base = triple_base(a, b, c);
        for (VertexIndex w = 0; w < 8; ++w) {
          for (VertexIndex mask : {VertexIndex{3}, VertexIndex{5},
                                   VertexIndex{6}}) {
            VertexIndex w2 = w ^ mask;
            if (w < w2 && !keep_going(emit, base | w, base | w2)) return;
          }
        }
      }
    }
  }
}

// Fallback for families without a dedicated path: all vertex pairs.
template <class F>
void edges_generic(const GraphSpec& spec, F&& emit) {
  std::vector<SignedVertex> vs = enumerate_vertices(spec);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (scalar_product(vs[i], vs[j]) == spec.t) {
        if (!keep_going(emit, i, j)) return;
      }
    }
  }
}

}  // namespace detail

// Streams every edge exactly once as an (i, j) pair of canonical vertex
// indices with i < j.  The visitor may return void, or bool with false
// meaning "stop early".  Emission order is deterministic.
template <class F>
void for_each_edge(const GraphSpec& spec, F&& emit) {
  spec.validate();
  if (spec.k == 2 && spec.t == -1) {
    detail::edges_k2_t1(spec.n, emit);
  } else if (spec.k == 3 && spec.t == -2) {
    detail::edges_k3_t2(spec.n, emit);
  } else if (spec.k == 3 && spec.t == -1) {
    detail::edges_k3_t1(spec.n, emit);
  } else {
    detail::edges_generic(spec, emit);
  }
}

// std::function variant for bindings and type-erased callers.
void for_each_edge_fn(const GraphSpec& spec,
                      const std::function<void(VertexIndex, VertexIndex)>& f);

// Materializes edges as endpoint vertices; throws EnumerationError once more
// than max_edges edges exist.
std::vector<Edge> enumerate_edges(const GraphSpec& spec,
                                  std::uint64_t max_edges = 1u << 26);

// --- dense adjacency for the solvers -------------------------------------

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int size_bits() const { return bits_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool none() const;
  bool intersects(const Bitset& o) const;
  int intersection_count(const Bitset& o) const;
  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset& and_not(const Bitset& o);  // this &= ~o
  int find_first() const;            // -1 when empty
  int find_next(int i) const;        // first set bit strictly after i, or -1

  bool operator==(const Bitset&) const = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct DenseGraph {
  DenseGraph() = default;
  explicit DenseGraph(int n) : adj(n, Bitset(n)) {}

  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int i, int j) {
    adj[i].set(j);
    adj[j].set(i);
  }
  bool has_edge(int i, int j) const { return adj[i].test(j); }
  int degree(int i) const { return adj[i].count(); }

  std::vector<Bitset> adj;
};

// Builds the adjacency bitsets; throws BudgetError when the graph has more
// than max_vertices vertices.
DenseGraph materialize(const GraphSpec& spec,
                       std::uint64_t max_vertices = 20000);

// DIMACS col format: "p edge V E" then one "e i j" line per edge, 1-based.
void write_dimacs(const GraphSpec& spec, std::ostream& out);

}  // namespace jchroma
