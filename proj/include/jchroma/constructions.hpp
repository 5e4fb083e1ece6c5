#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "jchroma/graph.hpp"

namespace jchroma {

inline constexpr std::uint32_t kNoColor =
    std::numeric_limits<std::uint32_t>::max();

// A total color assignment on the vertices of one J(n,k,t), indexed by
// canonical vertex index.  Color ids are arbitrary non-negative integers;
// the palette maps each used id to a human-readable label.
struct Coloring {
  GraphSpec spec;
  std::string construction;  // "warmup2", "subset2", "altsign3", ...
  std::vector<std::uint32_t> ids;
  std::map<std::uint32_t, std::string> palette;

  std::uint32_t at(VertexIndex index) const;
  std::uint32_t color_of(const SignedVertex& v) const;
  std::size_t num_colors() const;  // distinct ids actually assigned
};

// 1-based position of the most significant bit where a and b differ,
// i.e. bit_width(a XOR b).  Throws UndefinedInputError when a == b.
int msb_diff(std::uint64_t a, std::uint64_t b);

// Proper coloring of J(n,2,-1) with exactly 2*ceil(log2 n) + 2 colors:
// id 0 for all-nonnegative pairs, id 1 for all-nonpositive ones, and for
// mixed pairs ids 2m / 2m+1 where m is the most significant bit at which
// the two zero-based coordinates differ and the parity records whether the
// larger coordinate carries the + sign.
Coloring warmup_coloring_k2(int n);

// Smallest m with C(2m+1, m) >= n.
int min_m_for(std::uint64_t n);

// An injective assignment of an m-subset of [1..2m+1] to each coordinate.
struct SubsetAssignment {
  int m = 0;
  std::vector<std::vector<int>> subsets;  // subsets[a-1], sorted ascending

  void validate(int n) const;  // throws InvalidAssignmentError
};

// Coordinate a receives the a-th m-subset of [1..2m+1] in colexicographic
// order, with m = min_m_for(n).
SubsetAssignment default_subset_assignment(int n);

// Proper coloring of J(n,2,-1) with at most 2m+2 colors.  A vertex joins
// class i in [1..2m+1] when, at each support coordinate c, the sign is +
// exactly when i lies in the subset assigned to c; ties break to the
// smallest qualifying i.  All-positive pairs whose subsets are disjoint
// fall into the leftover class 2m+2.
Coloring subset_coloring_k2(int n, const SubsetAssignment& assignment);
Coloring subset_coloring_k2(int n);  // uses the default assignment

// Sign and magnitude of the alternating-triple color: for a < b < c take
// the most significant bits where the zero-based consecutive entries
// differ, m1 = msb_diff(a-1, b-1) and m2 = msb_diff(b-1, c-1); the color is
// sign(m1 - m2) together with msb_diff(m1 - 1, m2 - 1).
struct AltColor {
  int sign = 0;       // +1 or -1
  int magnitude = 0;  // >= 1
};
AltColor alternating_color(int a, int b, int c);

// Proper coloring of J(n,3,-2) with at most 4*ceil(log2 ceil(log2 n)) + 6
// colors: six constant classes for the non-alternating sign patterns, and
// alternating_color on the support for the +-+ and -+- patterns, mapped
// into two disjoint id ranges.
Coloring altsign_coloring_k3(int n);

// A total color assignment on the 3-element subsets of [1..n], indexed by
// colexicographic triple rank.
struct TripleColoring {
  int n = 0;
  std::string construction;  // "contest"
  std::vector<std::uint32_t> ids;
  std::map<std::uint32_t, std::string> palette;

  std::uint32_t color_of(int a, int b, int c) const;
  std::size_t num_colors() const;
};

// Colex rank of the triple {a < b < c} and its inverse.
std::uint64_t triple_rank(int a, int b, int c);
std::array<int, 3> triple_at(std::uint64_t rank);

// Colors the triples of [1..n] with alternating_color so that no two
// triples {a,b,c}, {b,c,d} with a < b < c < d share a color; uses at most
// 2*ceil(log2 ceil(log2 n)) ids.
TripleColoring contest_triple_coloring(int n);

}  // namespace jchroma
