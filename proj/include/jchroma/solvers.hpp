#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jchroma/constructions.hpp"
#include "jchroma/graph.hpp"

namespace jchroma {

struct SolveBudget {
  std::uint64_t max_vertices = 20000;  // materialization cap
  double time_limit_seconds = 120.0;   // <= 0 disables the limit
  std::uint64_t seed = 0;
};

// --- engines on materialized graphs ---------------------------------------

struct DenseMisResult {
  int alpha = 0;
  std::vector<int> witness;  // sorted vertex indices, |witness| == alpha
  bool exact = false;        // false when the time limit cut the search
  std::uint64_t nodes = 0;
};

// Branch and bound with a greedy clique-cover upper bound for pruning.
// Always returns a valid independent set; exact marks whether the search
// finished proving optimality.
DenseMisResult dense_max_independent_set(const DenseGraph& g,
                                         double time_limit_seconds);

struct DenseChiResult {
  int lower = 0;  // best known lower bound (a clique size, or a failed k)
  int upper = 0;  // colors used by the best coloring found
  bool exact = false;
  std::vector<int> assignment;  // proper coloring with `upper` colors
  std::uint64_t nodes = 0;
};

// Exact chromatic number via ascending k-colorability searches with dynamic
// saturation ordering; fresh colors are tried through a single canonical
// representative.  warm_start, when given, must be a proper coloring of g
// (ids need not be contiguous) and seeds the initial upper bound.  The
// search never tries more than max_colors colors (63 is the hard ceiling
// imposed by the saturation masks); a run that stops at the cap reports an
// interval with exact == false.
DenseChiResult dense_chromatic(
    const DenseGraph& g, double time_limit_seconds,
    const std::vector<std::uint32_t>* warm_start = nullptr,
    int max_colors = 63);

// Greedily extends a random vertex order into a maximal independent set
// within `allowed`.  Deterministic given the engine state.
std::vector<int> random_maximal_independent_set(const DenseGraph& g,
                                                const Bitset& allowed,
                                                std::mt19937_64& rng);

// --- J(n,k,t)-level solvers ------------------------------------------------

struct MisResult {
  GraphSpec spec;
  int alpha = 0;
  VertexSet witness;
  bool exact = false;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Maximum independent set of the whole graph.  Throws BudgetError when the
// graph exceeds budget.max_vertices.
MisResult max_independent_set(const GraphSpec& spec,
                              const SolveBudget& budget = {});

struct ChiResult {
  GraphSpec spec;
  int lower = 0;
  int upper = 0;
  bool exact = false;
  Coloring witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;

  int chi() const;  // requires exact; throws BudgetError otherwise
};

ChiResult exact_chromatic(const GraphSpec& spec,
                          const SolveBudget& budget = {});

// Covers the graph by images of one independent set under seeded random
// signed permutations (all automorphisms), giving each round's newly covered
// vertices a fresh color; uncovered stragglers get singleton colors so the
// procedure always terminates with a proper coloring.
struct CoverResult {
  Coloring coloring;
  std::uint32_t colors_used = 0;
  std::uint64_t rounds = 0;
  std::uint64_t singleton_fallbacks = 0;
  double lovasz_reference = 0.0;  // (1 + ln |base|) * V / |base|
  double elapsed_seconds = 0.0;
};

CoverResult greedy_transitive_cover(const GraphSpec& spec,
                                    const VertexSet& base,
                                    const SolveBudget& budget = {});

// Audits |I| <= 8*d*(n-2) + C(n-d, 3) for an independent set I in J(n,3,-1),
// where d counts the coordinates carrying both signs somewhere in I.
struct DiverseBoundReport {
  int diverse_coordinates = 0;
  std::uint64_t set_size = 0;
  std::uint64_t bound = 0;
  bool holds = false;
};

DiverseBoundReport diverse_bound_audit(int n, const VertexSet& set);

// Exact minimum number of colors for the contest constraint: triples of
// [1..n] where {a,b,c} and {b,c,d} (a < b < c < d) must differ.  Search is
// capped at max_colors; a cut-off search reports an interval with
// exact == false.
struct ContestOptimum {
  int n = 0;
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;

  int optimum() const;  // requires exact
};

ContestOptimum contest_exhaustive_optimum(int n, int max_colors = 16,
                                          const SolveBudget& budget = {});

}  // namespace jchroma
