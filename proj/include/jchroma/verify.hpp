#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jchroma/constructions.hpp"
#include "jchroma/graph.hpp"

namespace jchroma {

struct EdgeWitness {
  SignedVertex u, v;
  std::string to_string() const;  // "1+2- ~ 1-3+"
};

struct PropernessReport {
  bool proper = false;
  std::optional<EdgeWitness> violation;  // a monochromatic edge, if any
};

// Walks every edge via the streaming enumeration and compares endpoint
// colors; deliberately shares no logic with the constructions.  Throws
// MissingVertexError when some vertex has no color and InvalidInputError
// when the coloring belongs to a different spec.
PropernessReport check_proper(const GraphSpec& spec, const Coloring& coloring);

struct IndependenceReport {
  bool independent = false;
  std::optional<EdgeWitness> violation;
};

// Pairwise scalar products; duplicates and invalid vertices are errors.
IndependenceReport check_independent(const GraphSpec& spec,
                                     const VertexSet& set);

enum class CoordClass { kUnused, kPositive, kNegative, kDiverse };

struct SupportGraphReport {
  bool bipartite = false;
  // Edges joining two diverse coordinates form a matching.
  bool diverse_matching = false;
  std::vector<CoordClass> classes;  // index 1..n; index 0 stays kUnused

  bool ok() const { return bipartite && diverse_matching; }
};

// For an independent set of mixed-sign vertices in J(n,2,-1): builds the
// graph on coordinates whose edges are the members' supports, 2-colors it,
// classifies each coordinate by the signs it carries, and checks the
// diverse-diverse edges form a matching.  Mixed-sign and independence are
// preconditions; violations throw InvalidInputError.
SupportGraphReport support_graph_bipartite_k2(int n, const VertexSet& set);

struct PairGraphReport {
  bool bipartite = false;
  // Every edge between single-labeled pairs joins a left pair to a right one.
  bool split_consistent = false;
  // A pair labeled both ways touches at most one other pair, also
  // double-labeled (its same-support twin).
  bool doubles_isolated = false;

  bool ok() const { return bipartite && split_consistent && doubles_isolated; }
};

// For an independent set of alternating vertices (+-+ or -+-) in J(n,3,-2):
// builds the graph whose nodes are the consecutive support pairs of the
// members, with each member contributing the edge between its two pairs,
// labels a+b-c+ as {a,b} left / {b,c} right (and the -+- pattern the other
// way around), then re-derives the bipartiteness argument.
PairGraphReport pairgraph_bipartite_k3(int n, const VertexSet& set);

struct PairPartition {
  std::vector<int> left;   // the smaller element of every input pair
  std::vector<int> right;  // the rest of [1..n]
  bool valid = false;      // no pair's larger element landed on the left
};

// Pairs {a < b} of [1..n] are adjacent when the larger element of one is
// the smaller element of the other; requires the input to be independent
// under that relation and splits [1..n] so every pair starts on the left
// and ends on the right.
PairPartition partition_from_independent_pairset(
    int n, const std::vector<std::pair<int, int>>& pairs);

struct AuditReport {
  std::string check;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;  // capped at 32 rendered witnesses

  bool passed() const { return failures.empty(); }
};

// Re-runs one proof's mechanics on random maximal independent sets (or, for
// msbdiff-chain, exhaustively).  Recognized checks: "lemma1" (the diverse
// bound on J(n,3,-1)), "bipartite-k2", "bipartite-k3", "msbdiff-chain".
// Sampling is deterministic for a given seed regardless of threads; a
// non-positive thread count selects the hardware default.
AuditReport run_audit(const std::string& check, int n, std::uint64_t samples,
                      std::uint64_t seed, int threads,
                      std::uint64_t max_vertices = 20000);

}  // namespace jchroma
