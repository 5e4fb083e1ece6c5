#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jchroma/graph.hpp"
#include "jchroma/solvers.hpp"

namespace jchroma {

// Exact reduced fraction with positive denominator.
struct Ratio {
  long long num = 0;
  long long den = 1;

  double value() const;
  std::string to_string() const;  // "8" or "40/7"
  bool operator==(const Ratio&) const = default;
};

Ratio make_ratio(long long num, long long den);

// chi >= |V| / alpha for vertex-transitive graphs, kept exact.
Ratio ratio_bound(std::uint64_t vertex_count, std::uint64_t alpha);

// chi <= (1 + ln alpha) * |V| / alpha for vertex-transitive graphs.
double lovasz_bound(std::uint64_t vertex_count, std::uint64_t alpha);

// Closed-form chromatic bounds per family:
//   (2,-1): ceil(log2 n)              <= chi <= 2 * min_m_for(n) + 2
//   (3,-2): ceil(log2 ceil(log2 n))   <= chi <= 4 * ceil(log2 ceil(log2 n)) + 6
//   (3,-1): 1                         <= chi <= ceil(8 * (1 + ln C(n,3)))
// Any other (k, t) throws UnsupportedFamilyError.
struct FamilyBounds {
  int lower = 0;
  std::uint64_t upper = 0;
};

FamilyBounds closed_form_bounds(const GraphSpec& spec);

enum class TableMode { kFormulas, kExact };

struct BoundRow {
  GraphSpec spec;
  std::uint64_t vertex_count = 0;
  std::uint64_t alpha = 0;  // exact, or the all-positive-class size C(n,k)
  bool alpha_exact = false;
  Ratio ratio;         // vertex_count / alpha as tabulated
  double lovasz = 0.0;
  int thm_lower = 0;
  std::uint64_t thm_upper = 0;
  // Colors used by each applicable construction (exact mode only).
  std::map<std::string, std::uint32_t> construction_colors;
  std::string note;  // why a value fell back to an estimate, if it did
};

// One row per n in [n_from..n_to].  Formulas mode tabulates the closed
// forms with the C(n,k) independence estimate; exact mode additionally runs
// the independent-set solver and the applicable constructions under the
// budget, falling back row by row (with a note) when the budget bites.
// threads <= 0 selects the hardware default.
std::vector<BoundRow> bound_table(int k, int t, int n_from, int n_to,
                                  TableMode mode,
                                  const SolveBudget& budget = {},
                                  int threads = 0);

}  // namespace jchroma
