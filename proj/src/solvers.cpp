#include "jchroma/solvers.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>

#include "jchroma/rng.hpp"

namespace jchroma {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end{};
  bool enabled = false;

  static Deadline after(double seconds) {
    Deadline d;
    if (seconds > 0) {
      d.enabled = true;
      d.end = Clock::now() +
              std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(seconds));
    }
    return d;
  }
  bool expired() const { return enabled && Clock::now() >= end; }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Partitions the candidate set into cliques greedily; the number of cliques
// bounds the independence number of the induced subgraph.
int clique_cover_bound(const DenseGraph& g, const Bitset& candidates) {
  std::vector<Bitset> common;  // per clique: vertices adjacent to all members
  for (int v = candidates.find_first(); v >= 0; v = candidates.find_next(v)) {
    bool placed = false;
    for (Bitset& c : common) {
      if (c.test(v)) {
        c &= g.adj[v];
        placed = true;
        break;
      }
    }
    if (!placed) common.push_back(g.adj[v]);
  }
  return static_cast<int>(common.size());
}

// Deterministic greedy independent set by ascending index, used to seed the
// branch-and-bound incumbent.
std::vector<int> greedy_independent_set(const DenseGraph& g) {
  Bitset taken(g.size());
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    if (!g.adj[v].intersects(taken)) {
      taken.set(v);
      out.push_back(v);
    }
  }
  return out;
}

struct MisSearch {
  const DenseGraph& g;
  Deadline deadline;
  std::uint64_t nodes = 0;
  bool aborted = false;
  int best = 0;
  std::vector<int> best_set = {};
  std::vector<int> current = {};

  void run(const Bitset& candidates) {
    if (aborted) return;
    if (((++nodes) & 1023) == 0 && deadline.expired()) {
      aborted = true;
      return;
    }
    int first = candidates.find_first();
    if (first < 0) {
      if (static_cast<int>(current.size()) > best) {
        best = static_cast<int>(current.size());
        best_set = current;
      }
      return;
    }
    if (static_cast<int>(current.size()) +
            clique_cover_bound(g, candidates) <=
        best) {
      return;
    }
    // Branch on the candidate with the most candidate neighbors: including
    // it shrinks the residual problem fastest.
    int pivot = first;
    int pivot_deg = -1;
    for (int v = first; v >= 0; v = candidates.find_next(v)) {
      int d = g.adj[v].intersection_count(candidates);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    Bitset included = candidates;
    included.reset(pivot);
    included.and_not(g.adj[pivot]);
    current.push_back(pivot);
    run(included);
    current.pop_back();
    Bitset excluded = candidates;
    excluded.reset(pivot);
    run(excluded);
  }
};

// Backtracking q-colorability with dynamic saturation ordering.  New colors
// enter play one at a time (trying color `used` introduces a fresh color),
// which cuts the color-permutation symmetry.
struct KColorSearch {
  const DenseGraph& g;
  int q;
  Deadline deadline;
  std::uint64_t& nodes;
  bool aborted = false;

  std::vector<int> color;
  std::vector<std::uint64_t> forbidden;  // colors present in the neighborhood
  std::vector<std::array<std::uint8_t, 64>> neighbor_count;
  Bitset uncolored;
  int used = 0;
  int remaining = 0;

  KColorSearch(const DenseGraph& graph, int colors, Deadline dl,
               std::uint64_t& node_counter)
      : g(graph),
        q(colors),
        deadline(dl),
        nodes(node_counter),
        color(static_cast<std::size_t>(graph.size()), -1),
        forbidden(static_cast<std::size_t>(graph.size()), 0),
        neighbor_count(static_cast<std::size_t>(graph.size())),
        uncolored(graph.size()),
        remaining(graph.size()) {
    for (auto& counts : neighbor_count) counts.fill(0);
    for (int v = 0; v < graph.size(); ++v) uncolored.set(v);
  }

  void assign(int v, int c) {
    color[static_cast<std::size_t>(v)] = c;
    uncolored.reset(v);
    --remaining;
    for (int u = g.adj[v].find_first(); u >= 0; u = g.adj[v].find_next(u)) {
      if (neighbor_count[static_cast<std::size_t>(u)]
                        [static_cast<std::size_t>(c)]++ == 0) {
        forbidden[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
      }
    }
  }

  void unassign(int v, int c) {
    color[static_cast<std::size_t>(v)] = -1;
    uncolored.set(v);
    ++remaining;
    for (int u = g.adj[v].find_first(); u >= 0; u = g.adj[v].find_next(u)) {
      if (--neighbor_count[static_cast<std::size_t>(u)]
                          [static_cast<std::size_t>(c)] == 0) {
        forbidden[static_cast<std::size_t>(u)] &=
            ~(std::uint64_t{1} << c);
      }
    }
  }

  int select_vertex() const {
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = uncolored.find_first(); v >= 0;
         v = uncolored.find_next(v)) {
      int sat = std::popcount(forbidden[static_cast<std::size_t>(v)]);
      if (sat < pick_sat) continue;
      int deg = g.adj[v].intersection_count(uncolored);
      if (sat > pick_sat || deg > pick_deg) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    return pick;
  }

  bool solve() {
    if (aborted) return false;
    if (((++nodes) & 2047) == 0 && deadline.expired()) {
      aborted = true;
      return false;
    }
    if (remaining == 0) return true;
    int v = select_vertex();
    int limit = std::min(q, used + 1);
    std::uint64_t available =
        ~forbidden[static_cast<std::size_t>(v)] &
        ((std::uint64_t{1} << limit) - 1);
    while (available) {
      int c = std::countr_zero(available);
      available &= available - 1;
      bool fresh = c == used;
      if (fresh) ++used;
      assign(v, c);
      // Fail fast: an uncolored neighbor with every color forbidden dooms
      // this branch.
      bool dead = false;
      const std::uint64_t full = (q >= 64)
                                     ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << q) - 1;
      for (int u = g.adj[v].find_first(); u >= 0;
           u = g.adj[v].find_next(u)) {
        if (color[static_cast<std::size_t>(u)] < 0 &&
            (forbidden[static_cast<std::size_t>(u)] & full) == full) {
          dead = true;
          break;
        }
      }
      if (!dead && solve()) return true;
      unassign(v, c);
      if (fresh) --used;
      if (aborted) return false;
    }
    return false;
  }
};

// Non-backtracking DSATUR pass; always succeeds, with no bound on colors.
std::vector<int> greedy_dsatur(const DenseGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::vector<std::uint8_t>> seen(
      static_cast<std::size_t>(g.size()));
  Bitset uncolored(g.size());
  for (int v = 0; v < g.size(); ++v) uncolored.set(v);
  std::vector<int> saturation(static_cast<std::size_t>(g.size()), 0);
  for (int step = 0; step < g.size(); ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = uncolored.find_first(); v >= 0;
         v = uncolored.find_next(v)) {
      int sat = saturation[static_cast<std::size_t>(v)];
      if (sat < pick_sat) continue;
      int deg = g.adj[v].intersection_count(uncolored);
      if (sat > pick_sat || deg > pick_deg) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    // Smallest color absent from the neighborhood.
    std::vector<bool> taken;
    for (int u = g.adj[pick].find_first(); u >= 0;
         u = g.adj[pick].find_next(u)) {
      int c = color[static_cast<std::size_t>(u)];
      if (c >= 0) {
        if (c >= static_cast<int>(taken.size())) taken.resize(c + 1, false);
        taken[static_cast<std::size_t>(c)] = true;
      }
    }
    int c = 0;
    while (c < static_cast<int>(taken.size()) &&
           taken[static_cast<std::size_t>(c)]) {
      ++c;
    }
    color[static_cast<std::size_t>(pick)] = c;
    uncolored.reset(pick);
    for (int u = g.adj[pick].find_first(); u >= 0;
         u = g.adj[pick].find_next(u)) {
      auto& s = seen[static_cast<std::size_t>(u)];
      if (c >= static_cast<int>(s.size())) s.resize(c + 1, 0);
      if (!s[static_cast<std::size_t>(c)]) {
        s[static_cast<std::size_t>(c)] = 1;
        ++saturation[static_cast<std::size_t>(u)];
      }
    }
  }
  return color;
}

// Greedy clique from the highest-degree seeds; a lower bound for chi.
int greedy_clique_bound(const DenseGraph& g) {
  if (g.size() == 0) return 0;
  std::vector<int> by_degree(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) by_degree[static_cast<std::size_t>(v)] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int best = 1;
  int seeds = std::min(4, g.size());
  for (int s = 0; s < seeds; ++s) {
    int seed = by_degree[static_cast<std::size_t>(s)];
    Bitset candidates = g.adj[seed];
    int size = 1;
    while (true) {
      int pick = -1, pick_deg = -1;
      for (int v = candidates.find_first(); v >= 0;
           v = candidates.find_next(v)) {
        int d = g.adj[v].intersection_count(candidates);
        if (d > pick_deg) {
          pick_deg = d;
          pick = v;
        }
      }
      if (pick < 0) break;
      ++size;
      candidates &= g.adj[pick];
    }
    best = std::max(best, size);
  }
  return best;
}

int count_colors(const std::vector<int>& assignment) {
  int top = -1;
  for (int c : assignment) top = std::max(top, c);
  return top + 1;
}

}  // namespace

DenseMisResult dense_max_independent_set(const DenseGraph& g,
                                         double time_limit_seconds) {
  MisSearch search{g, Deadline::after(time_limit_seconds)};
  std::vector<int> seed = greedy_independent_set(g);
  search.best = static_cast<int>(seed.size());
  search.best_set = seed;
  Bitset all(g.size());
  for (int v = 0; v < g.size(); ++v) all.set(v);
  search.run(all);
  std::sort(search.best_set.begin(), search.best_set.end());
  return {search.best, search.best_set, !search.aborted, search.nodes};
}

DenseChiResult dense_chromatic(const DenseGraph& g,
                               double time_limit_seconds,
                               const std::vector<std::uint32_t>* warm_start,
                               int max_colors) {
  DenseChiResult result;
  if (g.size() == 0) {
    result.exact = true;
    return result;
  }
  Deadline deadline = Deadline::after(time_limit_seconds);
  std::vector<int> best = greedy_dsatur(g);
  int upper = count_colors(best);
  if (warm_start != nullptr) {
    if (warm_start->size() != static_cast<std::size_t>(g.size())) {
      throw InvalidInputError("warm start size does not match the graph");
    }
    // Compact arbitrary ids to 0..c-1 and adopt the coloring if it beats
    // the greedy pass.
    std::map<std::uint32_t, int> remap;
    std::vector<int> compact(warm_start->size());
    for (std::size_t v = 0; v < warm_start->size(); ++v) {
      auto [it, inserted] = remap.try_emplace(
          (*warm_start)[v], static_cast<int>(remap.size()));
      compact[v] = it->second;
    }
    int warm_colors = static_cast<int>(remap.size());
    if (warm_colors < upper) {
      best = std::move(compact);
      upper = warm_colors;
    }
  }
  int lower = std::max(1, greedy_clique_bound(g));

  int cap = std::min(max_colors, 63);  // saturation masks are 64-bit words
  while (lower < upper) {
    if (lower > cap) break;
    KColorSearch search(g, lower, deadline, result.nodes);
    bool ok = search.solve();
    if (search.aborted) break;
    if (ok) {
      best = search.color;
      upper = lower;
      break;
    }
    ++lower;
  }
  result.lower = lower;
  result.upper = upper;
  result.exact = lower >= upper;
  result.assignment = best;
  return result;
}

std::vector<int> random_maximal_independent_set(const DenseGraph& g,
                                                const Bitset& allowed,
                                                std::mt19937_64& rng) {
  std::vector<int> order;
  for (int v = allowed.find_first(); v >= 0; v = allowed.find_next(v)) {
    order.push_back(v);
  }
  deterministic_shuffle(order, rng);
  Bitset taken(g.size());
  std::vector<int> out;
  for (int v : order) {
    if (!g.adj[v].intersects(taken)) {
      taken.set(v);
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MisResult max_independent_set(const GraphSpec& spec,
                              const SolveBudget& budget) {
  auto start = Clock::now();
  DenseGraph g = materialize(spec, budget.max_vertices);
  DenseMisResult dense =
      dense_max_independent_set(g, budget.time_limit_seconds);
  MisResult result;
  result.spec = spec;
  result.alpha = dense.alpha;
  result.exact = dense.exact;
  result.nodes = dense.nodes;
  for (int v : dense.witness) {
    result.witness.push_back(vertex_at(spec, static_cast<VertexIndex>(v)));
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

int ChiResult::chi() const {
  if (!exact) {
    throw BudgetError("chromatic number only bracketed in [" +
                      std::to_string(lower) + ".." + std::to_string(upper) +
                      "]; the search ran out of budget");
  }
  return upper;
}

ChiResult exact_chromatic(const GraphSpec& spec, const SolveBudget& budget) {
  auto start = Clock::now();
  DenseGraph g = materialize(spec, budget.max_vertices);
  DenseChiResult dense = dense_chromatic(g, budget.time_limit_seconds);
  ChiResult result;
  result.spec = spec;
  result.lower = dense.lower;
  result.upper = dense.upper;
  result.exact = dense.exact;
  result.nodes = dense.nodes;
  result.witness.spec = spec;
  result.witness.construction = "solver";
  result.witness.ids.reserve(dense.assignment.size());
  for (int c : dense.assignment) {
    result.witness.ids.push_back(static_cast<std::uint32_t>(c));
  }
  for (int c = 0; c < dense.upper; ++c) {
    result.witness.palette[static_cast<std::uint32_t>(c)] =
        "color:" + std::to_string(c);
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

namespace {

void require_independent(const GraphSpec& spec, const VertexSet& set,
                         const char* label) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    validate_vertex(spec, set[i]);
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) {
        throw InvalidInputError(std::string(label) +
                                " contains a duplicate vertex " +
                                set[i].to_string());
      }
      if (scalar_product(set[i], set[j]) == spec.t) {
        throw InvalidInputError(std::string(label) + " is not independent: " +
                                set[i].to_string() + " ~ " +
                                set[j].to_string());
      }
    }
  }
}

}  // namespace

CoverResult greedy_transitive_cover(const GraphSpec& spec,
                                    const VertexSet& base,
                                    const SolveBudget& budget) {
  auto start = Clock::now();
  spec.validate();
  if (base.empty()) {
    throw InvalidInputError("greedy_transitive_cover needs a nonempty base");
  }
  require_independent(spec, base, "cover base");
  VertexIndex count = spec.vertex_count();
  if (count > budget.max_vertices) {
    throw BudgetError(spec.to_string() + " has " + std::to_string(count) +
                      " vertices, over the cover cap of " +
                      std::to_string(budget.max_vertices));
  }

  CoverResult result;
  result.coloring.spec = spec;
  result.coloring.construction = "cover";
  result.coloring.ids.assign(count, kNoColor);

  std::uint64_t remaining = count;
  std::uint32_t next_color = 0;

  // Color 0 is the base itself (the identity permutation's image).
  for (const SignedVertex& v : base) {
    std::uint64_t idx = vertex_index(spec, v);
    if (result.coloring.ids[idx] == kNoColor) {
      result.coloring.ids[idx] = next_color;
      --remaining;
    }
  }
  ++next_color;

  std::mt19937_64 rng = engine_for(budget.seed, 0x636f766572);  // "cover"
  Deadline deadline = Deadline::after(budget.time_limit_seconds);
  int n = spec.n;
  std::vector<Coord> perm(static_cast<std::size_t>(n));
  std::vector<Sign> flips(static_cast<std::size_t>(n));
  // Coupon-collector style allowance before giving up on random images.
  std::uint64_t round_cap =
      200 + 20 * ((count / base.size() + 1) *
                  (static_cast<std::uint64_t>(std::log2(double(count) + 1)) +
                   1));

  std::vector<std::pair<Coord, Sign>> moved(
      static_cast<std::size_t>(spec.k));
  while (remaining > 0 && result.rounds < round_cap && !deadline.expired()) {
    ++result.rounds;
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    deterministic_shuffle(perm, rng);
    for (int i = 0; i < n; ++i) {
      flips[static_cast<std::size_t>(i)] = (rng() & 1) ? 1 : -1;
    }
    bool fresh_used = false;
    for (const SignedVertex& v : base) {
      // Inline image computation: perm was just built as a bijection, so the
      // checked public entry point would only re-validate it per vertex.
      for (std::size_t i = 0; i < v.support.size(); ++i) {
        std::size_t at = static_cast<std::size_t>(v.support[i] - 1);
        moved[i] = {perm[at], v.signs[i] * flips[at]};
      }
      std::sort(moved.begin(), moved.end());
      SignedVertex image;
      for (auto [c, s] : moved) {
        image.support.push_back(c);
        image.signs.push_back(s);
      }
      std::uint64_t idx = vertex_index(spec, image);
      if (result.coloring.ids[idx] == kNoColor) {
        result.coloring.ids[idx] = next_color;
        --remaining;
        fresh_used = true;
      }
    }
    if (fresh_used) ++next_color;
  }

  // Everything still uncovered becomes its own color; keeps the output a
  // proper total coloring no matter how unlucky the sampling was.
  if (remaining > 0) {
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (result.coloring.ids[idx] == kNoColor) {
        result.coloring.ids[idx] = next_color++;
        ++result.singleton_fallbacks;
      }
    }
  }

  result.colors_used = next_color;
  for (std::uint32_t c = 0; c < next_color; ++c) {
    result.coloring.palette[c] = "image:" + std::to_string(c);
  }
  result.lovasz_reference =
      (1.0 + std::log(static_cast<double>(base.size()))) *
      static_cast<double>(count) / static_cast<double>(base.size());
  result.elapsed_seconds = seconds_since(start);
  return result;
}

DiverseBoundReport diverse_bound_audit(int n, const VertexSet& set) {
  GraphSpec spec{n, 3, -1};
  spec.validate();
  require_independent(spec, set, "audited set");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const SignedVertex& v : set) {
    for (std::size_t i = 0; i < v.support.size(); ++i) {
      seen[static_cast<std::size_t>(v.support[i])] |=
          v.signs[i] > 0 ? 1 : 2;
    }
  }
  DiverseBoundReport report;
  for (int c = 1; c <= n; ++c) {
    if (seen[static_cast<std::size_t>(c)] == 3) ++report.diverse_coordinates;
  }
  report.set_size = set.size();
  std::uint64_t d = static_cast<std::uint64_t>(report.diverse_coordinates);
  report.bound = 8 * d * (static_cast<std::uint64_t>(n) - 2) +
                 binomial(static_cast<std::uint64_t>(n) - d, 3);
  report.holds = report.set_size <= report.bound;
  return report;
}

int ContestOptimum::optimum() const {
  if (!exact) {
    throw BudgetError("contest optimum only bracketed in [" +
                      std::to_string(lower) + ".." + std::to_string(upper) +
                      "]; the search ran out of budget");
  }
  return upper;
}

ContestOptimum contest_exhaustive_optimum(int n, int max_colors,
                                          const SolveBudget& budget) {
  auto start = Clock::now();
  if (n < 4) {
    throw InvalidSpecError("the contest constraint needs n >= 4, got n = " +
                           std::to_string(n));
  }
  if (max_colors < 1) {
    throw InvalidInputError("max_colors must be >= 1");
  }
  std::uint64_t triples = binomial(static_cast<std::uint64_t>(n), 3);
  if (triples > budget.max_vertices) {
    throw BudgetError("n = " + std::to_string(n) + " yields " +
                      std::to_string(triples) +
                      " triples, over the cap of " +
                      std::to_string(budget.max_vertices));
  }
  DenseGraph g(static_cast<int>(triples));
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          g.add_edge(static_cast<int>(triple_rank(a, b, c)),
                     static_cast<int>(triple_rank(b, c, d)));
        }
      }
    }
  }
  TripleColoring warm = contest_triple_coloring(n);
  DenseChiResult dense =
      dense_chromatic(g, budget.time_limit_seconds, &warm.ids, max_colors);

  ContestOptimum result;
  result.n = n;
  result.lower = dense.lower;
  result.upper = dense.upper;
  result.exact = dense.exact;
  result.nodes = dense.nodes;
  result.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace jchroma
