#include "jchroma/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "jchroma/parallel.hpp"
#include "jchroma/rng.hpp"
#include "jchroma/solvers.hpp"

namespace jchroma {

std::string EdgeWitness::to_string() const {
  return u.to_string() + " ~ " + v.to_string();
}

PropernessReport check_proper(const GraphSpec& spec,
                              const Coloring& coloring) {
  spec.validate();
  if (coloring.spec != spec) {
    throw InvalidInputError("coloring belongs to " +
                            coloring.spec.to_string() + ", not " +
                            spec.to_string());
  }
  VertexIndex count = spec.vertex_count();
  if (coloring.ids.size() != count) {
    throw MissingVertexError("coloring covers " +
                             std::to_string(coloring.ids.size()) + " of " +
                             std::to_string(count) + " vertices");
  }
  for (VertexIndex i = 0; i < count; ++i) {
    if (coloring.ids[i] == kNoColor) {
      throw MissingVertexError("vertex " + vertex_at(spec, i).to_string() +
                               " has no color");
    }
  }
  PropernessReport report;
  report.proper = true;
  for_each_edge(spec, [&](VertexIndex i, VertexIndex j) {
    if (coloring.ids[i] == coloring.ids[j]) {
      report.proper = false;
      report.violation = EdgeWitness{vertex_at(spec, i), vertex_at(spec, j)};
      return false;
    }
    return true;
  });
  return report;
}

IndependenceReport check_independent(const GraphSpec& spec,
                                     const VertexSet& set) {
  spec.validate();
  for (const SignedVertex& v : set) validate_vertex(spec, v);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) {
        throw InvalidInputError("duplicate vertex " + set[i].to_string() +
                                " in the set");
      }
    }
  }
  IndependenceReport report;
  report.independent = true;
  for (std::size_t i = 0; i < set.size() && report.independent; ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (scalar_product(set[i], set[j]) == spec.t) {
        report.independent = false;
        report.violation = EdgeWitness{set[i], set[j]};
        break;
      }
    }
  }
  return report;
}

namespace {

// 2-colorability of a simple graph given as an adjacency list.
bool is_bipartite(const std::vector<std::vector<int>>& adjacency) {
  std::vector<int> side(adjacency.size(), -1);
  std::queue<int> frontier;
  for (std::size_t s = 0; s < adjacency.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    frontier.push(static_cast<int>(s));
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int u : adjacency[static_cast<std::size_t>(v)]) {
        if (side[static_cast<std::size_t>(u)] == -1) {
          side[static_cast<std::size_t>(u)] =
              1 - side[static_cast<std::size_t>(v)];
          frontier.push(u);
        } else if (side[static_cast<std::size_t>(u)] ==
                   side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

void dedupe(std::vector<int>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

SupportGraphReport support_graph_bipartite_k2(int n, const VertexSet& set) {
  GraphSpec spec{n, 2, -1};
  spec.validate();
  for (const SignedVertex& v : set) {
    validate_vertex(spec, v);
    if (v.signs[0] * v.signs[1] != -1) {
      throw InvalidInputError("vertex " + v.to_string() +
                              " is not mixed-sign");
    }
  }
  IndependenceReport ind = check_independent(spec, set);
  if (!ind.independent) {
    throw InvalidInputError("input set is not independent: " +
                            ind.violation->to_string());
  }

  SupportGraphReport report;
  report.classes.assign(static_cast<std::size_t>(n) + 1, CoordClass::kUnused);
  std::vector<std::uint8_t> carried(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n) + 1);
  for (const SignedVertex& v : set) {
    int a = v.support[0], b = v.support[1];
    carried[static_cast<std::size_t>(a)] |= v.signs[0] > 0 ? 1 : 2;
    carried[static_cast<std::size_t>(b)] |= v.signs[1] > 0 ? 1 : 2;
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (std::vector<int>& nbrs : adjacency) dedupe(nbrs);
  for (int c = 1; c <= n; ++c) {
    static constexpr CoordClass kByMask[4] = {
        CoordClass::kUnused, CoordClass::kPositive, CoordClass::kNegative,
        CoordClass::kDiverse};
    report.classes[static_cast<std::size_t>(c)] =
        kByMask[carried[static_cast<std::size_t>(c)]];
  }
  report.bipartite = is_bipartite(adjacency);
  report.diverse_matching = true;
  for (int c = 1; c <= n; ++c) {
    if (report.classes[static_cast<std::size_t>(c)] != CoordClass::kDiverse) {
      continue;
    }
    int diverse_neighbors = 0;
    for (int u : adjacency[static_cast<std::size_t>(c)]) {
      if (report.classes[static_cast<std::size_t>(u)] ==
          CoordClass::kDiverse) {
        ++diverse_neighbors;
      }
    }
    if (diverse_neighbors > 1) {
      report.diverse_matching = false;
      break;
    }
  }
  return report;
}

PairGraphReport pairgraph_bipartite_k3(int n, const VertexSet& set) {
  GraphSpec spec{n, 3, -2};
  spec.validate();
  for (const SignedVertex& v : set) {
    validate_vertex(spec, v);
    bool alternating = v.signs[0] == -v.signs[1] && v.signs[1] == -v.signs[2];
    if (!alternating) {
      throw InvalidInputError("vertex " + v.to_string() +
                              " is not alternating");
    }
  }
  IndependenceReport ind = check_independent(spec, set);
  if (!ind.independent) {
    throw InvalidInputError("input set is not independent: " +
                            ind.violation->to_string());
  }

  // Node universe: the consecutive support pairs of the members.
  std::map<std::pair<int, int>, int> node_of;
  auto node = [&](int a, int b) {
    auto [it, inserted] =
        node_of.try_emplace({a, b}, static_cast<int>(node_of.size()));
    return it->second;
  };
  struct Labels {
    bool left = false;
    bool right = false;
  };
  std::vector<Labels> labels;
  std::vector<std::pair<int, int>> edges;
  for (const SignedVertex& v : set) {
    int first = node(v.support[0], v.support[1]);
    int second = node(v.support[1], v.support[2]);
    std::size_t needed = node_of.size();
    if (labels.size() < needed) labels.resize(needed);
    // a+b-c+ reads left-to-right; a-b+c- the other way around.
    if (v.signs[0] > 0) {
      labels[static_cast<std::size_t>(first)].left = true;
      labels[static_cast<std::size_t>(second)].right = true;
    } else {
      labels[static_cast<std::size_t>(first)].right = true;
      labels[static_cast<std::size_t>(second)].left = true;
    }
    edges.emplace_back(first, second);
  }

  std::vector<std::vector<int>> adjacency(node_of.size());
  for (auto [a, b] : edges) {
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (std::vector<int>& nbrs : adjacency) dedupe(nbrs);

  PairGraphReport report;
  report.bipartite = is_bipartite(adjacency);
  report.split_consistent = true;
  report.doubles_isolated = true;
  for (auto [a, b] : edges) {
    const Labels& la = labels[static_cast<std::size_t>(a)];
    const Labels& lb = labels[static_cast<std::size_t>(b)];
    bool a_single = la.left != la.right;
    bool b_single = lb.left != lb.right;
    if (a_single && b_single && la.left == lb.left) {
      report.split_consistent = false;
    }
  }
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (!(labels[p].left && labels[p].right)) continue;
    const std::vector<int>& nbrs = adjacency[p];
    if (nbrs.size() > 1) {
      report.doubles_isolated = false;
      continue;
    }
    for (int u : nbrs) {
      const Labels& lu = labels[static_cast<std::size_t>(u)];
      if (!(lu.left && lu.right)) report.doubles_isolated = false;
    }
  }
  return report;
}

PairPartition partition_from_independent_pairset(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 2) throw InvalidInputError("pair partition needs n >= 2");
  for (auto [a, b] : pairs) {
    if (a < 1 || a >= b || b > n) {
      throw InvalidInputError("pair {" + std::to_string(a) + "," +
                              std::to_string(b) +
                              "} is not an increasing pair in [1.." +
                              std::to_string(n) + "]");
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i] == pairs[j]) {
        throw InvalidInputError("duplicate pair in the input");
      }
      if (pairs[i].second == pairs[j].first ||
          pairs[j].second == pairs[i].first) {
        throw InvalidInputError(
            "pairs {" + std::to_string(pairs[i].first) + "," +
            std::to_string(pairs[i].second) + "} and {" +
            std::to_string(pairs[j].first) + "," +
            std::to_string(pairs[j].second) +
            "} are adjacent: one ends where the other starts");
      }
    }
  }
  PairPartition partition;
  std::vector<bool> on_left(static_cast<std::size_t>(n) + 1, false);
  for (auto [a, b] : pairs) on_left[static_cast<std::size_t>(a)] = true;
  for (int c = 1; c <= n; ++c) {
    if (on_left[static_cast<std::size_t>(c)]) {
      partition.left.push_back(c);
    } else {
      partition.right.push_back(c);
    }
  }
  partition.valid = true;
  for (auto [a, b] : pairs) {
    (void)a;
    if (on_left[static_cast<std::size_t>(b)]) partition.valid = false;
  }
  return partition;
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 32;

std::string render_set(const VertexSet& set, std::size_t cap = 8) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < set.size() && i < cap; ++i) {
    if (i > 0) out << ", ";
    out << set[i].to_string();
  }
  if (set.size() > cap) out << ", ... (" << set.size() << " total)";
  out << "}";
  return out.str();
}

VertexSet to_vertex_set(const GraphSpec& spec, const std::vector<int>& ids) {
  VertexSet set;
  set.reserve(ids.size());
  for (int v : ids) {
    set.push_back(vertex_at(spec, static_cast<VertexIndex>(v)));
  }
  return set;
}

// Shared sampling loop: draws `samples` random maximal independent sets
// inside `allowed` (per-sample engines derived from the root seed, so the
// outcome ignores thread scheduling) and applies `judge` to each.
AuditReport sampled_audit(
    const std::string& check, const GraphSpec& spec, const Bitset& allowed,
    std::uint64_t samples, std::uint64_t seed, int threads,
    std::uint64_t max_vertices,
    const std::function<std::string(const VertexSet&)>& judge) {
  AuditReport report;
  report.check = check;
  report.n = spec.n;
  report.samples = samples;
  report.seed = seed;
  DenseGraph g = materialize(spec, max_vertices);
  std::vector<std::string> verdicts(samples);
  parallel_chunks(samples, threads,
                  [&](std::uint64_t begin, std::uint64_t end, int) {
                    for (std::uint64_t s = begin; s < end; ++s) {
                      std::mt19937_64 rng = engine_for(seed, s);
                      std::vector<int> picked =
                          random_maximal_independent_set(g, allowed, rng);
                      VertexSet set = to_vertex_set(spec, picked);
                      std::string verdict = judge(set);
                      if (!verdict.empty()) {
                        verdicts[s] = "sample " + std::to_string(s) + ": " +
                                      verdict;
                      }
                    }
                  });
  for (std::string& verdict : verdicts) {
    if (!verdict.empty() &&
        report.failures.size() < kMaxRecordedFailures) {
      report.failures.push_back(std::move(verdict));
    }
  }
  return report;
}

Bitset mask_of_words(const GraphSpec& spec,
                     const std::vector<std::uint64_t>& words) {
  VertexIndex count = spec.vertex_count();
  Bitset allowed(static_cast<int>(count));
  VertexIndex block = VertexIndex{1} << spec.k;
  for (VertexIndex base = 0; base < count; base += block) {
    for (std::uint64_t w : words) {
      allowed.set(static_cast<int>(base + w));
    }
  }
  return allowed;
}

Bitset full_mask(const GraphSpec& spec) {
  VertexIndex count = spec.vertex_count();
  Bitset allowed(static_cast<int>(count));
  for (VertexIndex i = 0; i < count; ++i) allowed.set(static_cast<int>(i));
  return allowed;
}

}  // namespace

AuditReport run_audit(const std::string& check, int n, std::uint64_t samples,
                      std::uint64_t seed, int threads,
                      std::uint64_t max_vertices) {
  if (threads <= 0) threads = default_thread_count();
  if (check == "msbdiff-chain") {
    AuditReport report;
    report.check = check;
    report.n = n;
    report.seed = seed;
    if (n < 3) throw InvalidInputError("msbdiff-chain needs n >= 3");
    // Exhaustive, not sampled: every x < y < z in [1..n].
    for (std::uint64_t x = 1; x <= static_cast<std::uint64_t>(n); ++x) {
      for (std::uint64_t y = x + 1; y <= static_cast<std::uint64_t>(n); ++y) {
        int mxy = msb_diff(x, y);
        for (std::uint64_t z = y + 1; z <= static_cast<std::uint64_t>(n);
             ++z) {
          ++report.samples;
          if (mxy == msb_diff(y, z) &&
              report.failures.size() < kMaxRecordedFailures) {
            report.failures.push_back(
                "msb_diff coincide on the chain " + std::to_string(x) + " < " +
                std::to_string(y) + " < " + std::to_string(z));
          }
        }
      }
    }
    return report;
  }
  if (check == "lemma1") {
    GraphSpec spec{n, 3, -1};
    spec.validate();
    return sampled_audit(
        check, spec, full_mask(spec), samples, seed, threads, max_vertices,
        [n](const VertexSet& set) -> std::string {
          DiverseBoundReport r = diverse_bound_audit(n, set);
          if (r.holds) return {};
          return "independent set of size " + std::to_string(r.set_size) +
                 " with " + std::to_string(r.diverse_coordinates) +
                 " diverse coordinates beats the bound " +
                 std::to_string(r.bound) + ": " + render_set(set);
        });
  }
  if (check == "bipartite-k2") {
    GraphSpec spec{n, 2, -1};
    spec.validate();
    // Mixed-sign vertices have sign words 01 and 10.
    return sampled_audit(
        check, spec, mask_of_words(spec, {1, 2}), samples, seed, threads,
        max_vertices, [n](const VertexSet& set) -> std::string {
          SupportGraphReport r = support_graph_bipartite_k2(n, set);
          if (r.ok()) return {};
          std::string what = !r.bipartite ? "support graph is not bipartite"
                                          : "diverse pairs are not a matching";
          return what + " for " + render_set(set);
        });
  }
  if (check == "bipartite-k3") {
    GraphSpec spec{n, 3, -2};
    spec.validate();
    // Alternating vertices have sign words 010 and 101.
    return sampled_audit(
        check, spec, mask_of_words(spec, {2, 5}), samples, seed, threads,
        max_vertices, [n](const VertexSet& set) -> std::string {
          PairGraphReport r = pairgraph_bipartite_k3(n, set);
          if (r.ok()) return {};
          std::string what = !r.bipartite ? "pair graph is not bipartite"
                             : !r.split_consistent
                                 ? "left/right labels straddle an edge"
                                 : "a double-labeled pair is not isolated";
          return what + " for " + render_set(set);
        });
  }
  throw InvalidInputError(
      "unknown audit '" + check +
      "'; expected lemma1, bipartite-k2, bipartite-k3 or msbdiff-chain");
}

}  // namespace jchroma
