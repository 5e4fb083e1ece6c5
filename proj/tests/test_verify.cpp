#include <algorithm>

#include "doctest.h"
#include "jchroma/json_io.hpp"
#include "jchroma/verify.hpp"
#include "oracles.hpp"

using namespace jchroma;

namespace {

SignedVertex vx(std::vector<Coord> support, std::vector<Sign> signs) {
  return SignedVertex{std::move(support), std::move(signs)};
}

}  // namespace

TEST_CASE("check_proper accepts the constructions and spots corruption") {
  GraphSpec spec{6, 2, -1};
  Coloring good = warmup_coloring_k2(6);
  CHECK(check_proper(spec, good).proper);

  // merge one mixed pair into the nonneg class: 1+2- is adjacent to 2+3-,
  // so forcing both to color 0 plants a monochromatic edge
  Coloring bad = good;
  bad.ids[vertex_index(spec, vx({1, 2}, {1, -1}))] = 0;
  bad.ids[vertex_index(spec, vx({2, 3}, {1, -1}))] = 0;
  PropernessReport report = check_proper(spec, bad);
  CHECK_FALSE(report.proper);
  REQUIRE(report.violation.has_value());
  CHECK(adjacent(spec, report.violation->u, report.violation->v));
  CHECK(bad.color_of(report.violation->u) == bad.color_of(report.violation->v));
  CHECK(report.violation->to_string().find(" ~ ") != std::string::npos);
}

TEST_CASE("check_proper validates spec, size and totality") {
  Coloring c = warmup_coloring_k2(6);
  // coloring built for another spec
  CHECK_THROWS_AS(check_proper(GraphSpec{7, 2, -1}, c), InvalidInputError);
  // missing assignment at the tail
  Coloring truncated = c;
  truncated.ids.pop_back();
  CHECK_THROWS_AS(check_proper(GraphSpec{6, 2, -1}, truncated),
                  MissingVertexError);
  // an explicit hole
  Coloring holed = c;
  holed.ids[3] = kNoColor;
  CHECK_THROWS_AS(check_proper(GraphSpec{6, 2, -1}, holed),
                  MissingVertexError);
}

TEST_CASE("check_independent flags adjacent pairs and rejects junk") {
  GraphSpec spec{5, 2, -1};
  // the all-nonnegative class is independent: products are 0 or +1
  VertexSet nonneg;
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) nonneg.push_back(vx({a, b}, {1, 1}));
  }
  CHECK(check_independent(spec, nonneg).independent);

  VertexSet broken = nonneg;
  broken.push_back(vx({1, 2}, {-1, 1}));  // adjacent to 1+3+ etc.
  IndependenceReport report = check_independent(spec, broken);
  CHECK_FALSE(report.independent);
  REQUIRE(report.violation.has_value());
  CHECK(adjacent(spec, report.violation->u, report.violation->v));

  VertexSet dup = {vx({1, 2}, {1, 1}), vx({1, 2}, {1, 1})};
  CHECK_THROWS_AS(check_independent(spec, dup), InvalidInputError);
  VertexSet malformed = {vx({1, 2}, {1, 0})};
  CHECK_THROWS_AS(check_independent(spec, malformed), InvalidInputError);
}

TEST_CASE("support graph of a mixed independent set is bipartite") {
  SUBCASE("disjoint supports, no diverse coordinate") {
    VertexSet set = {vx({1, 2}, {1, -1}), vx({3, 4}, {1, -1})};
    SupportGraphReport report = support_graph_bipartite_k2(4, set);
    CHECK(report.ok());
    CHECK(report.classes[1] == CoordClass::kPositive);
    CHECK(report.classes[2] == CoordClass::kNegative);
    CHECK(report.classes[3] == CoordClass::kPositive);
    CHECK(report.classes[4] == CoordClass::kNegative);
  }
  SUBCASE("opposite twins make both coordinates diverse") {
    VertexSet set = {vx({1, 2}, {1, -1}), vx({1, 2}, {-1, 1}),
                     vx({3, 4}, {1, -1})};
    SupportGraphReport report = support_graph_bipartite_k2(4, set);
    CHECK(report.ok());
    CHECK(report.classes[1] == CoordClass::kDiverse);
    CHECK(report.classes[2] == CoordClass::kDiverse);
    CHECK(report.classes[3] == CoordClass::kPositive);
  }
  SUBCASE("unused coordinates stay unused") {
    VertexSet set = {vx({1, 3}, {1, -1})};
    SupportGraphReport report = support_graph_bipartite_k2(5, set);
    CHECK(report.ok());
    CHECK(report.classes[2] == CoordClass::kUnused);
    CHECK(report.classes[4] == CoordClass::kUnused);
    CHECK(report.classes[5] == CoordClass::kUnused);
  }
}

TEST_CASE("support graph checker enforces its preconditions") {
  // not mixed-sign
  CHECK_THROWS_AS(support_graph_bipartite_k2(4, {vx({1, 2}, {1, 1})}),
                  InvalidInputError);
  // not independent: shared coordinate 2 with opposite signs gives product -1
  CHECK_THROWS_AS(support_graph_bipartite_k2(
                      4, {vx({1, 2}, {1, -1}), vx({2, 3}, {1, -1})}),
                  InvalidInputError);
  // wrong k
  CHECK_THROWS_AS(support_graph_bipartite_k2(4, {vx({1, 2, 3}, {1, -1, 1})}),
                  InvalidInputError);
}

TEST_CASE("pair graph of an alternating independent set is bipartite") {
  SUBCASE("single member") {
    VertexSet set = {vx({1, 2, 3}, {1, -1, 1})};
    PairGraphReport report = pairgraph_bipartite_k3(4, set);
    CHECK(report.ok());
  }
  SUBCASE("same-support twins are double-labeled and tolerated") {
    VertexSet set = {vx({1, 2, 3}, {1, -1, 1}), vx({1, 2, 3}, {-1, 1, -1})};
    PairGraphReport report = pairgraph_bipartite_k3(4, set);
    CHECK(report.ok());
  }
  SUBCASE("a larger compatible family") {
    // pairwise products: supports overlap in at most one coordinate or the
    // scalar products stay away from -2
    VertexSet set = {vx({1, 2, 3}, {1, -1, 1}), vx({1, 2, 3}, {-1, 1, -1}),
                     vx({4, 5, 6}, {1, -1, 1})};
    PairGraphReport report = pairgraph_bipartite_k3(6, set);
    CHECK(report.ok());
  }
}

TEST_CASE("pair graph checker enforces its preconditions") {
  // not alternating
  CHECK_THROWS_AS(pairgraph_bipartite_k3(4, {vx({1, 2, 3}, {1, 1, -1})}),
                  InvalidInputError);
  // adjacent members: 1+2-3+ and 2+3-4+ share {2,3} with opposite signs
  CHECK_THROWS_AS(pairgraph_bipartite_k3(4, {vx({1, 2, 3}, {1, -1, 1}),
                                             vx({2, 3, 4}, {1, -1, 1})}),
                  InvalidInputError);
  // wrong k
  CHECK_THROWS_AS(pairgraph_bipartite_k3(4, {vx({1, 2}, {1, -1})}),
                  InvalidInputError);
}

TEST_CASE("independent pair sets split the ground set") {
  PairPartition part =
      partition_from_independent_pairset(5, {{1, 2}, {3, 4}});
  CHECK(part.valid);
  CHECK(part.left == std::vector<int>{1, 3});
  CHECK(part.right == std::vector<int>{2, 4, 5});

  // chained pairs are adjacent: max{1,2} == min{2,3}
  CHECK_THROWS_AS(partition_from_independent_pairset(3, {{1, 2}, {2, 3}}),
                  InvalidInputError);
  // malformed pairs
  CHECK_THROWS_AS(partition_from_independent_pairset(3, {{2, 2}}),
                  InvalidInputError);
  CHECK_THROWS_AS(partition_from_independent_pairset(3, {{3, 1}}),
                  InvalidInputError);
  CHECK_THROWS_AS(partition_from_independent_pairset(3, {{1, 4}}),
                  InvalidInputError);
}

TEST_CASE("audits pass on small graphs with zero failures") {
  SUBCASE("lemma1") {
    AuditReport report = run_audit("lemma1", 6, 50, 0, 2);
    CHECK(report.check == "lemma1");
    CHECK(report.n == 6);
    CHECK(report.samples == 50);
    CHECK(report.passed());
  }
  SUBCASE("bipartite-k2") {
    AuditReport report = run_audit("bipartite-k2", 6, 50, 0, 2);
    CHECK(report.passed());
  }
  SUBCASE("bipartite-k3") {
    AuditReport report = run_audit("bipartite-k3", 6, 50, 0, 2);
    CHECK(report.passed());
  }
  SUBCASE("msbdiff-chain counts every triple") {
    AuditReport report = run_audit("msbdiff-chain", 32, 0, 0, 2);
    CHECK(report.samples == binomial(32, 3));
    CHECK(report.passed());
  }
  SUBCASE("unknown checks are rejected") {
    CHECK_THROWS_AS(run_audit("lemma2", 6, 10, 0, 1), InvalidInputError);
  }
}

TEST_CASE("audit sampling is independent of the thread count") {
  AuditReport one = run_audit("bipartite-k2", 8, 64, 123, 1);
  AuditReport four = run_audit("bipartite-k2", 8, 64, 123, 4);
  CHECK(to_json(one) == to_json(four));
  AuditReport other_seed = run_audit("bipartite-k2", 8, 64, 124, 4);
  CHECK(other_seed.seed != four.seed);
}
