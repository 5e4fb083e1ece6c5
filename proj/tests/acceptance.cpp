// Acceptance harness: one line per criterion, [PASS]/[FAIL] verdicts, exit
// code = number of failed criteria.  Each check recomputes what it verifies
// from first principles (streamed edges, exhaustive scans, independent
// oracles) rather than trusting the code under test.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "jchroma/bounds.hpp"
#include "jchroma/constructions.hpp"
#include "jchroma/graph.hpp"
#include "jchroma/solvers.hpp"
#include "jchroma/verify.hpp"
#include "oracles.hpp"

using namespace jchroma;

namespace {

// All real-valued comparisons in this harness share one pinned tolerance;
// integer comparisons are exact.
constexpr double kRealSlack = 1e-9;

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- criterion 1: warm-up coloring sweep ---------------------------------

Verdict warmup_sweep() {
  Verdict v;
  for (int n = 2; n <= 200; ++n) {
    Coloring c = warmup_coloring_k2(n);
    GraphSpec spec{n, 2, -1};
    PropernessReport report = check_proper(spec, c);
    if (!report.proper) {
      v.fail("monochromatic edge at n=" + std::to_string(n) + ": " +
             report.violation->to_string());
      break;
    }
    std::size_t cap = 2 * static_cast<std::size_t>(ceil_log2(n)) + 2;
    if (c.num_colors() > cap) {
      v.fail("n=" + std::to_string(n) + " used " +
             std::to_string(c.num_colors()) + " colors, cap " +
             std::to_string(cap));
      break;
    }
  }
  if (v.passed) v.detail = "proper for all n in [2..200], colors within cap";
  return v;
}

// ---- criterion 2: subset coloring sweep -----------------------------------

Verdict subset_sweep() {
  Verdict v;
  for (int n = 2; n <= 200; ++n) {
    Coloring c = subset_coloring_k2(n);
    for (std::uint32_t id : c.ids) {
      if (id == kNoColor) {
        v.fail("uncolored vertex at n=" + std::to_string(n));
        break;
      }
    }
    if (!v.passed) break;
    GraphSpec spec{n, 2, -1};
    PropernessReport report = check_proper(spec, c);
    if (!report.proper) {
      v.fail("monochromatic edge at n=" + std::to_string(n) + ": " +
             report.violation->to_string());
      break;
    }
    std::size_t cap = 2 * static_cast<std::size_t>(min_m_for(n)) + 2;
    if (c.num_colors() > cap) {
      v.fail("n=" + std::to_string(n) + " used " +
             std::to_string(c.num_colors()) + " colors, cap " +
             std::to_string(cap));
      break;
    }
  }
  if (min_m_for(10) != 2) v.fail("min_m_for(10) != 2");
  if (subset_coloring_k2(10).num_colors() > 6) {
    v.fail("n=10 exceeded 6 colors");
  }
  if (v.passed) {
    v.detail = "total and proper for all n in [2..200]; n=10 within 6 colors";
  }
  return v;
}

// ---- criterion 3: exact chi against the logarithmic lower bound -----------

struct SolvedSpec {
  GraphSpec spec;
  std::uint64_t vertices = 0;
  int alpha = 0;
  int chi = 0;
};

Verdict chi_lower_bound(std::vector<SolvedSpec>& solved) {
  Verdict v;
  for (int n = 2; n <= 6; ++n) {
    GraphSpec spec{n, 2, -1};
    ChiResult chi = exact_chromatic(spec);
    if (!chi.exact) {
      v.fail(spec.to_string() + " did not finish");
      continue;
    }
    if (chi.chi() < ceil_log2(n)) {
      v.fail(spec.to_string() + ": chi=" + std::to_string(chi.chi()) +
             " below ceil(log2 n)=" + std::to_string(ceil_log2(n)));
    }
    if (!check_proper(spec, chi.witness).proper) {
      v.fail(spec.to_string() + ": witness not proper");
    }
    if (spec.vertex_count() <= 14 &&
        chi.chi() != oracles::chi_by_backtracking(spec)) {
      v.fail(spec.to_string() + ": solver disagrees with the oracle");
    }
    MisResult mis = max_independent_set(spec);
    if (!mis.exact) {
      v.fail(spec.to_string() + ": alpha did not finish");
      continue;
    }
    solved.push_back(
        {spec, spec.vertex_count(), mis.alpha, chi.chi()});
  }
  if (v.passed) {
    v.detail =
        "chi >= ceil(log2 n) for n in [2..6]; oracle agrees at <= 14 vertices";
  }
  return v;
}

// ---- criterion 4: alternating-sign coloring sweep --------------------------

Verdict altsign_sweep() {
  Verdict v;
  if (4 * ceil_log2(ceil_log2(16)) + 6 != 14) v.fail("cap formula at n=16");
  if (4 * ceil_log2(ceil_log2(64)) + 6 != 18) v.fail("cap formula at n=64");
  for (int n = 3; n <= 64; ++n) {
    Coloring c = altsign_coloring_k3(n);
    GraphSpec spec{n, 3, -2};
    PropernessReport report = check_proper(spec, c);
    if (!report.proper) {
      v.fail("monochromatic edge at n=" + std::to_string(n) + ": " +
             report.violation->to_string());
      break;
    }
    std::size_t cap =
        4 * static_cast<std::size_t>(ceil_log2(ceil_log2(n))) + 6;
    if (c.num_colors() > cap) {
      v.fail("n=" + std::to_string(n) + " used " +
             std::to_string(c.num_colors()) + " colors, cap " +
             std::to_string(cap));
      break;
    }
  }
  if (v.passed) {
    v.detail = "proper for all n in [3..64]; caps 14 at n=16, 18 at n=64";
  }
  return v;
}

// ---- criterion 5: contest coloring and its exact optimum ------------------

Verdict contest_checks() {
  Verdict v;
  for (int n = 4; n <= 64; ++n) {
    TripleColoring c = contest_triple_coloring(n);
    if (!oracles::contest_proper_by_quadruples(c)) {
      v.fail("constraint violated at n=" + std::to_string(n));
      break;
    }
  }
  ContestOptimum four = contest_exhaustive_optimum(4);
  if (!four.exact || four.optimum() != 2) {
    v.fail("optimum at n=4 is not 2");
  }
  for (int n = 4; n <= 8; ++n) {
    ContestOptimum opt = contest_exhaustive_optimum(n);
    if (!opt.exact) {
      v.fail("optimum at n=" + std::to_string(n) + " did not finish");
      continue;
    }
    std::size_t constructed = contest_triple_coloring(n).num_colors();
    if (static_cast<std::size_t>(opt.optimum()) > constructed) {
      v.fail("optimum " + std::to_string(opt.optimum()) + " exceeds the " +
             std::to_string(constructed) + "-color construction at n=" +
             std::to_string(n));
    }
  }
  if (v.passed) {
    v.detail =
        "proper for all n in [4..64]; optimum(4)=2; optimum <= construction "
        "for n in [4..8]";
  }
  return v;
}

// ---- criterion 6: sandwich and ratio-estimate identities -------------------

Verdict sandwich(const std::vector<SolvedSpec>& from_chi) {
  Verdict v;
  std::vector<SolvedSpec> solved = from_chi;
  for (GraphSpec spec : {GraphSpec{4, 3, -2}, GraphSpec{5, 3, -2},
                         GraphSpec{3, 3, -1}, GraphSpec{4, 3, -1},
                         GraphSpec{3, 3, -3}}) {
    MisResult mis = max_independent_set(spec);
    ChiResult chi = exact_chromatic(spec);
    if (!mis.exact || !chi.exact) {
      v.fail(spec.to_string() + " did not finish");
      continue;
    }
    solved.push_back({spec, spec.vertex_count(), mis.alpha, chi.chi()});
  }
  if (solved.empty()) v.fail("no exactly solved spec to check");
  for (const SolvedSpec& s : solved) {
    std::uint64_t alpha = static_cast<std::uint64_t>(s.alpha);
    // integer form of ceil(V / alpha)
    std::uint64_t floor_bound = (s.vertices + alpha - 1) / alpha;
    if (static_cast<std::uint64_t>(s.chi) < floor_bound) {
      v.fail(s.spec.to_string() + ": chi below ceil(V/alpha)");
    }
    double upper = lovasz_bound(s.vertices, alpha);
    if (static_cast<double>(s.chi) > upper + kRealSlack) {
      v.fail(s.spec.to_string() + ": chi above the cover bound");
    }
  }
  // the all-nonnegative class estimate collapses the ratio bound to 2^k
  for (int n = 2; n <= 40; ++n) {
    if (!(ratio_bound(GraphSpec{n, 2, -1}.vertex_count(), binomial(n, 2)) ==
          Ratio{4, 1})) {
      v.fail("ratio estimate at J(" + std::to_string(n) + ",2,-1) is not 4");
    }
  }
  for (int n = 3; n <= 40; ++n) {
    for (int t : {-1, -2}) {
      if (!(ratio_bound(GraphSpec{n, 3, t}.vertex_count(), binomial(n, 3)) ==
            Ratio{8, 1})) {
        v.fail("ratio estimate at J(" + std::to_string(n) + ",3," +
               std::to_string(t) + ") is not 8");
      }
    }
  }
  if (v.passed) {
    v.detail = "ceil(V/alpha) <= chi <= (1+ln alpha)V/alpha on " +
               std::to_string(solved.size()) +
               " solved specs; class-estimate ratio is exactly 2^k";
  }
  return v;
}

// ---- criteria 7-9: audits ---------------------------------------------------

Verdict audit_zero_failures(const std::string& check, int n,
                            std::uint64_t samples) {
  Verdict v;
  AuditReport report = run_audit(check, n, samples, 0, 0);
  if (!report.passed()) {
    v.fail(std::to_string(report.failures.size()) + " failures, first: " +
           report.failures.front());
  } else {
    v.detail = std::to_string(report.samples) + " samples, zero failures";
  }
  return v;
}

Verdict lemma1_audit() { return audit_zero_failures("lemma1", 8, 1000); }

Verdict bipartite_audits() {
  Verdict v;
  Verdict k2 = audit_zero_failures("bipartite-k2", 8, 1000);
  Verdict k3 = audit_zero_failures("bipartite-k3", 8, 1000);
  if (!k2.passed) v.fail("bipartite-k2: " + k2.detail);
  if (!k3.passed) v.fail("bipartite-k3: " + k3.detail);
  if (v.passed) v.detail = "1000 samples each, zero failures";
  return v;
}

Verdict msbdiff_chain() {
  Verdict v;
  AuditReport report = run_audit("msbdiff-chain", 512, 0, 0, 0);
  std::uint64_t expected = binomial(512, 3);
  if (report.samples != expected) {
    v.fail("scanned " + std::to_string(report.samples) + " of " +
           std::to_string(expected) + " triples");
  }
  if (!report.passed()) {
    v.fail(std::to_string(report.failures.size()) + " failures, first: " +
           report.failures.front());
  }
  if (v.passed) {
    v.detail = "all " + std::to_string(expected) + " triples distinct";
  }
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    Verdict verdict;
  };
  std::vector<SolvedSpec> solved;

  std::vector<Criterion> results;
  auto record = [&](int number, const char* label, Verdict verdict,
                    Clock::time_point start) {
    std::printf("[%s] %d. %s: %s (%.1fs)\n",
                verdict.passed ? "PASS" : "FAIL", number, label,
                verdict.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
    results.push_back({number, label, std::move(verdict)});
  };

  Clock::time_point t = Clock::now();
  record(1, "warm-up coloring sweep", warmup_sweep(), t);
  t = Clock::now();
  record(2, "subset coloring sweep", subset_sweep(), t);
  t = Clock::now();
  record(3, "exact chi vs log2 lower bound", chi_lower_bound(solved), t);
  t = Clock::now();
  record(4, "alternating-sign coloring sweep", altsign_sweep(), t);
  t = Clock::now();
  record(5, "contest coloring and optimum", contest_checks(), t);
  t = Clock::now();
  record(6, "sandwich and ratio identities", sandwich(solved), t);
  t = Clock::now();
  record(7, "independent-set size audit", lemma1_audit(), t);
  t = Clock::now();
  record(8, "bipartiteness audits", bipartite_audits(), t);
  t = Clock::now();
  record(9, "msb_diff chain scan", msbdiff_chain(), t);

  int failed = 0;
  for (const Criterion& c : results) failed += c.verdict.passed ? 0 : 1;
  std::printf("%d/%d criteria passed\n",
              static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  return failed;
}
