#include "jchroma/bounds.hpp"

#include <cmath>
#include <numeric>

#include "jchroma/constructions.hpp"
#include "jchroma/parallel.hpp"

namespace jchroma {

double Ratio::value() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Ratio::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Ratio make_ratio(long long num, long long den) {
  if (den == 0) throw InvalidInputError("ratio with denominator zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Ratio{num, den};
}

Ratio ratio_bound(std::uint64_t vertex_count, std::uint64_t alpha) {
  if (alpha == 0) throw InvalidInputError("ratio_bound needs alpha >= 1");
  if (vertex_count > static_cast<std::uint64_t>(INT64_MAX)) {
    throw EnumerationError("vertex count too large for an exact ratio", 0);
  }
  return make_ratio(static_cast<long long>(vertex_count),
                    static_cast<long long>(alpha));
}

double lovasz_bound(std::uint64_t vertex_count, std::uint64_t alpha) {
  if (alpha == 0) throw InvalidInputError("lovasz_bound needs alpha >= 1");
  return (1.0 + std::log(static_cast<double>(alpha))) *
         static_cast<double>(vertex_count) / static_cast<double>(alpha);
}

FamilyBounds closed_form_bounds(const GraphSpec& spec) {
  spec.validate();
  std::uint64_t n = static_cast<std::uint64_t>(spec.n);
  if (spec.k == 2 && spec.t == -1) {
    return {ceil_log2(n),
            2 * static_cast<std::uint64_t>(min_m_for(n)) + 2};
  }
  if (spec.k == 3 && spec.t == -2) {
    int loglog = ceil_log2(static_cast<std::uint64_t>(ceil_log2(n)));
    return {loglog, 4 * static_cast<std::uint64_t>(loglog) + 6};
  }
  if (spec.k == 3 && spec.t == -1) {
    // The fractional/Lovasz route with the all-positive class C(n,3); the
    // known lower bound for this family is only the trivial one.
    double value = lovasz_bound(spec.vertex_count(), binomial(n, 3));
    return {1, static_cast<std::uint64_t>(std::ceil(value - 1e-9))};
  }
  throw UnsupportedFamilyError(
      "no closed-form bounds for " + spec.to_string() +
      "; covered families: (k=2,t=-1), (k=3,t=-2), (k=3,t=-1)");
}

namespace {

BoundRow compute_row(int n, int k, int t, TableMode mode,
                     const SolveBudget& budget) {
  BoundRow row;
  row.spec = GraphSpec{n, k, t};
  row.vertex_count = row.spec.vertex_count();
  FamilyBounds closed = closed_form_bounds(row.spec);
  row.thm_lower = closed.lower;
  row.thm_upper = closed.upper;

  std::uint64_t estimate = binomial(static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(k));
  row.alpha = estimate;
  row.alpha_exact = false;

  if (mode == TableMode::kExact) {
    try {
      MisResult mis = max_independent_set(row.spec, budget);
      row.alpha = static_cast<std::uint64_t>(mis.alpha);
      row.alpha_exact = mis.exact;
      if (!mis.exact) row.note = "independence solve hit the time limit";
    } catch (const BudgetError& e) {
      row.note = e.what();
    }
    try {
      if (k == 2 && t == -1) {
        row.construction_colors["warmup2"] =
            static_cast<std::uint32_t>(warmup_coloring_k2(n).num_colors());
        row.construction_colors["subset2"] =
            static_cast<std::uint32_t>(subset_coloring_k2(n).num_colors());
      } else if (k == 3 && t == -2) {
        row.construction_colors["altsign3"] =
            static_cast<std::uint32_t>(altsign_coloring_k3(n).num_colors());
      }
    } catch (const Error& e) {
      if (!row.note.empty()) row.note += "; ";
      row.note += e.what();
    }
  }

  row.ratio = ratio_bound(row.vertex_count, row.alpha);
  row.lovasz = lovasz_bound(row.vertex_count, row.alpha);
  return row;
}

}  // namespace

std::vector<BoundRow> bound_table(int k, int t, int n_from, int n_to,
                                  TableMode mode, const SolveBudget& budget,
                                  int threads) {
  bool covered = (k == 2 && t == -1) || (k == 3 && t == -2) ||
                 (k == 3 && t == -1);
  if (!covered) {
    throw UnsupportedFamilyError(
        "bound tables cover the families (2,-1), (3,-2) and (3,-1); got (" +
        std::to_string(k) + "," + std::to_string(t) + ")");
  }
  if (n_from < k) {
    throw InvalidInputError("the family needs n >= " + std::to_string(k) +
                            ", range starts at " + std::to_string(n_from));
  }
  if (n_to < n_from) {
    throw InvalidInputError("empty range: " + std::to_string(n_from) + ".." +
                            std::to_string(n_to));
  }
  std::uint64_t rows = static_cast<std::uint64_t>(n_to - n_from) + 1;
  std::vector<BoundRow> table(rows);
  if (threads <= 0) threads = default_thread_count();
  parallel_chunks(
      rows, threads, [&](std::uint64_t begin, std::uint64_t end, int) {
        for (std::uint64_t i = begin; i < end; ++i) {
          int n = n_from + static_cast<int>(i);
          try {
            table[i] = compute_row(n, k, t, mode, budget);
          } catch (const std::exception& e) {
            // Worker threads must not throw; surface the problem in the row.
            BoundRow failed;
            failed.spec = GraphSpec{n, k, t};
            failed.note = e.what();
            table[i] = failed;
          }
        }
      });
  return table;
}

}  // namespace jchroma
