#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jchroma/json_io.hpp"

namespace fs = std::filesystem;
using namespace jchroma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;  // a check or audit reported a violation
constexpr int kExitUsage = 2;         // bad flags or invalid inputs
constexpr int kExitBudget = 3;        // size/time budget exceeded or not exact

// Precedence: --out flag, then JCHROMA_OUT, then ./out.
fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("JCHROMA_OUT"); env != nullptr && *env) {
    return env;
  }
  return "out";
}

fs::path prepare_out_file(const std::string& out_flag,
                          const std::string& name) {
  fs::path dir = resolve_out_dir(out_flag);
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

void write_json_file(const fs::path& path, const Json& value) {
  write_file(path, value.dump(2) + "\n");
}

std::string spec_tag(const GraphSpec& spec) {
  std::ostringstream tag;
  tag << "n" << spec.n << "_k" << spec.k << "_t" << spec.t;
  return tag.str();
}

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int single = std::stoi(text);
      return {single, single};
    }
    return {std::stoi(text.substr(0, dots)),
            std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidInputError("cannot parse range '" + text +
                            "'; expected A..B");
  }
}

// "K,T" with K and T integers.
std::pair<int, int> parse_family(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw InvalidInputError("cannot parse family '" + text +
                            "'; expected K,T such as 2,-1");
  }
  try {
    return {std::stoi(text.substr(0, comma)),
            std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidInputError("cannot parse family '" + text +
                            "'; expected K,T such as 2,-1");
  }
}

struct BuildArgs {
  int n = 0, k = 0, t = 0;
  std::string format = "dimacs";
  std::string out;
  std::uint64_t max_edges = 1u << 26;
};

int cmd_build(const BuildArgs& args) {
  GraphSpec spec{args.n, args.k, args.t};
  spec.validate();
  std::cout << "p edge " << spec.vertex_count() << " " << edge_count(spec)
            << "\n";
  if (args.format == "dimacs") {
    fs::path col =
        prepare_out_file(args.out, "graph_" + spec_tag(spec) + ".col");
    std::ofstream file(col, std::ios::binary);
    if (!file) throw Error("cannot open " + col.string() + " for writing");
    write_dimacs(spec, file);
    if (!file) throw Error("failed writing " + col.string());
    file.close();
    fs::path manifest = prepare_out_file(
        args.out, "graph_" + spec_tag(spec) + ".manifest.json");
    write_json_file(manifest, manifest_json(spec));
    std::cout << "wrote " << col.string() << "\n";
    std::cout << "wrote " << manifest.string() << "\n";
  } else {
    fs::path path =
        prepare_out_file(args.out, "graph_" + spec_tag(spec) + ".graph.json");
    write_json_file(path, graph_json(spec, args.max_edges));
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

struct ColorArgs {
  int n = 0;
  int k = -1, t = 99;  // sentinels: "not provided"
  std::string construction;
  std::string format = "json";
  std::string out;
};

// The k=2 and k=3 constructions pin (k, t); explicit flags must agree.
GraphSpec family_for_construction(const ColorArgs& args) {
  int k, t;
  if (args.construction == "warmup2" || args.construction == "subset2") {
    k = 2;
    t = -1;
  } else if (args.construction == "altsign3") {
    k = 3;
    t = -2;
  } else {
    throw InvalidInputError("unknown construction '" + args.construction +
                            "'");
  }
  if ((args.k != -1 && args.k != k) || (args.t != 99 && args.t != t)) {
    std::string got;
    if (args.k != -1) got += " k=" + std::to_string(args.k);
    if (args.t != 99) got += " t=" + std::to_string(args.t);
    throw InvalidSpecError("construction " + args.construction +
                           " colors J(n," + std::to_string(k) + "," +
                           std::to_string(t) + "); got" + got);
  }
  return GraphSpec{args.n, k, t};
}

// Exhaustive check of the contest constraint: triples {a,b,c} and {b,c,d}
// must differ for every a < b < c < d.
bool contest_proper(const TripleColoring& coloring) {
  int n = coloring.n;
  for (int b = 2; b < n; ++b) {
    for (int c = b + 1; c < n; ++c) {
      for (int a = 1; a < b; ++a) {
        std::uint32_t left = coloring.ids[triple_rank(a, b, c)];
        for (int d = c + 1; d <= n; ++d) {
          if (left == coloring.ids[triple_rank(b, c, d)]) return false;
        }
      }
    }
  }
  return true;
}

int cmd_color(const ColorArgs& args) {
  if (args.construction == "contest") {
    if (args.k != -1 || args.t != 99) {
      throw InvalidSpecError(
          "the contest construction colors triples of [1..n]; do not pass "
          "--k or --t");
    }
    TripleColoring coloring = contest_triple_coloring(args.n);
    bool proper = contest_proper(coloring);
    std::cout << "colors=" << coloring.num_colors() << " proper="
              << (proper ? "true" : "false") << "\n";
    std::string stem = "coloring_n" + std::to_string(args.n) + "_contest";
    if (args.format == "csv") {
      fs::path path = prepare_out_file(args.out, stem + ".csv");
      std::ostringstream csv;
      write_triple_csv(coloring, csv);
      write_file(path, csv.str());
      std::cout << "wrote " << path.string() << "\n";
    } else {
      fs::path path = prepare_out_file(args.out, stem + ".json");
      write_json_file(path, to_json(coloring));
      std::cout << "wrote " << path.string() << "\n";
    }
    return proper ? kExitOk : kExitVerification;
  }

  GraphSpec spec = family_for_construction(args);
  Coloring coloring;
  if (args.construction == "warmup2") {
    coloring = warmup_coloring_k2(args.n);
  } else if (args.construction == "subset2") {
    coloring = subset_coloring_k2(args.n);
  } else {
    coloring = altsign_coloring_k3(args.n);
  }
  PropernessReport report = check_proper(spec, coloring);
  std::cout << "colors=" << coloring.num_colors() << " proper="
            << (report.proper ? "true" : "false") << "\n";
  if (!report.proper) {
    std::cerr << "monochromatic edge: " << report.violation->to_string()
              << "\n";
  }
  std::string stem =
      "coloring_" + spec_tag(spec) + "_" + args.construction;
  if (args.format == "csv") {
    fs::path path = prepare_out_file(args.out, stem + ".csv");
    std::ostringstream csv;
    write_coloring_csv(coloring, csv);
    write_file(path, csv.str());
    std::cout << "wrote " << path.string() << "\n";
  } else {
    fs::path path = prepare_out_file(args.out, stem + ".json");
    write_json_file(path, to_json(coloring));
    std::cout << "wrote " << path.string() << "\n";
  }
  return report.proper ? kExitOk : kExitVerification;
}

struct SolveArgs {
  int n = 0;
  int k = -1, t = 99;
  std::string what;
  std::uint64_t max_vertices = 20000;
  double time_limit = 120.0;
  std::uint64_t seed = 0;
  int max_colors = 16;
  std::string out;
};

int cmd_solve(const SolveArgs& args) {
  SolveBudget budget{args.max_vertices, args.time_limit, args.seed};
  if (args.what == "contest-opt") {
    if (args.k != -1 || args.t != 99) {
      throw InvalidSpecError(
          "contest-opt works on triples of [1..n]; do not pass --k or --t");
    }
    ContestOptimum result =
        contest_exhaustive_optimum(args.n, args.max_colors, budget);
    if (result.exact) {
      std::cout << "optimum=" << result.upper << " exact=true\n";
    } else {
      std::cout << "optimum in [" << result.lower << ".." << result.upper
                << "] exact=false\n";
    }
    fs::path path = prepare_out_file(
        args.out, "solve_n" + std::to_string(args.n) + "_contest-opt.json");
    write_json_file(path, to_json(result));
    std::cout << "wrote " << path.string() << "\n";
    return result.exact ? kExitOk : kExitBudget;
  }

  if (args.k == -1 || args.t == 99) {
    throw InvalidSpecError("solve --what " + args.what +
                           " needs --k and --t");
  }
  GraphSpec spec{args.n, args.k, args.t};
  spec.validate();
  std::string stem = "solve_" + spec_tag(spec) + "_" + args.what;
  if (args.what == "alpha") {
    MisResult result = max_independent_set(spec, budget);
    std::cout << "alpha=" << result.alpha << " exact="
              << (result.exact ? "true" : "false") << "\n";
    fs::path path = prepare_out_file(args.out, stem + ".json");
    write_json_file(path, to_json(result));
    std::cout << "wrote " << path.string() << "\n";
    return result.exact ? kExitOk : kExitBudget;
  }
  if (args.what == "chi") {
    ChiResult result = exact_chromatic(spec, budget);
    if (result.exact) {
      std::cout << "chi=" << result.upper << " exact=true\n";
    } else {
      std::cout << "chi in [" << result.lower << ".." << result.upper
                << "] exact=false\n";
    }
    fs::path path = prepare_out_file(args.out, stem + ".json");
    write_json_file(path, to_json(result));
    std::cout << "wrote " << path.string() << "\n";
    return result.exact ? kExitOk : kExitBudget;
  }
  throw InvalidInputError("unknown solve target '" + args.what +
                          "'; expected alpha, chi or contest-opt");
}

struct BoundsArgs {
  std::string family;
  std::string range;
  std::string mode = "formulas";
  std::uint64_t max_vertices = 20000;
  double time_limit = 120.0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
};

int cmd_bounds(const BoundsArgs& args) {
  auto [k, t] = parse_family(args.family);
  auto [n_from, n_to] = parse_range(args.range);
  TableMode mode;
  if (args.mode == "formulas") {
    mode = TableMode::kFormulas;
  } else if (args.mode == "exact") {
    mode = TableMode::kExact;
  } else {
    throw InvalidInputError("unknown mode '" + args.mode +
                            "'; expected formulas or exact");
  }
  SolveBudget budget{args.max_vertices, args.time_limit, args.seed};
  std::vector<BoundRow> rows =
      bound_table(k, t, n_from, n_to, mode, budget, args.threads);

  std::ostringstream stem;
  stem << "bounds_k" << k << "_t" << t << "_n" << n_from << "-" << n_to << "_"
       << args.mode;
  fs::path csv_path = prepare_out_file(args.out, stem.str() + ".csv");
  std::ostringstream csv;
  write_bounds_csv(rows, mode, csv);
  write_file(csv_path, csv.str());
  fs::path json_path = prepare_out_file(args.out, stem.str() + ".json");
  write_json_file(json_path, bounds_json(rows, mode));

  std::cout << "rows=" << rows.size() << "\n";
  std::cout << "wrote " << csv_path.string() << "\n";
  std::cout << "wrote " << json_path.string() << "\n";
  return kExitOk;
}

struct AuditArgs {
  std::string check;
  int n = 0;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  int threads = 0;
  std::uint64_t max_vertices = 20000;
  std::string out;
};

int cmd_audit(const AuditArgs& args) {
  AuditReport report = run_audit(args.check, args.n, args.samples, args.seed,
                                 args.threads, args.max_vertices);
  std::cout << "check=" << report.check << " n=" << report.n << " samples="
            << report.samples << " failures=" << report.failures.size()
            << "\n";
  fs::path path = prepare_out_file(
      args.out,
      "audit_" + report.check + "_n" + std::to_string(report.n) + ".json");
  write_json_file(path, to_json(report));
  std::cout << "wrote " << path.string() << "\n";
  return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Johnson-type signed graphs J(n,k,t): generation, explicit "
               "colorings, exact solvers, chromatic bounds and proof audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "jchroma 0.1.0");

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand(
      "build", "Write a graph as DIMACS col or JSON with its manifest");
  build->add_option("--n", build_args.n, "Ambient dimension")->required();
  build->add_option("--k", build_args.k, "Support size")->required();
  build->add_option("--t", build_args.t, "Required scalar product")
      ->required();
  build->add_option("--format", build_args.format, "dimacs or json")
      ->check(CLI::IsMember({"dimacs", "json"}));
  build->add_option("--max-edges", build_args.max_edges,
                    "Edge cap for JSON exports");
  build->add_option("--out", build_args.out, "Output directory");

  ColorArgs color_args;
  CLI::App* color = app.add_subcommand(
      "color", "Build one of the explicit proper colorings");
  color->add_option("--n", color_args.n, "Ambient dimension")->required();
  color->add_option("--k", color_args.k, "Support size (checked)");
  color->add_option("--t", color_args.t, "Scalar product (checked)");
  color
      ->add_option("--construction", color_args.construction,
                   "warmup2, subset2, altsign3 or contest")
      ->required()
      ->check(CLI::IsMember({"warmup2", "subset2", "altsign3", "contest"}));
  color->add_option("--format", color_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  color->add_option("--out", color_args.out, "Output directory");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Run an exact solver (alpha, chi or contest-opt)");
  solve->add_option("--n", solve_args.n, "Ambient dimension")->required();
  solve->add_option("--k", solve_args.k, "Support size");
  solve->add_option("--t", solve_args.t, "Scalar product");
  solve
      ->add_option("--what", solve_args.what, "alpha, chi or contest-opt")
      ->required()
      ->check(CLI::IsMember({"alpha", "chi", "contest-opt"}));
  solve->add_option("--max-vertices", solve_args.max_vertices,
                    "Materialization cap");
  solve->add_option("--time-limit", solve_args.time_limit,
                    "Seconds before returning an interval (0 = unlimited)");
  solve->add_option("--seed", solve_args.seed, "Random seed");
  solve->add_option("--max-colors", solve_args.max_colors,
                    "Color cap for contest-opt");
  solve->add_option("--out", solve_args.out, "Output directory");

  BoundsArgs bounds_args;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Tabulate chromatic bounds for a family over a range of n");
  bounds->add_option("--family", bounds_args.family, "K,T e.g. 2,-1")
      ->required();
  bounds->add_option("--n", bounds_args.range, "Range A..B (or a single n)")
      ->required();
  bounds->add_option("--mode", bounds_args.mode, "formulas or exact")
      ->check(CLI::IsMember({"formulas", "exact"}));
  bounds->add_option("--max-vertices", bounds_args.max_vertices,
                     "Materialization cap for exact mode");
  bounds->add_option("--time-limit", bounds_args.time_limit,
                     "Per-solve time limit in exact mode");
  bounds->add_option("--seed", bounds_args.seed, "Random seed");
  bounds->add_option("--threads", bounds_args.threads,
                     "Worker threads (0 = hardware)");
  bounds->add_option("--out", bounds_args.out, "Output directory");

  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand(
      "audit", "Re-run a proof's mechanics on sampled independent sets");
  audit
      ->add_option("--check", audit_args.check,
                   "lemma1, bipartite-k2, bipartite-k3 or msbdiff-chain")
      ->required()
      ->check(CLI::IsMember(
          {"lemma1", "bipartite-k2", "bipartite-k3", "msbdiff-chain"}));
  audit->add_option("--n", audit_args.n, "Ambient dimension")->required();
  audit->add_option("--samples", audit_args.samples, "Sampled sets");
  audit->add_option("--seed", audit_args.seed, "Root seed");
  audit->add_option("--threads", audit_args.threads,
                    "Worker threads (0 = hardware)");
  audit->add_option("--max-vertices", audit_args.max_vertices,
                    "Materialization cap");
  audit->add_option("--out", audit_args.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(build_args);
    if (color->parsed()) return cmd_color(color_args);
    if (solve->parsed()) return cmd_solve(solve_args);
    if (bounds->parsed()) return cmd_bounds(bounds_args);
    if (audit->parsed()) return cmd_audit(audit_args);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const EnumerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return kExitUsage;
}
