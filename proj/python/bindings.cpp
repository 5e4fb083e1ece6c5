#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jchroma/bounds.hpp"
#include "jchroma/constructions.hpp"
#include "jchroma/graph.hpp"
#include "jchroma/solvers.hpp"
#include "jchroma/verify.hpp"

namespace py = pybind11;
using namespace jchroma;

PYBIND11_MODULE(_jchroma, m) {
  m.doc() = "Johnson-type signed graphs: constructions, solvers and audits";

  // Translators run newest-first, so the base class goes in first and the
  // budget-flavored subclasses override it.
  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<EnumerationError>(m, "EnumerationError",
                                           PyExc_RuntimeError);

  py::class_<GraphSpec>(m, "GraphSpec")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("k"),
           py::arg("t"))
      .def_readonly("n", &GraphSpec::n)
      .def_readonly("k", &GraphSpec::k)
      .def_readonly("t", &GraphSpec::t)
      .def("validate", &GraphSpec::validate)
      .def("vertex_count", &GraphSpec::vertex_count)
      .def("__eq__", [](const GraphSpec& a, const GraphSpec& b) {
        return a == b;
      })
      .def("__repr__", &GraphSpec::to_string);

  py::class_<SignedVertex>(m, "SignedVertex")
      .def(py::init<std::vector<Coord>, std::vector<Sign>>(),
           py::arg("support"), py::arg("signs"))
      .def_readonly("support", &SignedVertex::support)
      .def_readonly("signs", &SignedVertex::signs)
      .def("sign_of", &SignedVertex::sign_of, py::arg("coordinate"))
      .def("__eq__", [](const SignedVertex& a, const SignedVertex& b) {
        return a == b;
      })
      .def("__repr__", &SignedVertex::to_string)
      .def("__str__", &SignedVertex::to_string);

  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("ceil_log2", &ceil_log2, py::arg("x"));
  m.def("scalar_product", &scalar_product, py::arg("u"), py::arg("v"));
  m.def("adjacent", &adjacent, py::arg("spec"), py::arg("u"), py::arg("v"));
  m.def("vertex_index", &vertex_index, py::arg("spec"), py::arg("v"));
  m.def("vertex_at", &vertex_at, py::arg("spec"), py::arg("index"));
  m.def("enumerate_vertices", &enumerate_vertices, py::arg("spec"));
  m.def("edge_count", &edge_count, py::arg("spec"));
  m.def(
      "edges",
      [](const GraphSpec& spec, std::uint64_t max_edges) {
        spec.validate();
        std::vector<std::pair<VertexIndex, VertexIndex>> out;
        std::uint64_t total = edge_count(spec);
        if (total > max_edges) {
          throw EnumerationError(spec.to_string() + " has " +
                                     std::to_string(total) +
                                     " edges, over the requested cap of " +
                                     std::to_string(max_edges),
                                 total);
        }
        out.reserve(total);
        for_each_edge_fn(spec, [&](VertexIndex a, VertexIndex b) {
          out.emplace_back(a, b);
        });
        return out;
      },
      py::arg("spec"), py::arg("max_edges") = std::uint64_t{1} << 26,
      "Edge list as pairs of canonical vertex indices");
  m.def(
      "dimacs",
      [](const GraphSpec& spec) {
        std::ostringstream out;
        write_dimacs(spec, out);
        return out.str();
      },
      py::arg("spec"), "DIMACS col rendering of the graph");
  m.def("apply_signed_permutation", &apply_signed_permutation, py::arg("v"),
        py::arg("perm"), py::arg("flips"));

  py::class_<Coloring>(m, "Coloring")
      .def_readonly("spec", &Coloring::spec)
      .def_readonly("construction", &Coloring::construction)
      .def_readonly("ids", &Coloring::ids)
      .def_readonly("palette", &Coloring::palette)
      .def("at", &Coloring::at, py::arg("index"))
      .def("color_of", &Coloring::color_of, py::arg("v"))
      .def("num_colors", &Coloring::num_colors);

  py::class_<TripleColoring>(m, "TripleColoring")
      .def_readonly("n", &TripleColoring::n)
      .def_readonly("construction", &TripleColoring::construction)
      .def_readonly("ids", &TripleColoring::ids)
      .def_readonly("palette", &TripleColoring::palette)
      .def("color_of", &TripleColoring::color_of, py::arg("a"), py::arg("b"),
           py::arg("c"))
      .def("num_colors", &TripleColoring::num_colors);

  m.def("msb_diff", &msb_diff, py::arg("a"), py::arg("b"));
  m.def("min_m_for", &min_m_for, py::arg("n"));
  m.def("warmup_coloring_k2", &warmup_coloring_k2, py::arg("n"));
  m.def("subset_coloring_k2",
        py::overload_cast<int>(&subset_coloring_k2), py::arg("n"));
  m.def("altsign_coloring_k3", &altsign_coloring_k3, py::arg("n"));
  m.def("contest_triple_coloring", &contest_triple_coloring, py::arg("n"));
  m.def("triple_rank", &triple_rank, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("triple_at", &triple_at, py::arg("rank"));

  m.def(
      "check_proper",
      [](const GraphSpec& spec, const Coloring& coloring) {
        PropernessReport report = check_proper(spec, coloring);
        return py::make_tuple(report.proper,
                              report.violation
                                  ? py::object(py::cast(*report.violation))
                                  : py::object(py::none()));
      },
      py::arg("spec"), py::arg("coloring"),
      "Returns (proper, violating_edge_or_None)");
  py::class_<EdgeWitness>(m, "EdgeWitness")
      .def_readonly("u", &EdgeWitness::u)
      .def_readonly("v", &EdgeWitness::v)
      .def("__repr__", &EdgeWitness::to_string);
  m.def(
      "check_independent",
      [](const GraphSpec& spec, const VertexSet& set) {
        IndependenceReport report = check_independent(spec, set);
        return py::make_tuple(report.independent,
                              report.violation
                                  ? py::object(py::cast(*report.violation))
                                  : py::object(py::none()));
      },
      py::arg("spec"), py::arg("set"),
      "Returns (independent, violating_edge_or_None)");

  py::class_<SolveBudget>(m, "SolveBudget")
      .def(py::init([](std::uint64_t max_vertices, double time_limit_seconds,
                       std::uint64_t seed) {
             return SolveBudget{max_vertices, time_limit_seconds, seed};
           }),
           py::arg("max_vertices") = 20000,
           py::arg("time_limit_seconds") = 120.0, py::arg("seed") = 0)
      .def_readwrite("max_vertices", &SolveBudget::max_vertices)
      .def_readwrite("time_limit_seconds", &SolveBudget::time_limit_seconds)
      .def_readwrite("seed", &SolveBudget::seed);

  py::class_<MisResult>(m, "MisResult")
      .def_readonly("spec", &MisResult::spec)
      .def_readonly("alpha", &MisResult::alpha)
      .def_readonly("witness", &MisResult::witness)
      .def_readonly("exact", &MisResult::exact)
      .def_readonly("nodes", &MisResult::nodes)
      .def_readonly("elapsed_seconds", &MisResult::elapsed_seconds);
  m.def("max_independent_set", &max_independent_set, py::arg("spec"),
        py::arg("budget") = SolveBudget{});

  py::class_<ChiResult>(m, "ChiResult")
      .def_readonly("spec", &ChiResult::spec)
      .def_readonly("lower", &ChiResult::lower)
      .def_readonly("upper", &ChiResult::upper)
      .def_readonly("exact", &ChiResult::exact)
      .def_readonly("witness", &ChiResult::witness)
      .def_readonly("nodes", &ChiResult::nodes)
      .def_readonly("elapsed_seconds", &ChiResult::elapsed_seconds)
      .def("chi", &ChiResult::chi);
  m.def("exact_chromatic", &exact_chromatic, py::arg("spec"),
        py::arg("budget") = SolveBudget{});

  py::class_<CoverResult>(m, "CoverResult")
      .def_readonly("coloring", &CoverResult::coloring)
      .def_readonly("colors_used", &CoverResult::colors_used)
      .def_readonly("rounds", &CoverResult::rounds)
      .def_readonly("singleton_fallbacks", &CoverResult::singleton_fallbacks)
      .def_readonly("lovasz_reference", &CoverResult::lovasz_reference)
      .def_readonly("elapsed_seconds", &CoverResult::elapsed_seconds);
  m.def("greedy_transitive_cover", &greedy_transitive_cover, py::arg("spec"),
        py::arg("base"), py::arg("budget") = SolveBudget{});

  py::class_<DiverseBoundReport>(m, "DiverseBoundReport")
      .def_readonly("diverse_coordinates",
                    &DiverseBoundReport::diverse_coordinates)
      .def_readonly("set_size", &DiverseBoundReport::set_size)
      .def_readonly("bound", &DiverseBoundReport::bound)
      .def_readonly("holds", &DiverseBoundReport::holds);
  m.def("diverse_bound_audit", &diverse_bound_audit, py::arg("n"),
        py::arg("set"));

  py::class_<ContestOptimum>(m, "ContestOptimum")
      .def_readonly("n", &ContestOptimum::n)
      .def_readonly("lower", &ContestOptimum::lower)
      .def_readonly("upper", &ContestOptimum::upper)
      .def_readonly("exact", &ContestOptimum::exact)
      .def_readonly("nodes", &ContestOptimum::nodes)
      .def_readonly("elapsed_seconds", &ContestOptimum::elapsed_seconds)
      .def("optimum", &ContestOptimum::optimum);
  m.def("contest_exhaustive_optimum", &contest_exhaustive_optimum,
        py::arg("n"), py::arg("max_colors") = 16,
        py::arg("budget") = SolveBudget{});

  py::class_<AuditReport>(m, "AuditReport")
      .def_readonly("check", &AuditReport::check)
      .def_readonly("n", &AuditReport::n)
      .def_readonly("samples", &AuditReport::samples)
      .def_readonly("seed", &AuditReport::seed)
      .def_readonly("failures", &AuditReport::failures)
      .def("passed", &AuditReport::passed);
  m.def("run_audit", &run_audit, py::arg("check"), py::arg("n"),
        py::arg("samples"), py::arg("seed") = 0, py::arg("threads") = 0,
        py::arg("max_vertices") = 20000);

  py::class_<Ratio>(m, "Ratio")
      .def_readonly("num", &Ratio::num)
      .def_readonly("den", &Ratio::den)
      .def("value", &Ratio::value)
      .def("__eq__", [](const Ratio& a, const Ratio& b) { return a == b; })
      .def("__repr__", &Ratio::to_string);
  m.def("ratio_bound", &ratio_bound, py::arg("vertex_count"),
        py::arg("alpha"));
  m.def("lovasz_bound", &lovasz_bound, py::arg("vertex_count"),
        py::arg("alpha"));
  m.def(
      "closed_form_bounds",
      [](const GraphSpec& spec) {
        FamilyBounds b = closed_form_bounds(spec);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("spec"), "Returns (thm_lower, thm_upper)");
}
