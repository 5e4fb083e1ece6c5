#include "jchroma/json_io.hpp"

#include <cstdio>
#include <ostream>

namespace jchroma {

Json to_json(const GraphSpec& spec) {
  return Json{{"n", spec.n}, {"k", spec.k}, {"t", spec.t}};
}

Json to_json(const SignedVertex& v) {
  return Json{{"support", v.support}, {"signs", v.signs}};
}

Json manifest_json(const GraphSpec& spec) {
  Json out;
  out["spec"] = to_json(spec);
  out["vertex_count"] = spec.vertex_count();
  out["edge_count"] = edge_count(spec);
  Json vertices = Json::array();
  VertexIndex count = spec.vertex_count();
  for (VertexIndex i = 0; i < count; ++i) {
    vertices.push_back(vertex_at(spec, i).to_string());
  }
  out["vertices"] = std::move(vertices);
  return out;
}

Json graph_json(const GraphSpec& spec, std::uint64_t max_edges) {
  Json out = manifest_json(spec);
  Json edges = Json::array();
  std::uint64_t seen = 0;
  bool truncated = false;
  for_each_edge(spec, [&](VertexIndex i, VertexIndex j) {
    if (seen == max_edges) {
      truncated = true;
      return false;
    }
    ++seen;
    edges.push_back(Json::array({i + 1, j + 1}));
    return true;
  });
  if (truncated) {
    throw EnumerationError("graph export exceeded the cap of " +
                               std::to_string(max_edges) + " edges",
                           seen);
  }
  out["edges"] = std::move(edges);
  return out;
}

namespace {

Json palette_json(const std::map<std::uint32_t, std::string>& palette) {
  Json out = Json::object();
  for (const auto& [id, label] : palette) {
    out[std::to_string(id)] = label;
  }
  return out;
}

}  // namespace

Json to_json(const Coloring& coloring) {
  Json out;
  out["construction"] = coloring.construction;
  out["n"] = coloring.spec.n;
  out["k"] = coloring.spec.k;
  out["t"] = coloring.spec.t;
  out["num_colors"] = coloring.num_colors();
  Json assignment = Json::array();
  for (VertexIndex i = 0; i < coloring.ids.size(); ++i) {
    SignedVertex v = vertex_at(coloring.spec, i);
    assignment.push_back(
        Json::array({Json(v.support), Json(v.signs), Json(coloring.ids[i])}));
  }
  out["assignment"] = std::move(assignment);
  out["palette"] = palette_json(coloring.palette);
  return out;
}

Json to_json(const TripleColoring& coloring) {
  Json out;
  out["construction"] = coloring.construction;
  out["n"] = coloring.n;
  out["num_colors"] = coloring.num_colors();
  Json assignment = Json::array();
  for (std::uint64_t i = 0; i < coloring.ids.size(); ++i) {
    std::array<int, 3> triple = triple_at(i);
    assignment.push_back(Json::array(
        {Json(std::vector<int>(triple.begin(), triple.end())),
         Json(coloring.ids[i])}));
  }
  out["assignment"] = std::move(assignment);
  out["palette"] = palette_json(coloring.palette);
  return out;
}

Json to_json(const MisResult& result) {
  Json out;
  out["spec"] = to_json(result.spec);
  out["what"] = "alpha";
  out["alpha"] = result.alpha;
  out["exact"] = result.exact;
  Json witness = Json::array();
  for (const SignedVertex& v : result.witness) witness.push_back(to_json(v));
  out["witness"] = std::move(witness);
  out["nodes_explored"] = result.nodes;
  out["elapsed_seconds"] = result.elapsed_seconds;
  return out;
}

Json to_json(const ChiResult& result) {
  Json out;
  out["spec"] = to_json(result.spec);
  out["what"] = "chi";
  out["chi_lower"] = result.lower;
  out["chi_upper"] = result.upper;
  out["exact"] = result.exact;
  if (result.exact) out["chi"] = result.upper;
  out["witness"] = to_json(result.witness);
  out["nodes_explored"] = result.nodes;
  out["elapsed_seconds"] = result.elapsed_seconds;
  return out;
}

Json to_json(const CoverResult& result) {
  Json out;
  out["spec"] = to_json(result.coloring.spec);
  out["what"] = "cover";
  out["colors_used"] = result.colors_used;
  out["rounds"] = result.rounds;
  out["singleton_fallbacks"] = result.singleton_fallbacks;
  out["lovasz_reference"] = result.lovasz_reference;
  out["coloring"] = to_json(result.coloring);
  out["elapsed_seconds"] = result.elapsed_seconds;
  return out;
}

Json to_json(const ContestOptimum& result) {
  Json out;
  out["what"] = "contest-opt";
  out["n"] = result.n;
  out["lower"] = result.lower;
  out["upper"] = result.upper;
  out["exact"] = result.exact;
  if (result.exact) out["optimum"] = result.upper;
  out["nodes_explored"] = result.nodes;
  out["elapsed_seconds"] = result.elapsed_seconds;
  return out;
}

Json to_json(const AuditReport& report) {
  Json out;
  out["check"] = report.check;
  out["n"] = report.n;
  out["samples"] = report.samples;
  out["seed"] = report.seed;
  out["passed"] = report.passed();
  out["failures"] = report.failures;
  return out;
}

Json to_json(const BoundRow& row) {
  Json out;
  out["n"] = row.spec.n;
  out["k"] = row.spec.k;
  out["t"] = row.spec.t;
  out["vertex_count"] = row.vertex_count;
  out["alpha"] = row.alpha;
  out["alpha_exact"] = row.alpha_exact;
  out["ratio"] = row.ratio.to_string();
  out["lovasz"] = row.lovasz;
  out["thm_lower"] = row.thm_lower;
  out["thm_upper"] = row.thm_upper;
  if (!row.construction_colors.empty()) {
    Json colors = Json::object();
    for (const auto& [name, used] : row.construction_colors) {
      colors[name] = used;
    }
    out["construction_colors"] = std::move(colors);
  }
  if (!row.note.empty()) out["note"] = row.note;
  return out;
}

Json bounds_json(const std::vector<BoundRow>& rows, TableMode mode) {
  Json out;
  out["mode"] = mode == TableMode::kExact ? "exact" : "formulas";
  if (!rows.empty()) {
    out["family"] = Json{{"k", rows.front().spec.k},
                         {"t", rows.front().spec.t}};
  }
  Json list = Json::array();
  for (const BoundRow& row : rows) list.push_back(to_json(row));
  out["rows"] = std::move(list);
  return out;
}

void write_coloring_csv(const Coloring& coloring, std::ostream& out) {
  out << "index,vertex,color_id,label\n";
  for (VertexIndex i = 0; i < coloring.ids.size(); ++i) {
    std::uint32_t id = coloring.ids[i];
    auto label = coloring.palette.find(id);
    out << i + 1 << "," << vertex_at(coloring.spec, i).to_string() << ","
        << id << ","
        << (label == coloring.palette.end() ? "" : label->second) << "\n";
  }
}

void write_triple_csv(const TripleColoring& coloring, std::ostream& out) {
  out << "index,triple,color_id,label\n";
  for (std::uint64_t i = 0; i < coloring.ids.size(); ++i) {
    std::array<int, 3> triple = triple_at(i);
    std::uint32_t id = coloring.ids[i];
    auto label = coloring.palette.find(id);
    out << i + 1 << "," << triple[0] << " " << triple[1] << " " << triple[2]
        << "," << id << ","
        << (label == coloring.palette.end() ? "" : label->second) << "\n";
  }
}

void write_bounds_csv(const std::vector<BoundRow>& rows, TableMode mode,
                      std::ostream& out) {
  // The construction columns are fixed by family and mode, not by row, so
  // every row has the same shape.
  std::vector<std::string> constructions;
  if (mode == TableMode::kExact && !rows.empty()) {
    const GraphSpec& spec = rows.front().spec;
    if (spec.k == 2 && spec.t == -1) {
      constructions = {"warmup2", "subset2"};
    } else if (spec.k == 3 && spec.t == -2) {
      constructions = {"altsign3"};
    }
  }
  out << "n,k,t,V,alpha,alpha_exact,ratio,lovasz,thm_lower,thm_upper";
  for (const std::string& name : constructions) {
    out << ",construction:" << name;
  }
  out << "\n";
  for (const BoundRow& row : rows) {
    out << row.spec.n << "," << row.spec.k << "," << row.spec.t << ","
        << row.vertex_count << "," << row.alpha << ","
        << (row.alpha_exact ? "true" : "false") << ","
        << row.ratio.to_string() << "," << format_double(row.lovasz) << ","
        << row.thm_lower << "," << row.thm_upper;
    for (const std::string& name : constructions) {
      auto it = row.construction_colors.find(name);
      out << ",";
      if (it != row.construction_colors.end()) out << it->second;
    }
    out << "\n";
  }
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace jchroma
