#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "jchroma/bounds.hpp"
#include "jchroma/constructions.hpp"
#include "jchroma/graph.hpp"
#include "jchroma/solvers.hpp"
#include "jchroma/verify.hpp"

namespace jchroma {

// Insertion order is preserved so reruns emit byte-identical files.
using Json = nlohmann::ordered_json;

Json to_json(const GraphSpec& spec);
Json to_json(const SignedVertex& v);  // {"support": [...], "signs": [...]}

// Companion to a DIMACS export: counts plus the canonical vertex order the
// 1-based DIMACS indices refer to.
Json manifest_json(const GraphSpec& spec);

// Full graph as JSON: the manifest plus 1-based edge pairs.
Json graph_json(const GraphSpec& spec, std::uint64_t max_edges = 1u << 26);

Json to_json(const Coloring& coloring);
Json to_json(const TripleColoring& coloring);
Json to_json(const MisResult& result);
Json to_json(const ChiResult& result);
Json to_json(const CoverResult& result);
Json to_json(const ContestOptimum& result);
Json to_json(const AuditReport& report);
Json to_json(const BoundRow& row);
Json bounds_json(const std::vector<BoundRow>& rows, TableMode mode);

// One vertex per row: index,vertex,color_id,label.
void write_coloring_csv(const Coloring& coloring, std::ostream& out);
// One triple per row: index,triple,color_id,label.
void write_triple_csv(const TripleColoring& coloring, std::ostream& out);

// Fixed column set n,k,t,V,alpha,alpha_exact,ratio,lovasz,thm_lower,
// thm_upper, plus one construction:<name> column per construction the
// family carries when the table was built in exact mode.
void write_bounds_csv(const std::vector<BoundRow>& rows, TableMode mode,
                      std::ostream& out);

// Deterministic shortest-ish float rendering ("%.10g").
std::string format_double(double value);

}  // namespace jchroma
