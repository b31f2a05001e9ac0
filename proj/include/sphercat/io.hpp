#pragma once

// Serialization of modules, reports and quiver windows.
//
// DgModule JSON:
//   {"w": int, "prime": int,
//    "components": [{"degree": int, "dim": int}],
//    "diff": [{"from_degree": int, "entries": [[int]]}],
//    "tmul": [{"from_degree": int, "entries": [[int]]}]}
// Omitted matrices are zero.
//
// Report JSON:
//   {"name": str, "status": "pass"|"fail",
//    "violations": [{"t": [i,r], "u": [i,r], "expected": int, "actual": int}],
//    "stats": {"pairs_checked": int, "elapsed_ms": int, ...}}
// plus "evidence" and "notes" when present.

#include <string>
#include <vector>

#include "json.hpp"
#include "sphercat/ar_combinatorics.hpp"
#include "sphercat/dg_core.hpp"
#include "sphercat/tstructures.hpp"

namespace sphercat {

nlohmann::json module_to_json(const DgModule& m);
/// Throws Error(parse_error) or Error(shape_mismatch).
DgModule module_from_json(const nlohmann::json& j);

nlohmann::json labels_to_json(const std::vector<Indec>& labels);

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Digraph whose nodes carry component, col and row attributes plus a pinned
/// pos for neato.
std::string quiver_to_dot(int w, const QuiverGraph& graph);

}  // namespace sphercat
