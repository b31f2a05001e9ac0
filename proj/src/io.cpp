#include "sphercat/io.hpp"

#include <sstream>

#include "sphercat/error.hpp"

namespace sphercat {

using nlohmann::json;

namespace {

json matrices_to_json(const DgModule& m, bool differential) {
  json out = json::array();
  for (const auto& [n, dim] : m.support()) {
    const Matrix a = differential ? m.diff(n) : m.tmul(n);
    if (a.is_zero()) continue;
    out.push_back({{"from_degree", n}, {"entries", a.to_rows()}});
  }
  return out;
}

template <typename T>
T field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("field '") + key + "': " + e.what());
  }
}

GradedMaps matrices_from_json(const json& j, const char* key, const PrimeField& field,
                              const std::map<int, std::size_t>& support, int degree_offset) {
  GradedMaps out;
  if (!j.contains(key)) return out;
  auto dim = [&](int n) {
    const auto it = support.find(n);
    return it == support.end() ? std::size_t{0} : it->second;
  };
  for (const auto& entry : j.at(key)) {
    const int from = field_of<int>(entry, "from_degree");
    const auto rows = field_of<std::vector<std::vector<std::int64_t>>>(entry, "entries");
    if (out.count(from)) throw Error(ErrorCode::parse_error, std::string(key) + ": duplicate from_degree");
    Matrix m = rows.empty() ? Matrix::zero(field, dim(from + degree_offset), dim(from))
                            : Matrix::from_rows(field, rows);
    out.emplace(from, std::move(m));
  }
  return out;
}

json label_json(Indec t) { return json::array({t.shift, t.width}); }

Indec label_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::parse_error, "label must be [i, r]");
  return {j[0].get<int>(), j[1].get<int>()};
}

json violation_json(const Violation& v) {
  return {{"t", label_json(v.t)}, {"u", label_json(v.u)}, {"expected", v.expected}, {"actual", v.actual}};
}

Violation violation_from_json(const json& j) {
  return {label_from_json(j.at("t")), label_from_json(j.at("u")), j.at("expected").get<long long>(),
          j.at("actual").get<long long>()};
}

}  // namespace

json module_to_json(const DgModule& m) {
  json components = json::array();
  for (const auto& [n, dim] : m.support()) components.push_back({{"degree", n}, {"dim", dim}});
  return {{"w", m.algebra().w},
          {"prime", m.algebra().field.prime()},
          {"components", components},
          {"diff", matrices_to_json(m, true)},
          {"tmul", matrices_to_json(m, false)}};
}

DgModule module_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "module must be a JSON object");
  const int w = field_of<int>(j, "w");
  const auto prime = j.contains("prime") ? field_of<std::uint32_t>(j, "prime") : PrimeField::kDefaultPrime;
  const auto algebra = make_algebra(w, prime);
  std::map<int, std::size_t> support;
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      const int degree = field_of<int>(c, "degree");
      const int dim = field_of<int>(c, "dim");
      if (dim < 0) throw Error(ErrorCode::parse_error, "negative dimension");
      if (support.count(degree)) throw Error(ErrorCode::parse_error, "duplicate component degree");
      support[degree] = static_cast<std::size_t>(dim);
    }
  }
  auto diff = matrices_from_json(j, "diff", algebra.field, support, -1);
  auto tmul = matrices_from_json(j, "tmul", algebra.field, support, algebra.d);
  return DgModule(algebra, std::move(support), std::move(diff), std::move(tmul));
}

json labels_to_json(const std::vector<Indec>& labels) {
  json out = json::array();
  for (const auto& t : labels) out.push_back(label_json(t));
  return out;
}

json report_to_json(const Report& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v));
  json out{{"name", report.name},
           {"status", report.passed() ? "pass" : "fail"},
           {"violations", violations},
           {"stats", report.stats}};
  if (!report.evidence.empty()) {
    json evidence = json::array();
    for (const auto& v : report.evidence) evidence.push_back(violation_json(v));
    out["evidence"] = evidence;
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.name = j.at("name").get<std::string>();
    for (const auto& v : j.at("violations")) r.violations.push_back(violation_from_json(v));
    r.stats = j.at("stats").get<std::map<std::string, long long>>();
    if (j.contains("evidence")) {
      for (const auto& v : j.at("evidence")) r.evidence.push_back(violation_from_json(v));
    }
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    if ((j.at("status").get<std::string>() == "pass") != r.passed()) {
      throw Error(ErrorCode::parse_error, "status disagrees with violations");
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

std::string quiver_to_dot(int w, const QuiverGraph& graph) {
  auto node_id = [](Indec t) {
    std::ostringstream s;
    s << "\"" << t.shift << "," << t.width << "\"";
    return s.str();
  };
  std::ostringstream out;
  out << "digraph ar_quiver {\n";
  out << "  graph [w=" << w << "];\n";
  out << "  node [shape=plaintext];\n";
  for (const auto& v : graph.vertices) {
    const auto pos = lattice_position(w, v);
    // Components sit side by side; pos is in points for neato -n.
    out << "  " << node_id(v) << " [label=\"S^" << v.shift << " X_" << v.width << "\", component=" << pos.component
        << ", col=" << pos.col << ", row=" << pos.row << ", pos=\"" << pos.col * 40 << ","
        << pos.row * 60 + pos.component * 600 << "!\"];\n";
  }
  for (const auto& [a, b] : graph.arrows) out << "  " << node_id(a) << " -> " << node_id(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sphercat
