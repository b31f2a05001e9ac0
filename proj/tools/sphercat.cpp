#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphercat/ar_combinatorics.hpp"
#include "sphercat/dg_core.hpp"
#include "sphercat/error.hpp"
#include "sphercat/hom_oracle.hpp"
#include "sphercat/io.hpp"
#include "sphercat/tstructures.hpp"

using namespace sphercat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { text, json, csv, dot };

struct CliConfig {
  int w = 0;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  Window window;
  Format format = Format::text;
};

constexpr const char* kGrammar = R"(usage: sphercat --w W [--prime P] [--imin I] [--imax I] [--rmax R] [--format text|json|csv|dot] COMMAND
commands:
  homdim --t i,r --u j,s [--oracle]
  homtable --t i,r --u j,s --range a..b [--oracle]
  decompose --module file.json
  ar-triangle --t i,r
  quiver
  truncate --module file.json [--threshold n]
  canonical [--check]
  evidence sparseness
  verify closed-vs-oracle
  closure --seed i,r
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string label_text(Indec t) { return "S^" + std::to_string(t.shift) + " X_" + std::to_string(t.width); }

json label_json(Indec t) { return json::array({t.shift, t.width}); }

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b, got '" + s + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(s.substr(0, dots), &used_a);
    const int b = std::stoi(s.substr(dots + 2), &used_b);
    if (used_a != dots || used_b != s.size() - dots - 2 || a > b) throw UsageError("bad range '" + s + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + s + "'");
  }
}

DgModule load_module(const std::string& path, const CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
  auto m = module_from_json(j);
  if (m.algebra().w != cfg.w) {
    throw Error(ErrorCode::algebra_mismatch,
                path + " is over w=" + std::to_string(m.algebra().w) + " but --w is " + std::to_string(cfg.w));
  }
  return m;
}

void print_labels(const std::vector<Indec>& labels, Format format) {
  switch (format) {
    case Format::json: std::cout << labels_to_json(labels).dump() << "\n"; break;
    case Format::csv:
      std::cout << "i,r\n";
      for (const auto& t : labels) std::cout << t.shift << "," << t.width << "\n";
      break;
    default:
      for (const auto& t : labels) std::cout << format_label(t) << "\n";
  }
}

void print_report(const Report& r, Format format) {
  if (format == Format::json) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  if (format == Format::csv) {
    std::cout << "kind,t,u,expected,actual\n";
    for (const auto& v : r.violations)
      std::cout << "violation,\"" << format_label(v.t) << "\",\"" << format_label(v.u) << "\"," << v.expected << ","
                << v.actual << "\n";
    for (const auto& v : r.evidence)
      std::cout << "evidence,\"" << format_label(v.t) << "\",\"" << format_label(v.u) << "\"," << v.expected << ","
                << v.actual << "\n";
    return;
  }
  std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, value] : r.stats) std::cout << "  " << key << " = " << value << "\n";
  for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
  for (const auto& v : r.violations) {
    std::cout << "  violation: Hom(" << label_text(v.t) << ", " << label_text(v.u) << ") expected " << v.expected
              << " got " << v.actual << "\n";
  }
}

int report_exit(const std::vector<Report>& reports, Format format) {
  if (format == Format::json && reports.size() > 1) {
    json all = json::array();
    for (const auto& r : reports) all.push_back(report_to_json(r));
    std::cout << all.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(r, format);
  }
  for (const auto& r : reports)
    if (!r.passed()) return kExitFailed;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the derived category of compact DG modules over k[T], deg T = w - 1"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "text";
  app.add_option("--w", cfg.w, "Calabi-Yau dimension w")->required();
  app.add_option("--prime", cfg.prime, "characteristic of the ground field")->capture_default_str();
  app.add_option("--imin", cfg.window.shift_min, "smallest shift in the window")->capture_default_str();
  app.add_option("--imax", cfg.window.shift_max, "largest shift in the window")->capture_default_str();
  app.add_option("--rmax", cfg.window.max_width, "largest width in the window")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
      ->capture_default_str();

  std::string t_arg;
  std::string u_arg;
  std::string range_arg;
  std::string module_path;
  std::string seed_arg;
  int threshold = 0;
  bool use_oracle = false;
  bool check = false;

  auto* homdim = app.add_subcommand("homdim", "dim Hom(t, u)");
  homdim->add_option("--t", t_arg, "source label i,r")->required();
  homdim->add_option("--u", u_arg, "target label j,s")->required();
  homdim->add_flag("--oracle", use_oracle, "use the DG resolution oracle");

  auto* homtable = app.add_subcommand("homtable", "dim Hom(t, S^n u) for n in a range");
  homtable->add_option("--t", t_arg, "source label i,r")->required();
  homtable->add_option("--u", u_arg, "target label j,s")->required();
  homtable->add_option("--range", range_arg, "a..b")->required();
  homtable->add_flag("--oracle", use_oracle, "use the DG resolution oracle");

  auto* decompose_cmd = app.add_subcommand("decompose", "indecomposable summands of a module");
  decompose_cmd->add_option("--module", module_path, "module JSON file")->required();

  auto* triangle = app.add_subcommand("ar-triangle", "AR triangle ending in t");
  triangle->add_option("--t", t_arg, "label i,r")->required();

  auto* quiver = app.add_subcommand("quiver", "AR quiver restricted to the window");

  auto* truncate = app.add_subcommand("truncate", "canonical truncation triangle of a module");
  truncate->add_option("--module", module_path, "module JSON file")->required();
  truncate->add_option("--threshold", threshold, "degree to truncate at")->capture_default_str();

  auto* canonical = app.add_subcommand("canonical", "canonical t-structure or co-t-structure on the window");
  canonical->add_flag("--check", check, "run orthogonality and suspension closure checks");

  auto* evidence = app.add_subcommand("evidence", "evidence sweeps");
  evidence->require_subcommand(1);
  auto* sparseness = evidence->add_subcommand("sparseness", "sparseness witnesses for w <= 0");

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  verify->require_subcommand(1);
  auto* closed_vs_oracle = verify->add_subcommand("closed-vs-oracle", "closed form against the oracle");

  auto* closure = app.add_subcommand("closure", "thick closure of a seed inside the window");
  closure->add_option("--seed", seed_arg, "label i,r")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return kExitUsage;
  }

  try {
    if (format == "json") cfg.format = Format::json;
    else if (format == "csv") cfg.format = Format::csv;
    else if (format == "dot") cfg.format = Format::dot;
    if (cfg.window.shift_min > cfg.window.shift_max) throw UsageError("--imin must not exceed --imax");
    if (cfg.window.max_width < 0) throw UsageError("--rmax must be >= 0");
    const auto algebra = make_algebra(cfg.w, cfg.prime);
    const auto backend = use_oracle ? HomBackend::oracle : HomBackend::closed;

    if (*homdim) {
      const Indec t = parse_label(t_arg);
      const Indec u = parse_label(u_arg);
      const auto dim = HomDimension(cfg.w, backend, cfg.prime)(t, u);
      if (cfg.format == Format::json) {
        std::cout << json{{"t", label_json(t)}, {"u", label_json(u)}, {"dim", dim}, {"backend", to_string(backend)}}
                         .dump()
                  << "\n";
      } else if (cfg.format == Format::csv) {
        std::cout << "t,u,dim\n\"" << t_arg << "\",\"" << u_arg << "\"," << dim << "\n";
      } else {
        std::cout << dim << "\n";
      }
      return kExitOk;
    }

    if (*homtable) {
      const Indec t = parse_label(t_arg);
      const Indec u = parse_label(u_arg);
      const auto [lo, hi] = parse_range(range_arg);
      const HomDimension hom(cfg.w, backend, cfg.prime);
      json table = json::object();
      if (cfg.format == Format::csv) std::cout << "n,dim\n";
      for (int n = lo; n <= hi; ++n) {
        const auto dim = hom(t, suspend(u, n));
        if (cfg.format == Format::json) table[std::to_string(n)] = dim;
        else if (cfg.format == Format::csv) std::cout << n << "," << dim << "\n";
        else std::cout << n << " " << dim << "\n";
      }
      if (cfg.format == Format::json) std::cout << table.dump() << "\n";
      return kExitOk;
    }

    if (*decompose_cmd) {
      print_labels(decompose(load_module(module_path, cfg)), cfg.format);
      return kExitOk;
    }

    if (*triangle) {
      const auto tri = ar_triangle(cfg.w, parse_label(t_arg));
      if (cfg.format == Format::json) {
        std::cout << json{{"start", label_json(tri.start)},
                          {"middle", labels_to_json(tri.middle)},
                          {"end", label_json(tri.end)}}
                         .dump()
                  << "\n";
      } else {
        std::string middle;
        for (const auto& y : tri.middle) middle += (middle.empty() ? "" : " + ") + label_text(y);
        std::cout << label_text(tri.start) << " -> " << middle << " -> " << label_text(tri.end) << " -> "
                  << label_text(suspend(tri.start)) << "\n";
      }
      return kExitOk;
    }

    if (*quiver) {
      const auto g = quiver_window(cfg.w, cfg.window);
      if (cfg.format == Format::dot) {
        std::cout << quiver_to_dot(cfg.w, g);
      } else if (cfg.format == Format::json) {
        json vertices = json::array();
        for (const auto& v : g.vertices) {
          const auto p = lattice_position(cfg.w, v);
          vertices.push_back({{"label", label_json(v)}, {"component", p.component}, {"col", p.col}, {"row", p.row}});
        }
        json arrows = json::array();
        for (const auto& [a, b] : g.arrows) arrows.push_back({label_json(a), label_json(b)});
        std::cout << json{{"w", cfg.w}, {"vertices", vertices}, {"arrows", arrows}}.dump() << "\n";
      } else if (cfg.format == Format::csv) {
        std::cout << "from,to\n";
        for (const auto& [a, b] : g.arrows) std::cout << "\"" << format_label(a) << "\",\"" << format_label(b) << "\"\n";
      } else {
        for (const auto& [a, b] : g.arrows) std::cout << format_label(a) << " -> " << format_label(b) << "\n";
      }
      return kExitOk;
    }

    if (*truncate) {
      const auto tri = decomposition_triangle(cfg.w, load_module(module_path, cfg), threshold);
      const auto& [sub, quot, sub_labels, quot_labels] = tri;
      if (cfg.format == Format::json) {
        std::cout << json{{"threshold", threshold},
                          {"sub", module_to_json(sub)},
                          {"quot", module_to_json(quot)},
                          {"sub_labels", labels_to_json(sub_labels)},
                          {"quot_labels", labels_to_json(quot_labels)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "sub:";
        for (const auto& t : sub_labels) std::cout << " " << format_label(t);
        std::cout << "\nquot:";
        for (const auto& t : quot_labels) std::cout << " " << format_label(t);
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (*canonical) {
      const auto spec = canonical_spec(cfg.w);
      if (check) {
        return report_exit({orthogonality_check(cfg.w, spec, cfg.window, HomBackend::closed, cfg.prime),
                            suspension_closure_check(spec, cfg.window)},
                           cfg.format);
      }
      std::vector<Indec> first;
      std::vector<Indec> second;
      for (const auto& t : cfg.window.labels()) {
        if (spec.first(t)) first.push_back(t);
        if (spec.second(t)) second.push_back(t);
      }
      const bool is_t = spec.kind == TorsionKind::t;
      const auto core = is_t ? heart_window(cfg.w, spec, cfg.window) : coheart_window(cfg.w, spec, cfg.window);
      if (cfg.format == Format::json) {
        std::cout << json{{"name", spec.name},
                          {"kind", to_string(spec.kind)},
                          {"first", labels_to_json(first)},
                          {"second", labels_to_json(second)},
                          {is_t ? "heart" : "coheart", labels_to_json(core)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << spec.name << "\n  first: " << first.size() << " labels\n  second: " << second.size()
                  << " labels\n  " << (is_t ? "heart" : "co-heart") << ":";
        for (const auto& t : core) std::cout << " " << format_label(t);
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (*sparseness) {
      std::vector<Report> reports{sparseness_evidence(cfg.w, cfg.window)};
      if (cfg.w <= -1) reports.push_back(silting_check(cfg.w, 12, HomBackend::oracle));
      return report_exit(reports, cfg.format);
    }

    if (*closed_vs_oracle) return report_exit({closed_vs_oracle_check(cfg.w, cfg.window, cfg.prime)}, cfg.format);

    if (*closure) {
      const auto result = thick_closure_window(cfg.w, parse_label(seed_arg), cfg.window);
      if (cfg.format == Format::json) {
        json out{{"reached", labels_to_json(result.reached)},
                 {"interior_missing", labels_to_json(result.interior_missing)}};
        if (!result.note.empty()) out["note"] = result.note;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "reached " << result.reached.size() << " labels, " << result.interior_missing.size()
                  << " interior labels missing\n";
        for (const auto& t : result.interior_missing) std::cout << "  missing " << format_label(t) << "\n";
        if (!result.note.empty()) std::cout << "note: " << result.note << "\n";
      }
      return result.interior_missing.empty() && !result.reached.empty() ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
