#include "sphercat/tstructures.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <tuple>

#include "sphercat/ar_combinatorics.hpp"
#include "sphercat/error.hpp"
#include "sphercat/hom_oracle.hpp"

namespace sphercat {

const char* to_string(TorsionKind kind) noexcept { return kind == TorsionKind::t ? "t" : "cot"; }

const char* to_string(HomBackend backend) noexcept { return backend == HomBackend::closed ? "closed" : "oracle"; }

HomDimension::HomDimension(int w, HomBackend backend, std::uint32_t prime)
    : algebra_(make_algebra(w, prime)), backend_(backend) {}

std::size_t HomDimension::operator()(Indec t, Indec u) const {
  return backend_ == HomBackend::closed ? hom_dim_closed(algebra_.w, t, u) : hom_dim_oracle(algebra_, t, u);
}

namespace {

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish(Report& report, const Stopwatch& clock) {
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) { return std::tie(a.t, a.u) < std::tie(b.t, b.u); });
  report.stats["elapsed_ms"] = clock.elapsed_ms();
}

std::string w_suffix(int w) { return " (w=" + std::to_string(w) + ")"; }

}  // namespace

TorsionSpec canonical_spec(int w) {
  const int d = w - 1;
  if (w >= 1) {
    return {TorsionKind::t, [](Indec t) { return t.shift >= 0; },
            [d](Indec t) { return t.shift + t.width * d < 0; },
            "canonical t-structure" + w_suffix(w)};
  }
  return {TorsionKind::cot, [](Indec t) { return t.shift <= 0; },
          [d](Indec t) { return t.shift + t.width * d > 0; },
          "canonical co-t-structure" + w_suffix(w)};
}

TorsionSpec shifted_spec(const TorsionSpec& spec, int k) {
  auto first = spec.first;
  auto second = spec.second;
  return {spec.kind, [first, k](Indec t) { return first(suspend(t, -k)); },
          [second, k](Indec t) { return second(suspend(t, -k)); },
          "Σ^" + std::to_string(k) + " " + spec.name};
}

Report closed_vs_oracle_check(int w, const Window& win, std::uint32_t prime) {
  Stopwatch clock;
  const auto algebra = make_algebra(w, prime);
  Report report{"closed-vs-oracle agreement evidence" + w_suffix(w), {}, {}, {}, {}};
  const auto labels = win.labels();
  long long pairs = 0;
  long long nonzero = 0;
  for (const auto& t : labels) {
    for (const auto& u : labels) {
      ++pairs;
      const auto closed = static_cast<long long>(hom_dim_closed(w, t, u));
      const auto oracle = static_cast<long long>(hom_dim_oracle(algebra, t, u));
      if (oracle != 0) ++nonzero;
      if (closed != oracle) report.violations.push_back({t, u, closed, oracle});
    }
  }
  report.stats["pairs_checked"] = pairs;
  report.stats["nonzero_pairs"] = nonzero;
  report.stats["prime"] = prime;
  finish(report, clock);
  return report;
}

Report orthogonality_check(int w, const TorsionSpec& spec, const Window& win, HomBackend backend,
                           std::uint32_t prime) {
  Stopwatch clock;
  const HomDimension hom(w, backend, prime);
  Report report{spec.name + " orthogonality evidence [" + to_string(backend) + "]", {}, {}, {}, {}};
  const auto labels = win.labels();
  std::vector<Indec> firsts;
  std::vector<Indec> seconds;
  for (const auto& t : labels) {
    if (spec.first(t)) firsts.push_back(t);
    if (spec.second(t)) seconds.push_back(t);
  }
  long long pairs = 0;
  for (const auto& t : firsts) {
    for (const auto& u : seconds) {
      ++pairs;
      const auto dim = hom(t, u);
      if (dim != 0) report.violations.push_back({t, u, 0, static_cast<long long>(dim)});
    }
  }
  report.stats["pairs_checked"] = pairs;
  report.stats["first_labels"] = static_cast<long long>(firsts.size());
  report.stats["second_labels"] = static_cast<long long>(seconds.size());
  finish(report, clock);
  return report;
}

Report suspension_closure_check(const TorsionSpec& spec, const Window& win) {
  Stopwatch clock;
  Report report{spec.name + " suspension closure evidence", {}, {}, {}, {}};
  const int step = spec.kind == TorsionKind::t ? 1 : -1;
  long long checked = 0;
  for (const auto& t : win.labels()) {
    const Indec moved = suspend(t, step);
    if (!spec.first(t) || !win.contains(moved)) continue;
    ++checked;
    if (!spec.first(moved)) report.violations.push_back({t, moved, 1, 0});
  }
  report.stats["pairs_checked"] = checked;
  finish(report, clock);
  return report;
}

DecompositionTriangle decomposition_triangle(int w, const DgModule& m, int threshold) {
  const auto& algebra = m.algebra();
  if (algebra.w != w) throw Error(ErrorCode::algebra_mismatch, "module lives over a different w");
  if (threshold != 0) {
    auto tri = decomposition_triangle(w, shift_module(m, -threshold), 0);
    tri.sub = shift_module(tri.sub, threshold);
    tri.quot = shift_module(tri.quot, threshold);
    for (auto& t : tri.sub_labels) t = suspend(t, threshold);
    for (auto& t : tri.quot_labels) t = suspend(t, threshold);
    return tri;
  }
  if (w == 1) {
    std::vector<DgModule> sub;
    std::vector<DgModule> quot;
    std::vector<Indec> sub_labels;
    std::vector<Indec> quot_labels;
    for (const auto& t : decompose(m)) {
      if (t.shift >= 0) {
        sub.push_back(make_indec_module(algebra, t));
        sub_labels.push_back(t);
      } else {
        quot.push_back(make_indec_module(algebra, t));
        quot_labels.push_back(t);
      }
    }
    return {direct_sum(algebra, sub), direct_sum(algebra, quot), std::move(sub_labels), std::move(quot_labels)};
  }
  auto pieces = w >= 2 ? truncate_smart(m, 0) : truncate_hard(m, 0);
  auto sub_labels = decompose(pieces.sub);
  auto quot_labels = decompose(pieces.quot);
  return {std::move(pieces.sub), std::move(pieces.quot), std::move(sub_labels), std::move(quot_labels)};
}

std::vector<Indec> heart_window(int w, const TorsionSpec& spec, const Window& win) {
  (void)w;
  if (spec.kind != TorsionKind::t) throw Error(ErrorCode::kind_mismatch, "heart needs a t-structure");
  std::vector<Indec> out;
  for (const auto& t : win.labels()) {
    if (spec.first(t) && spec.second(suspend(t, -1))) out.push_back(t);
  }
  return out;
}

std::vector<Indec> coheart_window(int w, const TorsionSpec& spec, const Window& win) {
  (void)w;
  if (spec.kind != TorsionKind::cot) throw Error(ErrorCode::kind_mismatch, "co-heart needs a co-t-structure");
  std::vector<Indec> out;
  for (const auto& t : win.labels()) {
    if (spec.first(t) && spec.second(suspend(t, 1))) out.push_back(t);
  }
  return out;
}

Report heart_orthogonality(int w, const std::vector<Indec>& hearts, const Window& win, TorsionKind mode,
                           HomBackend backend) {
  Stopwatch clock;
  const HomDimension hom(w, backend);
  const bool negative = mode == TorsionKind::t;
  Report report{std::string(negative ? "heart" : "co-heart") + " vanishing evidence" + w_suffix(w), {}, {}, {}, {}};
  const int lo = negative ? win.shift_min : std::max(1, win.shift_min);
  const int hi = negative ? std::min(-1, win.shift_max) : win.shift_max;
  long long pairs = 0;
  for (const auto& h : hearts) {
    for (const auto& g : hearts) {
      for (int n = lo; n <= hi; ++n) {
        ++pairs;
        const Indec target = suspend(g, n);
        const auto dim = hom(h, target);
        if (dim != 0) report.violations.push_back({h, target, 0, static_cast<long long>(dim)});
      }
    }
  }
  report.stats["pairs_checked"] = pairs;
  finish(report, clock);
  return report;
}

Report sparseness_evidence(int w, const Window& win) {
  if (w >= 1) throw Error(ErrorCode::wrong_sign, "sparseness evidence is for w <= 0");
  Stopwatch clock;
  Report report{"t-structure sparseness evidence" + w_suffix(w), {}, {}, {}, {}};
  long long checked = 0;
  if (w <= -1) {
    for (const auto& t : win.labels()) {
      ++checked;
      const Indec st = serre(w, t);
      const auto dim = static_cast<long long>(hom_dim_closed(w, t, st));
      if (dim >= 1) report.evidence.push_back({t, st, 1, dim});
      else report.violations.push_back({t, st, 1, dim});
    }
    report.notes.push_back("Hom(t, S t) != 0 for every label: no nonzero indecomposable can lie in a heart");
  } else {
    long long baseline = 0;
    long long candidates = 0;
    for (const auto& t : win.labels()) {
      ++checked;
      const Indec below = suspend(t, -1);
      const auto down = static_cast<long long>(hom_dim_closed(w, t, below));
      if (t.width >= 1) {
        if (down >= 1) report.evidence.push_back({t, below, 1, down});
        else report.violations.push_back({t, below, 1, down});
        continue;
      }
      ++baseline;
      if (down == 0) ++candidates;
      const auto endo = static_cast<long long>(hom_dim_closed(w, t, t));
      report.evidence.push_back({t, t, 2, endo});
      if (endo != 2) report.violations.push_back({t, t, 2, endo});
    }
    report.stats["baseline_labels"] = baseline;
    report.stats["heart_candidates"] = candidates;
    if (candidates != baseline) report.notes.push_back("some base-line label has Hom(t, Σ^{-1} t) != 0");
    report.notes.push_back("only base-line labels can lie in a heart; each has a 2-dimensional endomorphism ring");
  }
  report.stats["pairs_checked"] = checked;
  report.stats["witnesses"] = static_cast<long long>(report.evidence.size());
  finish(report, clock);
  return report;
}

Report silting_check(int w, int n_max, HomBackend backend) {
  if (w >= 0) throw Error(ErrorCode::wrong_sign, "silting vanishing is for w <= -1");
  Stopwatch clock;
  const HomDimension hom(w, backend);
  Report report{"silting vanishing evidence" + w_suffix(w) + " [" + to_string(backend) + "]", {}, {}, {}, {}};
  const Indec s{0, 0};
  for (int n = 1; n <= n_max; ++n) {
    const auto dim = static_cast<long long>(hom(s, suspend(s, n)));
    if (dim != 0) report.violations.push_back({s, suspend(s, n), 0, dim});
  }
  report.stats["pairs_checked"] = std::max(0, n_max);
  finish(report, clock);
  return report;
}

std::vector<Indec> window_interior(int w, const Window& win) {
  const int margin = std::abs(w - 1);
  std::vector<Indec> out;
  for (const auto& t : win.labels()) {
    if (t.shift - margin >= win.shift_min && t.shift + margin <= win.shift_max && t.width < win.max_width) {
      out.push_back(t);
    }
  }
  return out;
}

ClosureResult thick_closure_window(int w, Indec seed, const Window& win) {
  ClosureResult result;
  if (!win.contains(seed)) {
    result.note = "seed " + format_label(seed) + " lies outside the window";
    return result;
  }
  std::set<Indec> reached{seed};
  auto present = [&](Indec t) { return reached.count(t) > 0; };
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](Indec t) {
      if (win.contains(t) && reached.insert(t).second) changed = true;
    };
    for (const auto& t : std::vector<Indec>(reached.begin(), reached.end())) {
      add(suspend(t, 1));
      add(suspend(t, -1));
    }
    for (const auto& c : win.labels()) {
      const auto tri = ar_triangle(w, c);
      const bool inside = win.contains(tri.start) &&
                          std::all_of(tri.middle.begin(), tri.middle.end(), [&](Indec y) { return win.contains(y); });
      if (!inside) continue;
      const bool has_start = present(tri.start);
      const bool has_end = present(c);
      const bool has_middle = std::all_of(tri.middle.begin(), tri.middle.end(), present);
      if (has_start + has_end + has_middle != 2) continue;
      if (!has_start) add(tri.start);
      if (!has_end) add(c);
      if (!has_middle) {
        for (const auto& y : tri.middle) add(y);
      }
    }
  }
  result.reached.assign(reached.begin(), reached.end());
  for (const auto& t : window_interior(w, win)) {
    if (!present(t)) result.interior_missing.push_back(t);
  }
  if (!result.interior_missing.empty()) {
    result.note = std::to_string(result.interior_missing.size()) + " interior labels not reached";
  }
  return result;
}

}  // namespace sphercat
