#include "sphercat/ar_combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

#include "sphercat/error.hpp"

namespace sphercat {

namespace {

std::optional<int> exact_quotient(int a, int b) {
  if (a % b != 0) return std::nullopt;
  return a / b;
}

int require_nonzero_d(int w) {
  const int d = w - 1;
  if (d == 0) throw Error(ErrorCode::undefined_for_tube, "F-regions are not defined for w = 1");
  return d;
}

}  // namespace

Indec tau(int w, Indec t) { return {t.shift + (w - 1), t.width}; }

Indec serre(int w, Indec t) { return {t.shift + w, t.width}; }

bool same_component(int w, Indec t, Indec u) {
  const int d = w - 1;
  if (d == 0) return t.shift == u.shift;
  return (t.shift - u.shift) % d == 0;
}

bool in_f_plus(int w, Indec t, Indec u) {
  const int d = require_nonzero_d(w);
  const auto p = exact_quotient(t.shift - u.shift, d);
  return p && *p >= 0 && *p <= u.width && u.width <= *p + t.width;
}

bool in_f_minus(int w, Indec t, Indec u) {
  const int d = require_nonzero_d(w);
  const auto q = exact_quotient(u.shift - t.shift, d);
  return q && *q >= 0 && *q <= t.width && u.width >= t.width - *q;
}

std::size_t hom_dim_closed(int w, Indec t, Indec u) {
  if (w == 1) {
    if (u.shift != t.shift && u.shift != t.shift + 1) return 0;
    return static_cast<std::size_t>(std::min(t.width, u.width)) + 1;
  }
  return static_cast<std::size_t>(in_f_plus(w, t, u)) + static_cast<std::size_t>(in_f_minus(w, serre(w, t), u));
}

ArTriangleData ar_triangle(int w, Indec t) {
  const int d = w - 1;
  ArTriangleData out{{t.shift + d, t.width}, {}, t};
  if (t.width >= 1) out.middle.push_back({t.shift + d, t.width - 1});
  out.middle.push_back({t.shift, t.width + 1});
  std::sort(out.middle.begin(), out.middle.end());
  return out;
}

QuiverGraph quiver_window(int w, const Window& win) {
  const int d = w - 1;
  QuiverGraph g;
  g.vertices = win.labels();
  for (const auto& v : g.vertices) {
    const Indec up{v.shift - d, v.width + 1};
    const Indec down{v.shift, v.width - 1};
    if (win.contains(up)) g.arrows.emplace_back(v, up);
    if (v.width >= 1 && win.contains(down)) g.arrows.emplace_back(v, down);
  }
  return g;
}

std::size_t component_count(int w, const Window& win) {
  const int span = std::abs(w - 1);
  if (win.empty()) throw Error(ErrorCode::window_too_small, "empty window");
  if (span != 0) {
    if (win.shift_count() < span) {
      throw Error(ErrorCode::window_too_small,
                  "window spans " + std::to_string(win.shift_count()) + " shifts, need " + std::to_string(span));
    }
    if (win.shift_count() > span && win.max_width < 1) {
      throw Error(ErrorCode::window_too_small, "window needs max_width >= 1 to connect its columns");
    }
  }

  const auto g = quiver_window(w, win);
  std::map<Indec, std::size_t> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) index.emplace(g.vertices[k], k);
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertices.size();
  for (const auto& [a, b] : g.arrows) {
    const auto ra = find(index.at(a));
    const auto rb = find(index.at(b));
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

LatticePosition lattice_position(int w, Indec t) {
  const int d = w - 1;
  if (d == 0) return {t.shift, t.width, 0};
  const int m = std::abs(d);
  const int component = ((t.shift % m) + m) % m;
  const int column = (component - t.shift) / d;  // number of Σ^{-d} steps from the reference column
  return {component, 2 * column - t.width, t.width};
}

}  // namespace sphercat
