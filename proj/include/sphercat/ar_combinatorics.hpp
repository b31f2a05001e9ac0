#pragma once

// Closed-form combinatorics on labels Σ^i X_r.
//
// For d = w - 1 != 0 the AR quiver is |d| copies of ZA∞. Inside a component,
// applying Σ^{-d} moves one column to the right, and width r is the row. The
// region F+(t) is the half-strip to the right of t,
//
//     u = Σ^{t.i - p d} X_{u.r}   with p >= 0 and p <= u.r <= p + t.r,
//
// and F-(t) the one to the left,
//
//     u = Σ^{t.i + q d} X_{u.r}   with 0 <= q <= t.r and u.r >= t.r - q.
//
// For d = 0 the components are homogeneous tubes, one per shift.

#include <cstddef>
#include <utility>
#include <vector>

#include "sphercat/indec.hpp"

namespace sphercat {

Indec tau(int w, Indec t);
Indec serre(int w, Indec t);

bool same_component(int w, Indec t, Indec u);

/// Throw Error(undefined_for_tube) when w = 1.
bool in_f_plus(int w, Indec t, Indec u);
bool in_f_minus(int w, Indec t, Indec u);

/// dim Hom(t, u): [u ∈ F+(t)] + [u ∈ F-(S t)] for w != 1, and
/// min(t.r, u.r) + 1 for u.i ∈ {t.i, t.i + 1} when w = 1.
std::size_t hom_dim_closed(int w, Indec t, Indec u);

struct ArTriangleData {
  Indec start;
  std::vector<Indec> middle;  // one or two labels, sorted
  Indec end;
};

/// The AR triangle τt -> E -> t.
ArTriangleData ar_triangle(int w, Indec t);

struct QuiverGraph {
  std::vector<Indec> vertices;
  std::vector<std::pair<Indec, Indec>> arrows;
};

/// Irreducible maps Σ^i X_r -> Σ^{i-d} X_{r+1} and Σ^i X_r -> Σ^i X_{r-1}
/// with both ends inside the window.
QuiverGraph quiver_window(int w, const Window& win);

/// Connected components of quiver_window. Throws Error(window_too_small)
/// unless the window is saturated: nonempty, and for d != 0 spanning at
/// least |d| shifts with max_width >= 1 whenever it spans more than |d|.
std::size_t component_count(int w, const Window& win);

/// Placement of a label on the drawing lattice of its component.
struct LatticePosition {
  int component = 0;
  int col = 0;
  int row = 0;
};

LatticePosition lattice_position(int w, Indec t);

}  // namespace sphercat
