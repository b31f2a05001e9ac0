#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sphercat {

/// Label of the indecomposable object Σ^shift X_width.
struct Indec {
  int shift = 0;
  int width = 0;

  friend auto operator<=>(const Indec&, const Indec&) = default;
};

/// "i,r", the label syntax used on the command line.
std::string format_label(Indec t);
/// Parses "i,r". Throws Error(parse_error) on malformed input or r < 0.
Indec parse_label(const std::string& text);

inline Indec suspend(Indec t, int n = 1) { return {t.shift + n, t.width}; }

/// Finite sweep domain: shifts in [shift_min, shift_max], widths in [0, max_width].
struct Window {
  int shift_min = -8;
  int shift_max = 8;
  int max_width = 6;

  bool empty() const noexcept { return shift_min > shift_max || max_width < 0; }
  int shift_count() const noexcept { return empty() ? 0 : shift_max - shift_min + 1; }
  bool contains(Indec t) const noexcept {
    return t.shift >= shift_min && t.shift <= shift_max && t.width >= 0 && t.width <= max_width;
  }
  /// All labels, ordered by (shift, width).
  std::vector<Indec> labels() const;

  friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace sphercat
