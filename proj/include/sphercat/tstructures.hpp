#pragma once

// Canonical t-structure (w >= 1) and co-t-structure (w <= 0), their
// truncation triangles, and window sweeps that collect evidence for the
// vanishing statements used to classify torsion pairs. Every sweep is exact
// on a finite window of labels; none of them proves a statement about all
// objects.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sphercat/dg_core.hpp"
#include "sphercat/indec.hpp"

namespace sphercat {

enum class TorsionKind { t, cot };
enum class HomBackend { closed, oracle };

const char* to_string(TorsionKind kind) noexcept;
const char* to_string(HomBackend backend) noexcept;

struct TorsionSpec {
  TorsionKind kind = TorsionKind::t;
  std::function<bool(Indec)> first;
  std::function<bool(Indec)> second;
  std::string name;
};

struct Violation {
  Indec t;
  Indec u;
  long long expected = 0;
  long long actual = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::string name;
  std::vector<Violation> violations;  // sorted by (t, u)
  std::map<std::string, long long> stats;
  std::vector<Violation> evidence;  // witnesses with their required minimum
  std::vector<std::string> notes;

  bool passed() const noexcept { return violations.empty(); }
};

/// dim Hom(t, u) through either backend. The oracle backend owns an algebra
/// descriptor over GF(prime).
class HomDimension {
 public:
  HomDimension(int w, HomBackend backend, std::uint32_t prime = PrimeField::kDefaultPrime);

  std::size_t operator()(Indec t, Indec u) const;
  int w() const noexcept { return algebra_.w; }
  HomBackend backend() const noexcept { return backend_; }

 private:
  AlgebraDescriptor algebra_;
  HomBackend backend_;
};

TorsionSpec canonical_spec(int w);

/// hom_dim_closed against hom_dim_oracle on every window pair. Violations
/// carry the closed value as expected and the oracle value as actual.
Report closed_vs_oracle_check(int w, const Window& win, std::uint32_t prime = PrimeField::kDefaultPrime);

/// Both classes moved by Σ^k.
TorsionSpec shifted_spec(const TorsionSpec& spec, int k);

/// Hom(first, second) = 0 on every window pair.
Report orthogonality_check(int w, const TorsionSpec& spec, const Window& win,
                           HomBackend backend = HomBackend::closed,
                           std::uint32_t prime = PrimeField::kDefaultPrime);

/// first is closed under Σ (kind t) or Σ^{-1} (kind cot) inside the window.
Report suspension_closure_check(const TorsionSpec& spec, const Window& win);

struct DecompositionTriangle {
  DgModule sub;
  DgModule quot;
  std::vector<Indec> sub_labels;
  std::vector<Indec> quot_labels;
};

/// sub -> m -> quot with sub in the first class and quot in the second: smart
/// truncation for w >= 2, hard truncation for w <= 0, and for w = 1 the split
/// triangle sorting summands by the sign of their shift. A nonzero threshold n
/// uses the classes moved by Σ^n.
DecompositionTriangle decomposition_triangle(int w, const DgModule& m, int threshold = 0);

/// Labels t with t ∈ first and Σ^{-1} t ∈ second. Needs a t-structure spec.
std::vector<Indec> heart_window(int w, const TorsionSpec& spec, const Window& win);
/// Labels t with t ∈ first and Σ t ∈ second. Needs a co-t-structure spec.
std::vector<Indec> coheart_window(int w, const TorsionSpec& spec, const Window& win);

/// Hom(h, Σ^n h') = 0 for all h, h' in `hearts` and the negative (kind t) or
/// positive (kind cot) shifts n inside [win.shift_min, win.shift_max].
Report heart_orthogonality(int w, const std::vector<Indec>& hearts, const Window& win, TorsionKind mode,
                           HomBackend backend = HomBackend::closed);

/// For w <= -1: Hom(t, S t) >= 1 for every label. For w = 0: Hom(t, Σ^{-1} t)
/// >= 1 off the base line, and base-line labels have endomorphism dimension 2.
/// Throws Error(wrong_sign) for w >= 1.
Report sparseness_evidence(int w, const Window& win);

/// Hom(X_0, Σ^n X_0) = 0 for 1 <= n <= n_max. Throws Error(wrong_sign) for w >= 0.
Report silting_check(int w, int n_max, HomBackend backend = HomBackend::oracle);

struct ClosureResult {
  std::vector<Indec> reached;           // sorted
  std::vector<Indec> interior_missing;  // interior labels not reached
  std::string note;
};

/// Labels whose shift is at least |d| away from the window edge and whose
/// width is below max_width.
std::vector<Indec> window_interior(int w, const Window& win);

/// Closure of {seed} inside the window under Σ^{±1} and the two-out-of-three
/// rule on AR triangles whose terms all lie in the window (the middle term
/// counts as present when all of its summands are).
ClosureResult thick_closure_window(int w, Indec seed, const Window& win);

}  // namespace sphercat
