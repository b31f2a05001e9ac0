#pragma once

// Finite-dimensional DG modules over A = k[T], deg T = d = w - 1, with zero
// differential on A.
//
// Grading is homological: the differential has degree -1, T has degree d and
// Σ raises degrees by one. Modules satisfy
//
//     ∂∂ = 0,    ∂(T x) = (-1)^d T ∂(x).

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphercat/field_linalg.hpp"
#include "sphercat/indec.hpp"

namespace sphercat {

struct AlgebraDescriptor {
  int w = 2;
  int d = 1;
  PrimeField field{};

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// Throws Error(not_prime) if p is not prime.
AlgebraDescriptor make_algebra(int w, std::uint32_t p = PrimeField::kDefaultPrime);

/// Per-degree matrices of a graded map, keyed by source degree. Missing
/// entries are zero maps.
using GradedMaps = std::map<int, Matrix>;

class DgModule {
 public:
  /// The zero module.
  explicit DgModule(AlgebraDescriptor algebra);

  /// Throws Error(shape_mismatch) if a matrix does not fit the support.
  /// Degrees of dimension zero are dropped.
  DgModule(AlgebraDescriptor algebra, std::map<int, std::size_t> support, GradedMaps diff, GradedMaps tmul);

  const AlgebraDescriptor& algebra() const noexcept { return algebra_; }
  const std::map<int, std::size_t>& support() const noexcept { return support_; }

  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  bool is_zero() const noexcept { return support_.empty(); }

  /// ∂ : M_n -> M_{n-1}, shape dim(n-1) x dim(n).
  Matrix diff(int from_degree) const;
  /// T : M_n -> M_{n+d}, shape dim(n+d) x dim(n).
  Matrix tmul(int from_degree) const;
  /// T^k : M_n -> M_{n+kd}.
  Matrix tmul_power(int from_degree, int k) const;

 private:
  Matrix zero_map(int from, int to) const;

  AlgebraDescriptor algebra_;
  std::map<int, std::size_t> support_;
  GradedMaps diff_;
  GradedMaps tmul_;
};

/// Homology of a DG module with the induced action of T.
class GradedModuleWithOperator {
 public:
  GradedModuleWithOperator(AlgebraDescriptor algebra, std::map<int, std::size_t> support, GradedMaps op);

  const AlgebraDescriptor& algebra() const noexcept { return algebra_; }
  const std::map<int, std::size_t>& support() const noexcept { return support_; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  /// Induced T : H_n -> H_{n+d}.
  Matrix op(int from_degree) const;
  Matrix op_power(int from_degree, int k) const;

 private:
  AlgebraDescriptor algebra_;
  std::map<int, std::size_t> support_;
  GradedMaps op_;
};

struct ModuleCheck {
  bool ok = true;
  std::string reason;        // "d2_nonzero" or "leibniz" on failure
  std::optional<int> degree;  // first violating source degree
};

struct TruncationPair {
  DgModule sub;
  DgModule quot;
};

DgModule make_indec_module(const AlgebraDescriptor& algebra, Indec t);

/// Σ^k m: degrees move up by k, the differential picks up (-1)^k.
DgModule shift_module(const DgModule& m, int k);

/// Throws Error(algebra_mismatch) when summands disagree on the algebra.
DgModule direct_sum(const AlgebraDescriptor& algebra, std::span<const DgModule> summands);

/// Conjugates every structure map by the per-degree invertible matrices
/// `change` (identity where absent).
DgModule base_change(const DgModule& m, const GradedMaps& change);

ModuleCheck validate_module(const DgModule& m);

/// Throws Error(invalid_module) if validate_module fails.
GradedModuleWithOperator homology_with_action(const DgModule& m);

/// Graded Jordan decomposition of H_*(m): a block of length r+1 starting in
/// degree i becomes the label (i, r). Sorted by (shift, width). Empty iff m
/// is acyclic. Throws Error(not_in_category) if the induced operator is not
/// nilpotent, which can only happen for d = 0.
std::vector<Indec> decompose(const DgModule& m);
std::vector<Indec> decompose(const GradedModuleWithOperator& h);

/// Smart truncation for d >= 1: sub is M_{>n} together with ker ∂_n.
TruncationPair truncate_smart(const DgModule& m, int n = 0);

/// Hard truncation for d <= -1: sub is M_{<=n}.
TruncationPair truncate_hard(const DgModule& m, int n = 0);

}  // namespace sphercat
