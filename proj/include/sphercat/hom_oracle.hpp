#pragma once

// Hom dimensions computed from the two-generator semifree resolution
//
//     P_r = cone( Σ^{(r+1)d} A --·T^{r+1}--> A ),   e in degree 0,
//                                                 f in degree (r+1)d + 1,
//                                                 ∂f = T^{r+1} e,
//
// of X_r. This path shares nothing with the closed-form combinatorics in
// ar_combinatorics.hpp beyond the label type.

#include <cstddef>
#include <map>

#include "sphercat/dg_core.hpp"

namespace sphercat {

struct Resolution {
  int width = 0;
  int e_degree = 0;
  int f_degree = 1;
};

Resolution resolution_of_width(const AlgebraDescriptor& algebra, int width);

/// Degree `degree` of Hom_A(P_r, N) together with its incoming and outgoing
/// differentials. Hom^k(P_r, N) = N_k ⊕ N_{k + f_degree} and
///
///     D(a, b) = (∂a, ∂b - ε_k T^{r+1} a),   ε_k = (-1)^{k (1 + (r+1)d)}.
struct HomComplexSlice {
  int degree = 0;
  Matrix d_in;   // Hom^{degree+1} -> Hom^{degree}
  Matrix d_out;  // Hom^{degree}   -> Hom^{degree-1}

  std::size_t homology() const;
};

HomComplexSlice hom_complex_slice(const Resolution& res, const DgModule& target, int degree = 0);

/// dim Hom_T(m, Σ^n target). Both arguments are decomposed first and the
/// answer is summed over pairs of indecomposable summands.
std::size_t hom_dim_oracle(const DgModule& m, int n, const DgModule& target);

/// dim Hom_T(t, u) for labels.
std::size_t hom_dim_oracle(const AlgebraDescriptor& algebra, Indec t, Indec u);

std::map<int, std::size_t> hom_table(const DgModule& m, const DgModule& target, int n_min, int n_max);

}  // namespace sphercat
