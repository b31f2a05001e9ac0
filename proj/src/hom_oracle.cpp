#include "sphercat/hom_oracle.hpp"

#include "sphercat/error.hpp"

namespace sphercat {

Resolution resolution_of_width(const AlgebraDescriptor& algebra, int width) {
  return {width, 0, (width + 1) * algebra.d + 1};
}

std::size_t HomComplexSlice::homology() const { return homology_dim(d_in, d_out); }

namespace {

// Matrix of D : Hom^k -> Hom^{k-1}.
Matrix hom_differential(const Resolution& res, const DgModule& target, int k) {
  const auto& f = target.algebra().field;
  const int d = target.algebra().d;
  const int shift = res.f_degree;
  const int power = res.width + 1;
  const long long exponent = static_cast<long long>(k) * (1 + static_cast<long long>(power) * d);
  const int eps = exponent % 2 == 0 ? 1 : -1;

  const std::size_t a_src = target.dim(k);
  const std::size_t b_src = target.dim(k + shift);
  const std::size_t a_dst = target.dim(k - 1);
  const std::size_t b_dst = target.dim(k - 1 + shift);

  const Matrix top = hstack(target.diff(k), Matrix::zero(f, a_dst, b_src));
  const Matrix bottom = hstack(target.tmul_power(k, power).scaled(-eps), target.diff(k + shift));
  Matrix out = vstack(top, bottom);
  if (out.rows() != a_dst + b_dst || out.cols() != a_src + b_src) {
    throw Error(ErrorCode::shape_mismatch, "hom complex block shapes");
  }
  return out;
}

}  // namespace

HomComplexSlice hom_complex_slice(const Resolution& res, const DgModule& target, int degree) {
  return {degree, hom_differential(res, target, degree + 1), hom_differential(res, target, degree)};
}

std::size_t hom_dim_oracle(const DgModule& m, int n, const DgModule& target) {
  if (!(m.algebra() == target.algebra())) throw Error(ErrorCode::algebra_mismatch, "hom between different algebras");
  const auto& algebra = m.algebra();
  const auto sources = decompose(m);
  const auto targets = decompose(target);
  std::size_t total = 0;
  for (const auto& t : sources) {
    const auto res = resolution_of_width(algebra, t.width);
    for (const auto& u : targets) {
      // Hom(Σ^i X_r, Σ^n Σ^j X_s) = Hom(X_r, Σ^{n+j-i} X_s)
      const DgModule shifted = shift_module(make_indec_module(algebra, {0, u.width}), n + u.shift - t.shift);
      total += hom_complex_slice(res, shifted, 0).homology();
    }
  }
  return total;
}

std::size_t hom_dim_oracle(const AlgebraDescriptor& algebra, Indec t, Indec u) {
  return hom_dim_oracle(make_indec_module(algebra, t), 0, make_indec_module(algebra, u));
}

std::map<int, std::size_t> hom_table(const DgModule& m, const DgModule& target, int n_min, int n_max) {
  std::map<int, std::size_t> out;
  for (int n = n_min; n <= n_max; ++n) out[n] = hom_dim_oracle(m, n, target);
  return out;
}

}  // namespace sphercat
