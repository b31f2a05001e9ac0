#include "sphercat/dg_core.hpp"

#include <algorithm>
#include <numeric>

#include "sphercat/error.hpp"

namespace sphercat {

namespace {

std::size_t lookup_dim(const std::map<int, std::size_t>& support, int degree) {
  const auto it = support.find(degree);
  return it == support.end() ? 0 : it->second;
}

std::size_t sum_dims(const std::map<int, std::size_t>& support) {
  return std::accumulate(support.begin(), support.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

int sign_of_power(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void check_shape(const char* what, int from, const Matrix& m, std::size_t rows, std::size_t cols) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::shape_mismatch,
                std::string(what) + " from degree " + std::to_string(from) + " is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

}  // namespace

AlgebraDescriptor make_algebra(int w, std::uint32_t p) { return AlgebraDescriptor{w, w - 1, PrimeField(p)}; }

// ---------------------------------------------------------------------------
// DgModule

DgModule::DgModule(AlgebraDescriptor algebra) : algebra_(algebra) {}

DgModule::DgModule(AlgebraDescriptor algebra, std::map<int, std::size_t> support, GradedMaps diff,
                   GradedMaps tmul)
    : algebra_(algebra) {
  for (const auto& [deg, dim] : support) {
    if (dim > 0) support_.emplace(deg, dim);
  }
  const int d = algebra_.d;
  for (auto& [n, m] : diff) {
    check_shape("differential", n, m, dim(n - 1), dim(n));
    if (!(m.field() == algebra_.field)) throw Error(ErrorCode::algebra_mismatch, "differential field");
    if (m.rows() > 0 && m.cols() > 0) diff_.emplace(n, std::move(m));
  }
  for (auto& [n, m] : tmul) {
    check_shape("T-action", n, m, dim(n + d), dim(n));
    if (!(m.field() == algebra_.field)) throw Error(ErrorCode::algebra_mismatch, "T-action field");
    if (m.rows() > 0 && m.cols() > 0) tmul_.emplace(n, std::move(m));
  }
}

std::size_t DgModule::dim(int degree) const { return lookup_dim(support_, degree); }

std::size_t DgModule::total_dim() const { return sum_dims(support_); }

Matrix DgModule::zero_map(int from, int to) const { return Matrix::zero(algebra_.field, dim(to), dim(from)); }

Matrix DgModule::diff(int from_degree) const {
  const auto it = diff_.find(from_degree);
  return it == diff_.end() ? zero_map(from_degree, from_degree - 1) : it->second;
}

Matrix DgModule::tmul(int from_degree) const {
  const auto it = tmul_.find(from_degree);
  return it == tmul_.end() ? zero_map(from_degree, from_degree + algebra_.d) : it->second;
}

Matrix DgModule::tmul_power(int from_degree, int k) const {
  Matrix acc = Matrix::identity(algebra_.field, dim(from_degree));
  int degree = from_degree;
  for (int step = 0; step < k; ++step) {
    acc = tmul(degree) * acc;
    degree += algebra_.d;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// GradedModuleWithOperator

GradedModuleWithOperator::GradedModuleWithOperator(AlgebraDescriptor algebra, std::map<int, std::size_t> support,
                                                   GradedMaps op)
    : algebra_(algebra) {
  for (const auto& [deg, dim] : support) {
    if (dim > 0) support_.emplace(deg, dim);
  }
  for (auto& [n, m] : op) {
    check_shape("operator", n, m, dim(n + algebra_.d), dim(n));
    if (m.rows() > 0 && m.cols() > 0) op_.emplace(n, std::move(m));
  }
}

std::size_t GradedModuleWithOperator::dim(int degree) const { return lookup_dim(support_, degree); }

std::size_t GradedModuleWithOperator::total_dim() const { return sum_dims(support_); }

Matrix GradedModuleWithOperator::op(int from_degree) const {
  const auto it = op_.find(from_degree);
  if (it != op_.end()) return it->second;
  return Matrix::zero(algebra_.field, dim(from_degree + algebra_.d), dim(from_degree));
}

Matrix GradedModuleWithOperator::op_power(int from_degree, int k) const {
  Matrix acc = Matrix::identity(algebra_.field, dim(from_degree));
  int degree = from_degree;
  for (int step = 0; step < k; ++step) {
    acc = op(degree) * acc;
    degree += algebra_.d;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Constructors

DgModule make_indec_module(const AlgebraDescriptor& algebra, Indec t) {
  const auto& f = algebra.field;
  const int d = algebra.d;
  std::map<int, std::size_t> support;
  GradedMaps tmul;
  if (d == 0) {
    const auto n = static_cast<std::size_t>(t.width) + 1;
    support[t.shift] = n;
    Matrix jordan(f, n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) jordan.set(j + 1, j, 1);
    tmul.emplace(t.shift, std::move(jordan));
  } else {
    for (int j = 0; j <= t.width; ++j) support[t.shift + j * d] = 1;
    for (int j = 0; j < t.width; ++j) tmul.emplace(t.shift + j * d, Matrix::identity(f, 1));
  }
  return DgModule(algebra, std::move(support), {}, std::move(tmul));
}

DgModule shift_module(const DgModule& m, int k) {
  std::map<int, std::size_t> support;
  GradedMaps diff;
  GradedMaps tmul;
  for (const auto& [n, dim] : m.support()) {
    support[n + k] = dim;
    diff.emplace(n + k, m.diff(n).scaled(sign_of_power(k)));
    tmul.emplace(n + k, m.tmul(n));
  }
  return DgModule(m.algebra(), std::move(support), std::move(diff), std::move(tmul));
}

DgModule direct_sum(const AlgebraDescriptor& algebra, std::span<const DgModule> summands) {
  DgModule acc(algebra);
  for (const auto& s : summands) {
    if (!(s.algebra() == algebra)) throw Error(ErrorCode::algebra_mismatch, "summands over different algebras");
    std::map<int, std::size_t> support = acc.support();
    for (const auto& [n, dim] : s.support()) support[n] += dim;
    GradedMaps diff;
    GradedMaps tmul;
    for (const auto& [n, dim] : support) {
      diff.emplace(n, block_diagonal(acc.diff(n), s.diff(n)));
      tmul.emplace(n, block_diagonal(acc.tmul(n), s.tmul(n)));
    }
    acc = DgModule(algebra, std::move(support), std::move(diff), std::move(tmul));
  }
  return acc;
}

DgModule base_change(const DgModule& m, const GradedMaps& change) {
  const auto& f = m.algebra().field;
  auto forward = [&](int n) {
    const auto it = change.find(n);
    return it == change.end() ? Matrix::identity(f, m.dim(n)) : it->second;
  };
  GradedMaps diff;
  GradedMaps tmul;
  for (const auto& [n, dim] : m.support()) {
    const Matrix back = inverse(forward(n));
    diff.emplace(n, forward(n - 1) * m.diff(n) * back);
    tmul.emplace(n, forward(n + m.algebra().d) * m.tmul(n) * back);
  }
  return DgModule(m.algebra(), m.support(), std::move(diff), std::move(tmul));
}

// ---------------------------------------------------------------------------
// Validation and homology

ModuleCheck validate_module(const DgModule& m) {
  const int d = m.algebra().d;
  const int sign = sign_of_power(d);
  for (const auto& [n, dim] : m.support()) {
    if (!(m.diff(n - 1) * m.diff(n)).is_zero()) return {false, "d2_nonzero", n};
    const Matrix lhs = m.diff(n + d) * m.tmul(n);
    const Matrix rhs = (m.tmul(n - 1) * m.diff(n)).scaled(sign);
    if (!(lhs == rhs)) return {false, "leibniz", n};
  }
  return {};
}

namespace {

struct HomologyBasis {
  Matrix boundaries;       // basis of im ∂_{n+1}
  Matrix representatives;  // cycles completing it to a basis of ker ∂_n
};

HomologyBasis homology_basis(const DgModule& m, int n) {
  const Matrix incoming = m.diff(n + 1);
  Matrix boundaries = incoming.columns(row_reduce(incoming).pivot_cols);
  const Matrix cycles = solve_kernel(m.diff(n));
  const auto ech = row_reduce(hstack(boundaries, cycles));
  std::vector<std::size_t> picked;
  for (auto c : ech.pivot_cols) {
    if (c >= boundaries.cols()) picked.push_back(c - boundaries.cols());
  }
  return {std::move(boundaries), cycles.columns(picked)};
}

}  // namespace

GradedModuleWithOperator homology_with_action(const DgModule& m) {
  const auto check = validate_module(m);
  if (!check.ok) {
    throw Error(ErrorCode::invalid_module, check.reason + " at degree " + std::to_string(*check.degree));
  }
  const int d = m.algebra().d;
  std::map<int, HomologyBasis> bases;
  std::map<int, std::size_t> support;
  for (const auto& [n, dim] : m.support()) {
    auto basis = homology_basis(m, n);
    if (basis.representatives.cols() > 0) {
      support[n] = basis.representatives.cols();
      bases.emplace(n, std::move(basis));
    }
  }
  GradedMaps op;
  for (const auto& [n, basis] : bases) {
    const auto target = bases.find(n + d);
    if (target == bases.end()) continue;
    const auto& tb = target->second;
    const Matrix image = m.tmul(n) * basis.representatives;
    const auto coords = solve(hstack(tb.boundaries, tb.representatives), image);
    if (!coords) throw Error(ErrorCode::invalid_module, "T does not preserve cycles at degree " + std::to_string(n));
    const auto b = tb.boundaries.cols();
    op.emplace(n, coords->block(b, b + tb.representatives.cols(), 0, coords->cols()));
  }
  return GradedModuleWithOperator(m.algebra(), std::move(support), std::move(op));
}

std::vector<Indec> decompose(const GradedModuleWithOperator& h) {
  const int d = h.algebra().d;
  const auto total = static_cast<int>(h.total_dim());
  std::vector<Indec> labels;

  if (d == 0) {
    for (const auto& [n, dim] : h.support()) {
      std::vector<std::size_t> ranks;  // ranks[l] = rank(J^l)
      Matrix power = Matrix::identity(h.algebra().field, dim);
      for (std::size_t l = 0; l <= dim; ++l) {
        ranks.push_back(mat_rank(power));
        power = h.op(n) * power;
      }
      if (ranks.back() != 0) {
        throw Error(ErrorCode::not_in_category,
                    "T acts non-nilpotently on homology in degree " + std::to_string(n));
      }
      // Blocks of length >= l: rank(J^{l-1}) - rank(J^l).
      auto at_least = [&](std::size_t l) { return l > dim ? std::size_t{0} : ranks[l - 1] - ranks[l]; };
      for (std::size_t l = 1; l <= dim; ++l) {
        const auto exact = at_least(l) - at_least(l + 1);
        for (std::size_t c = 0; c < exact; ++c) labels.push_back({n, static_cast<int>(l) - 1});
      }
    }
  } else {
    std::map<std::pair<int, int>, std::size_t> memo;
    auto rank_power = [&](int n, int j) -> std::size_t {
      if (h.dim(n) == 0) return 0;
      const auto key = std::make_pair(n, j);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      const auto r = mat_rank(h.op_power(n, j));
      memo.emplace(key, r);
      return r;
    };
    // Chains starting in degree n of length > j.
    auto starting = [&](int n, int j) -> std::size_t { return rank_power(n, j) - rank_power(n - d, j + 1); };
    for (const auto& [n, dim] : h.support()) {
      for (int j = 0; j < total; ++j) {
        const auto longer = starting(n, j);
        if (longer == 0) break;
        const auto exact = longer - starting(n, j + 1);
        for (std::size_t c = 0; c < exact; ++c) labels.push_back({n, j});
      }
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<Indec> decompose(const DgModule& m) { return decompose(homology_with_action(m)); }

// ---------------------------------------------------------------------------
// Truncation

namespace {

// Per-degree column bases of a graded subspace; absent degrees are zero.
using GradedSubspace = std::map<int, Matrix>;

Matrix subspace_at(const DgModule& m, const GradedSubspace& s, int n) {
  const auto it = s.find(n);
  return it == s.end() ? Matrix::zero(m.algebra().field, m.dim(n), 0) : it->second;
}

Matrix restrict_map(const Matrix& map, const Matrix& source, const Matrix& target, const char* what) {
  const Matrix image = map * source;
  if (target.cols() == 0) {
    if (!image.is_zero()) throw Error(ErrorCode::invalid_module, std::string(what) + " leaves the submodule");
    return Matrix::zero(map.field(), 0, source.cols());
  }
  auto coords = solve(target, image);
  if (!coords) throw Error(ErrorCode::invalid_module, std::string(what) + " leaves the submodule");
  return *coords;
}

DgModule submodule(const DgModule& m, const GradedSubspace& s) {
  const int d = m.algebra().d;
  std::map<int, std::size_t> support;
  GradedMaps diff;
  GradedMaps tmul;
  for (const auto& [n, dim] : m.support()) {
    const Matrix here = subspace_at(m, s, n);
    if (here.cols() == 0) continue;
    support[n] = here.cols();
    diff.emplace(n, restrict_map(m.diff(n), here, subspace_at(m, s, n - 1), "differential"));
    tmul.emplace(n, restrict_map(m.tmul(n), here, subspace_at(m, s, n + d), "T-action"));
  }
  return DgModule(m.algebra(), std::move(support), std::move(diff), std::move(tmul));
}

DgModule quotient(const DgModule& m, const GradedSubspace& s) {
  const int d = m.algebra().d;
  const auto& f = m.algebra().field;
  struct Splitting {
    Matrix lift;        // complement basis, dim x c
    Matrix projection;  // coordinates modulo the subspace, c x dim
  };
  std::map<int, Splitting> split;
  for (const auto& [n, dim] : m.support()) {
    const Matrix sub = subspace_at(m, s, n);
    const Matrix lift = Matrix::identity(f, dim).columns(complement_indices(sub));
    const Matrix full_inverse = inverse(hstack(sub, lift));
    split.emplace(n, Splitting{lift, full_inverse.block(sub.cols(), dim, 0, dim)});
  }
  auto projection = [&](int n, std::size_t cols) {
    const auto it = split.find(n);
    return it == split.end() ? Matrix::zero(f, 0, cols) : it->second.projection;
  };
  std::map<int, std::size_t> support;
  GradedMaps diff;
  GradedMaps tmul;
  for (const auto& [n, parts] : split) {
    if (parts.lift.cols() == 0) continue;
    support[n] = parts.lift.cols();
  }
  for (const auto& [n, parts] : split) {
    if (parts.lift.cols() == 0) continue;
    const Matrix dn = m.diff(n) * parts.lift;
    diff.emplace(n, projection(n - 1, dn.rows()) * dn);
    const Matrix tn = m.tmul(n) * parts.lift;
    tmul.emplace(n, projection(n + d, tn.rows()) * tn);
  }
  return DgModule(m.algebra(), std::move(support), std::move(diff), std::move(tmul));
}

void require_valid(const DgModule& m) {
  const auto check = validate_module(m);
  if (!check.ok) {
    throw Error(ErrorCode::invalid_module, check.reason + " at degree " + std::to_string(*check.degree));
  }
}

}  // namespace

TruncationPair truncate_smart(const DgModule& m, int n) {
  if (m.algebra().d <= 0) {
    throw Error(ErrorCode::wrong_sign, "smart truncation needs d >= 1, got d = " + std::to_string(m.algebra().d));
  }
  require_valid(m);
  GradedSubspace s;
  for (const auto& [k, dim] : m.support()) {
    if (k > n) s.emplace(k, Matrix::identity(m.algebra().field, dim));
    else if (k == n) s.emplace(k, solve_kernel(m.diff(k)));
  }
  return {submodule(m, s), quotient(m, s)};
}

TruncationPair truncate_hard(const DgModule& m, int n) {
  if (m.algebra().d >= 0) {
    throw Error(ErrorCode::wrong_sign, "hard truncation needs d <= -1, got d = " + std::to_string(m.algebra().d));
  }
  require_valid(m);
  GradedSubspace s;
  for (const auto& [k, dim] : m.support()) {
    if (k <= n) s.emplace(k, Matrix::identity(m.algebra().field, dim));
  }
  return {submodule(m, s), quotient(m, s)};
}

}  // namespace sphercat
