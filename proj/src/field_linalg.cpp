#include "sphercat/field_linalg.hpp"

#include <string>

#include "sphercat/error.hpp"

namespace sphercat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::composite_not_zero: return "CompositeNotZero";
    case ErrorCode::singular: return "Singular";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::invalid_module: return "InvalidModule";
    case ErrorCode::not_in_category: return "NotInCategory";
    case ErrorCode::wrong_sign: return "WrongSign";
    case ErrorCode::undefined_for_tube: return "UndefinedForTube";
    case ErrorCode::window_too_small: return "WindowTooSmall";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::not_prime, std::to_string(p) + " is not a prime below 2^31");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::singular, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::shape_mismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const noexcept {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t row1, std::size_t col0, std::size_t col1) const {
  if (row0 > row1 || row1 > rows_ || col0 > col1 || col1 > cols_) {
    throw Error(ErrorCode::shape_mismatch, "block out of range");
  }
  Matrix out(field_, row1 - row0, col1 - col0);
  for (std::size_t i = row0; i < row1; ++i)
    for (std::size_t j = col0; j < col1; ++j) out.data_[(i - row0) * out.cols_ + (j - col0)] = (*this)(i, j);
  return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& indices) const {
  Matrix out(field_, rows_, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= cols_) throw Error(ErrorCode::shape_mismatch, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i * out.cols_ + k] = (*this)(i, indices[k]);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
  return out;
}

Matrix Matrix::scaled(std::int64_t factor) const {
  Matrix out(*this);
  const auto f = field_.reduce(factor);
  for (auto& v : out.data_) v = field_.mul(v, f);
  return out;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::shape_mismatch, "matrices over different fields");
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::shape_mismatch, "product of " + std::to_string(a.rows()) + "x" +
                                               std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                               "x" + std::to_string(b.cols()));
  }
  const auto& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out(i, j), f.mul(aik, b(k, j))));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::shape_mismatch, "sum shape");
  Matrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.field().add(a(i, j), b(i, j)));
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-1); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(ErrorCode::shape_mismatch, "hstack row count");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b(i, j));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw Error(ErrorCode::shape_mismatch, "vstack column count");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, j, a(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) out.set(a.rows() + i, j, b(i, j));
  }
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

RowEchelon row_reduce(const Matrix& m) {
  Matrix a(m);
  const auto& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto tmp = a(row, j);
        a.set(row, j, a(pivot, j));
        a.set(pivot, j, tmp);
      }
    }
    const auto scale = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.set(row, j, f.mul(a(row, j), scale));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const auto factor = a(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a.set(i, j, f.sub(a(i, j), f.mul(factor, a(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t mat_rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

Matrix solve_kernel(const Matrix& m) {
  const auto ech = row_reduce(m);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto fc = free_cols[k];
    basis.set(fc, k, 1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      basis.set(ech.pivot_cols[r], k, f.neg(ech.reduced(r, fc)));
    }
  }
  return basis;
}

std::size_t homology_dim(const Matrix& d_in, const Matrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw Error(ErrorCode::shape_mismatch, "maps are not composable");
  if (!(d_out * d_in).is_zero()) throw Error(ErrorCode::composite_not_zero, "d_out * d_in != 0");
  return (d_out.cols() - mat_rank(d_out)) - mat_rank(d_in);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::shape_mismatch, "solve: row counts differ");
  const auto ech = row_reduce(hstack(a, b));
  const auto& f = a.field();
  const auto n = a.cols();
  Matrix x(f, n, b.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const auto pc = ech.pivot_cols[r];
    if (pc >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, ech.reduced(r, n + j));
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::singular, "non-square matrix");
  const auto n = m.rows();
  const auto ech = row_reduce(hstack(m, Matrix::identity(m.field(), n)));
  if (ech.pivot_cols.size() < n || (n > 0 && ech.pivot_cols[n - 1] != n - 1)) {
    throw Error(ErrorCode::singular, "matrix is not invertible");
  }
  return ech.reduced.block(0, n, n, 2 * n);
}

std::vector<std::size_t> complement_indices(const Matrix& basis) {
  const auto n = basis.rows();
  const auto ech = row_reduce(hstack(basis, Matrix::identity(basis.field(), n)));
  std::vector<std::size_t> out;
  for (auto c : ech.pivot_cols) {
    if (c >= basis.cols()) out.push_back(c - basis.cols());
  }
  return out;
}

}  // namespace sphercat
