#pragma once

// Exact arithmetic over GF(p) and dense linear algebra on small matrices.
//
// Elimination is deterministic: columns are scanned left to right and the
// topmost row holding a nonzero entry in the current column becomes the pivot.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sphercat {

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws Error(not_prime) unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = x % m;
    return static_cast<std::uint32_t>(r < 0 ? r + m : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over a prime field. A 0 x n or n x 0 matrix is a
/// valid zero map.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix zero(PrimeField field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(PrimeField field, std::size_t n);
  /// Entries are reduced mod p, so negative integers are accepted.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = field_.reduce(value);
  }

  bool is_zero() const noexcept;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  Matrix block(std::size_t row0, std::size_t row1, std::size_t col0, std::size_t col1) const;
  Matrix columns(const std::vector<std::size_t>& indices) const;
  Matrix transposed() const;
  Matrix scaled(std::int64_t factor) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// [a | b]; both must have the same number of rows.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; both must have the same number of columns.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal matrix diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // ascending
};

RowEchelon row_reduce(const Matrix& m);

std::size_t mat_rank(const Matrix& m);

/// Columns form a basis of ker(m), one per free column of the echelon form.
Matrix solve_kernel(const Matrix& m);

/// dim ker(d_out) - rank(d_in). Throws composite_not_zero if d_out * d_in != 0.
std::size_t homology_dim(const Matrix& d_in, const Matrix& d_out);

/// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Throws Error(singular) if m is not square and invertible.
Matrix inverse(const Matrix& m);

/// Indices of the standard basis vectors that extend the (independent)
/// columns of `basis` to a basis of the ambient space.
std::vector<std::size_t> complement_indices(const Matrix& basis);

}  // namespace sphercat
