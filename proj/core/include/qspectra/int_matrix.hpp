#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qspectra {

/// Exact arbitrary-precision integer.
using Int = mpz_class;

/// Raised when user-supplied data fails validation (CLI exit code 2).
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a computation violates an identity that is a theorem
/// (CLI exit code 1); always indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Dense rectangular matrix over Z. Row-major, value semantics.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& v);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  /// row a <- row a + c * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t i);

  /// Stack other below this (column counts must agree).
  IntMatrix vstack(const IntMatrix& other) const;
  /// Columns [c0, c1) of every row.
  IntMatrix col_slice(std::size_t c0, std::size_t c1) const;
  /// Rows with index in keep, in the given order.
  IntMatrix select_rows(const std::vector<std::size_t>& keep) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// v * M for a row vector v (length = M.rows()).
std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& M);
/// M * v for a column vector v (length = M.cols()).
std::vector<Int> matrix_times_col(const IntMatrix& M, const std::vector<Int>& v);

/// Determinant by fraction-free (Bareiss) elimination; square input.
Int determinant(const IntMatrix& M);

struct HermiteResult {
  IntMatrix H;  ///< row-style HNF of the input, zero rows at the bottom
  IntMatrix U;  ///< unimodular, U * M = H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form with positive pivots: pivots step right,
/// entries below a pivot are zero, entries above are reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& M);

struct SmithResult {
  IntMatrix U;  ///< unimodular, rows x rows
  IntMatrix D;  ///< diagonal with divisor chain d1 | d2 | ...
  IntMatrix V;  ///< unimodular, cols x cols
  std::vector<Int> divisors;  ///< nonzero diagonal entries, in chain order
};

/// U * M * V = D, D diagonal with nonnegative entries forming a divisor chain.
SmithResult smith_normal_form(const IntMatrix& M);

}  // namespace qspectra
