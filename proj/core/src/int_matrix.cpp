#include "qspectra/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace qspectra {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw validation_error("ragged matrix initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<std::vector<Int>>& rows) {
  IntMatrix M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw validation_error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = rows[i][j];
  }
  return M;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMatrix::set_row(std::size_t i, const std::vector<Int>& v) {
  if (v.size() != cols_) throw validation_error("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw validation_error("dimension mismatch in matrix product");
  IntMatrix P(rows_, other.cols_);
  Int acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        acc = a * other.at(k, j);
        P.at(i, j) += acc;
      }
    }
  }
  return P;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix N(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) N.data_[i] = -data_[i];
  return N;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
  if (rows_ == 0 && cols_ == 0) return other;
  if (other.rows_ == 0 && other.cols_ == 0) return *this;
  if (cols_ != other.cols_) throw validation_error("dimension mismatch in vstack");
  IntMatrix S(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) S.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) S.at(rows_ + i, j) = other.at(i, j);
  return S;
}

IntMatrix IntMatrix::col_slice(std::size_t c0, std::size_t c1) const {
  IntMatrix S(rows_, c1 - c0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = c0; j < c1; ++j) S.at(i, j - c0) = at(i, j);
  return S;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& keep) const {
  IntMatrix S(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) S.at(i, j) = at(keep[i], j);
  return S;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& M) {
  if (v.size() != M.rows()) throw validation_error("dimension mismatch in row*matrix");
  std::vector<Int> out(M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < M.cols(); ++j) out[j] += v[i] * M.at(i, j);
  }
  return out;
}

std::vector<Int> matrix_times_col(const IntMatrix& M, const std::vector<Int>& v) {
  if (v.size() != M.cols()) throw validation_error("dimension mismatch in matrix*col");
  std::vector<Int> out(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (v[j] != 0) out[i] += M.at(i, j) * v[j];
  return out;
}

Int determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw validation_error("determinant of non-square matrix");
  std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A.at(p, k) == 0) ++p;
      if (p == n) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        mpz_divexact(A.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      A.at(i, k) = 0;
    }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : Int(-A.at(n - 1, n - 1));
}

namespace {

// Combine rows r and i so that position (r, c) holds gcd and (i, c) zero;
// the 2x2 transform has determinant 1. When the pivot already divides the
// target only a subtraction is performed, so clearing passes make monotone
// progress (a gcdext cofactor pair like (0, 1) would otherwise swap a dirty
// row back in).
void gcd_combine_rows(IntMatrix& A, IntMatrix& U, std::size_t r, std::size_t i,
                      std::size_t c) {
  Int a = A.at(r, c), b = A.at(i, c);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    Int q = b / a;
    A.add_row_multiple(i, r, -q);
    U.add_row_multiple(i, r, -q);
    return;
  }
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int ag = a / g, bg = b / g;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    Int Ar = A.at(r, j), Ai = A.at(i, j);
    A.at(r, j) = x * Ar + y * Ai;
    A.at(i, j) = ag * Ai - bg * Ar;
  }
  for (std::size_t j = 0; j < U.cols(); ++j) {
    Int Ur = U.at(r, j), Ui = U.at(i, j);
    U.at(r, j) = x * Ur + y * Ui;
    U.at(i, j) = ag * Ui - bg * Ur;
  }
}

void gcd_combine_cols(IntMatrix& A, IntMatrix& V, std::size_t r, std::size_t i,
                      std::size_t c) {
  Int a = A.at(c, r), b = A.at(c, i);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    Int q = b / a;
    for (std::size_t j = 0; j < A.rows(); ++j) A.at(j, i) -= q * A.at(j, r);
    for (std::size_t j = 0; j < V.rows(); ++j) V.at(j, i) -= q * V.at(j, r);
    return;
  }
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int ag = a / g, bg = b / g;
  for (std::size_t j = 0; j < A.rows(); ++j) {
    Int Ar = A.at(j, r), Ai = A.at(j, i);
    A.at(j, r) = x * Ar + y * Ai;
    A.at(j, i) = ag * Ai - bg * Ar;
  }
  for (std::size_t j = 0; j < V.rows(); ++j) {
    Int Vr = V.at(j, r), Vi = V.at(j, i);
    V.at(j, r) = x * Vr + y * Vi;
    V.at(j, i) = ag * Vi - bg * Vr;
  }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& M) {
  HermiteResult res;
  res.H = M;
  res.U = IntMatrix::identity(M.rows());
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && H.at(p, c) == 0) ++p;
    if (p == M.rows()) continue;
    H.swap_rows(r, p);
    U.swap_rows(r, p);
    for (std::size_t i = r + 1; i < M.rows(); ++i) gcd_combine_rows(H, U, r, i, c);
    if (H.at(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
      if (q != 0) {
        H.add_row_multiple(i, r, -q);
        U.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SmithResult smith_normal_form(const IntMatrix& M) {
  SmithResult res;
  res.D = M;
  res.U = IntMatrix::identity(M.rows());
  res.V = IntMatrix::identity(M.cols());
  IntMatrix& D = res.D;
  std::size_t n = std::min(M.rows(), M.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    // find a nonzero pivot in the trailing submatrix
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < M.rows() && !found; ++i)
      for (std::size_t j = t; j < M.cols() && !found; ++j)
        if (D.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    D.swap_rows(t, pi);
    res.U.swap_rows(t, pi);
    if (pj != t) {  // column swap
      for (std::size_t i = 0; i < M.rows(); ++i) std::swap(D.at(i, t), D.at(i, pj));
      for (std::size_t i = 0; i < M.cols(); ++i) std::swap(res.V.at(i, t), res.V.at(i, pj));
    }
    for (;;) {
      for (std::size_t i = t + 1; i < M.rows(); ++i) gcd_combine_rows(D, res.U, t, i, t);
      for (std::size_t j = t + 1; j < M.cols(); ++j) gcd_combine_cols(D, res.V, t, j, t);
      bool row_clear = true, col_clear = true;
      for (std::size_t i = t + 1; i < M.rows(); ++i)
        if (D.at(i, t) != 0) row_clear = false;
      for (std::size_t j = t + 1; j < M.cols(); ++j)
        if (D.at(t, j) != 0) col_clear = false;
      if (row_clear && col_clear) {
        // enforce divisibility of the remaining block by the pivot
        bool fixed = true;
        for (std::size_t i = t + 1; i < M.rows() && fixed; ++i)
          for (std::size_t j = t + 1; j < M.cols() && fixed; ++j)
            if (D.at(i, j) % D.at(t, t) != 0) {
              D.add_row_multiple(t, i, 1);
              res.U.add_row_multiple(t, i, 1);
              fixed = false;
            }
        if (fixed) break;
      }
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      res.U.negate_row(t);
    }
  }
  for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(D.at(i, i));
  return res;
}

}  // namespace qspectra
