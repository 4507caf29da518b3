#include "qspectra/bichar.hpp"

#include <algorithm>

namespace qspectra {

namespace {

bool congruent_zero(const Int& x, const Int& order) {
  if (order == 0) return x == 0;
  return x % order == 0;
}

}  // namespace

BicharMatrix::BicharMatrix(std::size_t n,
                           std::shared_ptr<const CoefficientGroup> group,
                           std::vector<IntMatrix> exponent_matrices)
    : n_(n), group_(std::move(group)), mats_(std::move(exponent_matrices)) {
  if (!group_) throw validation_error("null coefficient group");
  if (mats_.size() != group_->size())
    throw validation_error("one exponent matrix per generator required");
  for (std::size_t k = 0; k < mats_.size(); ++k) {
    const IntMatrix& Q = mats_[k];
    if (Q.rows() != n_ || Q.cols() != n_)
      throw validation_error("exponent matrix must be n x n");
    const Int& t = group_->order(k);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!congruent_zero(Q.at(i, i), t))
        throw validation_error("parameter matrix not alternating: q_ii != 1");
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!congruent_zero(Q.at(i, j) + Q.at(j, i), t))
          throw validation_error(
              "parameter matrix not multiplicatively antisymmetric");
    }
  }
}

KElement BicharMatrix::entry(std::size_t i, std::size_t j) const {
  std::vector<Int> e(group_->size());
  for (std::size_t k = 0; k < mats_.size(); ++k) e[k] = mats_[k].at(i, j);
  return KElement(group_, std::move(e));
}

BicharMatrix BicharMatrix::square() const {
  std::vector<IntMatrix> sq(mats_.size());
  for (std::size_t k = 0; k < mats_.size(); ++k) {
    sq[k] = IntMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) sq[k].at(i, j) = 2 * mats_[k].at(i, j);
  }
  return BicharMatrix(n_, group_, std::move(sq));
}

KElement sigma_eval(const BicharMatrix& B, const std::vector<Int>& alpha,
                    const std::vector<Int>& beta) {
  if (alpha.size() != B.n() || beta.size() != B.n())
    throw validation_error("vector length mismatch in bicharacter evaluation");
  std::vector<Int> e(B.group().size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    const IntMatrix& Q = B.matrices()[k];
    Int acc = 0;
    for (std::size_t i = 0; i < B.n(); ++i) {
      if (alpha[i] == 0) continue;
      Int rowdot = 0;
      for (std::size_t j = 0; j < B.n(); ++j)
        if (beta[j] != 0) rowdot += Q.at(i, j) * beta[j];
      acc += alpha[i] * rowdot;
    }
    e[k] = acc;
  }
  return KElement(B.group_ptr(), std::move(e));
}

std::vector<std::size_t> stratum_complement(std::size_t n,
                                            const std::vector<std::size_t>& stratum) {
  std::vector<std::size_t> comp;
  std::size_t si = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (si < stratum.size() && stratum[si] == i)
      ++si;
    else
      comp.push_back(i);
  }
  return comp;
}

RadicalLattice radical(const BicharMatrix& B, const std::vector<std::size_t>& stratum) {
  const std::size_t n = B.n();
  for (std::size_t i : stratum)
    if (i >= n) throw validation_error("stratum index out of range");
  if (!std::is_sorted(stratum.begin(), stratum.end()))
    throw validation_error("stratum indices must be sorted");

  std::vector<std::size_t> comp = stratum_complement(n, stratum);

  // Gamma_w as a sublattice of Z^n.
  std::vector<std::vector<Int>> gens;
  for (std::size_t j : comp) {
    std::vector<Int> e(n);
    e[j] = 1;
    gens.push_back(e);
  }
  Lattice gamma_w = Lattice::from_generators(n, gens);

  // sigma(alpha, e_j) = prod_k g_k^((Q_k^T alpha)_j); require the rows of
  // Q_k^T indexed by the complement to vanish modulo the generator order.
  std::vector<std::vector<Int>> rows;
  std::vector<Int> moduli;
  for (std::size_t k = 0; k < B.group().size(); ++k) {
    IntMatrix Qt = B.matrices()[k].transpose();
    for (std::size_t j : comp) {
      rows.push_back(Qt.row(j));
      moduli.push_back(B.group().order(k));
    }
  }
  IntMatrix M = IntMatrix::from_rows(n, rows);
  RadicalLattice rad;
  rad.stratum = stratum;
  rad.lattice = kernel_with_congruences(M, moduli, gamma_w);
  return rad;
}

Cocycle build_cocycle(const BicharMatrix& B) {
  SqrtExtension ext = SqrtExtension::of(B.group_ptr());
  const std::size_t n = B.n();
  std::vector<IntMatrix> cm(ext.extended->size(), IntMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      KElement cij = sqrt(B.entry(i, j), ext);
      for (std::size_t k = 0; k < ext.extended->size(); ++k) {
        cm[k].at(i, j) = cij.exponents()[k];
        cm[k].at(j, i) = -cij.exponents()[k];
      }
    }
  }
  Cocycle c;
  c.values = BicharMatrix(n, ext.extended, std::move(cm));
  c.from_base = ext.embedding;
  return c;
}

KElement monomial_normalizer(const Cocycle& C, const std::vector<Int>& beta) {
  if (beta.size() != C.n())
    throw validation_error("vector length mismatch in monomial normalizer");
  for (const Int& b : beta)
    if (b < 0) throw validation_error("monomial normalizer requires nonnegative exponents");
  std::vector<Int> e(C.scalar_group()->size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    const IntMatrix& M = C.values.matrices()[k];
    Int acc = 0;
    for (std::size_t i = 0; i < C.n(); ++i) {
      if (beta[i] == 0) continue;
      for (std::size_t j = i + 1; j < C.n(); ++j)
        if (beta[j] != 0) acc += M.at(i, j) * beta[i] * beta[j];
    }
    e[k] = acc;
  }
  return KElement(C.scalar_group(), std::move(e));
}

}  // namespace qspectra
