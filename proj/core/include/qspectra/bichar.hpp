#pragma once

#include <vector>

#include "qspectra/lattice.hpp"
#include "qspectra/value_group.hpp"

namespace qspectra {

/// Multiplicatively antisymmetric parameter matrix q, encoded as one n x n
/// integer exponent matrix per coefficient-group generator:
///   q_ij = prod_k g_k^(Q_k[i][j]),   sigma(a, b) = prod_k g_k^(a^T Q_k b).
/// Antisymmetry (q_ii = 1, q_ji = q_ij^{-1}) becomes Q + Q^T == 0 and
/// diag(Q) == 0 modulo each generator's order.
class BicharMatrix {
public:
  BicharMatrix() = default;
  BicharMatrix(std::size_t n, std::shared_ptr<const CoefficientGroup> group,
               std::vector<IntMatrix> exponent_matrices);

  std::size_t n() const { return n_; }
  const std::shared_ptr<const CoefficientGroup>& group_ptr() const { return group_; }
  const CoefficientGroup& group() const { return *group_; }
  const std::vector<IntMatrix>& matrices() const { return mats_; }

  KElement entry(std::size_t i, std::size_t j) const;

  /// The pointwise square (the bicharacter b^2); same shape of data.
  BicharMatrix square() const;

private:
  std::size_t n_ = 0;
  std::shared_ptr<const CoefficientGroup> group_;
  std::vector<IntMatrix> mats_;
};

/// sigma(alpha, beta), bilinear in the exponents. Vectors of length n.
KElement sigma_eval(const BicharMatrix& B, const std::vector<Int>& alpha,
                    const std::vector<Int>& beta);

/// rad(sigma_w) as a sublattice of Gamma_w = {a : a_i = 0 for i in w}.
/// Strata use 0-based indices internally.
struct RadicalLattice {
  std::vector<std::size_t> stratum;  ///< sorted, 0-based
  Lattice lattice;
};

/// {alpha in Gamma_w : sigma(alpha, -) = 1 on Gamma_w}, HNF-canonical.
RadicalLattice radical(const BicharMatrix& B, const std::vector<std::size_t>& stratum);

/// Alternating bicharacter c with c^2 = sigma, stored like a BicharMatrix
/// but over the scalar group of the construction that produced it (the
/// sqrt extension for quantum affine spaces, the grading group's
/// coefficient group for toric pullbacks). from_base embeds point
/// coordinates (given over the base group) into the scalar group.
struct Cocycle {
  BicharMatrix values;       ///< c(e_i, e_j) exponents, over scalar group
  GroupEmbedding from_base;  ///< base coefficient group -> scalar group

  std::size_t n() const { return values.n(); }
  const std::shared_ptr<const CoefficientGroup>& scalar_group() const {
    return values.group_ptr();
  }

  KElement eval(const std::vector<Int>& alpha, const std::vector<Int>& beta) const {
    return sigma_eval(values, alpha, beta);
  }
};

/// Canonical square-root cocycle of B: c(e_i, e_j) = sqrt(q_ij) for i < j,
/// extended bilinearly. Satisfies c alternating, c^2 = sigma,
/// c(a,b)c(b,a) = 1, and c(a,b) = 1 whenever sigma(a,b) = 1.
Cocycle build_cocycle(const BicharMatrix& B);

/// Scalar n(beta) with x_1^(b_1) ... x_n^(b_n) = n(beta) x_beta in the
/// twisted semigroup algebra: n(beta) = prod_{i<j} c(e_i,e_j)^(b_i b_j).
/// Entries of beta must be nonnegative.
KElement monomial_normalizer(const Cocycle& C, const std::vector<Int>& beta);

/// Complement of a stratum inside {0,...,n-1}.
std::vector<std::size_t> stratum_complement(std::size_t n,
                                            const std::vector<std::size_t>& stratum);

}  // namespace qspectra
