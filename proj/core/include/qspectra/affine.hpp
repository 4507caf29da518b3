#pragma once

#include <optional>

#include "qspectra/bichar.hpp"

namespace qspectra {

/// Classical point of k^n: each coordinate is either Zero or a nonzero
/// scalar from the declared coefficient group (or an extension of it).
/// The stratum of a point is its set of zero positions.
class Point {
public:
  Point() = default;
  Point(std::shared_ptr<const CoefficientGroup> group,
        std::vector<std::optional<KElement>> coords);

  std::size_t n() const { return coords_.size(); }
  const std::shared_ptr<const CoefficientGroup>& group_ptr() const { return group_; }
  const CoefficientGroup& group() const { return *group_; }

  bool is_zero(std::size_t i) const { return !coords_[i].has_value(); }
  const KElement& coord(std::size_t i) const;
  const std::vector<std::optional<KElement>>& coords() const { return coords_; }

  /// Sorted 0-based zero positions.
  std::vector<std::size_t> stratum() const;

  /// prod_j coord_j^(alpha_j); alpha must vanish on the stratum.
  KElement power(const std::vector<Int>& alpha) const;

  bool operator==(const Point& other) const;

private:
  std::shared_ptr<const CoefficientGroup> group_;
  std::vector<std::optional<KElement>> coords_;
};

/// x^plus - scalar * x^minus.
struct Binomial {
  std::vector<Int> plus;
  std::vector<Int> minus;
  KElement scalar;
};

/// Generators of a prime/primitive ideal of the quantized algebra:
/// the stratum variables plus scalar-twisted binomials whose exponent
/// differences run over an HNF basis of the recorded radical lattice.
///
/// laurent_exact records the certified contract: the generators describe
/// the ideal exactly in the localization A_w (for the quantum torus the
/// ambient algebra itself); whether the polynomial-ring ideal needs
/// saturation by the inverted variables is not computed here.
struct IdealPresentation {
  std::vector<std::size_t> stratum;        ///< sorted, 0-based
  std::vector<std::size_t> variable_gens;  ///< = stratum
  std::vector<Binomial> binomial_gens;
  RadicalLattice radical;
  bool laurent_exact = true;
};

struct StratumSummary {
  std::vector<std::size_t> stratum;
  std::size_t radical_rank = 0;
  std::vector<std::vector<Int>> center_monomial_basis;
  std::size_t fibre_dimension = 0;
  bool torus_mode = false;
};

/// One summary per subset of {0,...,n-1}, ordered by binary counter
/// (index i in bit i). Throws for n > 24.
std::vector<StratumSummary> enumerate_strata(const BicharMatrix& B,
                                             unsigned threads = 1);

/// Summary of the quantum torus (the empty stratum, torus_mode set).
StratumSummary torus_summary(const BicharMatrix& B);

/// Exponent vectors of central monomials: an HNF basis of rad(sigma_w).
std::vector<std::vector<Int>> center_generators(const BicharMatrix& B,
                                                const std::vector<std::size_t>& stratum);

/// Image of a classical point under the quotient map onto prim of quantum
/// affine n-space: variables for the stratum plus, per HNF basis vector
/// alpha = alpha_plus - alpha_minus of rad(sigma_w), the binomial
///   x^(alpha_plus) - s x^(alpha_minus),
/// s = lambda^alpha * n(alpha_plus) * n(alpha_minus)^{-1}.
/// Requires characteristic 0.
IdealPresentation map_point(const BicharMatrix& B, const Cocycle& C, const Point& p);

/// Quantum-torus version: every coordinate must be nonzero.
IdealPresentation torus_map_point(const BicharMatrix& B, const Cocycle& C,
                                  const Point& p);

/// Decides whether two points map to the same primitive ideal: equal
/// strata and the coordinate-ratio character killing every basis vector
/// of rad(sigma_w).
bool same_fibre(const BicharMatrix& B, const Point& a, const Point& b);

/// Points h.lambda for characters h orthogonal to rad(sigma_w), built on
/// the invariant factors of Gamma_w / rad(sigma_w): free factors get
/// fresh formal generators, torsion factors of odd order d get a fresh
/// order-d root of unity. Even torsion is reported as an error rather
/// than silently extended. Every returned point is in the fibre of p.
std::vector<Point> orbit_sample(const BicharMatrix& B, const Point& p,
                                std::size_t count);

/// The x-basis character of the presentation: xi(alpha) for alpha in the
/// recorded radical lattice, where a binomial generator carries scalar
/// s = xi(alpha) * n(alpha_plus) * n(alpha_minus)^{-1}. For ideals produced
/// by map_point, xi(alpha) = lambda^alpha.
KElement xi_eval(const IdealPresentation& I, const Cocycle& C,
                 const std::vector<Int>& alpha);

/// Normal-form membership for lattice-coset binomials: exponent-vector
/// reduction modulo the recorded radical lattice with scalar tracking.
bool ideal_contains_binomial(const IdealPresentation& I, const Cocycle& C,
                             const Binomial& cand);

/// Equality of the presented ideals in A_w: same stratum, equal binomial
/// lattices, and matching scalar characters. Robust against redundant or
/// differently chosen generating sets. CA and CB are the cocycles the two
/// presentations were built with (usually the same object).
bool presentations_equal(const IdealPresentation& a, const Cocycle& CA,
                         const IdealPresentation& b, const Cocycle& CB);

/// Presentation with the given binomials over an explicitly recorded
/// lattice (the span of the exponent differences). For tests and for
/// encoding published generator tables.
IdealPresentation make_presentation(std::size_t n,
                                    const std::vector<std::size_t>& stratum,
                                    std::vector<Binomial> binomials,
                                    bool laurent_exact = true);

/// Positive/negative part split of an integer vector.
std::pair<std::vector<Int>, std::vector<Int>> split_signs(const std::vector<Int>& v);

}  // namespace qspectra
