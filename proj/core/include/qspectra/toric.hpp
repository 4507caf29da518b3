#pragma once

#include "qspectra/affine.hpp"

namespace qspectra {

/// Grading of the coordinate ring by an abelian group G = Z^m / relations:
/// generator r_i is homogeneous of degree delta_i. The ring itself is the
/// monoid algebra on the delta_i, so every computation routes through the
/// exponent map rho: Z^n -> Z^m, alpha |-> sum alpha_i delta_i.
class GradingData {
public:
  GradingData() = default;
  GradingData(FgAbelianGroup G, std::vector<std::vector<Int>> degrees);

  std::size_t m() const { return G_.ngens(); }
  std::size_t n() const { return degrees_.size(); }
  const FgAbelianGroup& group() const { return G_; }
  const std::vector<Int>& degree(std::size_t i) const { return degrees_[i]; }
  /// m x n matrix with the degrees as columns.
  const IntMatrix& rho() const { return rho_; }

  /// Row space of the relation matrix, as a lattice in Z^m.
  const Lattice& relation_lattice() const { return relations_; }
  /// {v in Z^n : rho(v) = 0 in G}: the relations among the r_i.
  const Lattice& grading_kernel() const { return kernel_; }

private:
  FgAbelianGroup G_;
  std::vector<std::vector<Int>> degrees_;
  IntMatrix rho_;
  Lattice relations_;
  Lattice kernel_;
};

/// Alternating bicharacter on G, encoded on the presentation Z^m exactly
/// like a BicharMatrix. Well-definedness modulo the relations is checked
/// against a GradingData by the operations below.
class GBicharacter {
public:
  GBicharacter() = default;
  GBicharacter(std::size_t m, std::shared_ptr<const CoefficientGroup> group,
               std::vector<IntMatrix> exponent_matrices)
      : data_(m, std::move(group), std::move(exponent_matrices)) {}

  std::size_t m() const { return data_.n(); }
  const BicharMatrix& data() const { return data_; }
  const CoefficientGroup& group() const { return data_.group(); }

private:
  BicharMatrix data_;
};

/// True iff c(r, -) = 1 for every relation row r (c descends to G).
bool well_defined(const GradingData& Gd, const GBicharacter& c);

/// c-tilde = c o (rho x rho), an alternating bicharacter on Z^n; the
/// parameter bicharacter of the quantized ring is its square. Throws if c
/// is not well defined on G.
BicharMatrix pullback(const GradingData& Gd, const GBicharacter& c);

/// The pullback packaged as a cocycle over the same scalar group.
Cocycle pullback_cocycle(const GradingData& Gd, const GBicharacter& c);

struct ToricStratumRadical {
  Lattice s_w;            ///< rad(c_w) as a sublattice of Z^m (contains the relations)
  RadicalLattice s_tilde;  ///< rad of the pullback on the stratum, in Z^n
};

/// rad(c_w) on G_w and its pullback radical, computed two independent
/// ways (directly, and as preimage(rho, S_w) intersected with Gamma_w)
/// and asserted equal; a mismatch is an internal error.
ToricStratumRadical stratum_radical_toric(const GradingData& Gd, const GBicharacter& c,
                                          const std::vector<std::size_t>& stratum);

/// Throws validation_error unless p is a point of the toric variety: its
/// nonvanishing coordinates satisfy the monoid relations on the stratum,
/// and the zero pattern passes the kernel-support face check.
void validate_toric_point(const GradingData& Gd, const Point& p);

/// Image of a classical point of the toric variety under the quotient map,
/// computed through the pullback; generators are read in the a_i = r_i'.
IdealPresentation map_point_toric(const GradingData& Gd, const GBicharacter& c,
                                  const Point& p);

/// Fibre test computed two ways (ratio character through G against the
/// generators of rad(c_w); affine ratio test on the pullback) and asserted
/// equal.
bool same_fibre_toric(const GradingData& Gd, const GBicharacter& c, const Point& a,
                      const Point& b);

struct RefineResult {
  bool radical_inclusion = false;  ///< rad(c2_w) inside rad(c1_w) for every stratum
  std::size_t strata_checked = 0;
  /// Present when the check passes: the images of the point under the two
  /// quotient maps; the c2 ideal's binomial lattice is contained in the
  /// c1 ideal's and the scalar characters agree on it.
  std::optional<std::pair<IdealPresentation, IdealPresentation>> triangle;
};

/// Decidable consequence of "c2(x,y) = 1 implies c1(x,y) = 1" that the
/// commuting-triangle construction consumes, checked stratum by stratum,
/// plus the two point images when it holds.
RefineResult refine(const GradingData& Gd, const GBicharacter& c1,
                    const GBicharacter& c2, const Point& p);

struct GradingReport {
  bool degrees_generate = false;  ///< the delta_i generate G as a group
  bool torsion_visible = false;   ///< char 0, or no G-torsion killed by char p
  std::vector<std::string> notes;
  bool pass() const { return degrees_generate && torsion_visible; }
};

/// Checks that the grading presents a torus action with one-dimensional
/// eigenspaces: degrees generate the group, and every torsion order is
/// visible to characters of the base field.
GradingReport validate_grading(const GradingData& Gd, const Int& characteristic);

}  // namespace qspectra
