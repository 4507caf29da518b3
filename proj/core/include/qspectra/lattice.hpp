#pragma once

#include <optional>
#include <vector>

#include "qspectra/int_matrix.hpp"

namespace qspectra {

/// Subgroup of Z^n, stored as the unique row-style HNF basis of its row
/// space. Two lattices are equal iff their bases are identical.
class Lattice {
public:
  Lattice() = default;

  static Lattice zero(std::size_t ambient_rank);
  static Lattice full(std::size_t ambient_rank);
  static Lattice from_generators(std::size_t ambient_rank, const IntMatrix& gens);
  static Lattice from_generators(std::size_t ambient_rank,
                                 const std::vector<std::vector<Int>>& gens);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<Int> basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<Int>& v) const;
  bool contains(const Lattice& other) const;

  /// Coordinates of v in this basis, if v lies in the lattice.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

  bool operator==(const Lattice& other) const = default;

private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;  // rank x ambient_rank, HNF
};

/// Solutions x of x * B = v, if any (B arbitrary, not necessarily HNF).
std::optional<std::vector<Int>> solve_row_system(const IntMatrix& B,
                                                 const std::vector<Int>& v);

/// Basis of {x : x * M = 0} as a lattice in Z^rows(M).
Lattice left_kernel(const IntMatrix& M);

/// {alpha in restrict_to : (M * alpha)_i == 0 mod moduli[i]}, where
/// modulus 0 means exact equality. moduli.size() == M.rows(); M has
/// restrict_to.ambient_rank() columns.
Lattice kernel_with_congruences(const IntMatrix& M, const std::vector<Int>& moduli,
                                const Lattice& restrict_to);
/// Same modulus for every row of M.
Lattice kernel_with_congruences(const IntMatrix& M, const Int& modulus,
                                const Lattice& restrict_to);

Lattice intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

/// rho is an m x n matrix mapping Z^n -> Z^m by alpha |-> rho * alpha.
/// preimage: {alpha in Z^n : rho * alpha in L}; image: {rho * alpha : alpha in L}.
Lattice preimage(const IntMatrix& rho, const Lattice& L);
Lattice image(const IntMatrix& rho, const Lattice& L);

/// Finitely generated abelian group Z^ngens / relations, with the divisor
/// chain and an adapted generating set precomputed from Smith form.
class FgAbelianGroup {
public:
  FgAbelianGroup() = default;
  FgAbelianGroup(std::size_t ngens, const IntMatrix& relation_rows);

  std::size_t ngens() const { return ngens_; }
  const IntMatrix& relations() const { return relations_; }
  std::size_t rank() const { return rank_; }
  /// Divisor chain d1 | d2 | ..., entries > 1 only.
  const std::vector<Int>& torsion_orders() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  bool operator==(const FgAbelianGroup& other) const = default;

private:
  std::size_t ngens_ = 0;
  IntMatrix relations_;
  std::size_t rank_ = 0;
  std::vector<Int> torsion_;
};

/// Explicit description of ambient/sub: an adapted basis of ambient such
/// that sub is spanned by divisor[i] * basis_row(i) (divisor 0 = free
/// factor). Used to build characters of the quotient.
struct QuotientWitness {
  IntMatrix adapted_basis;    ///< rank(ambient) rows, each in Z^ambient_rank
  std::vector<Int> divisors;  ///< one per adapted row: 0 free, d >= 1 torsion
  Lattice ambient;
  Lattice sub;

  /// Coordinates of v (must lie in ambient) w.r.t. the adapted basis.
  std::vector<Int> adapted_coordinates(const std::vector<Int>& v) const;
  FgAbelianGroup group() const;
};

/// Throws validation_error unless sub is contained in ambient.
QuotientWitness quotient_witness(const Lattice& ambient, const Lattice& sub);

/// Invariants (rank and divisor-chain torsion) of ambient/sub.
FgAbelianGroup quotient_invariants(const Lattice& ambient, const Lattice& sub);

}  // namespace qspectra
