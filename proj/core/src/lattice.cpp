#include "qspectra/lattice.hpp"

namespace qspectra {

Lattice Lattice::zero(std::size_t ambient_rank) {
  Lattice L;
  L.ambient_rank_ = ambient_rank;
  L.basis_ = IntMatrix(0, ambient_rank);
  return L;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  Lattice L;
  L.ambient_rank_ = ambient_rank;
  L.basis_ = IntMatrix::identity(ambient_rank);
  return L;
}

Lattice Lattice::from_generators(std::size_t ambient_rank, const IntMatrix& gens) {
  if (gens.rows() > 0 && gens.cols() != ambient_rank)
    throw validation_error("lattice generator length mismatch");
  Lattice L;
  L.ambient_rank_ = ambient_rank;
  HermiteResult h = hermite_normal_form(
      gens.rows() == 0 ? IntMatrix(0, ambient_rank) : gens);
  L.basis_ = IntMatrix(h.rank, ambient_rank);
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) L.basis_.at(i, j) = h.H.at(i, j);
  return L;
}

Lattice Lattice::from_generators(std::size_t ambient_rank,
                                 const std::vector<std::vector<Int>>& gens) {
  return from_generators(ambient_rank, IntMatrix::from_rows(ambient_rank, gens));
}

bool Lattice::contains(const std::vector<Int>& v) const {
  return coordinates(v).has_value();
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_rank_ != ambient_rank_)
    throw validation_error("dimension mismatch in lattice containment");
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

std::optional<std::vector<Int>> Lattice::coordinates(const std::vector<Int>& v) const {
  if (v.size() != ambient_rank_)
    throw validation_error("dimension mismatch in lattice membership");
  // Greedy reduction against the HNF basis: pivots are strictly increasing.
  std::vector<Int> r = v;
  std::vector<Int> coeff(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    std::size_t p = 0;
    while (p < ambient_rank_ && basis_.at(i, p) == 0) ++p;
    if (r[p] % basis_.at(i, p) != 0) {
      // pivot does not divide: still possible that v is outside the lattice
      return std::nullopt;
    }
    Int q = r[p] / basis_.at(i, p);
    if (q != 0)
      for (std::size_t j = p; j < ambient_rank_; ++j) r[j] -= q * basis_.at(i, j);
    coeff[i] = q;
  }
  for (const Int& x : r)
    if (x != 0) return std::nullopt;
  return coeff;
}

std::optional<std::vector<Int>> solve_row_system(const IntMatrix& B,
                                                 const std::vector<Int>& v) {
  if (v.size() != B.cols()) throw validation_error("dimension mismatch in solve");
  HermiteResult h = hermite_normal_form(B);
  std::vector<Int> r = v;
  std::vector<Int> c(B.rows());
  for (std::size_t i = 0; i < h.rank; ++i) {
    std::size_t p = 0;
    while (p < B.cols() && h.H.at(i, p) == 0) ++p;
    if (r[p] % h.H.at(i, p) != 0) return std::nullopt;
    Int q = r[p] / h.H.at(i, p);
    if (q != 0)
      for (std::size_t j = p; j < B.cols(); ++j) r[j] -= q * h.H.at(i, j);
    c[i] = q;
  }
  for (const Int& x : r)
    if (x != 0) return std::nullopt;
  return row_times_matrix(c, h.U);
}

Lattice left_kernel(const IntMatrix& M) {
  HermiteResult h = hermite_normal_form(M);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = h.rank; i < M.rows(); ++i) gens.push_back(h.U.row(i));
  return Lattice::from_generators(M.rows(), gens);
}

Lattice kernel_with_congruences(const IntMatrix& M, const std::vector<Int>& moduli,
                                const Lattice& restrict_to) {
  if (M.cols() != restrict_to.ambient_rank())
    throw validation_error("dimension mismatch in kernel_with_congruences");
  if (moduli.size() != M.rows())
    throw validation_error("one modulus per row required");
  for (const Int& t : moduli)
    if (t < 0) throw validation_error("moduli must be nonnegative");
  const std::size_t r = restrict_to.rank();
  const std::size_t k = M.rows();
  if (r == 0) return Lattice::zero(restrict_to.ambient_rank());

  // alpha = x * B; conditions become x * C == 0 with column i read mod
  // moduli[i]. Solve by adjoining one slack row t_i * e_i per finite modulus.
  IntMatrix C = restrict_to.basis() * M.transpose();  // r x k
  std::vector<std::size_t> slack_cols;
  for (std::size_t i = 0; i < k; ++i)
    if (moduli[i] != 0) slack_cols.push_back(i);
  IntMatrix E(r + slack_cols.size(), k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) E.at(i, j) = C.at(i, j);
  for (std::size_t s = 0; s < slack_cols.size(); ++s)
    E.at(r + s, slack_cols[s]) = moduli[slack_cols[s]];

  Lattice Z = left_kernel(E);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < Z.rank(); ++i) {
    std::vector<Int> z = Z.basis_row(i);
    std::vector<Int> x(z.begin(), z.begin() + r);
    gens.push_back(row_times_matrix(x, restrict_to.basis()));
  }
  return Lattice::from_generators(restrict_to.ambient_rank(), gens);
}

Lattice kernel_with_congruences(const IntMatrix& M, const Int& modulus,
                                const Lattice& restrict_to) {
  return kernel_with_congruences(M, std::vector<Int>(M.rows(), modulus), restrict_to);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw validation_error("dimension mismatch in intersect");
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.ambient_rank());
  IntMatrix E = a.basis().vstack(-b.basis());
  Lattice Z = left_kernel(E);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < Z.rank(); ++i) {
    std::vector<Int> z = Z.basis_row(i);
    std::vector<Int> x(z.begin(), z.begin() + a.rank());
    gens.push_back(row_times_matrix(x, a.basis()));
  }
  return Lattice::from_generators(a.ambient_rank(), gens);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw validation_error("dimension mismatch in lattice_sum");
  return Lattice::from_generators(a.ambient_rank(), a.basis().vstack(b.basis()));
}

Lattice preimage(const IntMatrix& rho, const Lattice& L) {
  if (rho.rows() != L.ambient_rank())
    throw validation_error("dimension mismatch in preimage");
  const std::size_t n = rho.cols();
  // v in preimage iff v * rho^T lies in the row space of L's basis.
  IntMatrix E = rho.transpose();
  if (L.rank() > 0) E = E.vstack(-L.basis());
  Lattice Z = left_kernel(E);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < Z.rank(); ++i) {
    std::vector<Int> z = Z.basis_row(i);
    gens.emplace_back(z.begin(), z.begin() + n);
  }
  return Lattice::from_generators(n, gens);
}

Lattice image(const IntMatrix& rho, const Lattice& L) {
  if (rho.cols() != L.ambient_rank())
    throw validation_error("dimension mismatch in image");
  if (L.rank() == 0) return Lattice::zero(rho.rows());
  return Lattice::from_generators(rho.rows(), L.basis() * rho.transpose());
}

FgAbelianGroup::FgAbelianGroup(std::size_t ngens, const IntMatrix& relation_rows)
    : ngens_(ngens), relations_(relation_rows) {
  if (relations_.rows() > 0 && relations_.cols() != ngens)
    throw validation_error("relation length mismatch");
  if (relations_.rows() == 0) relations_ = IntMatrix(0, ngens);
  SmithResult s = smith_normal_form(relations_);
  std::size_t nz = s.divisors.size();
  rank_ = ngens - nz;
  for (const Int& d : s.divisors)
    if (d > 1) torsion_.push_back(d);
}

std::vector<Int> QuotientWitness::adapted_coordinates(const std::vector<Int>& v) const {
  auto c = ambient.coordinates(v);
  if (!c) throw validation_error("vector not in ambient lattice");
  auto x = solve_row_system(adapted_basis, row_times_matrix(*c, ambient.basis()));
  if (!x) throw internal_error("adapted basis does not span ambient");
  return *x;
}

FgAbelianGroup QuotientWitness::group() const {
  std::vector<std::vector<Int>> rel;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] != 0) {
      std::vector<Int> row(divisors.size());
      row[i] = divisors[i];
      rel.push_back(row);
    }
  }
  return FgAbelianGroup(divisors.size(), IntMatrix::from_rows(divisors.size(), rel));
}

QuotientWitness quotient_witness(const Lattice& ambient, const Lattice& sub) {
  if (ambient.ambient_rank() != sub.ambient_rank())
    throw validation_error("dimension mismatch in quotient");
  // Express sub's basis in ambient coordinates.
  std::vector<std::vector<Int>> xrows;
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = ambient.coordinates(sub.basis_row(i));
    if (!c) throw validation_error("sub lattice not contained in ambient");
    xrows.push_back(*c);
  }
  const std::size_t ra = ambient.rank();
  IntMatrix X = IntMatrix::from_rows(ra, xrows);
  SmithResult s = smith_normal_form(X);
  // V^{-1} via HNF: a unimodular matrix reduces to the identity, so the
  // recorded transform is its inverse.
  HermiteResult hv = hermite_normal_form(s.V);
  if (!hv.H.is_identity()) throw internal_error("SNF transform not unimodular");
  QuotientWitness w;
  w.ambient = ambient;
  w.sub = sub;
  w.adapted_basis = hv.U * ambient.basis();
  w.divisors.assign(ra, Int(0));
  for (std::size_t i = 0; i < s.divisors.size(); ++i) w.divisors[i] = s.divisors[i];
  return w;
}

FgAbelianGroup quotient_invariants(const Lattice& ambient, const Lattice& sub) {
  QuotientWitness w = quotient_witness(ambient, sub);
  return w.group();
}

}  // namespace qspectra
