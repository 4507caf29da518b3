#include "qspectra/toric.hpp"

#include <algorithm>

namespace qspectra {

GradingData::GradingData(FgAbelianGroup G, std::vector<std::vector<Int>> degrees)
    : G_(std::move(G)), degrees_(std::move(degrees)) {
  const std::size_t m = G_.ngens();
  for (const auto& d : degrees_)
    if (d.size() != m) throw validation_error("degree vector length mismatch");
  rho_ = IntMatrix(m, degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) rho_.at(j, i) = degrees_[i][j];
  relations_ = Lattice::from_generators(m, G_.relations());
  kernel_ = preimage(rho_, relations_);
}

bool well_defined(const GradingData& Gd, const GBicharacter& c) {
  if (c.m() != Gd.m()) return false;
  const IntMatrix& rel = Gd.group().relations();
  for (std::size_t k = 0; k < c.group().size(); ++k) {
    const IntMatrix& C = c.data().matrices()[k];
    const Int& t = c.group().order(k);
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      std::vector<Int> v = row_times_matrix(rel.row(r), C);
      for (const Int& x : v) {
        if (t == 0 ? x != 0 : x % t != 0) return false;
      }
    }
  }
  return true;
}

namespace {

void require_well_defined(const GradingData& Gd, const GBicharacter& c) {
  if (!well_defined(Gd, c))
    throw validation_error(
        "bicharacter is not well defined on G: it does not vanish on a relation");
}

}  // namespace

BicharMatrix pullback(const GradingData& Gd, const GBicharacter& c) {
  require_well_defined(Gd, c);
  const std::size_t n = Gd.n();
  std::vector<IntMatrix> mats;
  IntMatrix rhoT = Gd.rho().transpose();  // n x m
  for (std::size_t k = 0; k < c.group().size(); ++k)
    mats.push_back(rhoT * c.data().matrices()[k] * Gd.rho());
  return BicharMatrix(n, c.data().group_ptr(), std::move(mats));
}

Cocycle pullback_cocycle(const GradingData& Gd, const GBicharacter& c) {
  Cocycle C;
  C.values = pullback(Gd, c);
  C.from_base = GroupEmbedding::identity(C.values.group_ptr());
  return C;
}

ToricStratumRadical stratum_radical_toric(const GradingData& Gd, const GBicharacter& c,
                                          const std::vector<std::size_t>& stratum) {
  require_well_defined(Gd, c);
  const std::size_t m = Gd.m();
  std::vector<std::size_t> comp = stratum_complement(Gd.n(), stratum);

  // U_w = span{delta_i : i not in w} + relations, so that U_w / relations
  // is the subgroup G_w of G.
  std::vector<std::vector<Int>> ugens;
  for (std::size_t i : comp) ugens.push_back(Gd.degree(i));
  Lattice u_w = lattice_sum(Lattice::from_generators(m, ugens), Gd.relation_lattice());

  // rad(c_w): u in U_w with u^T C delta_i == 0 mod order, per generator and
  // per surviving degree (relations impose nothing by well-definedness).
  std::vector<std::vector<Int>> rows;
  std::vector<Int> moduli;
  for (std::size_t k = 0; k < c.group().size(); ++k) {
    const IntMatrix& C = c.data().matrices()[k];
    for (std::size_t i : comp) {
      rows.push_back(matrix_times_col(C, Gd.degree(i)));
      moduli.push_back(c.group().order(k));
    }
  }
  ToricStratumRadical out;
  out.s_w = kernel_with_congruences(IntMatrix::from_rows(m, rows), moduli, u_w);

  // The pullback radical, two ways (the identity is a theorem; disagreement
  // means an implementation bug).
  BicharMatrix ctilde = pullback(Gd, c);
  out.s_tilde = radical(ctilde, stratum);

  std::vector<std::vector<Int>> ggens;
  for (std::size_t j : comp) {
    std::vector<Int> e(Gd.n());
    e[j] = 1;
    ggens.push_back(e);
  }
  Lattice gamma_w = Lattice::from_generators(Gd.n(), ggens);
  Lattice via_preimage = intersect(preimage(Gd.rho(), out.s_w), gamma_w);
  if (!(via_preimage == out.s_tilde.lattice))
    throw internal_error(
        "stratum radical mismatch: preimage(rho, S_w) and rad of the pullback differ");
  return out;
}

void validate_toric_point(const GradingData& Gd, const Point& p) {
  if (p.n() != Gd.n()) throw validation_error("point length mismatch");
  std::vector<std::size_t> w = p.stratum();
  const Lattice& ker = Gd.grading_kernel();

  // Face check: a kernel vector must not relate vanishing and
  // nonvanishing monomials.
  auto supported_off_w = [&](const std::vector<Int>& v) {
    for (std::size_t i : w)
      if (v[i] != 0) return false;
    return true;
  };
  for (std::size_t r = 0; r < ker.rank(); ++r) {
    auto [plus, minus] = split_signs(ker.basis_row(r));
    if (supported_off_w(plus) != supported_off_w(minus))
      throw validation_error(
          "zero pattern is not a face: a monoid relation equates a vanishing and a "
          "nonvanishing monomial");
  }

  // Monoid relations among the surviving coordinates.
  std::vector<std::vector<Int>> ggens;
  for (std::size_t j : stratum_complement(Gd.n(), w)) {
    std::vector<Int> e(Gd.n());
    e[j] = 1;
    ggens.push_back(e);
  }
  Lattice gamma_w = Lattice::from_generators(Gd.n(), ggens);
  Lattice ker_w = intersect(ker, gamma_w);
  for (std::size_t r = 0; r < ker_w.rank(); ++r) {
    auto [plus, minus] = split_signs(ker_w.basis_row(r));
    auto [lp, lm] = common_lift(p.power(plus), p.power(minus));
    if (!(lp == lm))
      throw validation_error("point violates a monoid relation on its stratum");
  }
}

IdealPresentation map_point_toric(const GradingData& Gd, const GBicharacter& c,
                                  const Point& p) {
  validate_toric_point(Gd, p);
  Cocycle C = pullback_cocycle(Gd, c);
  return map_point(C.values.square(), C, p);
}

bool same_fibre_toric(const GradingData& Gd, const GBicharacter& c, const Point& a,
                      const Point& b) {
  validate_toric_point(Gd, a);
  validate_toric_point(Gd, b);
  std::vector<std::size_t> w = a.stratum();
  bool path_i;
  if (w != b.stratum()) {
    path_i = false;
  } else {
    path_i = true;
    ToricStratumRadical rad = stratum_radical_toric(Gd, c, w);
    std::vector<std::size_t> comp = stratum_complement(Gd.n(), w);

    // Express each basis vector of S_w over the surviving degrees and the
    // relations, then evaluate the coordinate-ratio character on it.
    std::vector<std::vector<Int>> rows;
    for (std::size_t i : comp) rows.push_back(Gd.degree(i));
    for (std::size_t r = 0; r < Gd.group().relations().rows(); ++r)
      rows.push_back(Gd.group().relations().row(r));
    IntMatrix sys = IntMatrix::from_rows(Gd.m(), rows);

    auto ug = union_group(a.group_ptr(), b.group_ptr());
    for (std::size_t r = 0; r < rad.s_w.rank() && path_i; ++r) {
      auto sol = solve_row_system(sys, rad.s_w.basis_row(r));
      if (!sol) throw internal_error("S_w vector not expressible over G_w generators");
      KElement acc = KElement::one(ug);
      for (std::size_t t = 0; t < comp.size(); ++t) {
        if ((*sol)[t] == 0) continue;
        acc = k_mul(acc, k_pow(lift_by_name(b.coord(comp[t]), ug), (*sol)[t]));
        acc = k_mul(acc, k_pow(lift_by_name(a.coord(comp[t]), ug), -(*sol)[t]));
      }
      if (!acc.is_one()) path_i = false;
    }
  }

  bool path_ii = same_fibre(pullback(Gd, c).square(), a, b);
  if (path_i != path_ii)
    throw internal_error("toric fibre test mismatch between the G-side and pullback paths");
  return path_i;
}

RefineResult refine(const GradingData& Gd, const GBicharacter& c1,
                    const GBicharacter& c2, const Point& p) {
  require_well_defined(Gd, c1);
  require_well_defined(Gd, c2);
  const std::size_t n = Gd.n();
  if (n > 24) throw validation_error("stratum enumeration capped at n = 24");
  RefineResult res;
  res.radical_inclusion = true;
  const std::size_t total = std::size_t(1) << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) w.push_back(i);
    Lattice s1 = stratum_radical_toric(Gd, c1, w).s_w;
    Lattice s2 = stratum_radical_toric(Gd, c2, w).s_w;
    ++res.strata_checked;
    if (!s1.contains(s2)) {
      res.radical_inclusion = false;
      return res;
    }
  }
  res.triangle = std::make_pair(map_point_toric(Gd, c1, p), map_point_toric(Gd, c2, p));
  return res;
}

GradingReport validate_grading(const GradingData& Gd, const Int& characteristic) {
  GradingReport rep;
  std::vector<std::vector<Int>> dgens;
  for (std::size_t i = 0; i < Gd.n(); ++i) dgens.push_back(Gd.degree(i));
  Lattice span =
      lattice_sum(Lattice::from_generators(Gd.m(), dgens), Gd.relation_lattice());
  rep.degrees_generate = span == Lattice::full(Gd.m());
  if (!rep.degrees_generate)
    rep.notes.push_back("degrees generate a proper subgroup of G");

  rep.torsion_visible = true;
  if (characteristic != 0) {
    for (const Int& d : Gd.group().torsion_orders()) {
      if (d % characteristic == 0) {
        rep.torsion_visible = false;
        rep.notes.push_back("G has " + d.get_str() +
                            "-torsion, invisible in characteristic " +
                            characteristic.get_str());
        break;
      }
    }
  }
  return rep;
}

}  // namespace qspectra
