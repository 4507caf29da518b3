#include "qspectra/affine.hpp"

#include <algorithm>
#include <future>

namespace qspectra {

Point::Point(std::shared_ptr<const CoefficientGroup> group,
             std::vector<std::optional<KElement>> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (!group_) throw validation_error("null coefficient group in point");
  for (const auto& c : coords_)
    if (c && !(c->group() == *group_))
      throw validation_error("point coordinate in a different group");
}

const KElement& Point::coord(std::size_t i) const {
  if (!coords_[i]) throw validation_error("coordinate is zero");
  return *coords_[i];
}

std::vector<std::size_t> Point::stratum() const {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i]) w.push_back(i);
  return w;
}

KElement Point::power(const std::vector<Int>& alpha) const {
  if (alpha.size() != n()) throw validation_error("exponent length mismatch");
  KElement acc = KElement::one(group_);
  for (std::size_t j = 0; j < n(); ++j) {
    if (alpha[j] == 0) continue;
    if (!coords_[j])
      throw validation_error("monomial involves a vanishing coordinate");
    acc = k_mul(acc, k_pow(*coords_[j], alpha[j]));
  }
  return acc;
}

bool Point::operator==(const Point& other) const {
  if (n() != other.n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    if (coords_[i].has_value() != other.coords_[i].has_value()) return false;
    if (coords_[i]) {
      auto [x, y] = common_lift(*coords_[i], *other.coords_[i]);
      if (!(x == y)) return false;
    }
  }
  return true;
}

std::pair<std::vector<Int>, std::vector<Int>> split_signs(const std::vector<Int>& v) {
  std::vector<Int> plus(v.size()), minus(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0)
      plus[i] = v[i];
    else
      minus[i] = -v[i];
  }
  return {plus, minus};
}

namespace {

std::vector<std::size_t> mask_to_stratum(std::size_t n, std::size_t mask) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (std::size_t(1) << i)) w.push_back(i);
  return w;
}

StratumSummary summarize(const BicharMatrix& B, const std::vector<std::size_t>& w,
                         bool torus_mode) {
  RadicalLattice rad = radical(B, w);
  StratumSummary s;
  s.stratum = w;
  s.radical_rank = rad.lattice.rank();
  for (std::size_t i = 0; i < rad.lattice.rank(); ++i)
    s.center_monomial_basis.push_back(rad.lattice.basis_row(i));
  s.fibre_dimension = (B.n() - w.size()) - s.radical_rank;
  s.torus_mode = torus_mode;
  return s;
}

}  // namespace

std::vector<StratumSummary> enumerate_strata(const BicharMatrix& B, unsigned threads) {
  const std::size_t n = B.n();
  if (n == 0) throw validation_error("n must be positive");
  if (n > 24) throw validation_error("stratum enumeration capped at n = 24");
  const std::size_t total = std::size_t(1) << n;
  std::vector<StratumSummary> out(total);
  if (threads <= 1) {
    for (std::size_t mask = 0; mask < total; ++mask)
      out[mask] = summarize(B, mask_to_stratum(n, mask), false);
    return out;
  }
  // Per-stratum parallelism; results merged back in counter order.
  const std::size_t nchunks = std::min<std::size_t>(threads, total);
  std::vector<std::future<void>> futs;
  for (std::size_t c = 0; c < nchunks; ++c) {
    futs.push_back(std::async(std::launch::async, [&, c]() {
      for (std::size_t mask = c; mask < total; mask += nchunks)
        out[mask] = summarize(B, mask_to_stratum(n, mask), false);
    }));
  }
  for (auto& f : futs) f.get();
  return out;
}

StratumSummary torus_summary(const BicharMatrix& B) {
  return summarize(B, {}, true);
}

std::vector<std::vector<Int>> center_generators(const BicharMatrix& B,
                                                const std::vector<std::size_t>& stratum) {
  RadicalLattice rad = radical(B, stratum);
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < rad.lattice.rank(); ++i)
    out.push_back(rad.lattice.basis_row(i));
  return out;
}

namespace {

// Move a point-group scalar into the cocycle's scalar group. The point
// group must be the cocycle's base group, the scalar group itself, or
// either of those extended by extra trailing generators (as produced by
// orbit_sample).
KElement to_scalar_group(const Cocycle& C, const KElement& v) {
  const CoefficientGroup& base = *C.from_base.from;
  const CoefficientGroup& target = *C.scalar_group();
  if (v.group() == base) return C.from_base.apply(v);
  if (v.group() == target) return v;
  const std::size_t nb = base.size();
  if (v.group().size() >= nb &&
      std::equal(base.generators().begin(), base.generators().end(),
                 v.group().generators().begin())) {
    std::vector<GroupGenerator> extras(v.group().generators().begin() + nb,
                                       v.group().generators().end());
    auto big = std::make_shared<const CoefficientGroup>(target.extended_with(extras));
    std::vector<Int> e(big->size());
    for (std::size_t k = 0; k < nb; ++k)
      e[k] = v.exponents()[k] * C.from_base.multiplier[k];
    for (std::size_t k = nb; k < v.group().size(); ++k)
      e[target.size() + (k - nb)] = v.exponents()[k];
    return KElement(std::move(big), std::move(e));
  }
  if (v.group().size() >= target.size() &&
      std::equal(target.generators().begin(), target.generators().end(),
                 v.group().generators().begin())) {
    return v;  // already expressed over the scalar group plus extras
  }
  throw validation_error("point coordinates not compatible with the cocycle's groups");
}

Binomial binomial_for(const Cocycle& C, const Point& p, const std::vector<Int>& alpha) {
  auto [plus, minus] = split_signs(alpha);
  KElement lam = to_scalar_group(C, p.power(alpha));
  KElement norm = k_mul(monomial_normalizer(C, plus),
                        k_inv(monomial_normalizer(C, minus)));
  auto [a, b] = common_lift(lam, norm);
  return Binomial{plus, minus, k_mul(a, b)};
}

IdealPresentation map_point_impl(const BicharMatrix& B, const Cocycle& C,
                                 const Point& p, bool laurent) {
  if (p.n() != B.n()) throw validation_error("point length mismatch");
  if (C.n() != B.n()) throw validation_error("cocycle size mismatch");
  if (p.group().characteristic() != 0)
    throw validation_error(
        "ideal generation requires characteristic 0 (fibre tests remain available)");
  IdealPresentation I;
  I.stratum = p.stratum();
  I.variable_gens = I.stratum;
  I.radical = radical(B, I.stratum);
  for (std::size_t r = 0; r < I.radical.lattice.rank(); ++r)
    I.binomial_gens.push_back(binomial_for(C, p, I.radical.lattice.basis_row(r)));
  I.laurent_exact = laurent;
  return I;
}

}  // namespace

IdealPresentation map_point(const BicharMatrix& B, const Cocycle& C, const Point& p) {
  return map_point_impl(B, C, p, true);
}

IdealPresentation torus_map_point(const BicharMatrix& B, const Cocycle& C,
                                  const Point& p) {
  if (!p.stratum().empty())
    throw validation_error("torus points must have all coordinates nonzero");
  return map_point_impl(B, C, p, true);
}

bool same_fibre(const BicharMatrix& B, const Point& a, const Point& b) {
  if (a.n() != B.n() || b.n() != B.n()) throw validation_error("point length mismatch");
  std::vector<std::size_t> w = a.stratum();
  if (w != b.stratum()) return false;
  RadicalLattice rad = radical(B, w);
  auto ug = union_group(a.group_ptr(), b.group_ptr());
  for (std::size_t r = 0; r < rad.lattice.rank(); ++r) {
    std::vector<Int> alpha = rad.lattice.basis_row(r);
    KElement acc = KElement::one(ug);
    for (std::size_t j = 0; j < B.n(); ++j) {
      if (alpha[j] == 0) continue;
      acc = k_mul(acc, k_pow(lift_by_name(b.coord(j), ug), alpha[j]));
      acc = k_mul(acc, k_pow(lift_by_name(a.coord(j), ug), -alpha[j]));
    }
    if (!acc.is_one()) return false;
  }
  return true;
}

std::vector<Point> orbit_sample(const BicharMatrix& B, const Point& p,
                                std::size_t count) {
  if (p.n() != B.n()) throw validation_error("point length mismatch");
  std::vector<std::size_t> w = p.stratum();
  std::vector<std::size_t> comp = stratum_complement(B.n(), w);
  RadicalLattice rad = radical(B, w);

  std::vector<std::vector<Int>> gamma_gens;
  for (std::size_t j : comp) {
    std::vector<Int> e(B.n());
    e[j] = 1;
    gamma_gens.push_back(e);
  }
  Lattice gamma_w = Lattice::from_generators(B.n(), gamma_gens);
  QuotientWitness qw = quotient_witness(gamma_w, rad.lattice);

  // One fresh generator per nontrivial invariant factor of Gamma_w / S_w.
  struct Factor {
    std::size_t row;      // adapted basis row
    Int order;            // 0 = free
    std::size_t gen_idx;  // index in the extended group
  };
  std::vector<Factor> factors;
  std::vector<GroupGenerator> fresh;
  std::size_t nfree = 0, ntor = 0;
  for (std::size_t i = 0; i < qw.divisors.size(); ++i) {
    const Int& d = qw.divisors[i];
    if (d == 1) continue;
    std::string name;
    if (d == 0) {
      name = "h" + std::to_string(++nfree);
    } else {
      if (d % 2 == 0)
        throw validation_error(
            "orbit sampling needs a root of unity of even order " + d.get_str() +
            "; refusing to extend the coefficient group");
      name = "z" + std::to_string(++ntor);
    }
    if (p.group().index_of(name) != CoefficientGroup::npos)
      throw validation_error("generator name " + name +
                             " already taken; rename it in the input group");
    factors.push_back({i, d, p.group().size() + fresh.size()});
    fresh.push_back({name, d});
  }
  auto ext = std::make_shared<const CoefficientGroup>(p.group().extended_with(fresh));

  // Character values on the standard basis of Gamma_w, via adapted coordinates.
  std::vector<std::vector<Int>> coords_of_eps(comp.size());
  for (std::size_t t = 0; t < comp.size(); ++t) {
    std::vector<Int> e(B.n());
    e[comp[t]] = 1;
    coords_of_eps[t] = qw.adapted_coordinates(e);
  }

  bool has_free = nfree > 0;
  Int torsion_total = 1;
  for (const Factor& f : factors)
    if (f.order != 0) torsion_total *= f.order;

  std::vector<Point> out;
  std::size_t s = 0;
  while (out.size() < count) {
    if (!has_free && Int(s) >= torsion_total) break;  // orbit exhausted
    // factor exponents for sample s: mixed radix over torsion factors,
    // s+1 on free factors
    std::vector<Int> fexp(factors.size());
    Int rem = Int(s);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (factors[f].order == 0) {
        fexp[f] = Int(s) + 1;
      } else {
        fexp[f] = rem % factors[f].order;
        rem /= factors[f].order;
      }
    }
    std::vector<std::optional<KElement>> coords(B.n());
    for (std::size_t t = 0; t < comp.size(); ++t) {
      std::vector<Int> e(ext->size());
      for (std::size_t f = 0; f < factors.size(); ++f)
        e[factors[f].gen_idx] = coords_of_eps[t][factors[f].row] * fexp[f];
      KElement hval(ext, std::move(e));
      coords[comp[t]] = k_mul(hval, lift_by_name(p.coord(comp[t]), ext));
    }
    Point q(ext, std::move(coords));
    bool dup = false;
    for (const Point& prev : out)
      if (prev == q) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(q));
    ++s;
  }
  return out;
}

KElement xi_eval(const IdealPresentation& I, const Cocycle& C,
                 const std::vector<Int>& alpha) {
  if (I.binomial_gens.empty()) {
    for (const Int& x : alpha)
      if (x != 0) throw validation_error("vector not in the recorded lattice");
    return KElement::one(C.scalar_group());
  }
  std::vector<std::vector<Int>> diffs;
  for (const Binomial& b : I.binomial_gens) {
    std::vector<Int> d(b.plus.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = b.plus[j] - b.minus[j];
    diffs.push_back(std::move(d));
  }
  auto m = solve_row_system(IntMatrix::from_rows(alpha.size(), diffs), alpha);
  if (!m) throw validation_error("vector not in the recorded lattice");
  KElement acc = KElement::one(C.scalar_group());
  for (std::size_t r = 0; r < I.binomial_gens.size(); ++r) {
    if ((*m)[r] == 0) continue;
    const Binomial& b = I.binomial_gens[r];
    KElement xr = k_mul(k_inv(monomial_normalizer(C, b.plus)),
                        monomial_normalizer(C, b.minus));
    auto [s_l, xr_l] = common_lift(b.scalar, xr);
    KElement xi_r = k_mul(s_l, xr_l);
    auto [acc_l, term] = common_lift(acc, k_pow(xi_r, (*m)[r]));
    acc = k_mul(acc_l, term);
  }
  return acc;
}

bool ideal_contains_binomial(const IdealPresentation& I, const Cocycle& C,
                             const Binomial& cand) {
  auto meets_stratum = [&](const std::vector<Int>& v) {
    for (std::size_t i : I.stratum)
      if (v[i] != 0) return true;
    return false;
  };
  bool pm = meets_stratum(cand.plus), mm = meets_stratum(cand.minus);
  if (pm && mm) return true;  // both monomials lie in <x_i : i in w>
  if (pm != mm) return false;
  std::vector<Int> beta(cand.plus.size());
  for (std::size_t j = 0; j < beta.size(); ++j) beta[j] = cand.plus[j] - cand.minus[j];
  if (!I.radical.lattice.contains(beta)) return false;
  KElement norm = k_mul(monomial_normalizer(C, cand.plus),
                        k_inv(monomial_normalizer(C, cand.minus)));
  auto [xi, norm_l] = common_lift(xi_eval(I, C, beta), norm);
  auto [e, s] = common_lift(k_mul(xi, norm_l), cand.scalar);
  return e == s;
}

bool presentations_equal(const IdealPresentation& a, const Cocycle& CA,
                         const IdealPresentation& b, const Cocycle& CB) {
  if (a.stratum != b.stratum) return false;
  if (!(a.radical.lattice == b.radical.lattice)) return false;
  for (const Binomial& g : b.binomial_gens)
    if (!ideal_contains_binomial(a, CA, g)) return false;
  for (const Binomial& g : a.binomial_gens)
    if (!ideal_contains_binomial(b, CB, g)) return false;
  return true;
}

IdealPresentation make_presentation(std::size_t n,
                                    const std::vector<std::size_t>& stratum,
                                    std::vector<Binomial> binomials,
                                    bool laurent_exact) {
  IdealPresentation I;
  I.stratum = stratum;
  I.variable_gens = stratum;
  std::vector<std::vector<Int>> diffs;
  for (const Binomial& b : binomials) {
    if (b.plus.size() != n || b.minus.size() != n)
      throw validation_error("binomial exponent length mismatch");
    for (std::size_t j = 0; j < n; ++j)
      if (b.plus[j] != 0 && b.minus[j] != 0)
        throw validation_error("binomial sides must have disjoint supports");
    for (std::size_t i : stratum)
      if (b.plus[i] != 0 || b.minus[i] != 0)
        throw validation_error("binomial involves a stratum variable");
    std::vector<Int> d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = b.plus[j] - b.minus[j];
    diffs.push_back(std::move(d));
  }
  I.radical.stratum = stratum;
  I.radical.lattice = Lattice::from_generators(n, diffs);
  I.binomial_gens = std::move(binomials);
  I.laurent_exact = laurent_exact;
  return I;
}

}  // namespace qspectra
