#include "qspectra/value_group.hpp"

#include <set>

namespace qspectra {

namespace {

bool is_prime(const Int& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

Int reduce_exponent(const Int& e, const Int& order) {
  if (order == 0) return e;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t());
  return r;
}

}  // namespace

CoefficientGroup::CoefficientGroup(Int characteristic,
                                   std::vector<GroupGenerator> generators)
    : characteristic_(std::move(characteristic)), generators_(std::move(generators)) {
  if (characteristic_ != 0 && !is_prime(characteristic_))
    throw validation_error("characteristic must be 0 or prime");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw validation_error("generator name must be nonempty");
    if (!seen.insert(g.name).second)
      throw validation_error("duplicate generator name: " + g.name);
    if (g.order < 0) throw validation_error("generator order must be nonnegative");
    if (g.order != 0) {
      if (g.order % 2 == 0)
        throw validation_error("generator " + g.name +
                               " has even order; finite orders must be odd");
      if (characteristic_ != 0 && g.order % characteristic_ == 0)
        throw validation_error("generator " + g.name +
                               " has order divisible by the characteristic");
    }
  }
}

std::size_t CoefficientGroup::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < generators_.size(); ++k)
    if (generators_[k].name == name) return k;
  return npos;
}

CoefficientGroup CoefficientGroup::extended_with(
    const std::vector<GroupGenerator>& extra) const {
  std::vector<GroupGenerator> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return CoefficientGroup(characteristic_, std::move(gens));
}

KElement::KElement(std::shared_ptr<const CoefficientGroup> group,
                   std::vector<Int> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (!group_) throw validation_error("null coefficient group");
  if (exponents_.size() != group_->size())
    throw validation_error("exponent vector length mismatch");
  for (std::size_t k = 0; k < exponents_.size(); ++k)
    exponents_[k] = reduce_exponent(exponents_[k], group_->order(k));
}

KElement KElement::one(std::shared_ptr<const CoefficientGroup> group) {
  std::vector<Int> e(group->size());
  return KElement(std::move(group), std::move(e));
}

KElement KElement::generator(std::shared_ptr<const CoefficientGroup> group,
                             std::size_t index, const Int& exponent) {
  std::vector<Int> e(group->size());
  e.at(index) = exponent;
  return KElement(std::move(group), std::move(e));
}

bool KElement::is_one() const {
  for (const Int& e : exponents_)
    if (e != 0) return false;
  return true;
}

bool KElement::operator==(const KElement& other) const {
  if (group_ == other.group_) return exponents_ == other.exponents_;
  return *group_ == *other.group_ && exponents_ == other.exponents_;
}

namespace {

void require_same_group(const KElement& a, const KElement& b) {
  if (a.group_ptr() == b.group_ptr()) return;
  if (!(a.group() == b.group())) throw validation_error("coefficient group mismatch");
}

}  // namespace

KElement k_mul(const KElement& a, const KElement& b) {
  require_same_group(a, b);
  std::vector<Int> e(a.exponents());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.exponents()[k];
  return KElement(a.group_ptr(), std::move(e));
}

KElement k_inv(const KElement& a) {
  std::vector<Int> e(a.exponents());
  for (Int& x : e) x = -x;
  return KElement(a.group_ptr(), std::move(e));
}

KElement k_pow(const KElement& a, const Int& e) {
  std::vector<Int> x(a.exponents());
  for (Int& v : x) v *= e;
  return KElement(a.group_ptr(), std::move(x));
}

bool k_is_one(const KElement& a) { return a.is_one(); }

KElement GroupEmbedding::apply(const KElement& a) const {
  if (!(a.group() == *from)) throw validation_error("embedding domain mismatch");
  std::vector<Int> e(a.exponents());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] *= multiplier[k];
  return KElement(to, std::move(e));
}

bool GroupEmbedding::is_identity() const {
  for (const Int& m : multiplier)
    if (m != 1) return false;
  return *from == *to;
}

GroupEmbedding GroupEmbedding::identity(std::shared_ptr<const CoefficientGroup> g) {
  GroupEmbedding e;
  e.from = g;
  e.to = g;
  e.multiplier.assign(g->size(), Int(1));
  return e;
}

SqrtExtension SqrtExtension::of(std::shared_ptr<const CoefficientGroup> base) {
  SqrtExtension ext;
  ext.base = base;
  std::vector<GroupGenerator> gens;
  ext.halved.resize(base->size());
  GroupEmbedding emb;
  emb.multiplier.resize(base->size());
  for (std::size_t k = 0; k < base->size(); ++k) {
    if (base->order(k) == 0) {
      gens.push_back({"sqrt_" + base->name(k), Int(0)});
      ext.halved[k] = true;
      emb.multiplier[k] = 2;
    } else {
      gens.push_back(base->generators()[k]);
      ext.halved[k] = false;
      emb.multiplier[k] = 1;
    }
  }
  ext.extended = std::make_shared<const CoefficientGroup>(base->characteristic(),
                                                          std::move(gens));
  emb.from = base;
  emb.to = ext.extended;
  ext.embedding = std::move(emb);
  return ext;
}

KElement sqrt(const KElement& a, const SqrtExtension& ext) {
  if (!(a.group() == *ext.base)) throw validation_error("sqrt: element not in base group");
  std::vector<Int> e(a.exponents());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!ext.halved[k]) {
      // odd order t: the internal square root is the (t+1)/2 power
      e[k] *= (ext.base->order(k) + 1) / 2;
    }
  }
  return KElement(ext.extended, std::move(e));
}

KElement lift_by_name(const KElement& a,
                      std::shared_ptr<const CoefficientGroup> target) {
  if (a.group() == *target) return KElement(target, a.exponents());
  std::vector<Int> e(target->size());
  for (std::size_t k = 0; k < a.group().size(); ++k) {
    if (a.exponents()[k] == 0) continue;
    std::size_t j = target->index_of(a.group().name(k));
    if (j == CoefficientGroup::npos)
      throw validation_error("generator " + a.group().name(k) + " not in target group");
    if (target->order(j) != a.group().order(k))
      throw validation_error("generator " + a.group().name(k) +
                             " has a different order in the target group");
    e[j] = a.exponents()[k];
  }
  return KElement(std::move(target), std::move(e));
}

std::shared_ptr<const CoefficientGroup> union_group(
    const std::shared_ptr<const CoefficientGroup>& a,
    const std::shared_ptr<const CoefficientGroup>& b) {
  if (*a == *b) return a;
  if (a->characteristic() != b->characteristic())
    throw validation_error("coefficient groups have different characteristics");
  std::vector<GroupGenerator> extras;
  for (const auto& g : b->generators()) {
    std::size_t j = a->index_of(g.name);
    if (j == CoefficientGroup::npos) {
      extras.push_back(g);
    } else if (a->order(j) != g.order) {
      throw validation_error("generator " + g.name + " has conflicting orders");
    }
  }
  if (extras.empty()) return a;
  return std::make_shared<const CoefficientGroup>(a->extended_with(extras));
}

std::pair<KElement, KElement> common_lift(const KElement& a, const KElement& b) {
  if (a.group_ptr() == b.group_ptr() || a.group() == b.group()) return {a, b};
  auto g = union_group(a.group_ptr(), b.group_ptr());
  return {lift_by_name(a, g), lift_by_name(b, g)};
}

}  // namespace qspectra
