#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qspectra/int_matrix.hpp"

namespace qspectra {

/// One named generator of the coefficient group; order 0 means infinite.
struct GroupGenerator {
  std::string name;
  Int order;
  bool operator==(const GroupGenerator&) const = default;
};

/// Finitely generated multiplicative subgroup of k^x, presented by
/// independent named generators. Every scalar in the toolkit is an
/// exponent vector over such a group, so all equality tests are exact.
///
/// Finite generator orders must be odd and coprime to the characteristic:
/// odd torsion is how "k^x has no -1 in the parameter subgroup, or char 2"
/// is enforced structurally, and k^x has no p-torsion in characteristic p.
class CoefficientGroup {
public:
  CoefficientGroup() = default;
  CoefficientGroup(Int characteristic, std::vector<GroupGenerator> generators);

  const Int& characteristic() const { return characteristic_; }
  const std::vector<GroupGenerator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Int& order(std::size_t k) const { return generators_[k].order; }
  const std::string& name(std::size_t k) const { return generators_[k].name; }

  /// Index of a generator by name, or npos.
  std::size_t index_of(const std::string& name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// New group with extra generators appended (names must stay unique).
  CoefficientGroup extended_with(const std::vector<GroupGenerator>& extra) const;

  bool operator==(const CoefficientGroup& other) const = default;

private:
  Int characteristic_ = 0;
  std::vector<GroupGenerator> generators_;
};

/// Element of a CoefficientGroup as a reduced exponent vector: exponents
/// of finite-order generators live in [0, order).
class KElement {
public:
  KElement() = default;
  KElement(std::shared_ptr<const CoefficientGroup> group, std::vector<Int> exponents);

  static KElement one(std::shared_ptr<const CoefficientGroup> group);
  static KElement generator(std::shared_ptr<const CoefficientGroup> group,
                            std::size_t index, const Int& exponent = 1);

  const CoefficientGroup& group() const { return *group_; }
  const std::shared_ptr<const CoefficientGroup>& group_ptr() const { return group_; }
  const std::vector<Int>& exponents() const { return exponents_; }

  bool is_one() const;
  bool operator==(const KElement& other) const;

private:
  std::shared_ptr<const CoefficientGroup> group_;
  std::vector<Int> exponents_;
};

KElement k_mul(const KElement& a, const KElement& b);
KElement k_inv(const KElement& a);
KElement k_pow(const KElement& a, const Int& e);
bool k_is_one(const KElement& a);

/// Exponent-scaling map between groups with the same generator count:
/// coordinate k of the source maps to multiplier[k] times coordinate k of
/// the target. Identity embeddings have every multiplier equal to 1.
struct GroupEmbedding {
  std::shared_ptr<const CoefficientGroup> from;
  std::shared_ptr<const CoefficientGroup> to;
  std::vector<Int> multiplier;

  KElement apply(const KElement& a) const;
  bool is_identity() const;

  static GroupEmbedding identity(std::shared_ptr<const CoefficientGroup> g);
};

/// Extension of a coefficient group in which every element has a square
/// root: each infinite-order generator g is replaced by a generator sqrt_g
/// with sqrt_g^2 = g (so base exponents double on those coordinates), and
/// finite odd-order generators keep internal square roots via (t+1)/2.
struct SqrtExtension {
  std::shared_ptr<const CoefficientGroup> base;
  std::shared_ptr<const CoefficientGroup> extended;
  GroupEmbedding embedding;         ///< base -> extended
  std::vector<bool> halved;         ///< per coordinate: true iff sqrt_ generator

  static SqrtExtension of(std::shared_ptr<const CoefficientGroup> base);
};

/// Homomorphic square root: sqrt(a) lies in ext.extended and squares to
/// ext.embedding.apply(a); sqrt(ab) = sqrt(a) sqrt(b).
KElement sqrt(const KElement& a, const SqrtExtension& ext);

/// Lift an element into a group whose generator list contains, by name,
/// every generator of the element's group. Throws validation_error if a
/// name is missing or has a different order.
KElement lift_by_name(const KElement& a, std::shared_ptr<const CoefficientGroup> target);

/// Smallest common group: a's generators followed by b's extras. Shared
/// names must carry identical orders.
std::shared_ptr<const CoefficientGroup> union_group(
    const std::shared_ptr<const CoefficientGroup>& a,
    const std::shared_ptr<const CoefficientGroup>& b);

/// Lift both elements into their union group so they can be compared or
/// multiplied.
std::pair<KElement, KElement> common_lift(const KElement& a, const KElement& b);

}  // namespace qspectra
