#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/covering.hpp"
#include "gpd/functor.hpp"
#include "gpd/homotopy.hpp"

namespace gpd {

/// Natural isomorphisms witnessing the group axioms up to homotopy.
struct CatGroupWitnesses {
  NaturalIsomorphism associator;     // x(1 x x) ~ x(x x 1) on (G x G) x G
  NaturalIsomorphism right_unitor;   // x i1 ~ 1, a -> a x e
  NaturalIsomorphism left_unitor;    // x i2 ~ 1, a -> e x a
  NaturalIsomorphism right_inverse;  // x(1, u) ~ e
  NaturalIsomorphism left_inverse;   // x(u, 1) ~ e
};

/// A groupoid with product, inverse and unit. Construction checks only the
/// signatures; the axioms are checked by validate_group_groupoid() (strict)
/// or validate_categorical_group() (up to homotopy).
class CatGroupStructure {
 public:
  /// Throws Error{SignatureMismatch} unless tensor : G x G -> G and
  /// inv : G -> G, and Error{UnknownObject} unless unit is an object of G.
  CatGroupStructure(GroupoidPtr carrier, GroupoidMorphism tensor, GroupoidMorphism inv, ObjectId unit);

  const GroupoidPtr& carrier() const noexcept { return carrier_; }
  const GroupoidMorphism& tensor() const noexcept { return tensor_; }
  const GroupoidMorphism& inv() const noexcept { return inv_; }
  ObjectId unit() const noexcept { return unit_; }
  const std::optional<CatGroupWitnesses>& witnesses() const noexcept { return witnesses_; }

  void set_witnesses(CatGroupWitnesses w) { witnesses_ = std::move(w); }

  /// a x b on morphisms and objects.
  MorphismId operator()(MorphismId a, MorphismId b) const;
  ObjectId operator()(ObjectId x, ObjectId y) const;

  /// Witnesses are not compared.
  friend bool operator==(const CatGroupStructure& s, const CatGroupStructure& t);

 private:
  GroupoidPtr carrier_;
  GroupoidMorphism tensor_;
  GroupoidMorphism inv_;
  ObjectId unit_;
  std::optional<CatGroupWitnesses> witnesses_;
};

enum class Axiom {
  TensorFunctor,
  InverseFunctor,
  Associativity,
  RightUnit,
  LeftUnit,
  RightInverse,
  LeftInverse,
};

std::string_view to_string(Axiom axiom) noexcept;

struct AxiomViolation {
  Axiom axiom;
  std::string detail;
  std::vector<std::string> witness;
};

/// First interchange failure (b a) x (d c) != (b x d)(a x c) over composable
/// quadruples, looping a, c, b, d in canonical order. Requires the tensor to
/// respect sources and targets; a typing failure is reported with the pair.
std::optional<AxiomViolation> interchange_violation(const CatGroupStructure& s);

/// Strict group-groupoid axioms as exact functor equalities: tensor and
/// inverse are functors (tensor via interchange), then associativity, unit
/// laws and inverse laws, in that order.
std::optional<AxiomViolation> validate_group_groupoid(const CatGroupStructure& s);

/// The three axioms up to homotopy, five natural isomorphisms in all.
/// Throws Error{AxiomFailed} with witness {axiom name} when a pair is not
/// homotopic or when tensor or inverse is not a functor.
CatGroupWitnesses validate_categorical_group(const CatGroupStructure& s);

/// First morphism pair (a, b) with f(a x b) != f(a) x f(b); nullopt if f is
/// a morphism of categorical groups. Throws Error{SignatureMismatch}.
std::optional<std::pair<MorphismId, MorphismId>> catgroup_morphism_violation(const GroupoidMorphism& f,
                                                                              const CatGroupStructure& s,
                                                                              const CatGroupStructure& t);
bool is_catgroup_morphism(const GroupoidMorphism& f, const CatGroupStructure& s, const CatGroupStructure& t);

/// Transports S along a covering p : G~ -> carrier(S) from a 1-connected G~.
///
/// The lifted product is the lift of x (p x p) at (et, et) and the lifted
/// inverse the lift of u p at et. Each lift is based at et when p(et) is the
/// image of the base point downstairs, otherwise at the first object over
/// that image. Witnesses are recomputed on the lifted structure.
/// Throws Error{NotSimplyConnected}, Error{BasePointMismatch},
/// Error{SignatureMismatch}.
CatGroupStructure lift_categorical_group(const CoveringMorphism& p, const CatGroupStructure& s, ObjectId et);

}  // namespace gpd
