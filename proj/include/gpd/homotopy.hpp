#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpd/covering.hpp"
#include "gpd/functor.hpp"

namespace gpd {

/// Components sigma(x) : f(x) -> g(x) for functors f, g : C -> D.
struct NaturalIsomorphism {
  GroupoidMorphism source;
  GroupoidMorphism target;
  std::vector<MorphismId> components;

  MorphismId operator()(ObjectId x) const { return components[x.value]; }
  bool operator==(const NaturalIsomorphism&) const = default;
};

struct NatIsoViolation {
  enum class Kind { Typing, Naturality };
  Kind kind;
  ObjectId object{};       // Typing
  MorphismId morphism{};   // Naturality: the alpha whose square fails
};

/// Throws Error{SignatureMismatch} if source and target differ in domain or
/// codomain, Error{UnknownId} if the component list is malformed. Returns
/// the first failure: typing per object, then naturality per morphism.
std::optional<NatIsoViolation> validate_nat_iso(const NaturalIsomorphism& sigma);

std::string describe(const NaturalIsomorphism& sigma, const NatIsoViolation& v);

/// Identity components on f.
NaturalIsomorphism identity_nat_iso(const GroupoidMorphism& f);
/// g -> f with inverted components.
NaturalIsomorphism inverse_nat_iso(const NaturalIsomorphism& sigma);
/// f -> h from sigma : f -> g and tau : g -> h. Throws Error{SignatureMismatch}.
NaturalIsomorphism compose_nat_isos(const NaturalIsomorphism& sigma, const NaturalIsomorphism& tau);

/// A functor C x J -> D, J the interval groupoid.
struct HomotopyFunctor {
  GroupoidMorphism functor;
};

/// C x J for the interval groupoid J.
GroupoidPtr cylinder(const GroupoidPtr& c);

/// Throws Error{DomainNotCxJ} unless the domain is C x J, and
/// Error{NotAFunctor} unless F is a functor.
HomotopyFunctor make_homotopy(GroupoidMorphism f);

/// F(-, 0) and F(-, 1).
GroupoidMorphism homotopy_start(const HomotopyFunctor& h);
GroupoidMorphism homotopy_end(const HomotopyFunctor& h);

/// F(a, 0) = f(a), F(a, 1) = g(a), F(a, i) = g(a) sigma_x,
/// F(a, i^-1) = f(a) sigma_x^-1 where x = src(a). Throws Error{InvalidNatIso}.
HomotopyFunctor nat_iso_to_homotopy(const NaturalIsomorphism& sigma);

/// sigma(x) = F(1_x, i) from F(-, 0) to F(-, 1).
NaturalIsomorphism homotopy_to_nat_iso(const HomotopyFunctor& h);

/// A natural isomorphism f -> g if one exists, canonically first: per
/// component of the domain, candidates for the base object are tried in
/// canonical order and propagated along the breadth-first spanning tree.
/// Throws Error{SignatureMismatch}.
std::optional<NaturalIsomorphism> are_homotopic(const GroupoidMorphism& f, const GroupoidMorphism& g);

struct LiftedHomotopy {
  HomotopyFunctor homotopy;
  GroupoidMorphism start;
  GroupoidMorphism end;
};

/// Lift of F : C x J -> G through p with F~(z, 0) = xt, for 1-connected C.
/// Throws Error{NotSimplyConnected}, Error{BasePointMismatch}.
LiftedHomotopy lift_homotopy(const CoveringMorphism& p, const HomotopyFunctor& h, ObjectId z, ObjectId xt);

}  // namespace gpd
