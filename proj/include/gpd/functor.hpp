#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

/// A pair of maps (objects, morphisms) from one groupoid to another.
///
/// Construction only checks that both maps are total and land in the
/// codomain; whether they form a functor is decided by validate_functor().
class GroupoidMorphism {
 public:
  GroupoidMorphism(GroupoidPtr domain, GroupoidPtr codomain, std::vector<ObjectId> object_map,
                   std::vector<MorphismId> morphism_map);

  /// Builds the maps from name pairs. Throws Error{UnknownId} when a name is
  /// absent or a domain id has no image.
  static GroupoidMorphism from_names(GroupoidPtr domain, GroupoidPtr codomain,
                                     const std::vector<std::pair<std::string, std::string>>& objects,
                                     const std::vector<std::pair<std::string, std::string>>& morphisms);

  const GroupoidPtr& domain() const noexcept { return domain_; }
  const GroupoidPtr& codomain() const noexcept { return codomain_; }

  ObjectId operator()(ObjectId x) const { return objects_[x.value]; }
  MorphismId operator()(MorphismId a) const { return morphisms_[a.value]; }

  std::span<const ObjectId> object_map() const noexcept { return objects_; }
  std::span<const MorphismId> morphism_map() const noexcept { return morphisms_; }

  /// Equal maps between structurally equal groupoids.
  friend bool operator==(const GroupoidMorphism& f, const GroupoidMorphism& g);

 private:
  GroupoidPtr domain_;
  GroupoidPtr codomain_;
  std::vector<ObjectId> objects_;
  std::vector<MorphismId> morphisms_;
};

struct FunctorViolation {
  enum class Kind { Source, Target, Composition, Identity, Inverse };
  Kind kind;
  MorphismId first{};   // a; the morphism at fault for Source/Target/Inverse
  MorphismId second{};  // b, for Composition
  ObjectId object{};    // for Identity
};

/// First violation in canonical order: src/tgt per morphism, then
/// composable pairs (a, b), then identities, then inverses.
std::optional<FunctorViolation> validate_functor(const GroupoidMorphism& f);

/// Human-readable account of a violation, using names.
std::string describe(const GroupoidMorphism& f, const FunctorViolation& v);

/// Throws Error{NotAFunctor} carrying the description.
void require_functor(const GroupoidMorphism& f, const std::string& what);

GroupoidMorphism identity_functor(const GroupoidPtr& g);

/// g after f. Throws Error{DomainMismatch} unless codomain(f) == domain(g).
GroupoidMorphism compose_functors(const GroupoidMorphism& f, const GroupoidMorphism& g);

/// Both maps bijective.
bool is_isomorphism(const GroupoidMorphism& f);

/// Inverse of an isomorphism; std::nullopt when f is not bijective.
std::optional<GroupoidMorphism> inverse_functor(const GroupoidMorphism& f);

GroupoidMorphism constant_functor(const GroupoidPtr& g, const GroupoidPtr& h, ObjectId e);

// ---------------------------------------------------------------------------
// Products.

struct ProductWithProjections {
  GroupoidPtr groupoid;
  GroupoidMorphism left;
  GroupoidMorphism right;
};

ProductWithProjections product_with_projections(const GroupoidPtr& g, const GroupoidPtr& h);

/// Projections out of a product groupoid. Throw Error{DomainNotProduct}.
GroupoidMorphism projection_left(const GroupoidPtr& p);
GroupoidMorphism projection_right(const GroupoidPtr& p);

/// a -> (a, 1_e) into G x G; objects x -> (x, e).
GroupoidMorphism injection_left(const GroupoidPtr& g, ObjectId e);
/// a -> (1_e, a) into G x G.
GroupoidMorphism injection_right(const GroupoidPtr& g, ObjectId e);

/// F(x, -) : D -> E for F : C x D -> E and x in C.
GroupoidMorphism induced_partial(const GroupoidMorphism& f, ObjectId x);
/// F(-, y) : C -> E.
GroupoidMorphism induced_partial_right(const GroupoidMorphism& f, ObjectId y);

/// f x g : A x B -> C x D.
GroupoidMorphism product_functor(const GroupoidMorphism& f, const GroupoidMorphism& g);
/// <f, g> : C -> D x E.
GroupoidMorphism pairing(const GroupoidMorphism& f, const GroupoidMorphism& g);
/// (A x B) x C -> A x (B x C) for a left-nested triple product.
GroupoidMorphism rebracket(const GroupoidPtr& left_nested);

}  // namespace gpd
