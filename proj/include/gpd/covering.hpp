#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

/// A functor certified to restrict to a bijection on every star, together
/// with the inverses of those restrictions.
class CoveringMorphism {
 public:
  const GroupoidMorphism& functor() const noexcept { return functor_; }
  const GroupoidPtr& domain() const noexcept { return functor_.domain(); }
  const GroupoidPtr& codomain() const noexcept { return functor_.codomain(); }

  ObjectId operator()(ObjectId x) const { return functor_(x); }
  MorphismId operator()(MorphismId a) const { return functor_(a); }

  /// The unique morphism in star(domain, xt) mapped to `g`.
  /// Requires src(g) == p(xt).
  MorphismId lift(ObjectId xt, MorphismId g) const;

 private:
  friend CoveringMorphism check_covering(const GroupoidMorphism& p);
  explicit CoveringMorphism(GroupoidMorphism f) : functor_(std::move(f)) {}

  GroupoidMorphism functor_;
  // star_inverse_[xt][k] lifts the k-th morphism of star(codomain, p(xt)).
  std::vector<std::vector<MorphismId>> star_inverse_;
};

/// Certifies `p` as a covering morphism.
///
/// Throws Error{NotAFunctor} if p is not a functor and Error{NotCovering}
/// naming the first object (canonical order) whose star restriction is not
/// injective or not surjective. The witness is
/// {object, "injectivity"|"surjectivity", |domain star|, |codomain star|}.
CoveringMorphism check_covering(const GroupoidMorphism& p);

/// p[G~(xt)] as a subgroup of G(p(xt)).
Subgroup characteristic_group(const CoveringMorphism& p, ObjectId xt);

/// The unique functor qt : K -> G~ with p qt = q and qt(z) = xt.
///
/// Throws Error{NotConnected} when K is not connected,
/// Error{SignatureMismatch} when q does not land in the base of p,
/// Error{BasePointMismatch} when p(xt) != q(z), and
/// Error{CriterionFailed} when q[K(z)] is not inside p[G~(xt)]; the witness
/// is {loop in K(z), its image} for the first loop whose image falls outside.
GroupoidMorphism lift_morphism(const CoveringMorphism& p, const GroupoidMorphism& q, ObjectId z, ObjectId xt);

struct Factorization {
  CoveringMorphism r;
  bool is_isomorphism;
};

/// For connected coverings p : (G~, xt) -> (G, x) and q : (H~, zt) -> (G, x)
/// with characteristic groups C within D, the unique covering r with
/// p = q r and r(xt) = zt. Throws Error{NotConnected},
/// Error{BasePointMismatch}, Error{CharGroupNotContained}.
Factorization factor_covering(const CoveringMorphism& p, ObjectId xt, const CoveringMorphism& q, ObjectId zt);

/// Both groupoids connected and every hom-set of the domain has at most one
/// element.
bool is_universal_covering(const CoveringMorphism& p);

/// Covering codiscrete(star(G, x)) -> G sending the object a to tgt(a) and
/// the morphism a>b to b a^-1. Throws Error{NotConnected}.
CoveringMorphism universal_cover(const GroupoidPtr& g, ObjectId x);

/// Covering of a connected G whose characteristic group at the object
/// "[1_x]" is `h`. Objects are classes of star(G, x) under a ~ a k (k in h),
/// named after their first member in brackets; the morphism g leaving [a] is
/// named "[a]g". Throws Error{NotConnected}, Error{NotAGroup} when h is not
/// a subgroup of G(x).
CoveringMorphism subgroup_cover(const GroupoidPtr& g, ObjectId x, const Subgroup& h);

/// Composite of two coverings, certified.
CoveringMorphism compose_coverings(const CoveringMorphism& p, const CoveringMorphism& q);

}  // namespace gpd
