#include "gpd/functor.hpp"

#include <algorithm>

#include "gpd/constructions.hpp"
#include "gpd/error.hpp"

namespace gpd {

GroupoidMorphism::GroupoidMorphism(GroupoidPtr domain, GroupoidPtr codomain, std::vector<ObjectId> object_map,
                                   std::vector<MorphismId> morphism_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      objects_(std::move(object_map)),
      morphisms_(std::move(morphism_map)) {
  if (objects_.size() != domain_->object_count() || morphisms_.size() != domain_->morphism_count()) {
    throw Error(Errc::UnknownId, "functor maps are not total on the domain");
  }
  for (auto x : objects_) {
    if (!codomain_->contains(x)) throw Error(Errc::UnknownId, "object image outside the codomain");
  }
  for (auto a : morphisms_) {
    if (!codomain_->contains(a)) throw Error(Errc::UnknownId, "morphism image outside the codomain");
  }
}

GroupoidMorphism GroupoidMorphism::from_names(GroupoidPtr domain, GroupoidPtr codomain,
                                              const std::vector<std::pair<std::string, std::string>>& objects,
                                              const std::vector<std::pair<std::string, std::string>>& morphisms) {
  std::vector<std::optional<ObjectId>> om(domain->object_count());
  for (const auto& [from, to] : objects) {
    const auto x = domain->find_object(from);
    if (!x) throw Error(Errc::UnknownId, "functor maps unknown object '" + from + "'", {from});
    const auto y = codomain->find_object(to);
    if (!y) throw Error(Errc::UnknownId, "functor image '" + to + "' is not an object of the codomain", {to});
    if (om[x->value]) throw Error(Errc::DuplicateId, "object '" + from + "' mapped twice", {from});
    om[x->value] = *y;
  }
  std::vector<std::optional<MorphismId>> mm(domain->morphism_count());
  for (const auto& [from, to] : morphisms) {
    const auto a = domain->find_morphism(from);
    if (!a) throw Error(Errc::UnknownId, "functor maps unknown morphism '" + from + "'", {from});
    const auto b = codomain->find_morphism(to);
    if (!b) throw Error(Errc::UnknownId, "functor image '" + to + "' is not a morphism of the codomain", {to});
    if (mm[a->value]) throw Error(Errc::DuplicateId, "morphism '" + from + "' mapped twice", {from});
    mm[a->value] = *b;
  }
  std::vector<ObjectId> objs;
  for (auto x : domain->objects()) {
    if (!om[x.value]) {
      throw Error(Errc::UnknownId, "object '" + domain->name(x) + "' has no image", {domain->name(x)});
    }
    objs.push_back(*om[x.value]);
  }
  std::vector<MorphismId> mors;
  for (auto a : domain->morphisms()) {
    if (!mm[a.value]) {
      throw Error(Errc::UnknownId, "morphism '" + domain->name(a) + "' has no image", {domain->name(a)});
    }
    mors.push_back(*mm[a.value]);
  }
  return GroupoidMorphism(std::move(domain), std::move(codomain), std::move(objs), std::move(mors));
}

bool operator==(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  return f.objects_ == g.objects_ && f.morphisms_ == g.morphisms_ && same_groupoid(f.domain_, g.domain_) &&
         same_groupoid(f.codomain_, g.codomain_);
}

std::optional<FunctorViolation> validate_functor(const GroupoidMorphism& f) {
  using Kind = FunctorViolation::Kind;
  const Groupoid& c = *f.domain();
  const Groupoid& d = *f.codomain();
  for (auto a : c.morphisms()) {
    if (d.src(f(a)) != f(c.src(a))) return FunctorViolation{Kind::Source, a};
    if (d.tgt(f(a)) != f(c.tgt(a))) return FunctorViolation{Kind::Target, a};
  }
  for (auto a : c.morphisms()) {
    for (auto b : c.star(c.tgt(a))) {
      if (f(c.compose(a, b)) != d.compose(f(a), f(b))) return FunctorViolation{Kind::Composition, a, b};
    }
  }
  for (auto x : c.objects()) {
    if (f(c.identity(x)) != d.identity(f(x))) return FunctorViolation{Kind::Identity, {}, {}, x};
  }
  for (auto a : c.morphisms()) {
    if (f(c.inverse(a)) != d.inverse(f(a))) return FunctorViolation{Kind::Inverse, a};
  }
  return std::nullopt;
}

std::string describe(const GroupoidMorphism& f, const FunctorViolation& v) {
  const Groupoid& c = *f.domain();
  const Groupoid& d = *f.codomain();
  using Kind = FunctorViolation::Kind;
  switch (v.kind) {
    case Kind::Source:
      return "source of f(" + c.name(v.first) + ") = " + d.name(f(v.first)) + " is not f(" +
             c.name(c.src(v.first)) + ")";
    case Kind::Target:
      return "target of f(" + c.name(v.first) + ") = " + d.name(f(v.first)) + " is not f(" +
             c.name(c.tgt(v.first)) + ")";
    case Kind::Composition: {
      const MorphismId ba = c.compose(v.first, v.second);
      return "f(" + c.name(v.second) + " " + c.name(v.first) + ") = " + d.name(f(ba)) + " but f(" +
             c.name(v.second) + ") f(" + c.name(v.first) + ") = " +
             d.name(d.compose(f(v.first), f(v.second)));
    }
    case Kind::Identity:
      return "f(1_" + c.name(v.object) + ") = " + d.name(f(c.identity(v.object))) + " is not 1_" +
             d.name(f(v.object));
    case Kind::Inverse:
      return "f(" + c.name(v.first) + "^-1) = " + d.name(f(c.inverse(v.first))) + " is not f(" +
             c.name(v.first) + ")^-1";
  }
  return {};
}

void require_functor(const GroupoidMorphism& f, const std::string& what) {
  if (auto v = validate_functor(f)) {
    throw Error(Errc::NotAFunctor, what + " is not a functor: " + describe(f, *v));
  }
}

GroupoidMorphism identity_functor(const GroupoidPtr& g) {
  std::vector<ObjectId> objs(g->objects().begin(), g->objects().end());
  std::vector<MorphismId> mors(g->morphisms().begin(), g->morphisms().end());
  return GroupoidMorphism(g, g, std::move(objs), std::move(mors));
}

GroupoidMorphism compose_functors(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  if (!same_groupoid(f.codomain(), g.domain())) {
    throw Error(Errc::DomainMismatch, "codomain of the first functor is not the domain of the second");
  }
  std::vector<ObjectId> objs;
  for (auto x : f.object_map()) objs.push_back(g(x));
  std::vector<MorphismId> mors;
  for (auto a : f.morphism_map()) mors.push_back(g(a));
  return GroupoidMorphism(f.domain(), g.codomain(), std::move(objs), std::move(mors));
}

namespace {

template <typename Id>
bool is_bijection(std::span<const Id> map, std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (auto id : map) {
    if (hit[id.value]) return false;
    hit[id.value] = true;
  }
  return true;
}

}  // namespace

bool is_isomorphism(const GroupoidMorphism& f) {
  return is_bijection(f.object_map(), f.codomain()->object_count()) &&
         is_bijection(f.morphism_map(), f.codomain()->morphism_count());
}

std::optional<GroupoidMorphism> inverse_functor(const GroupoidMorphism& f) {
  if (!is_isomorphism(f)) return std::nullopt;
  std::vector<ObjectId> objs(f.codomain()->object_count());
  for (auto x : f.domain()->objects()) objs[f(x).value] = x;
  std::vector<MorphismId> mors(f.codomain()->morphism_count());
  for (auto a : f.domain()->morphisms()) mors[f(a).value] = a;
  return GroupoidMorphism(f.codomain(), f.domain(), std::move(objs), std::move(mors));
}

GroupoidMorphism constant_functor(const GroupoidPtr& g, const GroupoidPtr& h, ObjectId e) {
  if (!h->contains(e)) throw Error(Errc::UnknownObject, "constant value is not an object of the codomain");
  return GroupoidMorphism(g, h, std::vector<ObjectId>(g->object_count(), e),
                          std::vector<MorphismId>(g->morphism_count(), h->identity(e)));
}

// ---------------------------------------------------------------------------

namespace {

const ProductFactors& factors_of(const GroupoidPtr& p) {
  if (!p->is_product()) throw Error(Errc::DomainNotProduct, "groupoid is not a product");
  return *p->factors();
}

}  // namespace

ProductWithProjections product_with_projections(const GroupoidPtr& g, const GroupoidPtr& h) {
  auto p = product(g, h);
  return {p, projection_left(p), projection_right(p)};
}

GroupoidMorphism projection_left(const GroupoidPtr& p) {
  const auto& f = factors_of(p);
  std::vector<ObjectId> objs;
  for (auto x : p->objects()) objs.push_back(p->left(x));
  std::vector<MorphismId> mors;
  for (auto a : p->morphisms()) mors.push_back(p->left(a));
  return GroupoidMorphism(p, f.left, std::move(objs), std::move(mors));
}

GroupoidMorphism projection_right(const GroupoidPtr& p) {
  const auto& f = factors_of(p);
  std::vector<ObjectId> objs;
  for (auto x : p->objects()) objs.push_back(p->right(x));
  std::vector<MorphismId> mors;
  for (auto a : p->morphisms()) mors.push_back(p->right(a));
  return GroupoidMorphism(p, f.right, std::move(objs), std::move(mors));
}

namespace {

GroupoidMorphism injection(const GroupoidPtr& g, ObjectId e, bool left) {
  if (!g->contains(e)) throw Error(Errc::UnknownObject, "injection base point is not an object");
  auto p = product(g, g);
  const MorphismId one = g->identity(e);
  std::vector<ObjectId> objs;
  for (auto x : g->objects()) objs.push_back(left ? p->pair(x, e) : p->pair(e, x));
  std::vector<MorphismId> mors;
  for (auto a : g->morphisms()) mors.push_back(left ? p->pair(a, one) : p->pair(one, a));
  return GroupoidMorphism(g, p, std::move(objs), std::move(mors));
}

}  // namespace

GroupoidMorphism injection_left(const GroupoidPtr& g, ObjectId e) { return injection(g, e, true); }
GroupoidMorphism injection_right(const GroupoidPtr& g, ObjectId e) { return injection(g, e, false); }

GroupoidMorphism induced_partial(const GroupoidMorphism& f, ObjectId x) {
  const auto& p = f.domain();
  const auto& fac = factors_of(p);
  if (!fac.left->contains(x)) throw Error(Errc::UnknownObject, "object not in the left factor");
  const MorphismId one = fac.left->identity(x);
  std::vector<ObjectId> objs;
  for (auto d : fac.right->objects()) objs.push_back(f(p->pair(x, d)));
  std::vector<MorphismId> mors;
  for (auto b : fac.right->morphisms()) mors.push_back(f(p->pair(one, b)));
  return GroupoidMorphism(fac.right, f.codomain(), std::move(objs), std::move(mors));
}

GroupoidMorphism induced_partial_right(const GroupoidMorphism& f, ObjectId y) {
  const auto& p = f.domain();
  const auto& fac = factors_of(p);
  if (!fac.right->contains(y)) throw Error(Errc::UnknownObject, "object not in the right factor");
  const MorphismId one = fac.right->identity(y);
  std::vector<ObjectId> objs;
  for (auto c : fac.left->objects()) objs.push_back(f(p->pair(c, y)));
  std::vector<MorphismId> mors;
  for (auto a : fac.left->morphisms()) mors.push_back(f(p->pair(a, one)));
  return GroupoidMorphism(fac.left, f.codomain(), std::move(objs), std::move(mors));
}

GroupoidMorphism product_functor(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  auto dom = product(f.domain(), g.domain());
  auto cod = product(f.codomain(), g.codomain());
  std::vector<ObjectId> objs;
  for (auto x : dom->objects()) objs.push_back(cod->pair(f(dom->left(x)), g(dom->right(x))));
  std::vector<MorphismId> mors;
  for (auto a : dom->morphisms()) mors.push_back(cod->pair(f(dom->left(a)), g(dom->right(a))));
  return GroupoidMorphism(dom, cod, std::move(objs), std::move(mors));
}

GroupoidMorphism pairing(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  if (!same_groupoid(f.domain(), g.domain())) {
    throw Error(Errc::DomainMismatch, "paired functors must share their domain");
  }
  auto cod = product(f.codomain(), g.codomain());
  std::vector<ObjectId> objs;
  for (auto x : f.domain()->objects()) objs.push_back(cod->pair(f(x), g(x)));
  std::vector<MorphismId> mors;
  for (auto a : f.domain()->morphisms()) mors.push_back(cod->pair(f(a), g(a)));
  return GroupoidMorphism(f.domain(), cod, std::move(objs), std::move(mors));
}

GroupoidMorphism rebracket(const GroupoidPtr& left_nested) {
  const auto& outer = factors_of(left_nested);
  const auto& inner_p = outer.left;
  const auto& inner = factors_of(inner_p);
  auto target = product(inner.left, product(inner.right, outer.right));
  const auto& tail = target->factors()->right;
  std::vector<ObjectId> objs;
  for (auto x : left_nested->objects()) {
    const ObjectId ab = left_nested->left(x);
    objs.push_back(target->pair(inner_p->left(ab), tail->pair(inner_p->right(ab), left_nested->right(x))));
  }
  std::vector<MorphismId> mors;
  for (auto m : left_nested->morphisms()) {
    const MorphismId ab = left_nested->left(m);
    mors.push_back(target->pair(inner_p->left(ab), tail->pair(inner_p->right(ab), left_nested->right(m))));
  }
  return GroupoidMorphism(left_nested, target, std::move(objs), std::move(mors));
}

}  // namespace gpd
