#include "gpd/homotopy.hpp"

#include <stdexcept>

#include "gpd/constructions.hpp"
#include "gpd/error.hpp"

namespace gpd {

namespace {

void require_parallel(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  if (!same_groupoid(f.domain(), g.domain()) || !same_groupoid(f.codomain(), g.codomain())) {
    throw Error(Errc::SignatureMismatch, "functors must share domain and codomain");
  }
}

// Interval morphism positions inside C x J.
constexpr std::uint32_t kId0 = 0;
constexpr std::uint32_t kId1 = 1;
constexpr std::uint32_t kIota = 2;
constexpr std::uint32_t kIotaInv = 3;

const GroupoidPtr& interval() {
  static const GroupoidPtr j = interval_groupoid();
  return j;
}

}  // namespace

std::optional<NatIsoViolation> validate_nat_iso(const NaturalIsomorphism& sigma) {
  const auto& f = sigma.source;
  const auto& g = sigma.target;
  require_parallel(f, g);
  const Groupoid& c = *f.domain();
  const Groupoid& d = *f.codomain();
  if (sigma.components.size() != c.object_count()) {
    throw Error(Errc::UnknownId, "natural isomorphism needs one component per object");
  }
  for (auto s : sigma.components) {
    if (!d.contains(s)) throw Error(Errc::UnknownId, "component is not a morphism of the codomain");
  }
  for (auto x : c.objects()) {
    const MorphismId s = sigma(x);
    if (d.src(s) != f(x) || d.tgt(s) != g(x)) return NatIsoViolation{NatIsoViolation::Kind::Typing, x};
  }
  for (auto a : c.morphisms()) {
    const MorphismId lhs = d.compose(f(a), sigma(c.tgt(a)));
    const MorphismId rhs = d.compose(sigma(c.src(a)), g(a));
    if (lhs != rhs) return NatIsoViolation{NatIsoViolation::Kind::Naturality, {}, a};
  }
  return std::nullopt;
}

std::string describe(const NaturalIsomorphism& sigma, const NatIsoViolation& v) {
  const Groupoid& c = *sigma.source.domain();
  const Groupoid& d = *sigma.source.codomain();
  if (v.kind == NatIsoViolation::Kind::Typing) {
    return "component at " + c.name(v.object) + " is " + d.name(sigma(v.object)) + ", not a morphism " +
           d.name(sigma.source(v.object)) + " -> " + d.name(sigma.target(v.object));
  }
  const MorphismId a = v.morphism;
  const auto& f = sigma.source;
  const auto& g = sigma.target;
  return "naturality fails at " + c.name(a) + ": sigma(y) f(a) = " +
         d.name(d.compose(f(a), sigma(c.tgt(a)))) + " but g(a) sigma(x) = " +
         d.name(d.compose(sigma(c.src(a)), g(a)));
}

NaturalIsomorphism identity_nat_iso(const GroupoidMorphism& f) {
  std::vector<MorphismId> comps;
  for (auto x : f.domain()->objects()) comps.push_back(f.codomain()->identity(f(x)));
  return {f, f, std::move(comps)};
}

NaturalIsomorphism inverse_nat_iso(const NaturalIsomorphism& sigma) {
  std::vector<MorphismId> comps;
  for (auto s : sigma.components) comps.push_back(sigma.source.codomain()->inverse(s));
  return {sigma.target, sigma.source, std::move(comps)};
}

NaturalIsomorphism compose_nat_isos(const NaturalIsomorphism& sigma, const NaturalIsomorphism& tau) {
  if (!(sigma.target == tau.source)) {
    throw Error(Errc::SignatureMismatch, "target of the first natural isomorphism is not the source of the second");
  }
  const Groupoid& d = *sigma.source.codomain();
  std::vector<MorphismId> comps;
  for (std::size_t i = 0; i < sigma.components.size(); ++i) {
    comps.push_back(d.compose(sigma.components[i], tau.components[i]));
  }
  return {sigma.source, tau.target, std::move(comps)};
}

// ---------------------------------------------------------------------------

GroupoidPtr cylinder(const GroupoidPtr& c) { return product(c, interval()); }

HomotopyFunctor make_homotopy(GroupoidMorphism f) {
  const auto& dom = f.domain();
  if (!dom->is_product() || !(*dom->factors()->right == *interval())) {
    throw Error(Errc::DomainNotCxJ, "homotopy domain must be C x J");
  }
  require_functor(f, "homotopy");
  return HomotopyFunctor{std::move(f)};
}

GroupoidMorphism homotopy_start(const HomotopyFunctor& h) { return induced_partial_right(h.functor, ObjectId{0}); }
GroupoidMorphism homotopy_end(const HomotopyFunctor& h) { return induced_partial_right(h.functor, ObjectId{1}); }

HomotopyFunctor nat_iso_to_homotopy(const NaturalIsomorphism& sigma) {
  if (auto v = validate_nat_iso(sigma)) throw Error(Errc::InvalidNatIso, describe(sigma, *v));
  const auto& f = sigma.source;
  const auto& g = sigma.target;
  const Groupoid& d = *f.codomain();
  auto cyl = cylinder(f.domain());
  const Groupoid& c = *f.domain();

  std::vector<ObjectId> objs;
  for (auto p : cyl->objects()) {
    const ObjectId x = cyl->left(p);
    objs.push_back(cyl->right(p).value == 0 ? f(x) : g(x));
  }
  std::vector<MorphismId> mors;
  for (auto p : cyl->morphisms()) {
    const MorphismId a = cyl->left(p);
    const MorphismId s = sigma(c.src(a));
    switch (cyl->right(p).value) {
      case kId0: mors.push_back(f(a)); break;
      case kId1: mors.push_back(g(a)); break;
      case kIota: mors.push_back(d.compose(s, g(a))); break;
      case kIotaInv: mors.push_back(d.compose(d.inverse(s), f(a))); break;
    }
  }
  GroupoidMorphism functor(cyl, f.codomain(), std::move(objs), std::move(mors));
  if (auto v = validate_functor(functor)) {
    throw std::logic_error("nat_iso_to_homotopy produced a non-functor: " + describe(functor, *v));
  }
  return HomotopyFunctor{std::move(functor)};
}

NaturalIsomorphism homotopy_to_nat_iso(const HomotopyFunctor& h) {
  const auto& cyl = h.functor.domain();
  if (!cyl->is_product() || !(*cyl->factors()->right == *interval())) {
    throw Error(Errc::DomainNotCxJ, "homotopy domain must be C x J");
  }
  const Groupoid& c = *cyl->factors()->left;
  std::vector<MorphismId> comps;
  for (auto x : c.objects()) comps.push_back(h.functor(cyl->pair(c.identity(x), MorphismId{kIota})));
  return {homotopy_start(h), homotopy_end(h), std::move(comps)};
}

std::optional<NaturalIsomorphism> are_homotopic(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  require_parallel(f, g);
  const Groupoid& c = *f.domain();
  const Groupoid& d = *f.codomain();
  std::vector<MorphismId> sigma(c.object_count());
  std::vector<bool> done(c.object_count(), false);

  for (auto z : c.objects()) {
    if (done[z.value]) continue;
    const auto tree = spanning_tree(c, z);
    bool found = false;
    for (auto candidate : hom(d, f(z), g(z))) {
      sigma[z.value] = candidate;
      for (auto y : tree.order) {
        if (y == z) continue;
        const MorphismId a = *tree.tree_edge[y.value];
        const MorphismId back = d.inverse(f(a));
        sigma[y.value] = d.compose(d.compose(back, sigma[c.src(a).value]), g(a));
      }
      bool natural = true;
      for (auto y : tree.order) {
        for (auto a : c.star(y)) {
          if (d.compose(f(a), sigma[c.tgt(a).value]) != d.compose(sigma[y.value], g(a))) {
            natural = false;
            break;
          }
        }
        if (!natural) break;
      }
      if (natural) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    for (auto y : tree.order) done[y.value] = true;
  }
  return NaturalIsomorphism{f, g, std::move(sigma)};
}

LiftedHomotopy lift_homotopy(const CoveringMorphism& p, const HomotopyFunctor& h, ObjectId z, ObjectId xt) {
  const auto& cyl = h.functor.domain();
  if (!cyl->is_product() || !(*cyl->factors()->right == *interval())) {
    throw Error(Errc::DomainNotCxJ, "homotopy domain must be C x J");
  }
  const auto& c = cyl->factors()->left;
  if (!c->contains(z)) throw Error(Errc::UnknownObject, "base object not in C");
  if (!is_simply_connected(*c)) throw Error(Errc::NotSimplyConnected, "the homotopy domain must be 1-connected");
  const ObjectId start = cyl->pair(z, ObjectId{0});
  if (p(xt) != h.functor(start)) {
    throw Error(Errc::BasePointMismatch, "p(xt) differs from F(z, 0)",
                {p.domain()->name(xt), cyl->name(start)});
  }
  HomotopyFunctor lifted{lift_morphism(p, h.functor, start, xt)};
  auto s = homotopy_start(lifted);
  auto e = homotopy_end(lifted);
  return {std::move(lifted), std::move(s), std::move(e)};
}

}  // namespace gpd
