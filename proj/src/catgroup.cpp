#include "gpd/catgroup.hpp"

#include "gpd/constructions.hpp"
#include "gpd/error.hpp"

namespace gpd {

namespace {

bool is_square_of(const GroupoidPtr& p, const GroupoidPtr& g) {
  return p->is_product() && same_groupoid(p->factors()->left, g) && same_groupoid(p->factors()->right, g);
}

}  // namespace

CatGroupStructure::CatGroupStructure(GroupoidPtr carrier, GroupoidMorphism tensor, GroupoidMorphism inv,
                                     ObjectId unit)
    : carrier_(std::move(carrier)), tensor_(std::move(tensor)), inv_(std::move(inv)), unit_(unit) {
  if (!is_square_of(tensor_.domain(), carrier_) || !same_groupoid(tensor_.codomain(), carrier_)) {
    throw Error(Errc::SignatureMismatch, "product must be a map G x G -> G");
  }
  if (!same_groupoid(inv_.domain(), carrier_) || !same_groupoid(inv_.codomain(), carrier_)) {
    throw Error(Errc::SignatureMismatch, "inverse must be a map G -> G");
  }
  if (!carrier_->contains(unit_)) throw Error(Errc::UnknownObject, "unit is not an object of the carrier");
}

MorphismId CatGroupStructure::operator()(MorphismId a, MorphismId b) const {
  return tensor_(tensor_.domain()->pair(a, b));
}

ObjectId CatGroupStructure::operator()(ObjectId x, ObjectId y) const {
  return tensor_(tensor_.domain()->pair(x, y));
}

bool operator==(const CatGroupStructure& s, const CatGroupStructure& t) {
  return same_groupoid(s.carrier_, t.carrier_) && s.tensor_ == t.tensor_ && s.inv_ == t.inv_ && s.unit_ == t.unit_;
}

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::TensorFunctor: return "tensor-functor";
    case Axiom::InverseFunctor: return "inverse-functor";
    case Axiom::Associativity: return "associativity";
    case Axiom::RightUnit: return "right-unit";
    case Axiom::LeftUnit: return "left-unit";
    case Axiom::RightInverse: return "right-inverse";
    case Axiom::LeftInverse: return "left-inverse";
  }
  return "unknown";
}

std::optional<AxiomViolation> interchange_violation(const CatGroupStructure& s) {
  const Groupoid& g = *s.carrier();
  for (auto a : g.morphisms()) {
    for (auto c : g.morphisms()) {
      const MorphismId ac = s(a, c);
      if (g.src(ac) != s(g.src(a), g.src(c)) || g.tgt(ac) != s(g.tgt(a), g.tgt(c))) {
        return AxiomViolation{Axiom::TensorFunctor,
                              g.name(a) + " x " + g.name(c) + " = " + g.name(ac) +
                                  " does not run between the products of the endpoints",
                              {g.name(a), g.name(c)}};
      }
    }
  }
  for (auto a : g.morphisms()) {
    for (auto c : g.morphisms()) {
      const MorphismId ac = s(a, c);
      for (auto b : g.star(g.tgt(a))) {
        const MorphismId ba = g.compose(a, b);
        for (auto d : g.star(g.tgt(c))) {
          const MorphismId lhs = s(ba, g.compose(c, d));
          const MorphismId rhs = g.compose(ac, s(b, d));
          if (lhs != rhs) {
            return AxiomViolation{Axiom::TensorFunctor,
                                  "interchange fails: (" + g.name(b) + " " + g.name(a) + ") x (" + g.name(d) + " " +
                                      g.name(c) + ") = " + g.name(lhs) + " but (" + g.name(b) + " x " + g.name(d) +
                                      ")(" + g.name(a) + " x " + g.name(c) + ") = " + g.name(rhs),
                                  {g.name(a), g.name(b), g.name(c), g.name(d)}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct AxiomFunctors {
  GroupoidMorphism assoc_lhs;  // x(1 x x) after rebracketing
  GroupoidMorphism assoc_rhs;  // x(x x 1)
  GroupoidMorphism right_unit;
  GroupoidMorphism left_unit;
  GroupoidMorphism right_inverse;
  GroupoidMorphism left_inverse;
  GroupoidMorphism identity;
  GroupoidMorphism constant;
};

AxiomFunctors axiom_functors(const CatGroupStructure& s) {
  const auto& g = s.carrier();
  const auto& t = s.tensor();
  const auto one = identity_functor(g);
  auto triple = product(t.domain(), g);
  return AxiomFunctors{
      compose_functors(rebracket(triple), compose_functors(product_functor(one, t), t)),
      compose_functors(product_functor(t, one), t),
      compose_functors(injection_left(g, s.unit()), t),
      compose_functors(injection_right(g, s.unit()), t),
      compose_functors(pairing(one, s.inv()), t),
      compose_functors(pairing(s.inv(), one), t),
      one,
      constant_functor(g, g, s.unit()),
  };
}

std::optional<AxiomViolation> compare(Axiom axiom, const GroupoidMorphism& lhs, const GroupoidMorphism& rhs) {
  const Groupoid& dom = *lhs.domain();
  const Groupoid& cod = *lhs.codomain();
  for (auto a : dom.morphisms()) {
    if (lhs(a) != rhs(a)) {
      return AxiomViolation{axiom,
                            "sides differ at " + dom.name(a) + ": " + cod.name(lhs(a)) + " vs " + cod.name(rhs(a)),
                            {dom.name(a), cod.name(lhs(a)), cod.name(rhs(a))}};
    }
  }
  for (auto x : dom.objects()) {
    if (lhs(x) != rhs(x)) {
      return AxiomViolation{axiom,
                            "sides differ at object " + dom.name(x) + ": " + cod.name(lhs(x)) + " vs " +
                                cod.name(rhs(x)),
                            {dom.name(x), cod.name(lhs(x)), cod.name(rhs(x))}};
    }
  }
  return std::nullopt;
}

std::optional<AxiomViolation> functor_checks(const CatGroupStructure& s) {
  if (auto v = interchange_violation(s)) return v;
  if (auto v = validate_functor(s.tensor())) {
    return AxiomViolation{Axiom::TensorFunctor, describe(s.tensor(), *v), {}};
  }
  if (auto v = validate_functor(s.inv())) {
    return AxiomViolation{Axiom::InverseFunctor, describe(s.inv(), *v), {}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> validate_group_groupoid(const CatGroupStructure& s) {
  if (auto v = functor_checks(s)) return v;
  const auto f = axiom_functors(s);
  if (auto v = compare(Axiom::Associativity, f.assoc_lhs, f.assoc_rhs)) return v;
  if (auto v = compare(Axiom::RightUnit, f.right_unit, f.identity)) return v;
  if (auto v = compare(Axiom::LeftUnit, f.left_unit, f.identity)) return v;
  if (auto v = compare(Axiom::RightInverse, f.right_inverse, f.constant)) return v;
  if (auto v = compare(Axiom::LeftInverse, f.left_inverse, f.constant)) return v;
  return std::nullopt;
}

CatGroupWitnesses validate_categorical_group(const CatGroupStructure& s) {
  if (auto v = functor_checks(s)) {
    throw Error(Errc::AxiomFailed, std::string(to_string(v->axiom)) + ": " + v->detail,
                {std::string(to_string(v->axiom))});
  }
  const auto f = axiom_functors(s);
  auto homotopic = [](Axiom axiom, const GroupoidMorphism& lhs, const GroupoidMorphism& rhs) {
    auto sigma = are_homotopic(lhs, rhs);
    if (!sigma) {
      throw Error(Errc::AxiomFailed,
                  std::string(to_string(axiom)) + ": the two functors are not naturally isomorphic",
                  {std::string(to_string(axiom))});
    }
    return *std::move(sigma);
  };
  return CatGroupWitnesses{
      homotopic(Axiom::Associativity, f.assoc_lhs, f.assoc_rhs),
      homotopic(Axiom::RightUnit, f.right_unit, f.identity),
      homotopic(Axiom::LeftUnit, f.left_unit, f.identity),
      homotopic(Axiom::RightInverse, f.right_inverse, f.constant),
      homotopic(Axiom::LeftInverse, f.left_inverse, f.constant),
  };
}

std::optional<std::pair<MorphismId, MorphismId>> catgroup_morphism_violation(const GroupoidMorphism& f,
                                                                              const CatGroupStructure& s,
                                                                              const CatGroupStructure& t) {
  if (!same_groupoid(f.domain(), s.carrier()) || !same_groupoid(f.codomain(), t.carrier())) {
    throw Error(Errc::SignatureMismatch, "functor must run between the carriers");
  }
  const Groupoid& g = *s.carrier();
  for (auto a : g.morphisms()) {
    for (auto b : g.morphisms()) {
      if (f(s(a, b)) != t(f(a), f(b))) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_catgroup_morphism(const GroupoidMorphism& f, const CatGroupStructure& s, const CatGroupStructure& t) {
  return !catgroup_morphism_violation(f, s, t);
}

namespace {

ObjectId base_over(const CoveringMorphism& p, ObjectId preferred, ObjectId image) {
  if (p(preferred) == image) return preferred;
  for (auto x : p.domain()->objects()) {
    if (p(x) == image) return x;
  }
  throw Error(Errc::BasePointMismatch, "no object of the covering groupoid lies over " + p.codomain()->name(image),
              {p.codomain()->name(image)});
}

}  // namespace

CatGroupStructure lift_categorical_group(const CoveringMorphism& p, const CatGroupStructure& s, ObjectId et) {
  if (!same_groupoid(p.codomain(), s.carrier())) {
    throw Error(Errc::SignatureMismatch, "covering does not land in the carrier");
  }
  const auto& top = p.domain();
  if (!top->contains(et)) throw Error(Errc::UnknownObject, "base object not in the covering groupoid");
  if (!is_simply_connected(*top)) throw Error(Errc::NotSimplyConnected, "covering groupoid must be 1-connected");
  if (p(et) != s.unit()) {
    throw Error(Errc::BasePointMismatch, "p(et) is not the unit", {top->name(et), s.carrier()->name(s.unit())});
  }
  require_functor(s.tensor(), "product");
  require_functor(s.inv(), "inverse");

  const auto& pf = p.functor();
  const auto down_tensor = compose_functors(product_functor(pf, pf), s.tensor());
  const ObjectId pair_base = down_tensor.domain()->pair(et, et);
  auto tensor = lift_morphism(p, down_tensor, pair_base, base_over(p, et, down_tensor(pair_base)));

  const auto down_inv = compose_functors(pf, s.inv());
  auto inv = lift_morphism(p, down_inv, et, base_over(p, et, down_inv(et)));

  CatGroupStructure lifted(top, std::move(tensor), std::move(inv), et);
  lifted.set_witnesses(validate_categorical_group(lifted));
  return lifted;
}

}  // namespace gpd
