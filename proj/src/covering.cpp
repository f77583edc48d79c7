#include "gpd/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gpd/constructions.hpp"
#include "gpd/error.hpp"

namespace gpd {

MorphismId CoveringMorphism::lift(ObjectId xt, MorphismId g) const {
  const Groupoid& base = *codomain();
  if (base.src(g) != functor_(xt)) {
    throw std::logic_error("CoveringMorphism::lift: morphism does not leave the image of the object");
  }
  return star_inverse_[xt.value][base.star_position(g)];
}

CoveringMorphism check_covering(const GroupoidMorphism& p) {
  require_functor(p, "covering candidate");
  const Groupoid& top = *p.domain();
  const Groupoid& base = *p.codomain();
  CoveringMorphism cover(p);
  cover.star_inverse_.resize(top.object_count());
  for (auto xt : top.objects()) {
    const auto upstairs = top.star(xt);
    const auto downstairs = base.star(p(xt));
    auto fail = [&](const char* kind, const std::string& detail) {
      throw Error(Errc::NotCovering,
                  std::string(kind) + " fails at object '" + top.name(xt) + "': " + detail + " (star sizes " +
                      std::to_string(upstairs.size()) + " vs " + std::to_string(downstairs.size()) + ")",
                  {top.name(xt), kind, std::to_string(upstairs.size()), std::to_string(downstairs.size())});
    };
    std::vector<std::optional<MorphismId>> inverse(downstairs.size());
    for (auto a : upstairs) {
      auto& slot = inverse[base.star_position(p(a))];
      if (slot) {
        fail("injectivity", "'" + top.name(*slot) + "' and '" + top.name(a) + "' both map to '" + base.name(p(a)) + "'");
      }
      slot = a;
    }
    auto& row = cover.star_inverse_[xt.value];
    for (std::size_t k = 0; k < inverse.size(); ++k) {
      const auto& slot = inverse[k];
      if (!slot) fail("surjectivity", "nothing maps to '" + base.name(downstairs[k]) + "'");
      row.push_back(*slot);
    }
  }
  return cover;
}

Subgroup characteristic_group(const CoveringMorphism& p, ObjectId xt) {
  const Groupoid& top = *p.domain();
  if (!top.contains(xt)) throw Error(Errc::UnknownObject, "object index out of range");
  Subgroup h{p(xt), {}};
  for (auto a : hom(top, xt, xt)) h.elements.push_back(p(a));
  std::ranges::sort(h.elements);
  h.elements.erase(std::unique(h.elements.begin(), h.elements.end()), h.elements.end());
  return h;
}

namespace {

std::optional<GroupoidMorphism> try_lift(const CoveringMorphism& p, const GroupoidMorphism& q, ObjectId z,
                                         ObjectId xt) {
  const Groupoid& k = *q.domain();
  const Groupoid& top = *p.domain();
  const auto tree = spanning_tree(k, z);
  std::vector<ObjectId> objs(k.object_count());
  objs[z.value] = xt;
  for (auto w : tree.order) {
    if (w == z) continue;
    const MorphismId edge = *tree.tree_edge[w.value];
    objs[w.value] = top.tgt(p.lift(objs[k.src(edge).value], q(edge)));
  }
  std::vector<MorphismId> mors;
  for (auto a : k.morphisms()) {
    const MorphismId lifted = p.lift(objs[k.src(a).value], q(a));
    if (top.tgt(lifted) != objs[k.tgt(a).value]) return std::nullopt;
    mors.push_back(lifted);
  }
  GroupoidMorphism result(q.domain(), p.domain(), std::move(objs), std::move(mors));
  if (validate_functor(result)) return std::nullopt;
  return result;
}

}  // namespace

GroupoidMorphism lift_morphism(const CoveringMorphism& p, const GroupoidMorphism& q, ObjectId z, ObjectId xt) {
  const Groupoid& k = *q.domain();
  if (!k.contains(z)) throw Error(Errc::UnknownObject, "base object not in the domain of q");
  if (!p.domain()->contains(xt)) throw Error(Errc::UnknownObject, "base object not in the covering groupoid");
  if (!same_groupoid(q.codomain(), p.codomain())) {
    throw Error(Errc::SignatureMismatch, "q does not land in the base of the covering");
  }
  require_functor(q, "q");
  if (!is_connected(k)) throw Error(Errc::NotConnected, "the domain of q is not connected");
  if (p(xt) != q(z)) {
    throw Error(Errc::BasePointMismatch,
                "p(" + p.domain()->name(xt) + ") = " + p.codomain()->name(p(xt)) + " but q(" + k.name(z) +
                    ") = " + p.codomain()->name(q(z)),
                {p.domain()->name(xt), k.name(z)});
  }
  if (auto lifted = try_lift(p, q, z, xt)) return *std::move(lifted);

  const Subgroup c = characteristic_group(p, xt);
  for (auto loop : hom(k, z, z)) {
    if (!c.contains(q(loop))) {
      const auto& base = *p.codomain();
      throw Error(Errc::CriterionFailed,
                  "loop " + k.name(loop) + " at " + k.name(z) + " maps to " + base.name(q(loop)) +
                      ", outside the characteristic group at " + p.domain()->name(xt),
                  {k.name(loop), base.name(q(loop))});
    }
  }
  throw std::logic_error("lift_morphism: construction failed although the lifting criterion holds");
}

Factorization factor_covering(const CoveringMorphism& p, ObjectId xt, const CoveringMorphism& q, ObjectId zt) {
  for (const auto* c : {&p, &q}) {
    if (!is_connected(*c->domain()) || !is_connected(*c->codomain())) {
      throw Error(Errc::NotConnected, "factorization needs connected coverings");
    }
  }
  if (!same_groupoid(p.codomain(), q.codomain())) {
    throw Error(Errc::SignatureMismatch, "coverings have different bases");
  }
  if (p(xt) != q(zt)) {
    throw Error(Errc::BasePointMismatch, "base points lie over different objects",
                {p.domain()->name(xt), q.domain()->name(zt)});
  }
  const Subgroup c = characteristic_group(p, xt);
  const Subgroup d = characteristic_group(q, zt);
  if (!c.is_subset_of(d)) {
    const auto& base = *p.codomain();
    for (auto g : c.elements) {
      if (!d.contains(g)) {
        throw Error(Errc::CharGroupNotContained,
                    "'" + base.name(g) + "' lies in the characteristic group of p but not of q", {base.name(g)});
      }
    }
  }
  auto r = check_covering(lift_morphism(q, p.functor(), xt, zt));
  const bool iso = c == d;
  if (iso != is_isomorphism(r.functor())) {
    throw std::logic_error("factor_covering: equal characteristic groups but r is not an isomorphism");
  }
  return {std::move(r), iso};
}

bool is_universal_covering(const CoveringMorphism& p) {
  return is_connected(*p.domain()) && is_connected(*p.codomain()) && has_thin_homs(*p.domain());
}

CoveringMorphism universal_cover(const GroupoidPtr& g, ObjectId x) {
  if (!g->contains(x)) throw Error(Errc::UnknownObject, "object index out of range");
  if (!is_connected(*g)) throw Error(Errc::NotConnected, "universal cover needs a connected groupoid");
  const auto s = g->star(x);
  std::vector<std::string> labels;
  for (auto a : s) labels.push_back(g->name(a));
  auto top = codiscrete(labels);
  const auto n = static_cast<std::uint32_t>(s.size());
  std::vector<ObjectId> objs;
  for (auto a : s) objs.push_back(g->tgt(a));
  std::vector<MorphismId> mors;
  for (auto m : top->morphisms()) {
    const MorphismId a = s[m.value / n];
    const MorphismId b = s[m.value % n];
    mors.push_back(g->compose(g->inverse(a), b));
  }
  return check_covering(GroupoidMorphism(top, g, std::move(objs), std::move(mors)));
}

CoveringMorphism subgroup_cover(const GroupoidPtr& g, ObjectId x, const Subgroup& h) {
  if (!g->contains(x)) throw Error(Errc::UnknownObject, "object index out of range");
  if (!is_connected(*g)) throw Error(Errc::NotConnected, "subgroup cover needs a connected groupoid");
  if (h.base != x || !is_subgroup(*g, h)) throw Error(Errc::NotAGroup, "not a subgroup of the object group");

  const auto s = g->star(x);
  // Class representative per star element.
  std::vector<std::uint32_t> cls(s.size());
  std::vector<MorphismId> reps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MorphismId a = s[i];
    std::optional<std::uint32_t> found;
    for (std::uint32_t c = 0; c < reps.size() && !found; ++c) {
      const MorphismId b = reps[c];
      if (g->tgt(b) == g->tgt(a) && h.contains(g->compose(a, g->inverse(b)))) found = c;
    }
    if (!found) {
      found = static_cast<std::uint32_t>(reps.size());
      reps.push_back(a);
    }
    cls[i] = *found;
  }
  auto class_of = [&](MorphismId a) { return cls[g->star_position(a)]; };

  Groupoid::Layout layout;
  std::vector<std::size_t> offset;
  std::vector<std::pair<std::uint32_t, MorphismId>> morph;  // (class, g)
  for (std::uint32_t c = 0; c < reps.size(); ++c) {
    layout.object_names.push_back("[" + g->name(reps[c]) + "]");
    offset.push_back(morph.size());
    for (auto m : g->star(g->tgt(reps[c]))) morph.emplace_back(c, m);
  }
  auto id_of = [&](std::uint32_t c, MorphismId m) {
    return MorphismId{static_cast<std::uint32_t>(offset[c] + g->star_position(m))};
  };
  for (auto [c, m] : morph) {
    layout.morphism_names.push_back(layout.object_names[c] + g->name(m));
    const std::uint32_t d = class_of(g->compose(reps[c], m));
    layout.src.push_back(ObjectId{c});
    layout.tgt.push_back(ObjectId{d});
    layout.inverse.push_back(id_of(d, g->inverse(m)));
  }
  for (std::uint32_t c = 0; c < reps.size(); ++c) layout.identity.push_back(id_of(c, g->identity(g->tgt(reps[c]))));

  auto top = std::make_shared<const Groupoid>(Groupoid::assemble(std::move(layout), [&](MorphismId a, MorphismId b) {
    const auto [c, m] = morph[a.value];
    return id_of(c, g->compose(m, morph[b.value].second));
  }));
  std::unordered_set<std::string> names;
  for (auto a : top->morphisms()) {
    if (!names.insert(top->name(a)).second) {
      throw Error(Errc::DuplicateId, "generated morphism name '" + top->name(a) + "' is ambiguous", {top->name(a)});
    }
  }

  std::vector<ObjectId> objs;
  for (auto r : reps) objs.push_back(g->tgt(r));
  std::vector<MorphismId> mors;
  for (const auto& entry : morph) mors.push_back(entry.second);
  return check_covering(GroupoidMorphism(top, g, std::move(objs), std::move(mors)));
}

CoveringMorphism compose_coverings(const CoveringMorphism& p, const CoveringMorphism& q) {
  return check_covering(compose_functors(p.functor(), q.functor()));
}

}  // namespace gpd
