#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gpd/error.hpp"

namespace gpd::testing {

const std::vector<NamedGroup>& small_groups() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> out;
    for (std::size_t n = 1; n <= 8; ++n) out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    const auto z2 = cyclic_group(2);
    out.push_back({"Z2xZ2", direct_product(z2, z2)});
    out.push_back({"Z4xZ2", direct_product(cyclic_group(4), z2)});
    out.push_back({"Z2xZ2xZ2", direct_product(direct_product(z2, z2), z2)});
    out.push_back({"S3", dihedral_group(3)});
    out.push_back({"D4", dihedral_group(4)});
    out.push_back({"Q8", quaternion_group()});
    return out;
  }();
  return groups;
}

bool is_abelian(const GroupTable& t) {
  const std::size_t n = t.elements.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t.product[a][b] != t.product[b][a]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
void shuffle(std::vector<T>& v, std::mt19937& rng) {
  std::shuffle(v.begin(), v.end(), rng);
}

std::size_t pick(std::mt19937& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

GroupoidSpec random_spec(std::mt19937& rng, const GenOptions& opt) {
  const auto& groups = small_groups();
  std::size_t objects_left = opt.max_objects;
  std::size_t morphisms_left = opt.max_morphisms;
  const std::size_t want = opt.connected ? 1 : 1 + pick(rng, 3);

  std::vector<GroupoidSpec> parts;
  for (std::size_t c = 0; c < want && objects_left > 0; ++c) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;  // (objects, group index)
    for (std::size_t n = 1; n <= objects_left; ++n) {
      for (std::size_t k = 0; k < groups.size(); ++k) {
        if (n * n * groups[k].table.elements.size() <= morphisms_left) shapes.emplace_back(n, k);
      }
    }
    if (shapes.empty()) break;
    const auto [n, k] = shapes[pick(rng, shapes.size())];
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    auto comp = product(codiscrete(labels), group_as_groupoid(groups[k].table));
    parts.push_back(to_spec(*with_prefix(*comp, "c" + std::to_string(c) + ".")));
    objects_left -= n;
    morphisms_left -= n * n * groups[k].table.elements.size();
  }

  GroupoidSpec merged;
  for (auto& p : parts) {
    merged.objects.insert(merged.objects.end(), p.objects.begin(), p.objects.end());
    merged.morphisms.insert(merged.morphisms.end(), p.morphisms.begin(), p.morphisms.end());
    merged.compose.insert(merged.compose.end(), p.compose.begin(), p.compose.end());
    merged.identities.insert(merged.identities.end(), p.identities.begin(), p.identities.end());
    merged.inverses.insert(merged.inverses.end(), p.inverses.begin(), p.inverses.end());
  }

  // Fresh opaque names.
  std::vector<std::size_t> onum(merged.objects.size()), mnum(merged.morphisms.size());
  for (std::size_t i = 0; i < onum.size(); ++i) onum[i] = i;
  for (std::size_t i = 0; i < mnum.size(); ++i) mnum[i] = i;
  shuffle(onum, rng);
  shuffle(mnum, rng);
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < merged.objects.size(); ++i) rename[merged.objects[i]] = "x" + std::to_string(onum[i]);
  std::map<std::string, std::string> mrename;
  for (std::size_t i = 0; i < merged.morphisms.size(); ++i) {
    mrename[merged.morphisms[i].id] = "m" + std::to_string(mnum[i]);
  }

  GroupoidSpec out;
  for (const auto& x : merged.objects) out.objects.push_back(rename.at(x));
  for (const auto& m : merged.morphisms) {
    out.morphisms.push_back({mrename.at(m.id), rename.at(m.src), rename.at(m.tgt)});
  }
  for (const auto& c : merged.compose) {
    out.compose.push_back({mrename.at(c.first), mrename.at(c.second), mrename.at(c.result)});
  }
  if (opt.list_identities) {
    for (const auto& [x, e] : merged.identities) {
      if (pick(rng, 2)) out.identities.emplace_back(rename.at(x), mrename.at(e));
    }
    for (const auto& [a, b] : merged.inverses) {
      if (pick(rng, 2)) out.inverses.emplace_back(mrename.at(a), mrename.at(b));
    }
  }
  shuffle(out.objects, rng);
  shuffle(out.morphisms, rng);
  shuffle(out.compose, rng);
  shuffle(out.identities, rng);
  shuffle(out.inverses, rng);
  return out;
}

GroupoidPtr random_groupoid(std::mt19937& rng, const GenOptions& opt) { return build_groupoid(random_spec(rng, opt)); }

GroupoidPtr shuffled_copy(std::mt19937& rng, const Groupoid& g) {
  auto spec = to_spec(g);
  std::map<std::string, std::string> rename;
  for (auto& x : spec.objects) rename[x] = "y_" + x;
  std::map<std::string, std::string> mrename;
  for (auto& m : spec.morphisms) mrename[m.id] = "n_" + m.id;
  GroupoidSpec out;
  for (const auto& x : spec.objects) out.objects.push_back(rename.at(x));
  for (const auto& m : spec.morphisms) out.morphisms.push_back({mrename.at(m.id), rename.at(m.src), rename.at(m.tgt)});
  for (const auto& c : spec.compose) {
    out.compose.push_back({mrename.at(c.first), mrename.at(c.second), mrename.at(c.result)});
  }
  shuffle(out.objects, rng);
  shuffle(out.morphisms, rng);
  shuffle(out.compose, rng);
  return build_groupoid(out);
}

// ---------------------------------------------------------------------------
// Functor search.

namespace {

struct Triple {
  MorphismId a, b, c;  // c = ba
};

class FunctorSearch {
 public:
  FunctorSearch(const GroupoidPtr& g, const GroupoidPtr& h, const FunctorFilter& filter, std::mt19937* rng)
      : g_(*g), h_(*h), gp_(g), hp_(h), filter_(filter), rng_(rng) {
    const std::size_t n = g_.object_count();
    const std::size_t m = g_.morphism_count();
    edges_by_max_.assign(n, {});
    for (auto a : g_.morphisms()) {
      edges_by_max_[std::max(g_.src(a).value, g_.tgt(a).value)].push_back(a);
    }
    triples_by_max_.assign(m, {});
    for (auto a : g_.morphisms()) {
      for (auto b : g_.morphisms()) {
        if (g_.tgt(a) != g_.src(b)) continue;
        const MorphismId c = g_.compose(a, b);
        triples_by_max_[std::max({a.value, b.value, c.value})].push_back({a, b, c});
      }
    }
    obj_.assign(n, ObjectId{});
    mor_.assign(m, MorphismId{});
  }

  // Calls `emit` per functor; stops when it returns false or the step
  // budget runs out. Returns false when stopped early.
  bool run(const std::function<bool(const GroupoidMorphism&)>& emit, std::size_t budget) {
    emit_ = &emit;
    budget_ = budget;
    return objects(0);
  }

  bool exhausted() const { return budget_ == 0; }

 private:
  std::vector<std::uint32_t> order(std::size_t count) {
    std::vector<std::uint32_t> v(count);
    for (std::uint32_t i = 0; i < count; ++i) v[i] = i;
    if (rng_) std::shuffle(v.begin(), v.end(), *rng_);
    return v;
  }

  bool objects(std::uint32_t k) {
    if (k == g_.object_count()) return morphisms(0);
    for (auto y : order(h_.object_count())) {
      if (budget_ == 0) return false;
      --budget_;
      const ObjectId x{k};
      if (filter_.object && !filter_.object(x, ObjectId{y})) continue;
      obj_[k] = ObjectId{y};
      bool ok = true;
      for (auto a : edges_by_max_[k]) {
        bool any = false;
        for (auto b : h_.morphisms()) {
          if (h_.src(b) == obj_[g_.src(a).value] && h_.tgt(b) == obj_[g_.tgt(a).value] &&
              (!filter_.morphism || filter_.morphism(a, b))) {
            any = true;
            break;
          }
        }
        if (!any) {
          ok = false;
          break;
        }
      }
      if (ok && !objects(k + 1)) return false;
    }
    return true;
  }

  bool morphisms(std::uint32_t k) {
    if (k == g_.morphism_count()) {
      return (*emit_)(GroupoidMorphism(gp_, hp_, obj_, mor_));
    }
    const MorphismId a{k};
    const ObjectId s = obj_[g_.src(a).value];
    const ObjectId t = obj_[g_.tgt(a).value];
    for (auto bi : order(h_.morphism_count())) {
      if (budget_ == 0) return false;
      --budget_;
      const MorphismId b{bi};
      if (h_.src(b) != s || h_.tgt(b) != t) continue;
      if (filter_.morphism && !filter_.morphism(a, b)) continue;
      mor_[k] = b;
      bool ok = true;
      for (const auto& tr : triples_by_max_[k]) {
        if (mor_[tr.c.value] != h_.compose(mor_[tr.a.value], mor_[tr.b.value])) {
          ok = false;
          break;
        }
      }
      if (ok && !morphisms(k + 1)) return false;
    }
    return true;
  }

  const Groupoid& g_;
  const Groupoid& h_;
  GroupoidPtr gp_;
  GroupoidPtr hp_;
  const FunctorFilter& filter_;
  std::mt19937* rng_;
  std::vector<std::vector<MorphismId>> edges_by_max_;
  std::vector<std::vector<Triple>> triples_by_max_;
  std::vector<ObjectId> obj_;
  std::vector<MorphismId> mor_;
  const std::function<bool(const GroupoidMorphism&)>* emit_ = nullptr;
  std::size_t budget_ = 0;
};

}  // namespace

GroupoidMorphism random_functor(std::mt19937& rng, const GroupoidPtr& g, const GroupoidPtr& h) {
  if (h->object_count() == 0 && g->object_count() > 0) throw std::invalid_argument("no functor into the empty groupoid");
  const FunctorFilter none;
  for (int attempt = 0; attempt < 50; ++attempt) {
    FunctorSearch search(g, h, none, &rng);
    std::optional<GroupoidMorphism> found;
    search.run(
        [&](const GroupoidMorphism& f) {
          found = f;
          return false;
        },
        20000);
    if (found) return *found;
  }
  // Fall back on a constant functor, which always exists.
  return constant_functor(g, h, ObjectId{0});
}

GroupoidMorphism random_maps(std::mt19937& rng, const GroupoidPtr& g, const GroupoidPtr& h) {
  std::vector<ObjectId> objs;
  for (std::size_t i = 0; i < g->object_count(); ++i) objs.push_back(ObjectId{static_cast<std::uint32_t>(pick(rng, h->object_count()))});
  std::vector<MorphismId> mors;
  for (std::size_t i = 0; i < g->morphism_count(); ++i) {
    mors.push_back(MorphismId{static_cast<std::uint32_t>(pick(rng, h->morphism_count()))});
  }
  return GroupoidMorphism(g, h, std::move(objs), std::move(mors));
}

std::vector<GroupoidMorphism> all_functors(const GroupoidPtr& g, const GroupoidPtr& h, const FunctorFilter& filter,
                                           std::size_t limit) {
  std::vector<GroupoidMorphism> out;
  if (limit == 0) return out;
  FunctorSearch search(g, h, filter, nullptr);
  search.run(
      [&](const GroupoidMorphism& f) {
        out.push_back(f);
        return out.size() < limit;
      },
      static_cast<std::size_t>(-1));
  return out;
}

bool brute_is_functor(const GroupoidMorphism& f) {
  const Groupoid& g = *f.domain();
  const Groupoid& h = *f.codomain();
  for (auto a : g.morphisms()) {
    if (h.src(f(a)) != f(g.src(a)) || h.tgt(f(a)) != f(g.tgt(a))) return false;
  }
  for (auto a : g.morphisms()) {
    for (auto b : g.morphisms()) {
      if (g.tgt(a) != g.src(b)) continue;
      if (f(g.compose(a, b)) != h.compose(f(a), f(b))) return false;
    }
  }
  for (auto x : g.objects()) {
    if (f(g.identity(x)) != h.identity(f(x))) return false;
  }
  for (auto a : g.morphisms()) {
    if (f(g.inverse(a)) != h.inverse(f(a))) return false;
  }
  return true;
}

bool brute_unique_lifting(const GroupoidMorphism& p) {
  const Groupoid& top = *p.domain();
  const Groupoid& base = *p.codomain();
  for (auto xt : top.objects()) {
    for (auto g : base.morphisms()) {
      if (base.src(g) != p(xt)) continue;
      std::size_t preimages = 0;
      for (auto a : top.morphisms()) {
        if (top.src(a) == xt && p(a) == g) ++preimages;
      }
      if (preimages != 1) return false;
    }
  }
  return true;
}

std::vector<MorphismId> brute_image_of_loops(const GroupoidMorphism& q, ObjectId z) {
  const Groupoid& k = *q.domain();
  std::set<MorphismId> image;
  for (auto a : k.morphisms()) {
    if (k.src(a) == z && k.tgt(a) == z) image.insert(q(a));
  }
  return {image.begin(), image.end()};
}

std::vector<std::vector<MorphismId>> all_nat_isos(const GroupoidMorphism& f, const GroupoidMorphism& g,
                                                  std::size_t limit) {
  const Groupoid& c = *f.domain();
  const Groupoid& d = *f.codomain();
  std::vector<std::vector<MorphismId>> out;
  std::vector<MorphismId> sigma(c.object_count());
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t k) {
    if (k == c.object_count()) {
      out.push_back(sigma);
      return out.size() < limit;
    }
    for (auto s : d.morphisms()) {
      if (d.src(s) != f(ObjectId{k}) || d.tgt(s) != g(ObjectId{k})) continue;
      sigma[k] = s;
      bool ok = true;
      for (auto a : c.morphisms()) {
        const auto x = c.src(a).value;
        const auto y = c.tgt(a).value;
        if (x > k || y > k) continue;
        if (d.compose(f(a), sigma[y]) != d.compose(sigma[x], g(a))) {
          ok = false;
          break;
        }
      }
      if (ok && !go(k + 1)) return false;
    }
    return true;
  };
  if (limit > 0) go(0);
  return out;
}

NaturalIsomorphism random_nat_iso(std::mt19937& rng, const GroupoidMorphism& f) {
  const Groupoid& c = *f.domain();
  const Groupoid& d = *f.codomain();
  std::vector<MorphismId> sigma;
  for (auto x : c.objects()) {
    const auto s = d.star(f(x));
    sigma.push_back(s[pick(rng, s.size())]);
  }
  std::vector<ObjectId> objs;
  for (auto x : c.objects()) objs.push_back(d.tgt(sigma[x.value]));
  std::vector<MorphismId> mors;
  for (auto a : c.morphisms()) {
    const MorphismId back = d.inverse(sigma[c.src(a).value]);
    mors.push_back(d.compose(d.compose(back, f(a)), sigma[c.tgt(a).value]));
  }
  GroupoidMorphism g(f.domain(), f.codomain(), std::move(objs), std::move(mors));
  return NaturalIsomorphism{f, std::move(g), std::move(sigma)};
}

// ---------------------------------------------------------------------------

std::optional<Errc> classify_spec(const GroupoidSpec& spec) {
  std::set<std::string> objects;
  for (const auto& x : spec.objects) {
    if (x.empty()) return Errc::InvalidId;
    if (!objects.insert(x).second) return Errc::DuplicateId;
  }
  std::map<std::string, std::pair<std::string, std::string>> ends;
  std::vector<std::string> order;
  for (const auto& m : spec.morphisms) {
    if (m.id.empty()) return Errc::InvalidId;
    if (ends.count(m.id)) return Errc::DuplicateId;
    if (!objects.count(m.src) || !objects.count(m.tgt)) return Errc::UnknownId;
    ends[m.id] = {m.src, m.tgt};
    order.push_back(m.id);
  }

  // Names resolved to positions in listing order; the checks below mirror
  // the documented order on plain index tables.
  const std::size_t m = order.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[order[i]] = i;
  std::map<std::string, std::size_t> object_index;
  for (std::size_t i = 0; i < spec.objects.size(); ++i) object_index[spec.objects[i]] = i;
  std::vector<std::size_t> src(m), tgt(m);
  for (std::size_t i = 0; i < m; ++i) {
    src[i] = object_index[ends[order[i]].first];
    tgt[i] = object_index[ends[order[i]].second];
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(m * m, none);
  for (const auto& c : spec.compose) {
    if (!index.count(c.first) || !index.count(c.second) || !index.count(c.result)) return Errc::UnknownId;
    const std::size_t a = index[c.first], b = index[c.second], r = index[c.result];
    if (tgt[a] != src[b]) return Errc::IllTypedComposite;
    if (src[r] != src[a] || tgt[r] != tgt[b]) return Errc::IllTypedComposite;
    if (table[a * m + b] != none) return Errc::ConflictingComposite;
    table[a * m + b] = r;
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (tgt[a] == src[b] && table[a * m + b] == none) return Errc::MissingComposite;
    }
  }
  auto comp = [&](std::size_t a, std::size_t b) { return table[a * m + b]; };

  std::map<std::string, std::size_t> listed_identity;
  for (const auto& [x, e] : spec.identities) {
    if (!objects.count(x) || !index.count(e)) return Errc::UnknownId;
    if (!listed_identity.emplace(x, index[e]).second) return Errc::DuplicateId;
  }
  std::vector<std::size_t> identity(spec.objects.size());
  for (std::size_t x = 0; x < spec.objects.size(); ++x) {
    std::size_t e;
    if (listed_identity.count(spec.objects[x])) {
      e = listed_identity[spec.objects[x]];
    } else {
      std::vector<std::size_t> idem;
      for (std::size_t a = 0; a < m; ++a) {
        if (src[a] == x && tgt[a] == x && comp(a, a) == a) idem.push_back(a);
      }
      if (idem.size() != 1) return Errc::NoIdentity;
      e = idem.front();
    }
    if (src[e] != x || tgt[e] != x) return Errc::NoIdentity;
    for (std::size_t a = 0; a < m; ++a) {
      if (src[a] == x && comp(e, a) != a) return Errc::NoIdentity;
      if (tgt[a] == x && comp(a, e) != a) return Errc::NoIdentity;
    }
    identity[x] = e;
  }
  std::vector<std::size_t> ident_src(m), ident_tgt(m);
  for (std::size_t a = 0; a < m; ++a) {
    ident_src[a] = identity[src[a]];
    ident_tgt[a] = identity[tgt[a]];
  }

  std::map<std::size_t, std::size_t> listed_inverse;
  for (const auto& [a, b] : spec.inverses) {
    if (!index.count(a) || !index.count(b)) return Errc::UnknownId;
    if (!listed_inverse.emplace(index[a], index[b]).second) return Errc::DuplicateId;
  }
  auto two_sided = [&](std::size_t a, std::size_t b) {
    return src[b] == tgt[a] && tgt[b] == src[a] && comp(a, b) == ident_src[a] && comp(b, a) == ident_tgt[a];
  };
  for (std::size_t a = 0; a < m; ++a) {
    bool found = false;
    if (listed_inverse.count(a)) {
      found = two_sided(a, listed_inverse[a]);
    } else {
      for (std::size_t b = 0; b < m && !found; ++b) found = two_sided(a, b);
    }
    if (!found) return Errc::NoInverse;
  }

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (tgt[a] != src[b]) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (tgt[b] != src[c]) continue;
        if (comp(comp(a, b), c) != comp(a, comp(b, c))) return Errc::NonAssociative;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string fixture_dir() { return GPD_FIXTURE_DIR; }
std::string golden_dir() { return GPD_GOLDEN_DIR; }

GroupoidPtr z(std::size_t n) { return group_as_groupoid(cyclic_group(n)); }
GroupoidPtr s3() { return group_as_groupoid(dihedral_group(3)); }

GroupoidMorphism hand_cover_z2() {
  auto top = codiscrete({"0", "1"});
  auto base = z(2);
  std::vector<std::pair<std::string, std::string>> objs{{"0", "*"}, {"1", "*"}};
  std::vector<std::pair<std::string, std::string>> mors;
  for (int g = 0; g < 2; ++g) {
    for (int h = 0; h < 2; ++h) {
      mors.emplace_back(std::to_string(g) + ">" + std::to_string(h), std::to_string(((h - g) % 2 + 2) % 2));
    }
  }
  return GroupoidMorphism::from_names(top, base, objs, mors);
}

Z4Tower z4_tower() {
  auto base = z(4);
  const ObjectId star{0};
  Subgroup h{star, {base->morphism("0"), base->morphism("2")}};
  return Z4Tower{base, universal_cover(base, star), subgroup_cover(base, star, h),
                 check_covering(identity_functor(base))};
}

CatGroupStructure one_object_structure(const GroupoidPtr& g, const std::vector<std::vector<std::size_t>>& table,
                                       const std::vector<std::size_t>& inverse) {
  auto gg = product(g, g);
  std::vector<MorphismId> tmors;
  for (auto p : gg->morphisms()) {
    tmors.push_back(MorphismId{static_cast<std::uint32_t>(table[gg->left(p).value][gg->right(p).value])});
  }
  GroupoidMorphism tensor(gg, g, std::vector<ObjectId>(gg->object_count(), ObjectId{0}), std::move(tmors));
  std::vector<MorphismId> imors;
  for (auto a : g->morphisms()) imors.push_back(MorphismId{static_cast<std::uint32_t>(inverse[a.value])});
  GroupoidMorphism inv(g, g, std::vector<ObjectId>(g->object_count(), ObjectId{0}), std::move(imors));
  return CatGroupStructure(g, std::move(tensor), std::move(inv), ObjectId{0});
}

CatGroupStructure group_structure(const GroupoidPtr& g) {
  // a x b = ab, which is "a after b" in composition order.
  std::vector<std::vector<std::size_t>> table(g->morphism_count(), std::vector<std::size_t>(g->morphism_count()));
  std::vector<std::size_t> inverse;
  for (auto a : g->morphisms()) {
    for (auto b : g->morphisms()) table[a.value][b.value] = g->compose(b, a).value;
    inverse.push_back(g->inverse(a).value);
  }
  return one_object_structure(g, table, inverse);
}

std::vector<LabelledCovering> fixture_coverings() {
  std::vector<LabelledCovering> out;
  out.push_back({"codiscrete(2) -> Z2", check_covering(hand_cover_z2())});
  out.push_back({"identity on Z3", check_covering(identity_functor(z(3)))});
  auto tower = z4_tower();
  out.push_back({"universal cover of Z4", tower.universal});
  out.push_back({"two-fold cover of Z4", tower.twofold});
  out.push_back({"identity on Z4", tower.identity});
  auto s = s3();
  out.push_back({"universal cover of S3", universal_cover(s, ObjectId{0})});
  out.push_back({"cover of S3 for {r0, s0}", subgroup_cover(s, ObjectId{0}, Subgroup{ObjectId{0}, {s->morphism("r0"), s->morphism("s0")}})});
  out.push_back({"cover of S3 for A3",
                 subgroup_cover(s, ObjectId{0},
                                Subgroup{ObjectId{0}, {s->morphism("r0"), s->morphism("r1"), s->morphism("r2")}})});
  {
    auto two = z(2);
    auto left = with_prefix(*two, "l.");
    auto right = with_prefix(*two, "r.");
    auto both = disjoint_union(*left, *right);
    std::vector<ObjectId> objs(both->object_count(), ObjectId{0});
    std::vector<MorphismId> mors;
    for (auto a : both->morphisms()) mors.push_back(two->morphism(both->name(a).substr(2)));
    out.push_back({"fold of two copies of Z2", check_covering(GroupoidMorphism(both, two, objs, mors))});
  }
  out.push_back({"universal cover of the interval", universal_cover(interval_groupoid(), ObjectId{0})});
  {
    auto g = product(codiscrete({"a", "b"}), z(2));
    out.push_back({"universal cover of codiscrete(2) x Z2", universal_cover(g, ObjectId{0})});
  }
  return out;
}

}  // namespace gpd::testing
