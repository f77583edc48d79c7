#include "gpd/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <stdexcept>

#include "gpd/error.hpp"

namespace gpd {

namespace {

constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

}  // namespace

Groupoid Groupoid::assemble(Layout layout, const ComposeFn& compose) {
  Groupoid g;
  g.object_names_ = std::move(layout.object_names);
  g.morphism_names_ = std::move(layout.morphism_names);
  g.src_ = std::move(layout.src);
  g.tgt_ = std::move(layout.tgt);
  g.identity_ = std::move(layout.identity);
  g.inverse_ = std::move(layout.inverse);
  g.factors_ = std::move(layout.factors);

  const std::size_t n = g.object_names_.size();
  const std::size_t m = g.morphism_names_.size();
  if (g.src_.size() != m || g.tgt_.size() != m || g.inverse_.size() != m || g.identity_.size() != n) {
    throw std::invalid_argument("Groupoid::assemble: inconsistent layout sizes");
  }

  g.object_index_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) g.object_index_.emplace(g.object_names_[i], i);
  g.morphism_index_.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) g.morphism_index_.emplace(g.morphism_names_[i], i);

  g.stars_.assign(n, {});
  g.star_pos_.assign(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    auto& s = g.stars_[g.src_[i].value];
    g.star_pos_[i] = static_cast<std::uint32_t>(s.size());
    s.push_back(MorphismId{i});
  }

  g.row_offset_.assign(m + 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    g.row_offset_[i + 1] = g.row_offset_[i] + g.stars_[g.tgt_[i].value].size();
  }
  g.table_.resize(g.row_offset_[m]);
  for (std::uint32_t i = 0; i < m; ++i) {
    const MorphismId a{i};
    const auto& next = g.stars_[g.tgt_[i].value];
    for (std::size_t k = 0; k < next.size(); ++k) g.table_[g.row_offset_[i] + k] = compose(a, next[k]);
  }
  return g;
}

std::optional<ObjectId> Groupoid::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return ObjectId{it->second};
}

std::optional<MorphismId> Groupoid::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return MorphismId{it->second};
}

ObjectId Groupoid::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw Error(Errc::UnknownObject, "no object named '" + std::string(name) + "'", {std::string(name)});
}

MorphismId Groupoid::morphism(std::string_view name) const {
  if (auto a = find_morphism(name)) return *a;
  throw Error(Errc::UnknownId, "no morphism named '" + std::string(name) + "'", {std::string(name)});
}

MorphismId Groupoid::compose(MorphismId a, MorphismId b) const {
  if (!composable(a, b)) {
    throw std::logic_error("Groupoid::compose: '" + name(b) + "' after '" + name(a) + "' is not composable");
  }
  return table_[row_offset_[a.value] + star_pos_[b.value]];
}

ObjectId Groupoid::pair(ObjectId x, ObjectId y) const {
  return ObjectId{static_cast<std::uint32_t>(x.value * factors_->right->object_count() + y.value)};
}

MorphismId Groupoid::pair(MorphismId a, MorphismId b) const {
  return MorphismId{static_cast<std::uint32_t>(a.value * factors_->right->morphism_count() + b.value)};
}

ObjectId Groupoid::left(ObjectId p) const {
  return ObjectId{static_cast<std::uint32_t>(p.value / factors_->right->object_count())};
}

ObjectId Groupoid::right(ObjectId p) const {
  return ObjectId{static_cast<std::uint32_t>(p.value % factors_->right->object_count())};
}

MorphismId Groupoid::left(MorphismId p) const {
  return MorphismId{static_cast<std::uint32_t>(p.value / factors_->right->morphism_count())};
}

MorphismId Groupoid::right(MorphismId p) const {
  return MorphismId{static_cast<std::uint32_t>(p.value % factors_->right->morphism_count())};
}

bool Groupoid::operator==(const Groupoid& other) const {
  return object_names_ == other.object_names_ && morphism_names_ == other.morphism_names_ &&
         src_ == other.src_ && tgt_ == other.tgt_ && identity_ == other.identity_ &&
         inverse_ == other.inverse_ && table_ == other.table_;
}

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

namespace {

class SpecBuilder {
 public:
  explicit SpecBuilder(const GroupoidSpec& spec) : spec_(spec) {}

  GroupoidPtr build() {
    index_ids();
    read_table();
    check_totality();
    resolve_identities();
    resolve_inverses();
    check_associativity();

    Groupoid::Layout layout;
    layout.object_names = spec_.objects;
    for (const auto& m : spec_.morphisms) layout.morphism_names.push_back(m.id);
    layout.src = src_;
    layout.tgt = tgt_;
    layout.identity = identity_;
    layout.inverse = inverse_;
    return std::make_shared<const Groupoid>(Groupoid::assemble(
        std::move(layout), [this](MorphismId a, MorphismId b) { return *lookup(a, b); }));
  }

 private:
  ObjectId object_ref(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) {
      throw Error(Errc::UnknownId, "unknown object '" + name + "'", {name});
    }
    return ObjectId{it->second};
  }

  MorphismId morphism_ref(const std::string& name) const {
    auto it = morphisms_.find(name);
    if (it == morphisms_.end()) {
      throw Error(Errc::UnknownId, "unknown morphism '" + name + "'", {name});
    }
    return MorphismId{it->second};
  }

  const std::string& mname(MorphismId a) const { return spec_.morphisms[a.value].id; }
  const std::string& oname(ObjectId x) const { return spec_.objects[x.value]; }

  void index_ids() {
    for (std::uint32_t i = 0; i < spec_.objects.size(); ++i) {
      const auto& name = spec_.objects[i];
      if (name.empty()) throw Error(Errc::InvalidId, "empty object id");
      if (!objects_.emplace(name, i).second) {
        throw Error(Errc::DuplicateId, "object '" + name + "' listed twice", {name});
      }
    }
    for (std::uint32_t i = 0; i < spec_.morphisms.size(); ++i) {
      const auto& decl = spec_.morphisms[i];
      if (decl.id.empty()) throw Error(Errc::InvalidId, "empty morphism id");
      if (!morphisms_.emplace(decl.id, i).second) {
        throw Error(Errc::DuplicateId, "morphism '" + decl.id + "' listed twice", {decl.id});
      }
      src_.push_back(object_ref(decl.src));
      tgt_.push_back(object_ref(decl.tgt));
    }
    stars_.assign(spec_.objects.size(), {});
    for (std::uint32_t i = 0; i < src_.size(); ++i) stars_[src_[i].value].push_back(MorphismId{i});
  }

  void read_table() {
    for (const auto& entry : spec_.compose) {
      const MorphismId a = morphism_ref(entry.first);
      const MorphismId b = morphism_ref(entry.second);
      const MorphismId c = morphism_ref(entry.result);
      std::vector<std::string> witness{entry.first, entry.second, entry.result};
      if (tgt_[a.value] != src_[b.value]) {
        throw Error(Errc::IllTypedComposite,
                    "'" + entry.second + "' after '" + entry.first + "' is not composable", witness);
      }
      if (src_[c.value] != src_[a.value] || tgt_[c.value] != tgt_[b.value]) {
        throw Error(Errc::IllTypedComposite,
                    "composite '" + entry.result + "' of '" + entry.second + "' after '" + entry.first +
                        "' has the wrong source or target",
                    witness);
      }
      if (!table_.emplace(key(a, b), c).second) {
        throw Error(Errc::ConflictingComposite,
                    "pair ('" + entry.first + "', '" + entry.second + "') listed twice", witness);
      }
    }
  }

  static std::uint64_t key(MorphismId a, MorphismId b) {
    return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
  }

  std::optional<MorphismId> lookup(MorphismId a, MorphismId b) const {
    auto it = table_.find(key(a, b));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  MorphismId comp(MorphismId a, MorphismId b) const { return *lookup(a, b); }

  void check_totality() const {
    for (std::uint32_t i = 0; i < src_.size(); ++i) {
      for (MorphismId b : stars_[tgt_[i].value]) {
        if (!lookup(MorphismId{i}, b)) {
          const auto& an = mname(MorphismId{i});
          throw Error(Errc::MissingComposite,
                      "no composite listed for '" + mname(b) + "' after '" + an + "'", {an, mname(b)});
        }
      }
    }
  }

  bool is_neutral(ObjectId x, MorphismId e) const {
    if (src_[e.value] != x || tgt_[e.value] != x) return false;
    for (MorphismId a : stars_[x.value]) {
      if (comp(e, a) != a) return false;
    }
    for (std::uint32_t i = 0; i < tgt_.size(); ++i) {
      if (tgt_[i] == x && comp(MorphismId{i}, e) != MorphismId{i}) return false;
    }
    return true;
  }

  void resolve_identities() {
    std::vector<std::optional<MorphismId>> given(spec_.objects.size());
    for (const auto& [obj, mor] : spec_.identities) {
      const ObjectId x = object_ref(obj);
      const MorphismId e = morphism_ref(mor);
      if (given[x.value]) throw Error(Errc::DuplicateId, "identity of '" + obj + "' listed twice", {obj});
      given[x.value] = e;
    }
    for (std::uint32_t i = 0; i < spec_.objects.size(); ++i) {
      const ObjectId x{i};
      MorphismId e;
      if (given[i]) {
        e = *given[i];
      } else {
        std::vector<MorphismId> idempotents;
        for (MorphismId a : stars_[i]) {
          if (tgt_[a.value] == x && comp(a, a) == a) idempotents.push_back(a);
        }
        if (idempotents.size() != 1) {
          std::vector<std::string> witness{oname(x)};
          for (auto a : idempotents) witness.push_back(mname(a));
          throw Error(Errc::NoIdentity,
                      "object '" + oname(x) + "' has " + std::to_string(idempotents.size()) +
                          " idempotent loops, expected exactly one",
                      witness);
        }
        e = idempotents.front();
      }
      if (!is_neutral(x, e)) {
        throw Error(Errc::NoIdentity, "'" + mname(e) + "' does not act as the identity of '" + oname(x) + "'",
                    {oname(x), mname(e)});
      }
      identity_.push_back(e);
    }
  }

  bool is_inverse_pair(MorphismId a, MorphismId b) const {
    return src_[b.value] == tgt_[a.value] && tgt_[b.value] == src_[a.value] &&
           comp(a, b) == identity_[src_[a.value].value] && comp(b, a) == identity_[tgt_[a.value].value];
  }

  void resolve_inverses() {
    const std::size_t m = spec_.morphisms.size();
    std::vector<std::optional<MorphismId>> given(m);
    for (const auto& [mor, inv] : spec_.inverses) {
      const MorphismId a = morphism_ref(mor);
      const MorphismId b = morphism_ref(inv);
      if (given[a.value]) throw Error(Errc::DuplicateId, "inverse of '" + mor + "' listed twice", {mor});
      given[a.value] = b;
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      const MorphismId a{i};
      std::optional<MorphismId> found;
      if (given[i]) {
        if (is_inverse_pair(a, *given[i])) found = given[i];
      } else {
        for (MorphismId b : stars_[tgt_[i].value]) {
          if (is_inverse_pair(a, b)) {
            found = b;
            break;
          }
        }
      }
      if (!found) {
        std::vector<std::string> witness{mname(a)};
        if (given[i]) witness.push_back(mname(*given[i]));
        throw Error(Errc::NoInverse, "'" + mname(a) + "' has no two-sided inverse", witness);
      }
      inverse_.push_back(*found);
    }
  }

  void check_associativity() const {
    for (std::uint32_t i = 0; i < src_.size(); ++i) {
      const MorphismId a{i};
      for (MorphismId b : stars_[tgt_[i].value]) {
        const MorphismId ba = comp(a, b);
        for (MorphismId c : stars_[tgt_[b.value].value]) {
          if (comp(ba, c) != comp(a, comp(b, c))) {
            throw Error(Errc::NonAssociative,
                        "(" + mname(c) + " " + mname(b) + ") " + mname(a) + " != " + mname(c) + " (" +
                            mname(b) + " " + mname(a) + ")",
                        {mname(a), mname(b), mname(c)});
          }
        }
      }
    }
  }

  const GroupoidSpec& spec_;
  std::unordered_map<std::string, std::uint32_t> objects_;
  std::unordered_map<std::string, std::uint32_t> morphisms_;
  std::vector<ObjectId> src_;
  std::vector<ObjectId> tgt_;
  std::vector<std::vector<MorphismId>> stars_;
  std::unordered_map<std::uint64_t, MorphismId> table_;
  std::vector<MorphismId> identity_;
  std::vector<MorphismId> inverse_;
};

}  // namespace

GroupoidPtr build_groupoid(const GroupoidSpec& spec) { return SpecBuilder(spec).build(); }

GroupoidSpec to_spec(const Groupoid& g) {
  GroupoidSpec spec;
  for (auto x : g.objects()) spec.objects.push_back(g.name(x));
  for (auto a : g.morphisms()) spec.morphisms.push_back({g.name(a), g.name(g.src(a)), g.name(g.tgt(a))});
  for (auto a : g.morphisms()) {
    for (auto b : g.star(g.tgt(a))) spec.compose.push_back({g.name(a), g.name(b), g.name(g.compose(a, b))});
  }
  for (auto x : g.objects()) spec.identities.emplace_back(g.name(x), g.name(g.identity(x)));
  for (auto a : g.morphisms()) spec.inverses.emplace_back(g.name(a), g.name(g.inverse(a)));
  return spec;
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(MorphismId a) const { return std::binary_search(elements.begin(), elements.end(), a); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return base == other.base && std::includes(other.elements.begin(), other.elements.end(),
                                             elements.begin(), elements.end());
}

bool is_subgroup(const Groupoid& g, const Subgroup& h) {
  if (!g.contains(h.base) || !std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  for (auto a : h.elements) {
    if (!g.contains(a) || g.src(a) != h.base || g.tgt(a) != h.base) return false;
  }
  if (!h.contains(g.identity(h.base))) return false;
  for (auto a : h.elements) {
    if (!h.contains(g.inverse(a))) return false;
    for (auto b : h.elements) {
      if (!h.contains(g.compose(a, b))) return false;
    }
  }
  return true;
}

namespace {

void require_object(const Groupoid& g, ObjectId x) {
  if (!g.contains(x)) {
    throw Error(Errc::UnknownObject, "object index " + std::to_string(x.value) + " out of range");
  }
}

}  // namespace

std::vector<MorphismId> star(const Groupoid& g, ObjectId x) {
  require_object(g, x);
  auto s = g.star(x);
  return {s.begin(), s.end()};
}

std::vector<MorphismId> hom(const Groupoid& g, ObjectId x, ObjectId y) {
  require_object(g, x);
  require_object(g, y);
  std::vector<MorphismId> out;
  for (auto a : g.star(x)) {
    if (g.tgt(a) == y) out.push_back(a);
  }
  return out;
}

Subgroup object_group(const Groupoid& g, ObjectId x) { return Subgroup{x, hom(g, x, x)}; }

namespace {

// Hom-set sizes for every ordered pair, row-major.
std::vector<std::size_t> hom_sizes(const Groupoid& g) {
  const std::size_t n = g.object_count();
  std::vector<std::size_t> sizes(n * n, 0);
  for (auto a : g.morphisms()) ++sizes[g.src(a).value * n + g.tgt(a).value];
  return sizes;
}

}  // namespace

bool is_connected(const Groupoid& g) {
  return std::ranges::all_of(hom_sizes(g), [](std::size_t k) { return k > 0; });
}

bool is_simply_connected(const Groupoid& g) {
  return std::ranges::all_of(hom_sizes(g), [](std::size_t k) { return k == 1; });
}

bool has_thin_homs(const Groupoid& g) {
  return std::ranges::all_of(hom_sizes(g), [](std::size_t k) { return k <= 1; });
}

std::vector<std::uint32_t> connected_components(const Groupoid& g) {
  std::vector<std::uint32_t> comp(g.object_count(), kUnset);
  std::uint32_t next = 0;
  for (auto x : g.objects()) {
    if (comp[x.value] != kUnset) continue;
    for (auto y : spanning_tree(g, x).order) comp[y.value] = next;
    ++next;
  }
  return comp;
}

SpanningTree spanning_tree(const Groupoid& g, ObjectId root) {
  require_object(g, root);
  SpanningTree tree{root, {}, std::vector<std::optional<MorphismId>>(g.object_count())};
  std::vector<bool> seen(g.object_count(), false);
  std::deque<ObjectId> queue{root};
  seen[root.value] = true;
  while (!queue.empty()) {
    const ObjectId w = queue.front();
    queue.pop_front();
    tree.order.push_back(w);
    for (auto a : g.star(w)) {
      const ObjectId y = g.tgt(a);
      if (seen[y.value]) continue;
      seen[y.value] = true;
      tree.tree_edge[y.value] = a;
      queue.push_back(y);
    }
  }
  return tree;
}

}  // namespace gpd
