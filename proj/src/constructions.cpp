#include "gpd/constructions.hpp"

#include <unordered_set>

#include "gpd/error.hpp"

namespace gpd {

void check_group_table(const GroupTable& table) {
  const std::size_t n = table.elements.size();
  const auto& e = table.elements;
  if (n == 0) throw Error(Errc::NotAGroup, "a group has at least one element");
  if (table.product.size() != n) throw Error(Errc::NotAGroup, "product table has the wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (table.product[i].size() != n) {
      throw Error(Errc::NotAGroup, "row '" + e[i] + "' has the wrong length", {e[i]});
    }
    for (std::size_t v : table.product[i]) {
      if (v >= n) throw Error(Errc::NotAGroup, "row '" + e[i] + "' leaves the element set", {e[i]});
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : e) {
    if (name.empty()) throw Error(Errc::InvalidId, "empty element name");
    if (!seen.insert(name).second) throw Error(Errc::DuplicateId, "element '" + name + "' listed twice", {name});
  }
  const auto& p = table.product;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (p[p[a][b]][c] != p[a][p[b][c]]) {
          throw Error(Errc::NotAGroup, "product is not associative on (" + e[a] + ", " + e[b] + ", " + e[c] + ")",
                      {e[a], e[b], e[c]});
        }
      }
    }
  }
  std::size_t unit = n;
  for (std::size_t u = 0; u < n && unit == n; ++u) {
    bool neutral = true;
    for (std::size_t a = 0; a < n && neutral; ++a) neutral = p[u][a] == a && p[a][u] == a;
    if (neutral) unit = u;
  }
  if (unit == n) throw Error(Errc::NotAGroup, "no neutral element");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = p[a][b] == unit && p[b][a] == unit;
    if (!has_inverse) throw Error(Errc::NotAGroup, "'" + e[a] + "' has no inverse", {e[a]});
  }
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable t;
  for (std::size_t i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
  t.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.product[a][b] = (a + b) % n;
  }
  return t;
}

GroupTable dihedral_group(std::size_t n) {
  // Element f * n + k stands for r^k s^f, with s r s = r^-1.
  GroupTable t;
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t k = 0; k < n; ++k) t.elements.push_back((f == 0 ? "r" : "s") + std::to_string(k));
  }
  t.product.assign(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x) {
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t fa = x / n, ka = x % n, fb = y / n, kb = y % n;
      const std::size_t k = fa == 0 ? (ka + kb) % n : (ka + n - kb) % n;
      t.product[x][y] = ((fa + fb) % 2) * n + k;
    }
  }
  return t;
}

GroupTable quaternion_group() {
  // Element 2 * u + s is (-1)^s * unit[u], units ordered 1, i, j, k.
  static constexpr int kUnitProduct[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kUnitSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* const kUnitName[4] = {"1", "i", "j", "k"};
  GroupTable t;
  for (int u = 0; u < 4; ++u) {
    t.elements.push_back(kUnitName[u]);
    t.elements.push_back(std::string("-") + kUnitName[u]);
  }
  t.product.assign(8, std::vector<std::size_t>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2 + y % 2 + kUnitSign[u][v]) % 2;
      t.product[x][y] = static_cast<std::size_t>(2 * kUnitProduct[u][v] + sign);
    }
  }
  return t;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t m = b.elements.size();
  GroupTable t;
  for (const auto& x : a.elements) {
    for (const auto& y : b.elements) t.elements.push_back(x + "," + y);
  }
  const std::size_t n = t.elements.size();
  t.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t.product[x][y] = a.product[x / m][y / m] * m + b.product[x % m][y % m];
    }
  }
  return t;
}

GroupoidPtr group_as_groupoid(const GroupTable& table) {
  check_group_table(table);
  const std::size_t n = table.elements.size();
  const auto& p = table.product;
  std::size_t unit = 0;
  while (p[unit][unit] != unit) ++unit;

  Groupoid::Layout layout;
  layout.object_names = {"*"};
  layout.morphism_names = table.elements;
  layout.src.assign(n, ObjectId{0});
  layout.tgt.assign(n, ObjectId{0});
  layout.identity = {MorphismId{static_cast<std::uint32_t>(unit)}};
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (p[a][b] != unit) ++b;
    layout.inverse.push_back(MorphismId{static_cast<std::uint32_t>(b)});
  }
  return std::make_shared<const Groupoid>(Groupoid::assemble(std::move(layout), [&](MorphismId a, MorphismId b) {
    return MorphismId{static_cast<std::uint32_t>(p[b.value][a.value])};
  }));
}

GroupoidPtr interval_groupoid() {
  Groupoid::Layout layout;
  layout.object_names = {"0", "1"};
  layout.morphism_names = {"id0", "id1", "i", "iinv"};
  layout.src = {ObjectId{0}, ObjectId{1}, ObjectId{0}, ObjectId{1}};
  layout.tgt = {ObjectId{0}, ObjectId{1}, ObjectId{1}, ObjectId{0}};
  layout.identity = {MorphismId{0}, MorphismId{1}};
  layout.inverse = {MorphismId{0}, MorphismId{1}, MorphismId{3}, MorphismId{2}};
  // A morphism is determined by its endpoints.
  auto by_ends = [](ObjectId s, ObjectId t) {
    static constexpr std::uint32_t kIds[2][2] = {{0, 2}, {3, 1}};
    return MorphismId{kIds[s.value][t.value]};
  };
  auto g = Groupoid::assemble(layout, [&](MorphismId a, MorphismId b) {
    return by_ends(layout.src[a.value], layout.tgt[b.value]);
  });
  return std::make_shared<const Groupoid>(std::move(g));
}

GroupoidPtr codiscrete(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(Errc::EmptySet, "codiscrete groupoid needs at least one object");
  const auto n = static_cast<std::uint32_t>(labels.size());
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(Errc::InvalidId, "empty label");
    if (!seen.insert(l).second) throw Error(Errc::DuplicateId, "label '" + l + "' listed twice", {l});
  }
  Groupoid::Layout layout;
  layout.object_names = labels;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      layout.morphism_names.push_back(labels[x] + ">" + labels[y]);
      layout.src.push_back(ObjectId{x});
      layout.tgt.push_back(ObjectId{y});
      layout.inverse.push_back(MorphismId{y * n + x});
    }
    layout.identity.push_back(MorphismId{x * n + x});
  }
  const auto src = layout.src;
  const auto tgt = layout.tgt;
  auto g = Groupoid::assemble(std::move(layout), [&](MorphismId a, MorphismId b) {
    return MorphismId{src[a.value].value * n + tgt[b.value].value};
  });
  // Distinct labels may still produce clashing "x>y" names.
  std::unordered_set<std::string> names;
  for (auto a : g.morphisms()) {
    if (!names.insert(g.name(a)).second) {
      throw Error(Errc::DuplicateId, "morphism name '" + g.name(a) + "' is ambiguous", {g.name(a)});
    }
  }
  return std::make_shared<const Groupoid>(std::move(g));
}

GroupoidPtr product(const GroupoidPtr& g, const GroupoidPtr& h) {
  const auto on = static_cast<std::uint32_t>(h->object_count());
  const auto mn = static_cast<std::uint32_t>(h->morphism_count());
  Groupoid::Layout layout;
  for (auto x : g->objects()) {
    for (auto y : h->objects()) {
      layout.object_names.push_back(g->name(x) + "|" + h->name(y));
      layout.identity.push_back(MorphismId{g->identity(x).value * mn + h->identity(y).value});
    }
  }
  for (auto a : g->morphisms()) {
    for (auto b : h->morphisms()) {
      layout.morphism_names.push_back(g->name(a) + "|" + h->name(b));
      layout.src.push_back(ObjectId{g->src(a).value * on + h->src(b).value});
      layout.tgt.push_back(ObjectId{g->tgt(a).value * on + h->tgt(b).value});
      layout.inverse.push_back(MorphismId{g->inverse(a).value * mn + h->inverse(b).value});
    }
  }
  layout.factors = ProductFactors{g, h};
  auto p = Groupoid::assemble(std::move(layout), [&](MorphismId a, MorphismId b) {
    const MorphismId l = g->compose(MorphismId{a.value / mn}, MorphismId{b.value / mn});
    const MorphismId r = h->compose(MorphismId{a.value % mn}, MorphismId{b.value % mn});
    return MorphismId{l.value * mn + r.value};
  });
  return std::make_shared<const Groupoid>(std::move(p));
}

GroupoidPtr disjoint_union(const Groupoid& g, const Groupoid& h) {
  GroupoidSpec spec = to_spec(g);
  GroupoidSpec right = to_spec(h);
  auto append = [](auto& into, auto& from) { into.insert(into.end(), from.begin(), from.end()); };
  append(spec.objects, right.objects);
  append(spec.morphisms, right.morphisms);
  append(spec.compose, right.compose);
  append(spec.identities, right.identities);
  append(spec.inverses, right.inverses);
  return build_groupoid(spec);
}

GroupoidPtr with_prefix(const Groupoid& g, const std::string& prefix) {
  Groupoid::Layout layout;
  for (auto x : g.objects()) {
    layout.object_names.push_back(prefix + g.name(x));
    layout.identity.push_back(g.identity(x));
  }
  for (auto a : g.morphisms()) {
    layout.morphism_names.push_back(prefix + g.name(a));
    layout.src.push_back(g.src(a));
    layout.tgt.push_back(g.tgt(a));
    layout.inverse.push_back(g.inverse(a));
  }
  return std::make_shared<const Groupoid>(
      Groupoid::assemble(std::move(layout), [&](MorphismId a, MorphismId b) { return g.compose(a, b); }));
}

GroupoidPtr trivial_groupoid() {
  Groupoid::Layout layout;
  layout.object_names = {"*"};
  layout.morphism_names = {"1"};
  layout.src = {ObjectId{0}};
  layout.tgt = {ObjectId{0}};
  layout.identity = {MorphismId{0}};
  layout.inverse = {MorphismId{0}};
  return std::make_shared<const Groupoid>(
      Groupoid::assemble(std::move(layout), [](MorphismId, MorphismId) { return MorphismId{0}; }));
}

}  // namespace gpd
