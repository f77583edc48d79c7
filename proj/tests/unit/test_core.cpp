#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gpd/constructions.hpp"
#include "gpd/error.hpp"
#include "gpd/groupoid.hpp"
#include "support.hpp"

using namespace gpd;
using namespace gpd::testing;

namespace {

GroupoidSpec cyclic_spec(int n) {
  GroupoidSpec s;
  s.objects = {"*"};
  for (int a = 0; a < n; ++a) s.morphisms.push_back({std::to_string(a), "*", "*"});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) s.compose.push_back({std::to_string(a), std::to_string(b), std::to_string((a + b) % n)});
  }
  return s;
}

Errc code_of(const GroupoidSpec& s) {
  try {
    build_groupoid(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("spec was accepted");
  return Errc::IoError;
}

std::vector<std::string> names_of(const Groupoid& g, const std::vector<MorphismId>& ms) {
  std::vector<std::string> out;
  for (auto a : ms) out.push_back(g.name(a));
  return out;
}

}  // namespace

TEST_CASE("Z/3 spec builds a one-object groupoid") {
  auto g = build_groupoid(cyclic_spec(3));
  CHECK(g->object_count() == 1);
  CHECK(g->morphism_count() == 3);
  CHECK(g->name(g->identity(ObjectId{0})) == "0");
  CHECK(g->name(g->inverse(g->morphism("1"))) == "2");
  CHECK(g->name(g->compose(g->morphism("1"), g->morphism("2"))) == "0");
}

TEST_CASE("missing composite is reported") {
  GroupoidSpec s;
  s.objects = {"x", "y", "z"};
  s.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"1z", "z", "z"}, {"a", "x", "y"}, {"b", "y", "z"}};
  s.compose = {{"1x", "1x", "1x"}, {"1y", "1y", "1y"}, {"1z", "1z", "1z"}, {"1x", "a", "a"},
               {"a", "1y", "a"},   {"1y", "b", "b"},   {"b", "1z", "b"}};
  try {
    build_groupoid(s);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingComposite);
    CHECK(e.witness() == std::vector<std::string>{"a", "b"});
  }
}

TEST_CASE("Z/4 with 2+2=1 fails the inverse check first") {
  auto s = cyclic_spec(4);
  for (auto& c : s.compose) {
    if (c.first == "2" && c.second == "2") c.result = "1";
  }
  CHECK(classify_spec(s) == Errc::NoInverse);
  try {
    build_groupoid(s);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoInverse);
    CHECK(e.witness().front() == "2");
  }
}

TEST_CASE("id and table errors") {
  auto s = cyclic_spec(2);
  SUBCASE("duplicate morphism") {
    s.morphisms.push_back({"1", "*", "*"});
    CHECK(code_of(s) == Errc::DuplicateId);
  }
  SUBCASE("duplicate object") {
    s.objects.push_back("*");
    CHECK(code_of(s) == Errc::DuplicateId);
  }
  SUBCASE("empty id") {
    s.objects.push_back("");
    CHECK(code_of(s) == Errc::InvalidId);
  }
  SUBCASE("unknown endpoint") {
    s.morphisms.push_back({"q", "*", "nowhere"});
    CHECK(code_of(s) == Errc::UnknownId);
  }
  SUBCASE("unknown morphism in the table") {
    s.compose.push_back({"0", "7", "0"});
    CHECK(code_of(s) == Errc::UnknownId);
  }
  SUBCASE("pair listed twice") {
    s.compose.push_back({"0", "1", "0"});
    CHECK(code_of(s) == Errc::ConflictingComposite);
  }
  SUBCASE("listed identity that is not neutral") {
    s.identities = {{"*", "1"}};
    CHECK(code_of(s) == Errc::NoIdentity);
  }
  SUBCASE("listed inverse that is wrong") {
    s.inverses = {{"1", "0"}};
    CHECK(code_of(s) == Errc::NoInverse);
  }
}

TEST_CASE("ill-typed composite") {
  GroupoidSpec s;
  s.objects = {"x", "y"};
  s.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"a", "x", "y"}, {"b", "y", "x"}};
  s.compose = {{"1x", "1x", "1x"}, {"1x", "a", "a"}, {"a", "1y", "a"}, {"a", "b", "1y"}};
  CHECK(code_of(s) == Errc::IllTypedComposite);
  s.compose.back() = {"b", "b", "1x"};
  CHECK(code_of(s) == Errc::IllTypedComposite);
}

TEST_CASE("idempotent ambiguity yields NoIdentity") {
  // Two-element left-zero style magma: every element idempotent.
  GroupoidSpec s;
  s.objects = {"*"};
  s.morphisms = {{"e", "*", "*"}, {"f", "*", "*"}};
  s.compose = {{"e", "e", "e"}, {"e", "f", "e"}, {"f", "e", "f"}, {"f", "f", "f"}};
  CHECK(code_of(s) == Errc::NoIdentity);
}

TEST_CASE("stars") {
  auto z3 = z(3);
  CHECK(star(*z3, ObjectId{0}).size() == 3);
  auto j = interval_groupoid();
  CHECK(names_of(*j, star(*j, j->object("0"))) == std::vector<std::string>{"id0", "i"});
  auto c3 = codiscrete({"0", "1", "2"});
  CHECK(star(*c3, ObjectId{0}).size() == 3);
}

TEST_CASE("hom sets") {
  auto j = interval_groupoid();
  CHECK(names_of(*j, hom(*j, j->object("0"), j->object("1"))) == std::vector<std::string>{"i"});
  CHECK(hom(*z(3), ObjectId{0}, ObjectId{0}).size() == 3);
  auto u = disjoint_union(*with_prefix(*z(2), "a"), *with_prefix(*z(3), "b"));
  CHECK(hom(*u, ObjectId{0}, ObjectId{1}).empty());
  CHECK(hom(*u, ObjectId{1}, ObjectId{0}).empty());
}

TEST_CASE("object groups") {
  CHECK(object_group(*z(3), ObjectId{0}).order() == 3);
  auto c3 = codiscrete({"0", "1", "2"});
  auto h = object_group(*c3, ObjectId{0});
  CHECK(h.order() == 1);
  CHECK(h.elements.front() == c3->identity(ObjectId{0}));
  auto j = interval_groupoid();
  CHECK(names_of(*j, object_group(*j, j->object("0")).elements) == std::vector<std::string>{"id0"});
  CHECK(is_subgroup(*c3, h));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(*codiscrete({"0", "1", "2"})));
  auto u = disjoint_union(*with_prefix(*z(2), "a"), *with_prefix(*z(3), "b"));
  CHECK_FALSE(is_connected(*u));
  CHECK(is_connected(*interval_groupoid()));
  CHECK(is_simply_connected(*interval_groupoid()));
  CHECK_FALSE(is_simply_connected(*z(3)));
  CHECK(is_simply_connected(*codiscrete({"0", "1", "2", "3"})));
  CHECK(connected_components(*u) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("empty groupoid is connected and simply connected") {
  auto e = build_groupoid(GroupoidSpec{});
  CHECK(e->object_count() == 0);
  CHECK(is_connected(*e));
  CHECK(is_simply_connected(*e));
  CHECK(has_thin_homs(*e));
}

TEST_CASE("products") {
  auto j = interval_groupoid();
  auto jj = product(j, j);
  CHECK(jj->object_count() == 4);
  CHECK(jj->morphism_count() == 16);

  auto g = s3();
  auto gt = product(g, trivial_groupoid());
  auto proj = projection_left(gt);
  CHECK(is_isomorphism(proj));
  CHECK(brute_is_functor(proj));

  auto z23 = product(z(2), z(3));
  CHECK(z23->object_count() == 1);
  CHECK(z23->morphism_count() == 6);
  auto isos = all_functors(z23, z(6), FunctorFilter{nullptr, nullptr});
  bool found_iso = std::any_of(isos.begin(), isos.end(), [](const GroupoidMorphism& f) { return is_isomorphism(f); });
  CHECK(found_iso);
}

TEST_CASE("interval groupoid") {
  auto j = interval_groupoid();
  CHECK(j->object_count() == 2);
  CHECK(j->morphism_count() == 4);
  std::vector<std::string> ids;
  for (auto a : j->morphisms()) ids.push_back(j->name(a));
  CHECK(ids == std::vector<std::string>{"id0", "id1", "i", "iinv"});
  CHECK(j->compose(j->morphism("i"), j->morphism("iinv")) == j->identity(j->object("0")));
  CHECK(j->compose(j->morphism("iinv"), j->morphism("i")) == j->identity(j->object("1")));
}

TEST_CASE("groups as groupoids") {
  auto two = z(2);
  CHECK(two->object_count() == 1);
  CHECK(two->morphism_count() == 2);
  auto g = s3();
  CHECK(g->morphism_count() == 6);
  bool abelian = true;
  for (auto a : g->morphisms()) {
    for (auto b : g->morphisms()) abelian = abelian && g->compose(a, b) == g->compose(b, a);
  }
  CHECK_FALSE(abelian);

  GroupTable magma{{"a", "b"}, {{0, 0}, {1, 0}}};
  CHECK_THROWS_AS(group_as_groupoid(magma), Error);
  try {
    group_as_groupoid(magma);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAGroup);
  }
}

TEST_CASE("group tables of order at most 8 are groups") {
  for (const auto& g : small_groups()) {
    CAPTURE(g.name);
    CHECK_NOTHROW(check_group_table(g.table));
  }
  CHECK(small_groups().size() == 14);
}

TEST_CASE("codiscrete groupoids") {
  auto c2 = codiscrete({"0", "1"});
  auto isos = all_functors(c2, interval_groupoid());
  CHECK(std::any_of(isos.begin(), isos.end(), [](const GroupoidMorphism& f) { return is_isomorphism(f); }));
  auto c1 = codiscrete({"a"});
  CHECK(c1->object_count() == 1);
  CHECK(c1->morphism_count() == 1);
  auto c3 = codiscrete({"0", "1", "2"});
  CHECK(c3->morphism_count() == 9);
  CHECK(is_simply_connected(*c3));
  try {
    codiscrete({});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptySet);
  }
}

TEST_CASE("random specs round-trip and satisfy the groupoid laws") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    GenOptions opt;
    opt.list_identities = round % 2 == 0;
    const auto spec = random_spec(rng, opt);
    CHECK_FALSE(classify_spec(spec).has_value());
    auto g = build_groupoid(spec);

    // Declared structure is preserved.
    REQUIRE(g->object_count() == spec.objects.size());
    REQUIRE(g->morphism_count() == spec.morphisms.size());
    for (std::size_t i = 0; i < spec.objects.size(); ++i) CHECK(g->name(ObjectId{std::uint32_t(i)}) == spec.objects[i]);
    for (const auto& m : spec.morphisms) {
      const auto a = g->morphism(m.id);
      CHECK(g->name(g->src(a)) == m.src);
      CHECK(g->name(g->tgt(a)) == m.tgt);
    }
    for (const auto& c : spec.compose) {
      CHECK(g->name(g->compose(g->morphism(c.first), g->morphism(c.second))) == c.result);
    }
    CHECK(*build_groupoid(to_spec(*g)) == *g);

    // Laws by enumeration.
    std::size_t star_total = 0;
    for (auto x : g->objects()) {
      star_total += star(*g, x).size();
      const auto e = g->identity(x);
      CHECK(g->src(e) == x);
      CHECK(g->tgt(e) == x);
      CHECK(g->inverse(e) == e);
    }
    CHECK(star_total == g->morphism_count());
    for (auto a : g->morphisms()) {
      CHECK(g->inverse(g->inverse(a)) == a);
      CHECK(g->compose(a, g->inverse(a)) == g->identity(g->src(a)));
      CHECK(g->compose(g->identity(g->src(a)), a) == a);
      CHECK(g->compose(a, g->identity(g->tgt(a))) == a);
      for (auto b : g->star(g->tgt(a))) {
        CHECK(g->src(g->compose(a, b)) == g->src(a));
        CHECK(g->tgt(g->compose(a, b)) == g->tgt(b));
        for (auto c : g->star(g->tgt(b))) {
          CHECK(g->compose(g->compose(a, b), c) == g->compose(a, g->compose(b, c)));
        }
      }
    }
    if (is_simply_connected(*g)) {
      CHECK(is_connected(*g));
      for (auto x : g->objects()) CHECK(object_group(*g, x).order() == 1);
    }
  }
}

TEST_CASE("products of random groupoids validate and project functorially") {
  std::mt19937 rng(11);
  GenOptions small;
  small.max_objects = 3;
  small.max_morphisms = 8;
  for (int round = 0; round < 20; ++round) {
    auto g = random_groupoid(rng, small);
    auto h = random_groupoid(rng, small);
    auto p = product_with_projections(g, h);
    CHECK(*build_groupoid(to_spec(*p.groupoid)) == *p.groupoid);
    CHECK(brute_is_functor(p.left));
    CHECK(brute_is_functor(p.right));
    CHECK(p.groupoid->morphism_count() == g->morphism_count() * h->morphism_count());
  }
}

TEST_CASE("group_as_groupoid recovers its table") {
  for (const auto& ng : small_groups()) {
    CAPTURE(ng.name);
    auto g = group_as_groupoid(ng.table);
    auto h = object_group(*g, ObjectId{0});
    REQUIRE(h.order() == ng.table.elements.size());
    for (std::size_t a = 0; a < h.order(); ++a) {
      for (std::size_t b = 0; b < h.order(); ++b) {
        // ab is "a after b".
        const auto ab = g->compose(g->morphism(ng.table.elements[b]), g->morphism(ng.table.elements[a]));
        CHECK(g->name(ab) == ng.table.elements[ng.table.product[a][b]]);
      }
    }
  }
}

TEST_CASE("groupoid equality ignores product provenance") {
  auto p = product(z(2), z(3));
  auto rebuilt = build_groupoid(to_spec(*p));
  CHECK(*p == *rebuilt);
  CHECK(p->is_product());
  CHECK_FALSE(rebuilt->is_product());
}
