#pragma once

// Brute-force oracles and generators shared by the unit and acceptance
// tests. Nothing here calls the library's decision procedures; the oracles
// work from the raw tables.

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gpd/catgroup.hpp"
#include "gpd/constructions.hpp"
#include "gpd/covering.hpp"
#include "gpd/error.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/homotopy.hpp"

namespace gpd::testing {

struct NamedGroup {
  std::string name;
  GroupTable table;
};

/// One representative of every isomorphism class of groups of order <= 8.
const std::vector<NamedGroup>& small_groups();

bool is_abelian(const GroupTable& t);

// ---------------------------------------------------------------------------
// Generators.

struct GenOptions {
  std::size_t max_objects = 6;
  std::size_t max_morphisms = 24;
  bool connected = false;
  bool list_identities = false;  // list some identities/inverses explicitly
};

/// Random groupoid spec: a disjoint union of components codiscrete(n) x K
/// for small groups K, with shuffled names and listing order.
GroupoidSpec random_spec(std::mt19937& rng, const GenOptions& opt = {});
GroupoidPtr random_groupoid(std::mt19937& rng, const GenOptions& opt = {});

/// A functor g -> h found by randomized backtracking (always exists when h
/// is nonempty: constant functors).
GroupoidMorphism random_functor(std::mt19937& rng, const GroupoidPtr& g, const GroupoidPtr& h);

/// Random maps with no functor guarantee (src/tgt may even be wrong).
GroupoidMorphism random_maps(std::mt19937& rng, const GroupoidPtr& g, const GroupoidPtr& h);

/// Same groupoid with objects and morphisms renamed and reordered.
GroupoidPtr shuffled_copy(std::mt19937& rng, const Groupoid& g);

// ---------------------------------------------------------------------------
// Oracles.

/// Functor laws checked from the definition over every composable pair.
bool brute_is_functor(const GroupoidMorphism& f);

/// Every functor g -> h accepted by the filters, by backtracking over the
/// object map and then the morphism map. Stops after `limit` results.
struct FunctorFilter {
  std::function<bool(ObjectId, ObjectId)> object;      // (x, image)
  std::function<bool(MorphismId, MorphismId)> morphism;  // (a, image)
};
std::vector<GroupoidMorphism> all_functors(const GroupoidPtr& g, const GroupoidPtr& h, const FunctorFilter& filter = {},
                                           std::size_t limit = static_cast<std::size_t>(-1));

/// Every g with src(g) = p(xt) has exactly one preimage among the morphisms
/// leaving xt; scans whole morphism sets.
bool brute_unique_lifting(const GroupoidMorphism& p);

/// Images of loops at z under q, as a sorted list.
std::vector<MorphismId> brute_image_of_loops(const GroupoidMorphism& q, ObjectId z);

/// Every component tuple making sigma : f -> g natural, in lexicographic
/// order of (component at object 0, component at object 1, ...).
std::vector<std::vector<MorphismId>> all_nat_isos(const GroupoidMorphism& f, const GroupoidMorphism& g,
                                                  std::size_t limit = static_cast<std::size_t>(-1));

/// Random natural isomorphism out of f: random components, target functor
/// conjugated accordingly.
NaturalIsomorphism random_nat_iso(std::mt19937& rng, const GroupoidMorphism& f);

/// Classification of a spec by the documented check order, computed from
/// string tables. nullopt when the spec describes a groupoid.
std::optional<Errc> classify_spec(const GroupoidSpec& spec);

// ---------------------------------------------------------------------------
// Fixtures.

std::string fixture_dir();
std::string golden_dir();

GroupoidPtr z(std::size_t n);
GroupoidPtr s3();

/// codiscrete({0,1}) -> Z/2, (g>h) -> h - g.
GroupoidMorphism hand_cover_z2();

/// Covers of Z/4: universal, two-fold (characteristic group {0, 2}), identity.
struct Z4Tower {
  GroupoidPtr base;
  CoveringMorphism universal;
  CoveringMorphism twofold;
  CoveringMorphism identity;
};
Z4Tower z4_tower();

/// The one-object structure on a group with product = composition.
CatGroupStructure group_structure(const GroupoidPtr& g);

/// One-object structure with the given binary table on morphism indices
/// and the given inverse map.
CatGroupStructure one_object_structure(const GroupoidPtr& g, const std::vector<std::vector<std::size_t>>& table,
                                       const std::vector<std::size_t>& inverse);

/// Coverings used across tests, each with a short label.
struct LabelledCovering {
  std::string label;
  CoveringMorphism p;
};
std::vector<LabelledCovering> fixture_coverings();

}  // namespace gpd::testing
