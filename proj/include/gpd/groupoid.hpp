#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpd {

/// Index of an object within its groupoid. Names live on the groupoid.
struct ObjectId {
  std::uint32_t value = 0;
  friend auto operator<=>(ObjectId, ObjectId) = default;
};

/// Index of a morphism within its groupoid.
struct MorphismId {
  std::uint32_t value = 0;
  friend auto operator<=>(MorphismId, MorphismId) = default;
};

class Groupoid;
using GroupoidPtr = std::shared_ptr<const Groupoid>;

/// Present on groupoids built as a product; ids are laid out row-major so
/// (a, b) has index a * |right| + b for both objects and morphisms.
struct ProductFactors {
  GroupoidPtr left;
  GroupoidPtr right;
};

/// A finite groupoid with a total composition table on composable pairs.
///
/// Composition follows the convention "b after a": compose(a, b) is defined
/// iff tgt(a) == src(b) and yields ba with src(ba) = src(a), tgt(ba) = tgt(b).
/// Objects and morphisms keep their insertion order, which is the canonical
/// order for every set-valued query.
///
/// Instances are immutable. Use build_groupoid() for validated construction
/// from names; assemble() is the trusted path used by the standard
/// constructions, which are correct by construction.
class Groupoid {
 public:
  struct Layout {
    std::vector<std::string> object_names;
    std::vector<std::string> morphism_names;
    std::vector<ObjectId> src;
    std::vector<ObjectId> tgt;
    std::vector<MorphismId> identity;
    std::vector<MorphismId> inverse;
    std::optional<ProductFactors> factors;
  };
  using ComposeFn = std::function<MorphismId(MorphismId, MorphismId)>;

  /// Fills the composition table by calling `compose(a, b)` once per
  /// composable pair. No axiom is checked.
  static Groupoid assemble(Layout layout, const ComposeFn& compose);

  std::size_t object_count() const noexcept { return object_names_.size(); }
  std::size_t morphism_count() const noexcept { return morphism_names_.size(); }

  auto objects() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(object_count())) |
           std::views::transform([](std::uint32_t i) { return ObjectId{i}; });
  }
  auto morphisms() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(morphism_count())) |
           std::views::transform([](std::uint32_t i) { return MorphismId{i}; });
  }

  bool contains(ObjectId x) const noexcept { return x.value < object_count(); }
  bool contains(MorphismId a) const noexcept { return a.value < morphism_count(); }

  const std::string& name(ObjectId x) const { return object_names_[x.value]; }
  const std::string& name(MorphismId a) const { return morphism_names_[a.value]; }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;
  /// Throws Error{UnknownObject} / Error{UnknownId}.
  ObjectId object(std::string_view name) const;
  MorphismId morphism(std::string_view name) const;

  ObjectId src(MorphismId a) const { return src_[a.value]; }
  ObjectId tgt(MorphismId a) const { return tgt_[a.value]; }
  MorphismId identity(ObjectId x) const { return identity_[x.value]; }
  MorphismId inverse(MorphismId a) const { return inverse_[a.value]; }

  bool composable(MorphismId a, MorphismId b) const { return tgt(a) == src(b); }

  /// ba, "b after a". Requires composable(a, b).
  MorphismId compose(MorphismId a, MorphismId b) const;

  /// Morphisms with source x, in canonical order.
  std::span<const MorphismId> star(ObjectId x) const { return stars_[x.value]; }
  /// Position of `a` inside star(src(a)).
  std::size_t star_position(MorphismId a) const { return star_pos_[a.value]; }

  const std::optional<ProductFactors>& factors() const noexcept { return factors_; }
  bool is_product() const noexcept { return factors_.has_value(); }

  // Product coordinates; only meaningful when is_product().
  ObjectId pair(ObjectId x, ObjectId y) const;
  MorphismId pair(MorphismId a, MorphismId b) const;
  ObjectId left(ObjectId p) const;
  ObjectId right(ObjectId p) const;
  MorphismId left(MorphismId p) const;
  MorphismId right(MorphismId p) const;

  /// Structural equality on names and tables; product provenance is ignored.
  bool operator==(const Groupoid& other) const;

 private:
  Groupoid() = default;

  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
  std::vector<ObjectId> src_;
  std::vector<ObjectId> tgt_;
  std::vector<MorphismId> identity_;
  std::vector<MorphismId> inverse_;
  std::vector<std::vector<MorphismId>> stars_;
  std::vector<std::uint32_t> star_pos_;
  std::vector<std::size_t> row_offset_;
  std::vector<MorphismId> table_;
  std::optional<ProductFactors> factors_;
};

/// True when both pointers denote structurally equal groupoids.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

// ---------------------------------------------------------------------------
// Validated construction from names.

struct MorphismDecl {
  std::string id;
  std::string src;
  std::string tgt;
};

struct CompositeDecl {
  std::string first;   // a
  std::string second;  // b
  std::string result;  // ba
};

/// Raw description of a groupoid. Identities and inverses may be listed
/// partially or omitted; missing entries are inferred from the table.
struct GroupoidSpec {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<CompositeDecl> compose;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::pair<std::string, std::string>> inverses;
};

/// Validates `spec` and returns the groupoid.
///
/// Checks run in this order and the first failure is thrown as Error:
///   1. ids: InvalidId (empty), DuplicateId, UnknownId for src/tgt
///   2. table entries, in listed order: UnknownId, IllTypedComposite,
///      ConflictingComposite (pair listed twice)
///   3. totality over composable pairs in canonical order: MissingComposite
///   4. identities per object: NoIdentity
///   5. inverses per morphism: NoInverse
///   6. associativity over composable triples in canonical order:
///      NonAssociative
GroupoidPtr build_groupoid(const GroupoidSpec& spec);

/// Full description of `g` with identities and inverses listed.
GroupoidSpec to_spec(const Groupoid& g);

// ---------------------------------------------------------------------------
// Derived queries.

/// Subset of the object group G(x), elements in canonical order.
struct Subgroup {
  ObjectId base;
  std::vector<MorphismId> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(MorphismId a) const;
  bool is_subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup&) const = default;
};

/// Checks that `h` lies in G(h.base), contains the identity and is closed
/// under composition and inverses.
bool is_subgroup(const Groupoid& g, const Subgroup& h);

std::vector<MorphismId> star(const Groupoid& g, ObjectId x);
std::vector<MorphismId> hom(const Groupoid& g, ObjectId x, ObjectId y);
Subgroup object_group(const Groupoid& g, ObjectId x);

/// True for the empty groupoid.
bool is_connected(const Groupoid& g);
/// Every hom-set has exactly one element. True for the empty groupoid.
bool is_simply_connected(const Groupoid& g);
/// Every hom-set has at most one element.
bool has_thin_homs(const Groupoid& g);

/// Component index per object; components numbered in order of their first
/// object.
std::vector<std::uint32_t> connected_components(const Groupoid& g);

/// Breadth-first spanning tree of the component of `root`, exploring stars
/// in canonical order. tree_edge[x] is the morphism parent(x) -> x, empty for
/// the root and for objects outside the component. `order` lists the
/// reached objects in visiting order.
struct SpanningTree {
  ObjectId root;
  std::vector<ObjectId> order;
  std::vector<std::optional<MorphismId>> tree_edge;

  bool reaches(ObjectId x) const { return x == root || tree_edge[x.value].has_value(); }
};
SpanningTree spanning_tree(const Groupoid& g, ObjectId root);

}  // namespace gpd
