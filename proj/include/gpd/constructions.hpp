#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

/// Multiplication table of a finite group: product[i][j] is the index of
/// elements[i] * elements[j].
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> product;
};

/// Throws Error{NotAGroup} with a witness unless `table` is a group.
void check_group_table(const GroupTable& table);

GroupTable cyclic_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n; dihedral_group(3) is S3.
/// Elements "r0".."r{n-1}" are rotations, "s0".."s{n-1}" reflections.
GroupTable dihedral_group(std::size_t n);
/// Quaternion group of order 8: "1","-1","i","-i","j","-j","k","-k".
GroupTable quaternion_group();
/// Elements named "a,b".
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// One-object groupoid on the object "*"; composition "b after a" is the
/// group product b * a.
GroupoidPtr group_as_groupoid(const GroupTable& table);

/// Objects "0", "1"; morphisms "id0", "id1", "i" : 0 -> 1, "iinv" : 1 -> 0.
GroupoidPtr interval_groupoid();

/// One morphism "x>y" per ordered pair of labels. Throws Error{EmptySet}.
GroupoidPtr codiscrete(const std::vector<std::string>& labels);

/// Objects and morphisms are pairs named "a|b"; structure is componentwise.
GroupoidPtr product(const GroupoidPtr& g, const GroupoidPtr& h);

/// Union of two groupoids with disjoint names (Error{DuplicateId} otherwise).
GroupoidPtr disjoint_union(const Groupoid& g, const Groupoid& h);

/// Same groupoid with every id prefixed.
GroupoidPtr with_prefix(const Groupoid& g, const std::string& prefix);

/// One object, one morphism.
GroupoidPtr trivial_groupoid();

}  // namespace gpd
