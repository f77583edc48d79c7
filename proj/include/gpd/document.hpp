#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "gpd/catgroup.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/homotopy.hpp"

namespace gpd {

/// One serialized value. The JSON "kind" field selects the alternative:
/// "groupoid", "functor", "natiso" or "catgroup".
using Document = std::variant<GroupoidPtr, GroupoidMorphism, NaturalIsomorphism, CatGroupStructure>;

std::string_view kind_of(const Document& doc) noexcept;

/// Strict parse. Unknown fields, duplicate keys, duplicate ids and wrong
/// types raise ParseError with the line and column of the offending token.
/// Nested values given as strings are file paths resolved against
/// `base_dir`; unreadable files raise Error{IoError}. Semantic failures
/// (composition table, functor typing) come from the module validators.
///
/// A groupoid value is either explicit
///   {"kind":"groupoid","objects":[..],"morphisms":[{"id","src","tgt"}..],
///    "compose":[[a,b,ba]..],"identities":{..},"inverses":{..}}
/// or a construction
///   {"construct":"interval"} | {"construct":"product","factors":[G,H]} |
///   {"construct":"codiscrete","labels":[..]} | {"construct":"cyclic","order":n} |
///   {"construct":"group","elements":[..],"table":[[..]..]}
Document parse_document(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads and parses a file; nested paths resolve against its directory.
Document load_document(const std::filesystem::path& path);

/// Canonical text: two-space indentation, arrays of scalars on one line,
/// maps in canonical id order, trailing newline. parse_document() of the
/// result yields an equal value.
std::string print_document(const Document& doc);

bool operator==(const Document& a, const Document& b);

/// load_document() narrowed to one kind; Error{ParseError} on a kind mismatch.
GroupoidPtr load_groupoid(const std::filesystem::path& path);
GroupoidMorphism load_functor(const std::filesystem::path& path);
NaturalIsomorphism load_natiso(const std::filesystem::path& path);
CatGroupStructure load_catgroup(const std::filesystem::path& path);

}  // namespace gpd
