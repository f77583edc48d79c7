#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpd {

enum class Errc {
  // construction and lookup
  InvalidId,
  DuplicateId,
  UnknownId,
  UnknownObject,
  MissingComposite,
  IllTypedComposite,
  ConflictingComposite,
  NonAssociative,
  NoIdentity,
  NoInverse,
  EmptySet,
  NotAGroup,
  // functors
  DomainMismatch,
  DomainNotProduct,
  SignatureMismatch,
  NotAFunctor,
  // coverings
  NotCovering,
  CriterionFailed,
  NotConnected,
  BasePointMismatch,
  CharGroupNotContained,
  // homotopies
  InvalidNatIso,
  DomainNotCxJ,
  NotSimplyConnected,
  // categorical groups
  AxiomFailed,
  // documents
  ParseError,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// True for error codes that mean "the property asked about does not hold",
/// as opposed to malformed or ill-typed input.
bool is_property_failure(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::string> witness = {});

  Errc code() const noexcept { return code_; }

  /// Names of the ids involved in the failure, in the order the message
  /// mentions them.
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::string> witness_;
};

class ParseError : public Error {
 public:
  /// `file` is prefixed to the message when nonempty.
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& file = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& file() const noexcept { return file_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string file_;
};

}  // namespace gpd
