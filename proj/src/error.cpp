#include "gpd/error.hpp"

namespace gpd {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidId: return "InvalidId";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownId: return "UnknownId";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::MissingComposite: return "MissingComposite";
    case Errc::IllTypedComposite: return "IllTypedComposite";
    case Errc::ConflictingComposite: return "ConflictingComposite";
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::DomainNotProduct: return "DomainNotProduct";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::NotAFunctor: return "NotAFunctor";
    case Errc::NotCovering: return "NotCovering";
    case Errc::CriterionFailed: return "CriterionFailed";
    case Errc::NotConnected: return "NotConnected";
    case Errc::BasePointMismatch: return "BasePointMismatch";
    case Errc::CharGroupNotContained: return "CharGroupNotContained";
    case Errc::InvalidNatIso: return "InvalidNatIso";
    case Errc::DomainNotCxJ: return "DomainNotCxJ";
    case Errc::NotSimplyConnected: return "NotSimplyConnected";
    case Errc::AxiomFailed: return "AxiomFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_property_failure(Errc code) noexcept {
  switch (code) {
    case Errc::NotCovering:
    case Errc::CriterionFailed:
    case Errc::CharGroupNotContained:
    case Errc::AxiomFailed:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& message, std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& file)
    : Error(Errc::ParseError, (file.empty() ? std::string() : file + ": ") + "line " + std::to_string(line) +
                                  ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      file_(file) {}

}  // namespace gpd
