#include "currentrep/error.hpp"

namespace currentrep {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::UnsupportedTruncation: return "UnsupportedTruncation";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::BadWeight: return "BadWeight";
    case ErrorKind::BadTwist: return "BadTwist";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::NotWeightModule: return "NotWeightModule";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::FormulaDomainError: return "FormulaDomainError";
    case ErrorKind::OutOfScope: return "OutOfScope";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace currentrep
