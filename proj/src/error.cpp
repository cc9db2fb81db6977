#include "cgtk/error.hpp"

namespace cgtk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::EmptyRelator: return "EmptyRelator";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EmptyBase: return "EmptyBase";
    case ErrorCode::LetterClash: return "LetterClash";
    case ErrorCode::EmptyAssociation: return "EmptyAssociation";
    case ErrorCode::BaseNotFree: return "BaseNotFree";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::IncompatibleAssociations: return "IncompatibleAssociations";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Error";
}

}  // namespace cgtk
