#include "hyhlab/error.hpp"

namespace hyhlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::NonCoprimeModuli: return "NonCoprimeModuli";
    case Errc::FactoringBudgetExceeded: return "FactoringBudgetExceeded";
    case Errc::CurveTooLarge: return "CurveTooLarge";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InvalidRecipientKey: return "InvalidRecipientKey";
    case Errc::RngFailure: return "RngFailure";
    case Errc::NonceRefused: return "NonceRefused";
    case Errc::EphemeralMismatch: return "EphemeralMismatch";
    case Errc::QueryBudgetExceeded: return "QueryBudgetExceeded";
    case Errc::ResidueNotFound: return "ResidueNotFound";
    case Errc::CandidateNotFound: return "CandidateNotFound";
    case Errc::PossessionProofInvalid: return "PossessionProofInvalid";
    case Errc::InvalidPublicKey: return "InvalidPublicKey";
    case Errc::ConsistencyFailure: return "ConsistencyFailure";
    case Errc::UnsupportedHash: return "UnsupportedHash";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace hyhlab
