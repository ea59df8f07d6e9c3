#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyhlab {

/// Failure categories raised across the library. Callers branch on these;
/// the message is for humans only.
enum class Errc {
  NotInvertible,
  InvalidModulus,
  NonCoprimeModuli,
  FactoringBudgetExceeded,
  CurveTooLarge,
  OrderMismatch,
  SearchBudgetExceeded,
  InvalidArgument,
  InvalidParams,
  InvalidRecipientKey,
  RngFailure,
  NonceRefused,
  EphemeralMismatch,
  QueryBudgetExceeded,
  ResidueNotFound,
  CandidateNotFound,
  PossessionProofInvalid,
  InvalidPublicKey,
  ConsistencyFailure,
  UnsupportedHash,
  ParseError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyhlab
