#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyhlab/curve.hpp"

namespace hyhlab::paramcheck {

/// The nine domain-parameter checks, in report order.
enum class Check {
  FieldPrime,      // q prime
  Nonsingular,     // 4a^3 + 27b^2 != 0 mod q
  BasePoint,       // G != O and G on the curve
  PrimeOrder,      // n prime
  OrderOfBase,     // nG = O
  LargeSubgroup,   // n > 4 sqrt(q)
  Mov,             // q^i != 1 mod n for 1 <= i <= f
  Anomalous,       // n != q
  Supersingular,   // trace q + 1 - hn nonzero mod q, hn within the Hasse bound
};

inline constexpr std::size_t kCheckCount = 9;

std::string_view check_name(Check check) noexcept;

struct CheckResult {
  Check check;
  bool pass;
  std::string detail;
};

struct ParamReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool overall() const;
  [[nodiscard]] const CheckResult& at(Check check) const;
  [[nodiscard]] std::vector<Check> failed() const;
};

inline constexpr unsigned kDefaultMovBound = 20;

/// Runs all nine checks without short-circuiting. When q is prime, the
/// curve nonsingular and q <= count_budget, the claimed h*n is also compared
/// with an exact point count.
ParamReport validate_domain_params(const ec::CurveParams& params, unsigned f = kDefaultMovBound,
                                   std::uint64_t count_budget = ec::kDefaultCountBound);

/// Smallest i in [1, f] with q^i = 1 (mod n). Throws InvalidArgument if n < 2.
std::optional<unsigned> mov_embedding_degree(const BigUint& q, const BigUint& n, unsigned f);

}  // namespace hyhlab::paramcheck
