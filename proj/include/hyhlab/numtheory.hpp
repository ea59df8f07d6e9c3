#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hyhlab/bigint.hpp"

/// Integer and modular primitives shared by the curve, scheme and attack code.
/// Everything here is a pure function of its arguments.
namespace hyhlab::nt {

/// Prime -> exponent. Ordered so iteration and serialization are stable.
using Factorization = std::map<BigUint, unsigned>;

/// Non-negative residue of v modulo m (m > 0).
BigUint mod(const BigUint& v, const BigUint& m);

BigUint pow_mod(const BigUint& base, const BigUint& exp, const BigUint& m);

/// b with a*b = 1 (mod m). Throws NotInvertible when gcd(a, m) != 1 and
/// InvalidModulus when m < 2.
BigUint mod_inverse(const BigUint& a, const BigUint& m);

/// Tonelli-Shanks. Returns the smaller of the two roots, or nullopt when a is
/// a non-residue. Throws InvalidModulus if p is not prime.
std::optional<BigUint> sqrt_mod(const BigUint& a, const BigUint& p);

/// Trial division by a small-prime table, then Miller-Rabin with the first
/// twelve prime bases plus kRandomRounds seeded rounds.
bool is_prime(const BigUint& n);
inline constexpr int kRandomRounds = 40;

/// Unique x < prod(moduli) with x = value_i (mod modulus_i). Moduli must be
/// pairwise coprime (NonCoprimeModuli otherwise) and each value below its
/// modulus (InvalidArgument otherwise).
BigUint crt_combine(const std::vector<std::pair<BigUint, BigUint>>& residues);

struct FactorOptions {
  /// Total Pollard-rho iterations across all splits before giving up.
  std::uint64_t rho_budget = std::uint64_t{1} << 24;
};

/// Complete factorization by trial division and Pollard-rho (Brent). Throws
/// FactoringBudgetExceeded when the rho budget runs out and InvalidArgument
/// for n < 1.
Factorization factor(const BigUint& n, const FactorOptions& options = {});

/// floor(sqrt(v)) for v >= 0.
BigUint isqrt(const BigUint& v);

}  // namespace hyhlab::nt
