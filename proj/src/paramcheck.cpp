#include "hyhlab/paramcheck.hpp"

#include <algorithm>

#include "hyhlab/error.hpp"
#include "hyhlab/numtheory.hpp"

namespace hyhlab::paramcheck {

std::string_view check_name(Check check) noexcept {
  switch (check) {
    case Check::FieldPrime: return "field_prime";
    case Check::Nonsingular: return "nonsingular";
    case Check::BasePoint: return "base_point";
    case Check::PrimeOrder: return "prime_order";
    case Check::OrderOfBase: return "order_of_base";
    case Check::LargeSubgroup: return "large_subgroup";
    case Check::Mov: return "mov";
    case Check::Anomalous: return "anomalous";
    case Check::Supersingular: return "supersingular";
  }
  return "unknown";
}

bool ParamReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& ParamReport::at(Check check) const {
  for (const auto& c : checks) {
    if (c.check == check) return c;
  }
  throw Error(Errc::InvalidArgument, "check missing from report");
}

std::vector<Check> ParamReport::failed() const {
  std::vector<Check> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.check);
  }
  return out;
}

std::optional<unsigned> mov_embedding_degree(const BigUint& q, const BigUint& n, unsigned f) {
  if (n < 2) throw Error(Errc::InvalidArgument, "embedding degree needs n >= 2");
  const BigUint base = nt::mod(q, n);
  BigUint power = 1;
  for (unsigned i = 1; i <= f; ++i) {
    power = power * base % n;
    if (power == 1) return i;
  }
  return std::nullopt;
}

ParamReport validate_domain_params(const ec::CurveParams& params, unsigned f,
                                   std::uint64_t count_budget) {
  ParamReport report;
  auto add = [&](Check check, bool pass, std::string detail) {
    report.checks.push_back(CheckResult{check, pass, std::move(detail)});
  };
  const BigUint& q = params.q;
  const BigUint& n = params.n;

  const bool q_prime = nt::is_prime(q);
  add(Check::FieldPrime, q_prime, q_prime ? "q is prime" : "q = " + to_hex(q) + " is composite");

  const bool nonsingular = ec::discriminant(params) != 0;
  add(Check::Nonsingular, nonsingular,
      nonsingular ? "4a^3 + 27b^2 != 0 mod q" : "4a^3 + 27b^2 = 0 mod q (singular curve)");

  if (params.G.is_infinity()) {
    add(Check::BasePoint, false, "G is the point at infinity");
  } else if (!ec::is_on_curve(params, params.G)) {
    add(Check::BasePoint, false, "G = " + params.G.to_string() + " is not on the curve");
  } else {
    add(Check::BasePoint, true, "G is an affine point on the curve");
  }

  const bool n_prime = nt::is_prime(n);
  add(Check::PrimeOrder, n_prime, n_prime ? "n is prime" : "n = " + to_hex(n) + " is not prime");

  try {
    const bool annihilated = ec::scalar_mul(params, n, params.G).is_infinity();
    add(Check::OrderOfBase, annihilated, annihilated ? "nG = O" : "nG != O");
  } catch (const Error& e) {
    add(Check::OrderOfBase, false, std::string("nG undefined: ") + e.what());
  }

  const bool large = n * n > 16 * q;
  add(Check::LargeSubgroup, large,
      large ? "n^2 > 16q" : "n^2 = " + to_hex(n * n) + " <= 16q = " + to_hex(16 * q));

  if (n < 2) {
    add(Check::Mov, false, "n < 2");
  } else if (auto degree = mov_embedding_degree(q, n, f)) {
    add(Check::Mov, false, "n divides q^" + std::to_string(*degree) + " - 1");
  } else {
    add(Check::Mov, true, "q^i != 1 mod n for 1 <= i <= " + std::to_string(f));
  }

  const bool anomalous = n == q;
  add(Check::Anomalous, !anomalous, anomalous ? "n = q (anomalous)" : "n != q");

  // Trace from the claimed group order h*n.
  const BigUint claimed = params.h * n;
  const BigUint trace = q + 1 - claimed;
  const bool hasse = trace * trace <= 4 * q;
  std::string detail = "t = q + 1 - hn = " + trace.get_str(10);
  bool pass = true;
  if (!hasse) {
    pass = false;
    detail += " outside the Hasse bound";
  } else if (nt::mod(trace, q) == 0) {
    pass = false;
    detail += " = 0 mod q (supersingular)";
  }
  if (q_prime && nonsingular && q <= BigUint(std::to_string(count_budget))) {
    const BigUint counted = ec::count_points(params, count_budget);
    if (counted != claimed) {
      pass = false;
      detail += "; #E = " + counted.get_str(10) + " but hn = " + claimed.get_str(10);
    } else {
      detail += "; hn matches #E";
    }
  }
  add(Check::Supersingular, pass, detail);
  return report;
}

}  // namespace hyhlab::paramcheck
