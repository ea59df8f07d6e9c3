#include "hyhlab/curve.hpp"

#include <algorithm>

#include "hyhlab/error.hpp"
#include "hyhlab/numtheory.hpp"

namespace hyhlab::ec {

using nt::mod;

std::string Point::to_string() const {
  if (infinity_) return "O";
  return "(" + to_hex(x_) + ", " + to_hex(y_) + ")";
}

CurveParams CurveParams::make(BigUint q, BigUint a, BigUint b, Point G, BigUint n, BigUint h) {
  if (q < 5 || q % 2 == 0) throw Error(Errc::InvalidParams, "q must be odd and at least 5");
  if (a < 0 || a >= q || b < 0 || b >= q) {
    throw Error(Errc::InvalidParams, "curve coefficients must lie in [0, q)");
  }
  if (n < 1 || h < 0) throw Error(Errc::InvalidParams, "n must be positive and h non-negative");
  if (!G.is_infinity() && (G.x() < 0 || G.x() >= q || G.y() < 0 || G.y() >= q)) {
    throw Error(Errc::InvalidParams, "base point coordinates must lie in [0, q)");
  }
  return CurveParams{std::move(q), std::move(a), std::move(b), std::move(G), std::move(n),
                     std::move(h)};
}

CurveParams CurveParams::with_b(BigUint b_prime, Point base, BigUint order,
                                BigUint cofactor) const {
  return make(q, a, std::move(b_prime), std::move(base), std::move(order), std::move(cofactor));
}

Point negate(const CurveParams& params, const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.x(), mod(-p.y(), params.q));
}

Point point_add(const CurveParams& params, const Point& p, const Point& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const BigUint& m = params.q;
  const BigUint x1 = mod(p.x(), m), y1 = mod(p.y(), m);
  const BigUint x2 = mod(q.x(), m), y2 = mod(q.y(), m);

  BigUint lambda;
  if (x1 == x2) {
    // Inverse pair (covers y = 0 doubling), or two points of different
    // curves sharing an x: the vertical line meets O in both cases.
    if (mod(y1 + y2, m) == 0 || y1 != y2) return Point::infinity();
    lambda = mod((3 * x1 * x1 + params.a) * nt::mod_inverse(2 * y1, m), m);
  } else {
    lambda = mod((y2 - y1) * nt::mod_inverse(x2 - x1, m), m);
  }
  BigUint x3 = mod(lambda * lambda - x1 - x2, m);
  BigUint y3 = mod(lambda * (x1 - x3) - y1, m);
  return Point(std::move(x3), std::move(y3));
}

Point point_double(const CurveParams& params, const Point& p) { return point_add(params, p, p); }

Point scalar_mul(const CurveParams& params, const BigUint& k, const Point& p) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative scalar");
  Point acc;
  if (k == 0 || p.is_infinity()) return acc;
  const Point base(mod(p.x(), params.q), mod(p.y(), params.q));
  for (auto bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = point_double(params, acc);
    if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      acc = point_add(params, acc, base);
    }
  }
  return acc;
}

bool is_on_curve(const CurveParams& params, const Point& p) {
  if (p.is_infinity()) return true;
  const BigUint& x = p.x();
  return mod(p.y() * p.y() - (x * x * x + params.a * x + params.b), params.q) == 0;
}

BigUint discriminant(const CurveParams& params) {
  return mod(4 * params.a * params.a * params.a + 27 * params.b * params.b, params.q);
}

bool KeyVerdict::failed(KeyCheck check) const {
  return std::find(failures.begin(), failures.end(), check) != failures.end();
}

std::string KeyVerdict::to_string() const {
  if (ok()) return "ok";
  std::string out = "fail(";
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>(failures[i]);
  }
  return out + ")";
}

KeyVerdict validate_public_key(const CurveParams& params, const Point& u) {
  KeyVerdict verdict;
  if (u.is_infinity()) {
    verdict.failures.push_back(KeyCheck::NotInfinity);
    return verdict;
  }
  const bool in_field = u.x() >= 0 && u.x() < params.q && u.y() >= 0 && u.y() < params.q;
  if (!in_field) {
    verdict.failures.push_back(KeyCheck::FieldFormat);
  } else if (!is_on_curve(params, u)) {
    verdict.failures.push_back(KeyCheck::OnCurve);
  }
  return verdict;
}

BigUint count_points(const CurveParams& params, std::uint64_t bound) {
  bound = std::min<std::uint64_t>(bound, std::uint64_t{1} << 32);
  if (params.q > BigUint(std::to_string(bound))) {
    throw Error(Errc::CurveTooLarge,
                "q = " + to_hex(params.q) + " exceeds the enumeration bound");
  }
  const std::uint64_t q = mpz_get_ui(params.q.get_mpz_t());
  const std::uint64_t a = mpz_get_ui(params.a.get_mpz_t());
  const std::uint64_t b = mpz_get_ui(params.b.get_mpz_t());

  // squares[v] = number of y with y^2 = v (mod q).
  std::vector<std::uint8_t> squares(q, 0);
  for (std::uint64_t y = 0; y < q; ++y) {
    auto& slot = squares[y * y % q];
    if (slot < 255) ++slot;
  }
  std::uint64_t total = 1;  // O
  for (std::uint64_t x = 0; x < q; ++x) {
    const std::uint64_t rhs = ((x * x % q) * x % q + a * x % q + b) % q;
    total += squares[rhs];
  }
  return BigUint(std::to_string(total));
}

BigUint point_order(const CurveParams& params, const Point& p, const BigUint& group_order) {
  if (!scalar_mul(params, group_order, p).is_infinity()) {
    throw Error(Errc::OrderMismatch,
                to_hex(group_order) + " * " + p.to_string() + " is not the point at infinity");
  }
  BigUint order = group_order;
  for (const auto& [prime, exponent] : nt::factor(group_order)) {
    for (unsigned e = 0; e < exponent; ++e) {
      BigUint reduced = order / prime;
      if (!scalar_mul(params, reduced, p).is_infinity()) break;
      order = reduced;
    }
  }
  return order;
}

Point random_point(const CurveParams& params, Rng& rng) {
  for (;;) {
    BigUint x = rng.below(params.q);
    BigUint rhs = mod(x * x * x + params.a * x + params.b, params.q);
    auto root = nt::sqrt_mod(rhs, params.q);
    if (!root) continue;
    BigUint y = *root;
    if (rng.next_u64() & 1) y = mod(-y, params.q);
    return Point(std::move(x), std::move(y));
  }
}

Point find_point_of_order(const CurveParams& params, const BigUint& g, const BigUint& group_order,
                          std::uint64_t seed, unsigned max_attempts) {
  if (!nt::is_prime(g) || group_order % g != 0) {
    throw Error(Errc::InvalidArgument,
                to_hex(g) + " is not a prime divisor of " + to_hex(group_order));
  }
  Rng rng(seed);
  // Strip every factor g so the product lands in the g-primary part, which
  // need not be cyclic; then step down to exact order g.
  BigUint cofactor = group_order;
  while (cofactor % g == 0) cofactor /= g;
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    Point w = scalar_mul(params, cofactor, random_point(params, rng));
    if (w.is_infinity()) continue;
    for (Point next = scalar_mul(params, g, w); !next.is_infinity();
         next = scalar_mul(params, g, w)) {
      w = next;
    }
    return w;
  }
  throw Error(Errc::SearchBudgetExceeded,
              "no point of order " + to_hex(g) + " after " + std::to_string(max_attempts) +
                  " attempts");
}

namespace {

bool subgroup_has_zero_x(const CurveParams& params, const Point& w, const BigUint& order) {
  Point acc = w;
  for (BigUint j = 1; 2 * j <= order; ++j) {
    if (acc.x() == 0) return true;
    acc = point_add(params, acc, w);
  }
  return false;
}

}  // namespace

std::vector<InvalidCurve> find_invalid_curves(const CurveParams& params, const BigUint& min_product,
                                              std::uint64_t seed,
                                              const InvalidCurveSearch& search) {
  if (min_product < 2) throw Error(Errc::InvalidArgument, "min_product must be at least 2");
  if (params.q > BigUint(std::to_string(search.count_bound))) {
    throw Error(Errc::CurveTooLarge, "invalid-curve search needs point counting over F_q");
  }
  Rng rng(seed);
  std::vector<InvalidCurve> found;
  BigUint product = 1;
  for (unsigned candidate = 0; candidate < search.max_candidates; ++candidate) {
    BigUint b_prime = rng.below(params.q);
    const std::uint64_t point_seed = rng.fork();
    if (b_prime == params.b) continue;
    CurveParams trial = params.with_b(b_prime, Point::infinity(), 1, 0);
    if (discriminant(trial) == 0) continue;

    const BigUint total = count_points(trial, search.count_bound);
    BigUint best = 0;
    for (const auto& [prime, exponent] : nt::factor(total)) {
      if (prime <= search.max_order && product % prime != 0) best = prime;
    }
    if (best == 0) continue;

    Point w = find_point_of_order(trial, best, total, point_seed);
    if (subgroup_has_zero_x(trial, w, best)) continue;

    found.push_back(InvalidCurve{trial.with_b(b_prime, w, best, total / best), w, best});
    product *= best;
    if (product > min_product) return found;
    if (found.size() >= search.max_curves) break;
  }
  throw Error(Errc::SearchBudgetExceeded,
              "invalid-curve search stopped with product " + to_hex(product) + " <= " +
                  to_hex(min_product));
}

}  // namespace hyhlab::ec
