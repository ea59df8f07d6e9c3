#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyhlab/bigint.hpp"
#include "hyhlab/rng.hpp"

/// Short-Weierstrass curves y^2 = x^3 + ax + b over prime fields, affine
/// coordinates. Arithmetic never checks that its inputs lie on the curve: the
/// chord and tangent formulas do not involve b, and the invalid-curve attack
/// depends on a victim that evaluates them on foreign points.
namespace hyhlab::ec {

/// Affine point or the point at infinity. Coordinates are stored as given;
/// neither membership of the curve nor the range [0, q) is enforced, so that
/// malformed keys can be represented and rejected by validation.
class Point {
 public:
  Point() = default;  // infinity
  Point(BigUint x, BigUint y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static Point infinity() { return Point(); }

  [[nodiscard]] bool is_infinity() const noexcept { return infinity_; }
  /// Coordinates of an affine point. Both read as 0 for infinity.
  [[nodiscard]] const BigUint& x() const noexcept { return x_; }
  [[nodiscard]] const BigUint& y() const noexcept { return y_; }

  friend bool operator==(const Point& l, const Point& r) {
    if (l.infinity_ || r.infinity_) return l.infinity_ == r.infinity_;
    return l.x_ == r.x_ && l.y_ == r.y_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  bool infinity_ = true;
  BigUint x_ = 0;
  BigUint y_ = 0;
};

/// Domain parameters (q, a, b, G, n, h). Only the shape is enforced here:
/// q odd and at least 5, 0 <= a, b < q. Whether q and n are prime, whether G
/// lies on the curve and whether nG = O are claims checked by paramcheck.
struct CurveParams {
  BigUint q;
  BigUint a;
  BigUint b;
  Point G;
  BigUint n;
  BigUint h;

  /// Throws InvalidParams when the shape invariants fail.
  static CurveParams make(BigUint q, BigUint a, BigUint b, Point G, BigUint n, BigUint h);

  /// Same field and a, different b. Base point and claims are replaced.
  [[nodiscard]] CurveParams with_b(BigUint b_prime, Point base, BigUint order,
                                   BigUint cofactor) const;

  /// Bytes in the fixed-width encoding of a field element.
  [[nodiscard]] std::size_t field_width() const { return byte_length(q - 1); }
  /// Bytes in the fixed-width encoding of a scalar mod n.
  [[nodiscard]] std::size_t scalar_width() const { return byte_length(n - 1); }
};

Point negate(const CurveParams& params, const Point& p);
Point point_add(const CurveParams& params, const Point& p, const Point& q);
Point point_double(const CurveParams& params, const Point& p);
Point scalar_mul(const CurveParams& params, const BigUint& k, const Point& p);

bool is_on_curve(const CurveParams& params, const Point& p);

/// 4a^3 + 27b^2 mod q.
BigUint discriminant(const CurveParams& params);

/// Public-key conditions, labeled as in the usual validation routine:
/// (a) U != O, (b) coordinates are field elements, (c) U satisfies the curve
/// equation.
enum class KeyCheck : char { NotInfinity = 'a', FieldFormat = 'b', OnCurve = 'c' };

struct KeyVerdict {
  std::vector<KeyCheck> failures;

  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
  [[nodiscard]] bool failed(KeyCheck check) const;
  /// "ok" or the failed labels, e.g. "fail(b)".
  [[nodiscard]] std::string to_string() const;
};

/// (c) is evaluated only when (b) passes; for O only (a) is reported.
KeyVerdict validate_public_key(const CurveParams& params, const Point& u);

inline constexpr std::uint64_t kDefaultCountBound = std::uint64_t{1} << 24;

/// #E(F_q) including O, by enumerating x. Throws CurveTooLarge if q exceeds
/// bound (bound itself is capped at 2^32).
BigUint count_points(const CurveParams& params, std::uint64_t bound = kDefaultCountBound);

/// Least m >= 1 with mP = O, found by stripping prime factors of
/// group_order. Throws OrderMismatch if group_order * P != O.
BigUint point_order(const CurveParams& params, const Point& p, const BigUint& group_order);

/// Uniformly random affine point on the curve. q must be prime.
Point random_point(const CurveParams& params, Rng& rng);

/// A point of exact order g from random P, scaled into the g-primary part and
/// then multiplied by g while the result stays finite. Throws InvalidArgument
/// unless g is a prime divisor of group_order, SearchBudgetExceeded after
/// max_attempts draws.
Point find_point_of_order(const CurveParams& params, const BigUint& g, const BigUint& group_order,
                          std::uint64_t seed, unsigned max_attempts = 1000);

struct InvalidCurve {
  CurveParams curve;  // G = W, n = order, h = #E' / order
  Point point;
  BigUint order;
};

struct InvalidCurveSearch {
  /// Upper bound on each g_i; it bounds the attacker's brute force per curve.
  BigUint max_order = 4096;
  unsigned max_candidates = 20000;
  unsigned max_curves = 24;
  std::uint64_t count_bound = kDefaultCountBound;
};

/// Curves y^2 = x^3 + ax + b' (b' != b) each carrying a point of small prime
/// order, with pairwise distinct orders whose product exceeds min_product.
/// Candidate b' values come from a fixed sequence drawn from seed. Points
/// whose subgroup contains an x = 0 point are skipped, so x-keyed oracles
/// cannot confuse a multiple with O.
std::vector<InvalidCurve> find_invalid_curves(const CurveParams& params, const BigUint& min_product,
                                              std::uint64_t seed,
                                              const InvalidCurveSearch& search = {});

}  // namespace hyhlab::ec
