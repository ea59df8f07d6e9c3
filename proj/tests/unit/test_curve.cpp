#include <catch_amalgamated.hpp>

#include <array>
#include <set>

#include "hyhlab/error.hpp"
#include "hyhlab/curve.hpp"
#include "hyhlab/numtheory.hpp"
#include "hyhlab/presets.hpp"

using namespace hyhlab;
using ec::Point;

namespace {

// k * (0, 1) on y^2 = x^3 + x + 1 over F_23 for k = 0..27, computed by an
// independent implementation (tools/gen_fixtures.py arithmetic).
const std::array<std::array<int, 2>, 28> kF23Multiples = {{
    {-1, -1}, {0, 1},   {6, 19},  {3, 13}, {13, 16}, {18, 3},  {7, 11},
    {11, 3},  {5, 19},  {19, 18}, {12, 4}, {1, 16},  {17, 20}, {9, 16},
    {4, 0},   {9, 7},   {17, 3},  {1, 7},  {12, 19}, {19, 5},  {5, 4},
    {11, 20}, {7, 12},  {18, 20}, {13, 7}, {3, 10},  {6, 4},   {0, 22},
}};

Point multiple(int k) {
  const auto& xy = kF23Multiples[static_cast<std::size_t>(k % 28)];
  if (xy[0] < 0) return Point::infinity();
  return Point(xy[0], xy[1]);
}

std::uint64_t brute_count(std::uint64_t q, std::uint64_t a, std::uint64_t b) {
  std::uint64_t total = 1;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      if ((y * y) % q == (x * x % q * x + a * x + b) % q) ++total;
    }
  }
  return total;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hyhlab::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("F_23 addition table matches the exhaustive enumeration") {
  const auto params = presets::f23();
  // The table lists every point exactly once.
  std::set<std::pair<int, int>> seen;
  for (int i = 1; i < 28; ++i) {
    const Point p = multiple(i);
    REQUIRE(ec::is_on_curve(params, p));
    seen.emplace(mpz_get_si(p.x().get_mpz_t()), mpz_get_si(p.y().get_mpz_t()));
  }
  CHECK(seen.size() == 27);

  for (int i = 0; i < 28; ++i) {
    for (int j = 0; j < 28; ++j) {
      REQUIRE(ec::point_add(params, multiple(i), multiple(j)) == multiple(i + j));
    }
    REQUIRE(ec::negate(params, multiple(i)) == multiple((28 - i) % 28));
    REQUIRE(ec::point_double(params, multiple(i)) == multiple(2 * i));
    REQUIRE(ec::scalar_mul(params, i, Point(0, 1)) == multiple(i));
  }
}

TEST_CASE("F_23 group axioms") {
  const auto params = presets::f23();
  std::vector<Point> all;
  for (int i = 0; i < 28; ++i) all.push_back(multiple(i));
  for (const auto& p : all) {
    for (const auto& q : all) {
      REQUIRE(ec::point_add(params, p, q) == ec::point_add(params, q, p));
      for (const auto& r : all) {
        REQUIRE(ec::point_add(params, ec::point_add(params, p, q), r) ==
                ec::point_add(params, p, ec::point_add(params, q, r)));
      }
    }
  }
}

TEST_CASE("F_23 point counts and orders") {
  const auto params = presets::f23();
  CHECK(ec::count_points(params) == 28);
  CHECK(ec::point_order(params, Point(0, 1), 28) == 28);
  CHECK(ec::point_order(params, Point(4, 0), 28) == 2);
  CHECK(ec::point_order(params, params.G, 28) == 7);
  CHECK(code_of([&] { ec::point_order(params, Point(0, 1), 14); }) == Errc::OrderMismatch);

  // The points of order 7 are the multiples 4k, k = 1..6.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Point w = ec::find_point_of_order(params, 7, 28, seed);
    bool listed = false;
    for (int k = 1; k <= 6; ++k) listed = listed || w == multiple(4 * k);
    REQUIRE(listed);
  }
  // 2 divides 28 exactly once; (4, 0) is the only point of order 2.
  CHECK(ec::find_point_of_order(params, 2, 28, 3) == Point(4, 0));
  CHECK(code_of([&] { ec::find_point_of_order(params, 4, 28, 1); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { ec::find_point_of_order(params, 5, 28, 1); }) == Errc::InvalidArgument);

  const auto supersingular = params.with_b(0, Point(18, 10), 3, 8);
  CHECK(ec::count_points(supersingular) == 24);
}

TEST_CASE("count_points agrees with a double loop on small curves") {
  Rng rng(2024);
  for (std::uint64_t q : {5u, 7u, 11u, 13u, 101u, 211u, 409u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::uint64_t a = mpz_get_ui(rng.below(q).get_mpz_t());
      const std::uint64_t b = mpz_get_ui(rng.below(q).get_mpz_t());
      const auto params = ec::CurveParams::make(q, a, b, Point::infinity(), 1, 0);
      REQUIRE(ec::count_points(params) == brute_count(q, a, b));
    }
  }
  CHECK(code_of([] { ec::count_points(presets::toy20(), 1000); }) == Errc::CurveTooLarge);
  CHECK(code_of([] { ec::count_points(presets::secp160r1()); }) == Errc::CurveTooLarge);
}

TEST_CASE("scalar multiplication properties") {
  for (const auto& params : {presets::toy20(), presets::secp160r1()}) {
    CHECK(ec::scalar_mul(params, params.n, params.G).is_infinity());
    CHECK(ec::scalar_mul(params, 0, params.G).is_infinity());
    CHECK(ec::scalar_mul(params, 1, params.G) == params.G);
    CHECK(ec::scalar_mul(params, 5, Point::infinity()).is_infinity());
    CHECK(ec::scalar_mul(params, params.n - 1, params.G) == ec::negate(params, params.G));
    Rng rng(8);
    for (int i = 0; i < 25; ++i) {
      const BigUint a = rng.below(params.n), b = rng.below(params.n);
      const Point lhs = ec::scalar_mul(params, a + b, params.G);
      const Point rhs = ec::point_add(params, ec::scalar_mul(params, a, params.G),
                                      ec::scalar_mul(params, b, params.G));
      REQUIRE(lhs == rhs);
      REQUIRE(ec::is_on_curve(params, lhs));
      REQUIRE(ec::scalar_mul(params, a * b, params.G) ==
              ec::scalar_mul(params, a, ec::scalar_mul(params, b, params.G)));
    }
  }
  CHECK(code_of([] {
          const auto p = presets::f23();
          ec::scalar_mul(p, -1, p.G);
        }) == Errc::InvalidArgument);
}

TEST_CASE("public key validation names the failing check") {
  const auto params = presets::toy20();
  CHECK(ec::validate_public_key(params, params.G).ok());
  CHECK(ec::validate_public_key(params, Point::infinity()).to_string() == "fail(a)");
  const Point out_of_range(params.q + 3, 1);
  CHECK(ec::validate_public_key(params, out_of_range).to_string() == "fail(b)");
  const Point off_curve(params.G.x(), nt::mod(params.G.y() + 1, params.q));
  CHECK(ec::validate_public_key(params, off_curve).to_string() == "fail(c)");
  CHECK(ec::validate_public_key(params, off_curve).failed(ec::KeyCheck::OnCurve));
}

TEST_CASE("CurveParams::make rejects malformed input") {
  CHECK(code_of([] { ec::CurveParams::make(4, 1, 1, Point::infinity(), 1, 1); }) ==
        Errc::InvalidParams);
  CHECK(code_of([] { ec::CurveParams::make(23, 23, 1, Point::infinity(), 1, 1); }) ==
        Errc::InvalidParams);
  CHECK(code_of([] { ec::CurveParams::make(23, 1, 1, Point(23, 1), 7, 4); }) ==
        Errc::InvalidParams);
  CHECK(code_of([] { ec::CurveParams::make(23, 1, 1, Point(5, 4), 0, 4); }) ==
        Errc::InvalidParams);
  CHECK(presets::toy20().field_width() == 3);
  CHECK(presets::secp160r1().field_width() == 20);
  CHECK(presets::secp160r1().scalar_width() == 21);
}

TEST_CASE("invalid curves for the toy parameters") {
  const auto params = presets::toy20();
  const auto curves = ec::find_invalid_curves(params, params.n, 1);
  BigUint product = 1;
  std::set<std::string> orders;
  for (const auto& c : curves) {
    CHECK(c.curve.b != params.b);
    CHECK(c.curve.a == params.a);
    CHECK(nt::is_prime(c.order));
    CHECK(c.order <= 4096);
    CHECK(ec::is_on_curve(c.curve, c.point));
    CHECK_FALSE(ec::is_on_curve(params, c.point));
    CHECK_FALSE(c.point.is_infinity());
    // The victim's arithmetic, which ignores b, confines multiples of W.
    CHECK(ec::scalar_mul(params, c.order, c.point).is_infinity());
    CHECK(c.curve.n * c.curve.h == ec::count_points(c.curve));
    CHECK(orders.insert(to_hex(c.order)).second);
    product *= c.order;
  }
  CHECK(product > params.n);
  // Same seed, same curves.
  const auto again = ec::find_invalid_curves(params, params.n, 1);
  REQUIRE(again.size() == curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) CHECK(again[i].point == curves[i].point);

  ec::InvalidCurveSearch tiny;
  tiny.max_candidates = 1;
  CHECK(code_of([&] { ec::find_invalid_curves(params, params.n, 1, tiny); }) ==
        Errc::SearchBudgetExceeded);
  CHECK(code_of([] {
          ec::find_invalid_curves(presets::secp160r1(), presets::secp160r1().n, 1);
        }) == Errc::CurveTooLarge);
}
