// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyhlab/attacks.hpp"
#include "hyhlab/ca.hpp"
#include "hyhlab/curve.hpp"
#include "hyhlab/digest.hpp"
#include "hyhlab/error.hpp"
#include "hyhlab/hyh.hpp"
#include "hyhlab/io.hpp"
#include "hyhlab/numtheory.hpp"
#include "hyhlab/paramcheck.hpp"
#include "hyhlab/presets.hpp"
#include "hyhlab/scenarios.hpp"

using namespace hyhlab;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances.
constexpr double kRoundTripBudgetSeconds = 30.0;
constexpr double kEphemeralPerInstanceSeconds = 1.0;
constexpr double kInvalidCurveBudgetSeconds = 300.0;
constexpr int kToyRoundTrips = 1000;
constexpr int kLargeRoundTrips = 100;
constexpr int kInstances = 100;
constexpr std::uint64_t kDemoSeed = 2010;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Bytes random_message(Rng& rng, std::size_t max_length) {
  const auto length = 1 + rng.next_u64() % max_length;
  return rng.bytes(length);
}

ec::CurveParams load_params(const std::string& name) {
  return io::params_from_json(io::read_json(std::string(HYHLAB_DATA) + "/params/" + name + ".json"));
}

BigUint random_scalar(const ec::CurveParams& params, Rng& rng) {
  return rng.between(1, params.n - 1);
}

// 1. Correctness of round trips.
Outcome round_trips() {
  Outcome out;
  const auto start = Clock::now();
  std::ostringstream detail;
  struct Case {
    ec::CurveParams params;
    int count;
    const char* label;
  };
  for (const auto& [params, count, label] :
       {Case{presets::toy20(), kToyRoundTrips, "toy20"},
        Case{presets::secp160r1(), kLargeRoundTrips, "secp160r1"}}) {
    int failures = 0;
    Rng rng(static_cast<std::uint64_t>(count));
    for (int i = 0; i < count; ++i) {
      const auto mode = i % 2 == 0 ? hyh::Mode::Paper : hyh::Mode::Strict;
      const hyh::SchemeConfig config(params, mode);
      const auto alice = hyh::keypair_from_private(config, random_scalar(params, rng));
      const auto bob = hyh::keypair_from_private(config, random_scalar(params, rng));
      const Bytes message = random_message(rng, 200);
      const auto sct = hyh::signcrypt(config, alice.d, bob.U, message, rng);
      const auto opened = hyh::unsigncrypt(config, bob.d, alice.U, sct);
      if (!opened || *opened != message) ++failures;
    }
    detail << label << " " << count - failures << "/" << count << "; ";
    out.pass = out.pass && failures == 0;
  }
  const double elapsed = seconds_since(start);
  detail << "elapsed " << fmt_seconds(elapsed) << " (limit " << kRoundTripBudgetSeconds << "s)";
  out.pass = out.pass && elapsed < kRoundTripBudgetSeconds;
  out.detail = detail.str();
  return out;
}

// 2. Sender key recovery from a leaked ephemeral.
Outcome ephemeral_recovery() {
  const auto params = presets::toy20();
  const hyh::SchemeConfig config(params, hyh::Mode::Paper);
  Rng rng(12);
  int recovered = 0;
  double slowest = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto alice = hyh::keypair_from_private(config, random_scalar(params, rng));
    const auto bob = hyh::keypair_from_private(config, random_scalar(params, rng));
    const Bytes message = random_message(rng, 64);
    const BigUint r = random_scalar(params, rng);
    hyh::SigncryptedText sct;
    try {
      sct = hyh::signcrypt_with_nonce(config, alice.d, bob.U, message, r);
    } catch (const Error&) {
      --i;  // degenerate r; draw again
      continue;
    }
    const auto start = Clock::now();
    const auto report = attacks::recover_sender_key(config, alice.U, bob.U, sct, r);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    const auto it = report.recovered_secrets.find("d_A");
    if (!report.success || it == report.recovered_secrets.end()) continue;
    const BigUint d_A = biguint_from_hex(it->second);
    if (ec::scalar_mul(params, d_A, params.G) == alice.U && d_A == alice.d &&
        elapsed < kEphemeralPerInstanceSeconds) {
      ++recovered;
    }
  }
  return {recovered == kInstances, std::to_string(recovered) + "/" + std::to_string(kInstances) +
                                       " recovered, slowest " + fmt_seconds(slowest)};
}

// 3. Keystream reuse under a shared r.
Outcome nonce_reuse() {
  const auto params = presets::toy20();
  const hyh::SchemeConfig config(params, hyh::Mode::Paper);
  Rng rng(13);
  int xor_exact = 0;
  int recovered = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto alice = hyh::keypair_from_private(config, random_scalar(params, rng));
    const auto bob = hyh::keypair_from_private(config, random_scalar(params, rng));
    const Bytes m1 = random_message(rng, 80);
    const Bytes m2 = rng.bytes(m1.size());
    const BigUint r = random_scalar(params, rng);
    hyh::SigncryptedText c1, c2;
    try {
      c1 = hyh::signcrypt_with_nonce(config, alice.d, bob.U, m1, r);
      c2 = hyh::signcrypt_with_nonce(config, alice.d, bob.U, m2, r);
    } catch (const Error&) {
      --i;
      continue;
    }
    Bytes expected = xor_bytes(m1, m2);
    const Bytes tags = xor_bytes(hyh::compute_tag(config, m1, c1.s), hyh::compute_tag(config, m2, c2.s));
    expected.insert(expected.end(), tags.begin(), tags.end());
    if (xor_bytes(c1.C, c2.C) == expected) ++xor_exact;
    const auto recovery = attacks::nonce_reuse_recover(c1.C, c2.C, m1);
    if (recovery.message == m2 && recovery.tag_xor == tags && !recovery.length_mismatch) {
      ++recovered;
    }
  }
  return {xor_exact == kInstances && recovered == kInstances,
          "xor identity " + std::to_string(xor_exact) + "/" + std::to_string(kInstances) +
              ", M2 recovered " + std::to_string(recovered) + "/" + std::to_string(kInstances)};
}

// 4. Invalid-curve key recovery through the confirmation oracle.
Outcome invalid_curve() {
  const auto params = presets::toy20();
  const hyh::SchemeConfig config(params, hyh::Mode::Paper);
  Outcome out;
  std::ostringstream detail;
  const auto start = Clock::now();
  Rng rng(14);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto alice = hyh::keypair_from_private(config, random_scalar(params, rng));
    const auto bob = hyh::keypair_from_private(config, random_scalar(params, rng));
    auto oracle = attacks::make_confirmation_oracle(bob.d, config, Bytes{}, 64, alice.U);
    const auto result = attacks::invalid_curve_attack(config, bob.U, oracle, seed);
    const auto& report = result.report;
    bool ok = report.success;
    const auto it = report.recovered_secrets.find("d_B");
    ok = ok && it != report.recovered_secrets.end() && biguint_from_hex(it->second) == bob.d;
    ok = ok && report.oracle_queries == result.rounds.size() &&
         oracle.queries() == result.rounds.size();
    std::uint64_t trials = 0;
    for (const auto& round : result.rounds) {
      const BigUint g = round.order;
      const BigUint bound = (g + 1) / 2 + 1;
      ok = ok && BigUint(round.mac_trials) <= bound;
      ok = ok && round.residue.modulus == g;
      ok = ok && nt::mod(round.residue.value * round.residue.value, g) == nt::mod(bob.d * bob.d, g);
      trials += round.mac_trials;
    }
    detail << "seed " << seed << ": " << result.rounds.size() << " curves, " << trials
           << " trials" << (ok ? "" : " MISMATCH") << "; ";
    out.pass = out.pass && ok;
  }
  const double elapsed = seconds_since(start);
  out.pass = out.pass && elapsed < kInvalidCurveBudgetSeconds;
  detail << "elapsed " << fmt_seconds(elapsed);
  out.detail = detail.str();
  return out;
}

// 5. Forward secrecy lost once d_A leaks.
Outcome forward_secrecy() {
  const auto params = presets::toy20();
  const hyh::SchemeConfig config(params, hyh::Mode::Paper);
  Rng rng(15);
  int broken = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto alice = hyh::keypair_from_private(config, random_scalar(params, rng));
    const auto bob = hyh::keypair_from_private(config, random_scalar(params, rng));
    const Bytes message = random_message(rng, 64);
    const auto sct = hyh::signcrypt(config, alice.d, bob.U, message, rng);
    const auto report = attacks::break_forward_secrecy(config, alice.d, bob.U, sct, message);
    if (!report.success) continue;
    const BigUint r = biguint_from_hex(report.recovered_secrets.at("r"));
    const BigUint x_k = biguint_from_hex(report.recovered_secrets.at("session_key"));
    Bytes expected = message;
    const Bytes tag = hyh::compute_tag(config, message, sct.s);
    expected.insert(expected.end(), tag.begin(), tag.end());
    if (ec::scalar_mul(params, r, params.G) == sct.R &&
        hyh::open_payload(config, x_k, sct.C) == expected) {
      ++broken;
    }
  }
  return {broken == kInstances,
          std::to_string(broken) + "/" + std::to_string(kInstances) + " sessions re-opened"};
}

// 6. Unknown key-share through a CA without proof of possession.
Outcome unknown_key_share() {
  const auto params = presets::toy20();
  const hyh::SchemeConfig config(params, hyh::Mode::Paper);
  const auto alice = hyh::gen(config, 61);
  const auto bob = hyh::gen(config, 62);
  const auto message = as_bytes("transfer approved");

  attacks::UksOptions lax;
  const auto open = attacks::uks_scenario(config, alice, bob, "mallory", message, lax);
  const bool misattributed = open.success && open.findings.at("bob_view_sender") == "mallory" &&
                             open.findings.at("alice_view_peer") == "bob";

  attacks::UksOptions strict;
  strict.strict_ca = true;
  const auto closed = attacks::uks_scenario(config, alice, bob, "mallory", message, strict);
  const bool blocked = !closed.success && closed.findings.at("bob_view_sender") != "mallory";

  return {misattributed && blocked,
          "lax CA: " + open.findings.at("outcome") + " (bob sees " +
              open.findings.at("bob_view_sender") + ", alice sees " +
              open.findings.at("alice_view_peer") + "); strict CA: " +
              closed.findings.at("outcome")};
}

// 7. Domain-parameter validator and the R = O case.
Outcome validator_and_zero_point() {
  using paramcheck::Check;
  Outcome out;
  std::ostringstream detail;
  const auto good = paramcheck::validate_domain_params(load_params("good_toy"));
  detail << "good_toy " << (good.overall() ? "pass" : "FAIL") << "; ";
  out.pass = good.overall();

  struct Expectation {
    const char* fixture;
    Check intended;
  };
  for (const auto& [fixture, intended] :
       {Expectation{"bad_composite_n", Check::PrimeOrder},
        Expectation{"bad_small_n", Check::LargeSubgroup}, Expectation{"bad_mov", Check::Mov},
        Expectation{"bad_n_eq_q", Check::Anomalous},
        Expectation{"bad_supersingular", Check::Supersingular}}) {
    const auto failed = paramcheck::validate_domain_params(load_params(fixture)).failed();
    const bool exact = failed == std::vector<Check>{intended};
    detail << fixture << " fails {";
    for (std::size_t i = 0; i < failed.size(); ++i) {
      detail << (i ? "," : "") << paramcheck::check_name(failed[i]);
    }
    detail << "}" << (exact ? "" : " expected {" + std::string(paramcheck::check_name(intended)) + "}")
           << "; ";
    out.pass = out.pass && exact;
  }

  const auto params = presets::toy20();
  const hyh::SchemeConfig paper(params, hyh::Mode::Paper);
  const hyh::SchemeConfig strict(params, hyh::Mode::Strict);
  const auto alice = hyh::gen(paper, 71);
  const auto bob = hyh::gen(paper, 72);
  const Bytes message = bytes_from_hex("7a65726f");
  hyh::SigncryptedText sct;
  sct.R = ec::Point::infinity();
  sct.s = 1;
  sct.C = message;
  const Bytes tag = hyh::compute_tag(paper, message, sct.s);
  sct.C.insert(sct.C.end(), tag.begin(), tag.end());

  const auto paper_trace = hyh::unsigncrypt_traced(paper, bob.d, alice.U, sct);
  const auto strict_trace = hyh::unsigncrypt_traced(strict, bob.d, alice.U, sct);
  const bool paper_decrypts = paper_trace.decrypted && paper_trace.session_x == 0 &&
                              paper_trace.opened == sct.C && paper_trace.tag_ok;
  const bool strict_rejects = !strict_trace.decrypted &&
                              !hyh::unsigncrypt(strict, bob.d, alice.U, sct).has_value();
  const bool demo = attacks::degenerate_key_demo(paper, 7).success &&
                    !attacks::degenerate_key_demo(strict, 7).success;
  detail << "R = O: paper " << (paper_decrypts ? "decrypts under x_K = 0" : "does not decrypt")
         << ", strict " << (strict_rejects ? "rejects (" + strict_trace.rejection + ")" : "accepts");
  out.pass = out.pass && paper_decrypts && strict_rejects && demo;
  out.detail = detail.str();
  return out;
}

// 8. Every attack lands in paper mode and none in strict mode.
Outcome mode_duality() {
  const auto params = presets::toy20();
  const auto first = scenarios::demo_all(params, "SHA-256", kDemoSeed, true, true);
  const auto second = scenarios::demo_all(params, "SHA-256", kDemoSeed, true, true);
  const bool deterministic =
      io::demo_summary_to_json(first).dump() == io::demo_summary_to_json(second).dump();
  std::string strict_wins;
  for (const auto& row : first.rows) {
    if (row.strict && row.strict->success) {
      strict_wins += (strict_wins.empty() ? "" : ",") + std::string(scenarios::attack_name(row.name));
    }
  }
  return {first.paper_successes == 6 && first.paper_runs == 6 && first.strict_runs == 6 &&
              first.strict_successes == 0 && deterministic,
          "paper " + std::to_string(first.paper_successes) + "/" +
              std::to_string(first.paper_runs) + ", strict " +
              std::to_string(first.strict_successes) + "/" + std::to_string(first.strict_runs) +
              (strict_wins.empty() ? "" : " (" + strict_wins + ")") +
              (deterministic ? ", deterministic" : ", NOT deterministic")};
}

// 9. Desk-scale agreement with exhaustive computation.
struct SmallPoint {
  bool inf = true;
  long x = 0, y = 0;
};

long small_mod(long v, long p) { return ((v % p) + p) % p; }

long small_inv(long v, long p) {
  for (long k = 1; k < p; ++k) {
    if (small_mod(v * k, p) == 1) return k;
  }
  return 0;
}

SmallPoint small_add(const SmallPoint& P, const SmallPoint& Q, long a, long p) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  if (P.x == Q.x && small_mod(P.y + Q.y, p) == 0) return {};
  const long lambda = P.x == Q.x ? small_mod((3 * P.x * P.x + a) * small_inv(2 * P.y, p), p)
                                 : small_mod((Q.y - P.y) * small_inv(Q.x - P.x, p), p);
  const long x = small_mod(lambda * lambda - P.x - Q.x, p);
  return {false, x, small_mod(lambda * (P.x - x) - P.y, p)};
}

ec::Point to_point(const SmallPoint& P) {
  return P.inf ? ec::Point::infinity() : ec::Point(P.x, P.y);
}

Outcome desk_scale() {
  const long p = 23, a = 1, b = 1;
  const auto params = presets::f23();
  std::vector<SmallPoint> points{SmallPoint{}};
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      if (small_mod(y * y - x * x * x - a * x - b, p) == 0) points.push_back({false, x, y});
    }
  }
  int mismatches = 0;
  for (const auto& P : points) {
    for (const auto& Q : points) {
      if (ec::point_add(params, to_point(P), to_point(Q)) != to_point(small_add(P, Q, a, p))) {
        ++mismatches;
      }
    }
  }
  const auto counted = ec::count_points(params);

  long primes = 0, sqrt_mismatches = 0;
  for (long q = 3; q < 10000; q += 2) {
    bool prime = true;
    for (long d = 3; d * d <= q && prime; d += 2) prime = q % d != 0;
    if (!prime) continue;
    ++primes;
    std::vector<long> root(static_cast<std::size_t>(q), -1);
    for (long y = q - 1; y >= 0; --y) root[static_cast<std::size_t>(y * y % q)] = y;
    for (long v = 0; v < q; ++v) {
      const auto got = nt::sqrt_mod(v, q);
      const long want = root[static_cast<std::size_t>(v)];
      const bool agree = want < 0 ? !got.has_value() : got.has_value() && *got == want;
      if (!agree) ++sqrt_mismatches;
    }
  }
  return {mismatches == 0 && counted == points.size() && counted == 28 && sqrt_mismatches == 0,
          std::to_string(points.size() * points.size()) + " additions, " +
              std::to_string(mismatches) + " mismatches; count_points = " + counted.get_str() +
              "; sqrt_mod over " + std::to_string(primes) + " primes, " +
              std::to_string(sqrt_mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 round-trip correctness", round_trips},
      {"2 ephemeral key recovery", ephemeral_recovery},
      {"3 nonce reuse keystream identity", nonce_reuse},
      {"4 invalid-curve key recovery", invalid_curve},
      {"5 forward secrecy break", forward_secrecy},
      {"6 unknown key-share", unknown_key_share},
      {"7 parameter validator and R = O", validator_and_zero_point},
      {"8 paper/strict mode duality", mode_duality},
      {"9 desk-scale oracle equivalence", desk_scale},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
