#include "hyhlab/scenarios.hpp"

#include <algorithm>

#include "hyhlab/ca.hpp"
#include "hyhlab/error.hpp"

namespace hyhlab::scenarios {

using attacks::AttackReport;

namespace {

constexpr std::size_t kCompiledListLength = 8;

Bytes text(std::string_view s) {
  const auto view = as_bytes(s);
  return Bytes(view.begin(), view.end());
}

struct Parties {
  hyh::KeyPair alice;
  hyh::KeyPair bob;
  std::uint64_t device_seed;
};

Parties stage(const hyh::SchemeConfig& config, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t alice_seed = rng.fork();
  const std::uint64_t bob_seed = rng.fork();
  return Parties{hyh::gen(config, alice_seed), hyh::gen(config, bob_seed), rng.fork()};
}

AttackReport failed(std::string name, const hyh::SchemeConfig& config) {
  AttackReport report;
  report.attack_name = std::move(name);
  report.mode = hyh::mode_name(config.mode());
  return report;
}

// Mallory can replay Alice's device RNG (cloned state, weak seeding) and
// precomputes the first few (r, rG) pairs a paper-mode signcrypt would draw.
AttackReport ephemeral(const hyh::SchemeConfig& config, std::uint64_t seed) {
  const Parties p = stage(config, seed);
  const Bytes message = text("wire 5000 to account 17");
  Rng device(p.device_seed);
  const auto sct = hyh::signcrypt(config, p.alice.d, p.bob.U, message, device);

  Rng replay(p.device_seed);
  const auto& params = config.params();
  for (std::size_t i = 0; i < kCompiledListLength; ++i) {
    const BigUint r = replay.between(1, params.n - 1);
    if (ec::scalar_mul(params, r, params.G) == sct.R) {
      auto report = attacks::recover_sender_key(config, p.alice.U, p.bob.U, sct, r);
      report.counters["list_position"] = i;
      report.success = report.success && report.recovered_secrets["M"] == bytes_to_hex(message);
      return report;
    }
  }
  auto report = failed("ephemeral", config);
  report.note("mallory", "no-match",
              "none of " + std::to_string(kCompiledListLength) + " precomputed R values appear");
  report.findings["outcome"] = "ephemeral-not-in-list";
  return report;
}

// Alice's device restarts from the same RNG state for two messages.
AttackReport nonce_reuse(const hyh::SchemeConfig& config, std::uint64_t seed) {
  const Parties p = stage(config, seed);
  const Bytes m1 = text("known: quarterly figures attached");
  const Bytes m2 = text("secret: merger closes on friday!!");
  Rng first(p.device_seed);
  const auto sct1 = hyh::signcrypt(config, p.alice.d, p.bob.U, m1, first);
  Rng second(p.device_seed);
  const auto sct2 = hyh::signcrypt(config, p.alice.d, p.bob.U, m2, second);

  AttackReport report = failed("nonce-reuse", config);
  attacks::ScopedTimer timer(report);
  if (sct1.R != sct2.R) {
    report.note("mallory", "no-shared-R", "the two signcrypted texts use different R");
    report.findings["outcome"] = "distinct-nonces";
    return report;
  }
  report.note("mallory", "shared-R", "R1 = R2, keystreams coincide");
  const auto recovery = attacks::nonce_reuse_recover(sct1.C, sct2.C, m1);
  report.recovered_secrets["M"] = bytes_to_hex(recovery.message);
  report.findings["tag_xor"] = bytes_to_hex(recovery.tag_xor);
  report.findings["length_mismatch"] = recovery.length_mismatch ? "yes" : "no";
  report.success = recovery.message == m2;
  report.note("mallory", report.success ? "recovered" : "mismatch", "M2 = C1 XOR C2 XOR M1");
  return report;
}

AttackReport invalid_curve(const hyh::SchemeConfig& config, std::uint64_t seed,
                           const ScenarioOptions& options) {
  const Parties p = stage(config, seed);
  auto oracle = attacks::make_confirmation_oracle(p.bob.d, config, text("received"),
                                                  options.oracle_budget, p.alice.U);
  attacks::InvalidCurveOptions attack_options;
  attack_options.search = options.search;
  return attacks::invalid_curve_attack(config.with_mode(hyh::Mode::Paper), p.bob.U, oracle,
                                       p.device_seed, attack_options)
      .report;
}

AttackReport uks(const hyh::SchemeConfig& config, std::uint64_t seed) {
  const Parties p = stage(config, seed);
  attacks::UksOptions uks_options;
  uks_options.strict_ca = config.mode() == hyh::Mode::Strict;
  uks_options.seed = p.device_seed;
  return attacks::uks_scenario(config, p.alice, p.bob, "mallory", text("meet at noon"),
                               uks_options);
}

// d_A leaks after the fact; M is known from a cooperating recipient.
AttackReport forward_secrecy(const hyh::SchemeConfig& config, std::uint64_t seed) {
  const Parties p = stage(config, seed);
  const Bytes message = text("archived session 2009-12-31");
  Rng device(p.device_seed);
  const auto sct = hyh::signcrypt(config, p.alice.d, p.bob.U, message, device);
  return attacks::break_forward_secrecy(config, p.alice.d, p.bob.U, sct, message);
}

bool staging_error(Errc code) {
  switch (code) {
    case Errc::InvalidParams:
    case Errc::UnsupportedHash:
    case Errc::ParseError:
    case Errc::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view attack_name(AttackName name) noexcept {
  switch (name) {
    case AttackName::Ephemeral: return "ephemeral";
    case AttackName::NonceReuse: return "nonce-reuse";
    case AttackName::InvalidCurve: return "invalid-curve";
    case AttackName::Uks: return "uks";
    case AttackName::ForwardSecrecy: return "forward-secrecy";
    case AttackName::DegenerateKey: return "degenerate-key";
  }
  return "unknown";
}

AttackName parse_attack_name(std::string_view name) {
  for (AttackName candidate : kAllAttacks) {
    if (attack_name(candidate) == name) return candidate;
  }
  throw Error(Errc::InvalidArgument, "unknown attack '" + std::string(name) + "'");
}

AttackReport run_scenario(AttackName name, const hyh::SchemeConfig& config, std::uint64_t seed,
                          const ScenarioOptions& options) {
  try {
    switch (name) {
      case AttackName::Ephemeral: return ephemeral(config, seed);
      case AttackName::NonceReuse: return nonce_reuse(config, seed);
      case AttackName::InvalidCurve: return invalid_curve(config, seed, options);
      case AttackName::Uks: return uks(config, seed);
      case AttackName::ForwardSecrecy: return forward_secrecy(config, seed);
      case AttackName::DegenerateKey: return attacks::degenerate_key_demo(config, seed);
    }
  } catch (const Error& e) {
    if (staging_error(e.code())) throw;
    auto report = failed(std::string(attack_name(name)), config);
    report.findings["error"] = e.what();
    report.note("harness", "aborted", e.what());
    return report;
  }
  throw Error(Errc::InvalidArgument, "unhandled attack");
}

DemoSummary demo_all(const ec::CurveParams& params, std::string_view hash_name,
                     std::uint64_t seed, bool run_paper, bool run_strict,
                     const ScenarioOptions& options) {
  const hyh::SchemeConfig paper(params, hyh::Mode::Paper, hash_name);
  const hyh::SchemeConfig strict = paper.with_mode(hyh::Mode::Strict);
  DemoSummary summary;
  for (AttackName name : kAllAttacks) {
    DemoRow row{name, std::nullopt, std::nullopt};
    if (run_paper) {
      row.paper = run_scenario(name, paper, seed, options);
      ++summary.paper_runs;
      summary.paper_successes += row.paper->success ? 1 : 0;
    }
    if (run_strict) {
      row.strict = run_scenario(name, strict, seed, options);
      ++summary.strict_runs;
      summary.strict_successes += row.strict->success ? 1 : 0;
    }
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

}  // namespace hyhlab::scenarios
