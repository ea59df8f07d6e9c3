#include <algorithm>

#include "hyhlab/attacks.hpp"
#include "hyhlab/error.hpp"
#include "hyhlab/numtheory.hpp"

namespace hyhlab::attacks {

ConfirmationOracle make_confirmation_oracle(const BigUint& d_B, hyh::SchemeConfig config,
                                            Bytes confirmation, std::uint64_t query_budget,
                                            ec::Point sender_key) {
  if (confirmation.empty()) {
    const auto text = as_bytes("received");
    confirmation.assign(text.begin(), text.end());
  }
  return ConfirmationOracle(d_B, std::move(config), std::move(confirmation), query_budget,
                            std::move(sender_key));
}

Bytes confirmation_tag(const hyh::SchemeConfig& config, const BigUint& session_x,
                       std::span<const std::uint8_t> confirmation) {
  return config.hash().hmac(encode_fixed(session_x, config.params().field_width()), confirmation);
}

std::optional<ConfirmationOracle::Reply> ConfirmationOracle::query(const ec::Point& w,
                                                                   const Bytes& ciphertext,
                                                                   const BigUint& s) {
  if (used_ >= budget_) {
    throw Error(Errc::QueryBudgetExceeded,
                "oracle budget of " + std::to_string(budget_) + " queries spent");
  }
  ++used_;
  const auto trace = hyh::unsigncrypt_traced(config_, d_B_, sender_key_, {w, ciphertext, s});
  if (!trace.decrypted) return std::nullopt;
  return Reply{confirmation_, confirmation_tag(config_, trace.session_x, confirmation_)};
}

namespace {

// j with x(jW) matching the MAC, searching j = 0..ceil(g/2).
std::optional<BigUint> match_residue(const hyh::SchemeConfig& attacker,
                                     const ec::CurveParams& curve, const ec::Point& w,
                                     const BigUint& g, const ConfirmationOracle::Reply& reply,
                                     std::uint64_t& trials) {
  const BigUint last = (g + 1) / 2;
  ec::Point jw;  // O for j = 0
  for (BigUint j = 0; j <= last; ++j) {
    ++trials;
    if (confirmation_tag(attacker, hyh::session_x(jw), reply.message) == reply.tag) return j;
    jw = ec::point_add(curve, jw, w);
  }
  return std::nullopt;
}

}  // namespace

InvalidCurveResult invalid_curve_attack(const hyh::SchemeConfig& attacker, const ec::Point& U_B,
                                        ConfirmationOracle& oracle, std::uint64_t seed,
                                        const InvalidCurveOptions& options) {
  InvalidCurveResult result;
  AttackReport& report = result.report;
  ScopedTimer timer(report);
  report.attack_name = "invalid-curve";
  report.mode = hyh::mode_name(oracle.config().mode());
  const auto& params = attacker.params();

  const auto curves = ec::find_invalid_curves(params, params.n, seed, options.search);
  report.counters["curves"] = curves.size();
  report.note("mallory", "curves-found",
              std::to_string(curves.size()) + " invalid curves with small-order points");
  if (curves.size() > options.max_sign_bits) {
    throw Error(Errc::SearchBudgetExceeded,
                std::to_string(curves.size()) + " curves exceed the sign enumeration bound");
  }

  Rng probe_rng(seed ^ 0x5bd1e995u);
  std::uint64_t trials = 0;
  for (const auto& found : curves) {
    const Bytes probe = probe_rng.bytes(options.probe_length);
    auto reply = oracle.query(found.point, probe, 1);
    if (!reply) {
      report.note("bob", "rejected", "W " + found.point.to_string() + " refused before decryption");
      report.findings["outcome"] = "blocked";
      report.oracle_queries = oracle.queries();
      report.counters["mac_trials"] = trials;
      return result;
    }
    std::uint64_t round_trials = 0;
    auto j = match_residue(attacker, found.curve, found.point, found.order, *reply, round_trials);
    trials += round_trials;
    if (!j) {
      throw Error(Errc::ResidueNotFound,
                  "no j matches the MAC for order " + to_hex(found.order));
    }
    result.rounds.push_back(InvalidCurveRound{found.curve.b, found.point, found.order,
                                              Residue{*j, found.order, true}, round_trials});
    report.note("mallory", "residue",
                "d_B = +-" + to_hex(*j) + " mod " + to_hex(found.order));
  }
  report.oracle_queries = oracle.queries();
  report.counters["mac_trials"] = trials;

  // Fixing the first sign covers the global flip, which maps x to P - x.
  BigUint modulus = 1;
  for (const auto& round : result.rounds) modulus *= round.residue.modulus;
  const std::size_t k = result.rounds.size();
  const std::uint64_t masks = k == 0 ? 1 : std::uint64_t{1} << (k - 1);
  std::uint64_t candidates = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<std::pair<BigUint, BigUint>> congruences;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& residue = result.rounds[i].residue;
      const bool flip = i > 0 && ((mask >> (i - 1)) & 1);
      congruences.emplace_back(flip ? nt::mod(-residue.value, residue.modulus) : residue.value,
                               residue.modulus);
    }
    const BigUint x = nt::crt_combine(congruences);
    for (const BigUint& candidate : {x, nt::mod(modulus - x, modulus)}) {
      ++candidates;
      if (candidate < 1 || candidate >= params.n) continue;
      if (ec::scalar_mul(params, candidate, params.G) == U_B) {
        report.counters["candidates"] = candidates;
        report.recovered_secrets["d_B"] = to_hex(candidate);
        report.success = true;
        report.findings["outcome"] = "recovered";
        report.note("mallory", "key-recovered", "d_B G = U_B");
        return result;
      }
    }
  }
  report.counters["candidates"] = candidates;
  throw Error(Errc::CandidateNotFound, "no sign vector yields d_B G = U_B");
}

}  // namespace hyhlab::attacks
