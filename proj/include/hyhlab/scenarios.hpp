#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyhlab/attacks.hpp"

/// Self-staged attack runs: generate the victims' keys from a seed, run the
/// honest protocol, then attack it. The victim's mode is the config's mode.
namespace hyhlab::scenarios {

enum class AttackName { Ephemeral, NonceReuse, InvalidCurve, Uks, ForwardSecrecy, DegenerateKey };

inline constexpr std::array<AttackName, 6> kAllAttacks = {
    AttackName::Ephemeral, AttackName::NonceReuse,     AttackName::InvalidCurve,
    AttackName::Uks,       AttackName::ForwardSecrecy, AttackName::DegenerateKey};

/// Command-line spelling, e.g. "nonce-reuse".
std::string_view attack_name(AttackName name) noexcept;
/// Throws InvalidArgument for an unknown name.
AttackName parse_attack_name(std::string_view name);

struct ScenarioOptions {
  ec::InvalidCurveSearch search;
  std::uint64_t oracle_budget = 64;
};

/// Errors raised by the attack itself (no match, rejected nonce, search
/// exhausted) come back as a failed report with findings["error"] set.
/// Staging errors such as InvalidParams in strict key generation propagate.
attacks::AttackReport run_scenario(AttackName name, const hyh::SchemeConfig& config,
                                   std::uint64_t seed, const ScenarioOptions& options = {});

struct DemoRow {
  AttackName name;
  std::optional<attacks::AttackReport> paper;
  std::optional<attacks::AttackReport> strict;
};

struct DemoSummary {
  std::vector<DemoRow> rows;
  unsigned paper_runs = 0;
  unsigned paper_successes = 0;
  unsigned strict_runs = 0;
  unsigned strict_successes = 0;

  /// Every paper-mode attack succeeded and no strict-mode attack did.
  [[nodiscard]] bool ok() const noexcept {
    return paper_successes == paper_runs && strict_successes == 0;
  }
};

/// Runs every scenario in the requested modes with the same seed.
DemoSummary demo_all(const ec::CurveParams& params, std::string_view hash_name,
                     std::uint64_t seed, bool run_paper, bool run_strict,
                     const ScenarioOptions& options = {});

}  // namespace hyhlab::scenarios
