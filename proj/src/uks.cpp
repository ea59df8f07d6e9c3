#include "hyhlab/ca.hpp"
#include "hyhlab/error.hpp"

namespace hyhlab::attacks {

namespace {
constexpr Timestamp kValidity = 365 * 24 * 3600;
}  // namespace

AttackReport uks_scenario(const hyh::SchemeConfig& config, const hyh::KeyPair& alice,
                          const hyh::KeyPair& bob, const std::string& mallory_identity,
                          std::span<const std::uint8_t> message, const UksOptions& options) {
  AttackReport report;
  ScopedTimer timer(report);
  report.attack_name = "uks";
  report.mode = hyh::mode_name(config.mode());
  report.findings["alice_view_peer"] = "bob";
  report.findings["bob_view_sender"] = "none";
  report.findings["ca"] = options.strict_ca ? "proof-of-possession" : "no-proof";

  CaRegistry ca(config, options.seed);
  const Timestamp expiry = options.now + kValidity;
  ca.issue("alice", alice.U, expiry, options.strict_ca,
           prove_possession(config, alice.d, "alice", alice.U));
  ca.issue("bob", bob.U, expiry, options.strict_ca,
           prove_possession(config, bob.d, "bob", bob.U));
  report.note("ca", "issued", "certificates for alice and bob");

  try {
    ca.issue(mallory_identity, alice.U, expiry, options.strict_ca, std::nullopt);
  } catch (const Error& e) {
    report.note("ca", "refused", e.what());
    report.findings["outcome"] = "blocked-at-registration";
    return report;
  }
  report.note("mallory", "registered", mallory_identity + " certified with alice's public key");

  Rng rng(options.seed + 1);
  hyh::SigncryptedText sct = hyh::signcrypt(config, alice.d, bob.U, message, rng);
  report.note("alice", "signcrypted", "to bob");

  if (options.tamper_ciphertext) sct.C.front() ^= 0x01;
  report.note("mallory", "forwarded",
              std::string(options.tamper_ciphertext ? "modified" : "unchanged") + " text as " +
                  mallory_identity);

  const auto cert = ca.lookup(mallory_identity);
  const auto verdict = ca.validate(*cert, options.now);
  report.findings["certificate"] = verdict.to_string();
  if (!verdict.ok()) {
    report.note("bob", "certificate-rejected", verdict.to_string());
    report.findings["outcome"] = "certificate-rejected";
    return report;
  }

  const auto opened = hyh::unsigncrypt(config, bob.d, cert->public_key, sct);
  if (!opened) {
    report.note("bob", "rejected", "unsigncrypt returned the rejection symbol");
    report.findings["outcome"] = "rejected";
    return report;
  }
  report.success = std::equal(opened->begin(), opened->end(), message.begin(), message.end());
  report.findings["bob_view_sender"] = mallory_identity;
  report.findings["outcome"] = report.success ? "misattributed" : "message-mismatch";
  report.recovered_secrets["M"] = bytes_to_hex(*opened);
  report.note("bob", "accepted", "message attributed to " + mallory_identity);
  return report;
}

}  // namespace hyhlab::attacks
