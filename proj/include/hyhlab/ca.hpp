#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyhlab/attacks.hpp"
#include "hyhlab/curve.hpp"
#include "hyhlab/hyh.hpp"

/// A toy certificate authority. Certificates bind an identity to a curve
/// point under a Schnorr signature made with the scheme's own parameters.
namespace hyhlab::attacks {

using Timestamp = std::int64_t;  // seconds

struct Certificate {
  std::uint64_t serial = 0;
  std::string subject;
  ec::Point public_key;
  Timestamp not_after = 0;
  Bytes ca_signature;
};

/// Canonical bytes covered by the CA signature.
Bytes certificate_body(const hyh::SchemeConfig& config, const Certificate& cert);

/// Schnorr over (params, hash): signature = encode(e) || encode(s) with
/// e = H(kG || msg) mod n, s = k + e d mod n and k derived from (d, msg).
Bytes schnorr_sign(const hyh::SchemeConfig& config, const BigUint& d,
                   std::span<const std::uint8_t> message);
bool schnorr_verify(const hyh::SchemeConfig& config, const ec::Point& U,
                    std::span<const std::uint8_t> message, std::span<const std::uint8_t> sig);

/// Message an applicant signs to prove it holds the private key of `key`.
Bytes possession_message(const hyh::SchemeConfig& config, const std::string& identity,
                         const ec::Point& key);
Bytes prove_possession(const hyh::SchemeConfig& config, const BigUint& d,
                       const std::string& identity, const ec::Point& key);

enum class CertCheck { Signature, Expired, Revoked };

struct CertVerdict {
  std::vector<CertCheck> failures;
  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
  [[nodiscard]] bool failed(CertCheck check) const;
  [[nodiscard]] std::string to_string() const;
};

/// Issued certificates, revocation list and the CA key.
class CaRegistry {
 public:
  CaRegistry(hyh::SchemeConfig config, std::uint64_t seed);

  /// check_possession = false issues for any point at all, including another
  /// party's key or an off-curve point. With true the key must pass
  /// validation and be of order n (InvalidPublicKey) and the proof must verify
  /// (PossessionProofInvalid).
  Certificate issue(const std::string& identity, const ec::Point& public_key, Timestamp not_after,
                    bool check_possession, const std::optional<Bytes>& possession_proof);

  void revoke(std::uint64_t serial);

  [[nodiscard]] CertVerdict validate(const Certificate& cert, Timestamp now) const;

  /// Most recent certificate for an identity.
  [[nodiscard]] std::optional<Certificate> lookup(const std::string& identity) const;

  [[nodiscard]] const ec::Point& public_key() const noexcept { return key_.U; }
  [[nodiscard]] const std::vector<Certificate>& issued() const noexcept { return issued_; }

 private:
  hyh::SchemeConfig config_;
  hyh::KeyPair key_;
  std::vector<Certificate> issued_;
  std::set<std::uint64_t> revoked_;
};

Certificate ca_issue(CaRegistry& registry, const std::string& identity,
                     const ec::Point& public_key, Timestamp not_after, bool check_possession,
                     const std::optional<Bytes>& possession_proof);

CertVerdict cert_validate(const CaRegistry& registry, const Certificate& cert, Timestamp now);

struct UksOptions {
  bool strict_ca = false;
  bool tamper_ciphertext = false;
  Timestamp now = 1'262'304'000;  // 2010-01-01
  std::uint64_t seed = 1;
};

/// Mallory registers Alice's public key under his own name, then relays
/// Alice's signcrypted text to Bob as if it were his. Succeeds when Bob
/// accepts M as coming from Mallory while Alice believes she sent it to Bob.
AttackReport uks_scenario(const hyh::SchemeConfig& config, const hyh::KeyPair& alice,
                          const hyh::KeyPair& bob, const std::string& mallory_identity,
                          std::span<const std::uint8_t> message, const UksOptions& options = {});

}  // namespace hyhlab::attacks
