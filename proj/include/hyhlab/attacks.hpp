#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyhlab/curve.hpp"
#include "hyhlab/hyh.hpp"

/// Executable versions of the attacks on HYH. Each returns an AttackReport
/// whose recovered secrets have already been checked against their public
/// counterparts (d G = U, r G = R).
namespace hyhlab::attacks {

struct TranscriptEvent {
  std::string actor;
  std::string event;
  std::string detail;
};

struct AttackReport {
  std::string attack_name;
  std::string mode;  // mode of the victim
  bool success = false;
  std::map<std::string, std::string> recovered_secrets;  // name -> lowercase hex
  std::uint64_t oracle_queries = 0;
  std::map<std::string, std::uint64_t> counters;
  std::map<std::string, std::string> findings;
  std::vector<TranscriptEvent> transcript;
  std::chrono::nanoseconds wall_time{0};

  void note(std::string actor, std::string event, std::string detail = {});
};

/// Fills report.wall_time on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(AttackReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() { report_.wall_time = std::chrono::steady_clock::now() - start_; }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  AttackReport& report_;
  std::chrono::steady_clock::time_point start_;
};

// --- leaked ephemeral ----------------------------------------------------

/// Given the r behind an intercepted (R, C, s): K = r U_B, M || e' = C XOR x_K,
/// d_A = x_R^-1 (r s - H(M)) mod n. Throws EphemeralMismatch if rG != R and
/// NotInvertible if x_R = 0 mod n.
AttackReport recover_sender_key(const hyh::SchemeConfig& config, const ec::Point& U_A,
                                const ec::Point& U_B, const hyh::SigncryptedText& sct,
                                const BigUint& r);

// --- nonce reuse ----------------------------------------------------------

struct NonceReuseRecovery {
  Bytes message;           // recovered M2 (prefix if lengths differ)
  Bytes tag_xor;           // e1' XOR e2'; empty when lengths differ
  bool length_mismatch = false;
};

/// Two ciphertexts under the same r share the keystream, so
/// C1 XOR C2 = (M1 XOR M2) || (e1' XOR e2'). Requires |M1| = |C1| - 32
/// (InvalidArgument otherwise). With |C1| != |C2| only the overlapping message
/// prefix is recovered and length_mismatch is set.
NonceReuseRecovery nonce_reuse_recover(std::span<const std::uint8_t> c1,
                                       std::span<const std::uint8_t> c2,
                                       std::span<const std::uint8_t> m1);

// --- confirmation oracle and invalid-curve attack ---------------------------

/// Simulated recipient that acknowledges every signcrypted text with
/// (M', HMAC_{x_K}(M')), keyed by the fixed-width encoding of x_K. In paper
/// mode it answers whenever decryption ran, whatever the tag check said; in
/// strict mode a point failing validation gets no answer.
class ConfirmationOracle {
 public:
  struct Reply {
    Bytes message;
    Bytes tag;
  };

  /// nullopt: the recipient rejected before decrypting. Throws
  /// QueryBudgetExceeded once the budget is spent.
  std::optional<Reply> query(const ec::Point& w, const Bytes& ciphertext, const BigUint& s);

  [[nodiscard]] std::uint64_t queries() const noexcept { return used_; }
  [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }
  [[nodiscard]] const hyh::SchemeConfig& config() const noexcept { return config_; }

 private:
  friend ConfirmationOracle make_confirmation_oracle(const BigUint&, hyh::SchemeConfig, Bytes,
                                                     std::uint64_t, ec::Point);
  ConfirmationOracle(BigUint d_B, hyh::SchemeConfig config, Bytes confirmation,
                     std::uint64_t budget, ec::Point sender_key)
      : d_B_(std::move(d_B)),
        config_(std::move(config)),
        confirmation_(std::move(confirmation)),
        budget_(budget),
        sender_key_(std::move(sender_key)) {}

  BigUint d_B_;
  hyh::SchemeConfig config_;
  Bytes confirmation_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  ec::Point sender_key_;
};

/// sender_key is the public key the recipient believes it is talking to.
ConfirmationOracle make_confirmation_oracle(const BigUint& d_B, hyh::SchemeConfig config,
                                            Bytes confirmation, std::uint64_t query_budget,
                                            ec::Point sender_key = {});

/// HMAC over the confirmation message keyed with x(K) (0 for O).
Bytes confirmation_tag(const hyh::SchemeConfig& config, const BigUint& session_x,
                       std::span<const std::uint8_t> confirmation);

/// d_B = +-value (mod modulus); x(jW) = x(-jW) hides the sign.
struct Residue {
  BigUint value;
  BigUint modulus;
  bool sign_ambiguous = true;
};

struct InvalidCurveRound {
  BigUint b_prime;
  ec::Point point;
  BigUint order;
  Residue residue;
  std::uint64_t mac_trials = 0;
};

struct InvalidCurveOptions {
  ec::InvalidCurveSearch search;
  /// Upper bound on the number of curves whose signs are enumerated.
  unsigned max_sign_bits = 24;
  std::size_t probe_length = 48;
};

struct InvalidCurveResult {
  AttackReport report;
  std::vector<InvalidCurveRound> rounds;
};

/// Sends one point of small order g_i per invalid curve, matches the
/// returned MAC against x(jW_i) for j = 0..ceil(g_i/2), and recombines the
/// residues with CRT over every sign vector. A rejection at the first query
/// ends the run with success = false. Throws ResidueNotFound when no j
/// matches and CandidateNotFound when no combination gives d_B G = U_B.
InvalidCurveResult invalid_curve_attack(const hyh::SchemeConfig& attacker, const ec::Point& U_B,
                                        ConfirmationOracle& oracle, std::uint64_t seed,
                                        const InvalidCurveOptions& options = {});

// --- forward secrecy ------------------------------------------------------

/// With d_A and the plaintext M: r = s^-1 (H(M) + x_R d_A) mod n, then the
/// session key x(r U_B) re-opens C. Throws ConsistencyFailure if rG != R.
AttackReport break_forward_secrecy(const hyh::SchemeConfig& config, const BigUint& d_A,
                                   const ec::Point& U_B, const hyh::SigncryptedText& sct,
                                   std::span<const std::uint8_t> message);

// --- degenerate session key ------------------------------------------------

/// Sends R = O so the recipient's K = d_B O = O and x_K = 0. The payload is
/// M || H(M || s) in the clear, which is exactly what the all-zero keystream
/// leaves untouched. Succeeds when the recipient (in config's mode) decrypts
/// under the zero key.
AttackReport degenerate_key_demo(const hyh::SchemeConfig& config, std::uint64_t seed);

}  // namespace hyhlab::attacks
