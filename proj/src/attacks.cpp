#include "hyhlab/attacks.hpp"

#include <algorithm>

#include "hyhlab/error.hpp"
#include "hyhlab/numtheory.hpp"

namespace hyhlab::attacks {

void AttackReport::note(std::string actor, std::string event, std::string detail) {
  transcript.push_back(TranscriptEvent{std::move(actor), std::move(event), std::move(detail)});
}

AttackReport recover_sender_key(const hyh::SchemeConfig& config, const ec::Point& U_A,
                                const ec::Point& U_B, const hyh::SigncryptedText& sct,
                                const BigUint& r) {
  AttackReport report;
  ScopedTimer timer(report);
  report.attack_name = "ephemeral";
  report.mode = hyh::mode_name(config.mode());
  const auto& params = config.params();

  if (ec::scalar_mul(params, r, params.G) != sct.R) {
    throw Error(Errc::EphemeralMismatch, "rG does not match the intercepted R");
  }
  report.note("mallory", "ephemeral-confirmed", "rG = R");

  const ec::Point K = ec::scalar_mul(params, r, U_B);
  const Bytes opened = hyh::open_payload(config, hyh::session_x(K), sct.C);
  const std::span<const std::uint8_t> message(opened.data(), opened.size() - hyh::kTagLength);
  report.note("mallory", "decrypted", "K = r U_B, M || e' = C XOR x_K");

  const BigUint& n = params.n;
  const BigUint x_inv = nt::mod_inverse(hyh::reduced_x(config, sct.R), n);
  const BigUint d_A = nt::mod(x_inv * (r * sct.s - hyh::hash_to_scalar(config, message)), n);
  report.note("mallory", "key-derived", "d_A = x_R^-1 (r s - H(M)) mod n");

  report.recovered_secrets["d_A"] = to_hex(d_A);
  report.recovered_secrets["M"] = bytes_to_hex(message);
  report.recovered_secrets["r"] = to_hex(r);
  report.success = ec::scalar_mul(params, d_A, params.G) == U_A;
  report.note("mallory", report.success ? "verified" : "verification-failed", "d_A G vs U_A");
  return report;
}

NonceReuseRecovery nonce_reuse_recover(std::span<const std::uint8_t> c1,
                                       std::span<const std::uint8_t> c2,
                                       std::span<const std::uint8_t> m1) {
  if (c1.size() < hyh::kTagLength || m1.size() != c1.size() - hyh::kTagLength) {
    throw Error(Errc::InvalidArgument, "known plaintext must be |C1| - 32 bytes long");
  }
  if (c2.size() < hyh::kTagLength) {
    throw Error(Errc::InvalidArgument, "second ciphertext shorter than the tag");
  }
  NonceReuseRecovery out;
  out.length_mismatch = c1.size() != c2.size();
  const std::size_t overlap = std::min(m1.size(), c2.size() - hyh::kTagLength);
  out.message.resize(overlap);
  for (std::size_t i = 0; i < overlap; ++i) out.message[i] = c1[i] ^ c2[i] ^ m1[i];
  if (!out.length_mismatch) {
    out.tag_xor = xor_bytes(c1.last(hyh::kTagLength), c2.last(hyh::kTagLength));
  }
  return out;
}

AttackReport break_forward_secrecy(const hyh::SchemeConfig& config, const BigUint& d_A,
                                   const ec::Point& U_B, const hyh::SigncryptedText& sct,
                                   std::span<const std::uint8_t> message) {
  AttackReport report;
  ScopedTimer timer(report);
  report.attack_name = "forward-secrecy";
  report.mode = hyh::mode_name(config.mode());
  const auto& params = config.params();
  const BigUint& n = params.n;

  const BigUint r = nt::mod(nt::mod_inverse(sct.s, n) * (hyh::hash_to_scalar(config, message) +
                                                          hyh::reduced_x(config, sct.R) * d_A),
                            n);
  report.note("mallory", "nonce-derived", "r = s^-1 (H(M) + x_R d_A) mod n");
  if (ec::scalar_mul(params, r, params.G) != sct.R) {
    throw Error(Errc::ConsistencyFailure, "derived r does not reproduce R (wrong M or d_A)");
  }
  report.note("mallory", "nonce-verified", "rG = R");

  const BigUint x_k = hyh::session_x(ec::scalar_mul(params, r, U_B));
  const Bytes opened = hyh::open_payload(config, x_k, sct.C);
  Bytes expected(message.begin(), message.end());
  const Bytes tag = hyh::compute_tag(config, message, sct.s);
  expected.insert(expected.end(), tag.begin(), tag.end());

  report.recovered_secrets["r"] = to_hex(r);
  report.recovered_secrets["session_key"] = to_hex(x_k);
  report.success = opened == expected;
  report.note("mallory", report.success ? "re-decrypted" : "re-decryption-mismatch",
              "C XOR x(r U_B) vs M || H(M || s)");
  return report;
}

AttackReport degenerate_key_demo(const hyh::SchemeConfig& config, std::uint64_t seed) {
  AttackReport report;
  ScopedTimer timer(report);
  report.attack_name = "degenerate-key";
  report.mode = hyh::mode_name(config.mode());

  // Bob's key comes from the paper-mode generator so strict victims do not
  // refuse at key generation for unrelated reasons.
  const auto victim_keys = hyh::gen(config.with_mode(hyh::Mode::Paper), seed);
  const ec::Point sender = hyh::gen(config.with_mode(hyh::Mode::Paper), seed + 1).U;

  const Bytes message = {'z', 'e', 'r', 'o', '-', 'k', 'e', 'y'};
  const BigUint s = 1;
  Bytes payload = message;
  const Bytes tag = hyh::compute_tag(config, message, s);
  payload.insert(payload.end(), tag.begin(), tag.end());
  const hyh::SigncryptedText sct{ec::Point::infinity(), payload, s};
  report.note("mallory", "sent", "R = O, C = M || H(M || s) unencrypted");

  const auto trace = hyh::unsigncrypt_traced(config, victim_keys.d, sender, sct);
  report.findings["decrypted"] = trace.decrypted ? "yes" : "no";
  if (trace.decrypted) {
    const bool zero_stream = trace.session_x == 0 && trace.opened == payload;
    report.findings["session_key"] = to_hex(trace.session_x);
    report.findings["tag_check_under_zero_key"] = trace.tag_ok ? "pass" : "fail";
    report.findings["signature_check"] = trace.signature_ok ? "pass" : "fail";
    report.note("bob", "decrypted", "K = d_B O = O, x_K = 0, C returned verbatim");
    report.success = zero_stream;
  } else {
    report.findings["rejection"] = trace.rejection;
    report.note("bob", "rejected", trace.rejection);
  }
  return report;
}

}  // namespace hyhlab::attacks
