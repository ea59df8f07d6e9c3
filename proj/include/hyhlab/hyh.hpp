#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hyhlab/curve.hpp"
#include "hyhlab/digest.hpp"
#include "hyhlab/rng.hpp"

/// HYH elliptic-curve signcryption.
///
///   signcrypt:   R = rG, K = r U_B, s = r^-1 (H(M) + x_R d_A) mod n,
///                e' = H(M || s), C = (M || e') XOR x_K
///   unsigncrypt: K = d_B R, M || e' = C XOR x_K, accept iff the tag matches
///                and sR = H(M) G + x_R U_A
///
/// Encodings: field elements and scalars are fixed-width big-endian (widths
/// from q and n), the tag is the first 32 bytes of the hash, and the
/// keystream repeats the encoding of x_K cyclically. x_R enters the scalar
/// arithmetic reduced mod n.
///
/// Mode::Paper reproduces the published scheme with no validation at all.
/// Mode::Strict adds public-key validation of U_B, U_A and R, the order-n
/// and K != O checks, domain-parameter validation at key generation, and
/// hedged nonces r = HMAC(d_A; fresh randomness || M) that refuse caller
/// supplied values.
namespace hyhlab::hyh {

enum class Mode { Paper, Strict };

std::string_view mode_name(Mode mode) noexcept;
/// "paper" or "strict"; throws InvalidArgument otherwise.
Mode parse_mode(std::string_view name);

inline constexpr std::size_t kTagLength = 32;

class SchemeConfig {
 public:
  /// Throws UnsupportedHash if the hash is unknown or shorter than the tag.
  SchemeConfig(ec::CurveParams params, Mode mode, std::string_view hash_name = "SHA-256");

  [[nodiscard]] const ec::CurveParams& params() const noexcept { return params_; }
  [[nodiscard]] Mode mode() const noexcept { return mode_; }
  [[nodiscard]] const HashAlgorithm& hash() const noexcept { return hash_; }

  /// Copy with a different mode.
  [[nodiscard]] SchemeConfig with_mode(Mode mode) const;

 private:
  ec::CurveParams params_;
  Mode mode_;
  HashAlgorithm hash_;
};

struct KeyPair {
  BigUint d;
  ec::Point U;
};

struct SigncryptedText {
  ec::Point R;
  Bytes C;
  BigUint s;

  friend bool operator==(const SigncryptedText& l, const SigncryptedText& r) {
    return l.R == r.R && l.C == r.C && l.s == r.s;
  }
};

/// d uniform in [1, n-1]. Strict mode first requires the domain parameters
/// to pass every check (InvalidParams otherwise).
KeyPair gen(const SchemeConfig& config, std::uint64_t seed);

/// Key pair for a chosen d in [1, n-1].
KeyPair keypair_from_private(const SchemeConfig& config, const BigUint& d);

/// H(M) as an integer, reduced mod n.
BigUint hash_to_scalar(const SchemeConfig& config, std::span<const std::uint8_t> message);

/// Fixed-width encoding of x_K repeated cyclically and cut to length.
Bytes keystream(const BigUint& session_x, std::size_t width, std::size_t length);

/// e' = first 32 bytes of H(M || encode(s mod n)).
Bytes compute_tag(const SchemeConfig& config, std::span<const std::uint8_t> message,
                  const BigUint& s);

/// x-coordinate used as session key; O maps to 0.
BigUint session_x(const ec::Point& k);

/// C XOR keystream(x_K, |C|): the M || e' the recipient would read.
Bytes open_payload(const SchemeConfig& config, const BigUint& session_x,
                   std::span<const std::uint8_t> ciphertext);

/// Draws r from rng (paper) or derives a hedged r (strict), resampling the
/// degenerate cases x_R = 0 mod n, K = O and s = 0. Throws InvalidArgument
/// for d_A outside [1, n-1] or an empty message, InvalidRecipientKey in
/// strict mode when U_B fails validation or is not of order n, RngFailure
/// when no usable nonce turns up.
SigncryptedText signcrypt(const SchemeConfig& config, const BigUint& d_A, const ec::Point& U_B,
                          std::span<const std::uint8_t> message, Rng& rng);

/// Signcryption with a caller-chosen r, for staging attacks. Strict mode
/// refuses (NonceRefused); a degenerate r raises InvalidArgument.
SigncryptedText signcrypt_with_nonce(const SchemeConfig& config, const BigUint& d_A,
                                     const ec::Point& U_B, std::span<const std::uint8_t> message,
                                     const BigUint& r);

/// Recipient-side record of one unsigncryption. Lab instrumentation only:
/// the public result is unsigncrypt() which collapses every failure to one
/// rejection.
struct UnsigncryptTrace {
  std::optional<Bytes> message;
  bool decrypted = false;  // reached the XOR step
  Bytes opened;            // M || e' as decrypted
  BigUint session_x = 0;
  bool tag_ok = false;
  bool signature_ok = false;
  std::string rejection;  // empty when accepted
};

UnsigncryptTrace unsigncrypt_traced(const SchemeConfig& config, const BigUint& d_B,
                                    const ec::Point& U_A, const SigncryptedText& sct);

/// M on acceptance, nullopt for the rejection symbol. Set HYHLAB_LOG_REJECTIONS
/// in the environment to have the reason written to stderr.
std::optional<Bytes> unsigncrypt(const SchemeConfig& config, const BigUint& d_B,
                                 const ec::Point& U_A, const SigncryptedText& sct);

/// sR == H(M) G + (x_R mod n) U_A. Needs no private key.
bool public_verify(const SchemeConfig& config, const ec::Point& U_A,
                   std::span<const std::uint8_t> message, const ec::Point& R, const BigUint& s);

/// x_R mod n (0 for O).
BigUint reduced_x(const SchemeConfig& config, const ec::Point& R);

}  // namespace hyhlab::hyh
