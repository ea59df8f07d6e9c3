#include "hyhlab/hyh.hpp"

#include <cstdlib>
#include <iostream>

#include "hyhlab/error.hpp"
#include "hyhlab/numtheory.hpp"
#include "hyhlab/paramcheck.hpp"

namespace hyhlab::hyh {
namespace {

constexpr unsigned kNonceAttempts = 64;

void require_scalar(const SchemeConfig& config, const BigUint& d, const char* what) {
  if (d < 1 || d >= config.params().n) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must lie in [1, n-1]");
  }
}

bool has_order_n(const SchemeConfig& config, const ec::Point& p) {
  return !p.is_infinity() && ec::scalar_mul(config.params(), config.params().n, p).is_infinity();
}

// Signcryption for a fixed r; nullopt when r hits a degenerate case.
std::optional<SigncryptedText> signcrypt_once(const SchemeConfig& config, const BigUint& d_A,
                                              const ec::Point& U_B,
                                              std::span<const std::uint8_t> message,
                                              const BigUint& r) {
  const auto& params = config.params();
  const BigUint& n = params.n;
  ec::Point R = ec::scalar_mul(params, r, params.G);
  const BigUint x_r = reduced_x(config, R);
  if (x_r == 0) return std::nullopt;
  ec::Point K = ec::scalar_mul(params, r, U_B);
  if (K.is_infinity()) return std::nullopt;

  const BigUint s =
      nt::mod(nt::mod_inverse(r, n) * (hash_to_scalar(config, message) + x_r * d_A), n);
  if (s == 0) return std::nullopt;

  Bytes payload(message.begin(), message.end());
  Bytes tag = compute_tag(config, message, s);
  payload.insert(payload.end(), tag.begin(), tag.end());
  Bytes C = xor_bytes(payload, keystream(K.x(), params.field_width(), payload.size()));
  return SigncryptedText{std::move(R), std::move(C), s};
}

void check_signcrypt_inputs(const SchemeConfig& config, const BigUint& d_A, const ec::Point& U_B,
                            std::span<const std::uint8_t> message) {
  require_scalar(config, d_A, "d_A");
  if (message.empty()) throw Error(Errc::InvalidArgument, "message must not be empty");
  if (config.mode() == Mode::Strict) {
    auto verdict = ec::validate_public_key(config.params(), U_B);
    if (!verdict.ok()) {
      throw Error(Errc::InvalidRecipientKey, "recipient key " + verdict.to_string());
    }
    if (!has_order_n(config, U_B)) {
      throw Error(Errc::InvalidRecipientKey, "recipient key is not of order n");
    }
  }
}

BigUint hedged_nonce(const SchemeConfig& config, const BigUint& d_A,
                     std::span<const std::uint8_t> message, Rng& rng) {
  const auto& params = config.params();
  Bytes key = encode_fixed(d_A, params.scalar_width());
  Bytes data = rng.bytes(32);
  data.insert(data.end(), message.begin(), message.end());
  // Expand to twice the scalar width so the reduction mod n is close to uniform.
  Bytes wide;
  for (std::uint8_t block = 0; wide.size() < 2 * params.scalar_width(); ++block) {
    Bytes input = data;
    input.push_back(block);
    Bytes chunk = config.hash().hmac(key, input);
    wide.insert(wide.end(), chunk.begin(), chunk.end());
  }
  return nt::mod(decode_be(wide), params.n);
}

void log_rejection(const std::string& reason) {
  if (std::getenv("HYHLAB_LOG_REJECTIONS") != nullptr) {
    std::clog << "unsigncrypt rejected: " << reason << '\n';
  }
}

}  // namespace

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::Paper ? "paper" : "strict";
}

Mode parse_mode(std::string_view name) {
  if (name == "paper") return Mode::Paper;
  if (name == "strict") return Mode::Strict;
  throw Error(Errc::InvalidArgument, "mode must be 'paper' or 'strict', got '" +
                                         std::string(name) + "'");
}

SchemeConfig::SchemeConfig(ec::CurveParams params, Mode mode, std::string_view hash_name)
    : params_(std::move(params)), mode_(mode), hash_(hash_name) {
  if (hash_.size() < kTagLength) {
    throw Error(Errc::UnsupportedHash, hash_.name() + " is shorter than the 32-byte tag");
  }
  if (params_.n < 2) throw Error(Errc::InvalidParams, "n must be at least 2");
}

SchemeConfig SchemeConfig::with_mode(Mode mode) const {
  SchemeConfig copy = *this;
  copy.mode_ = mode;
  return copy;
}

KeyPair gen(const SchemeConfig& config, std::uint64_t seed) {
  if (config.mode() == Mode::Strict) {
    auto report = paramcheck::validate_domain_params(config.params());
    if (!report.overall()) {
      std::string failed;
      for (auto check : report.failed()) {
        if (!failed.empty()) failed += ", ";
        failed += paramcheck::check_name(check);
      }
      throw Error(Errc::InvalidParams, "domain parameters fail: " + failed);
    }
  }
  Rng rng(seed);
  return keypair_from_private(config, rng.between(1, config.params().n - 1));
}

KeyPair keypair_from_private(const SchemeConfig& config, const BigUint& d) {
  require_scalar(config, d, "private key");
  return KeyPair{d, ec::scalar_mul(config.params(), d, config.params().G)};
}

BigUint hash_to_scalar(const SchemeConfig& config, std::span<const std::uint8_t> message) {
  return nt::mod(decode_be(config.hash().digest(message)), config.params().n);
}

Bytes keystream(const BigUint& session_x, std::size_t width, std::size_t length) {
  const Bytes block = encode_fixed(session_x, width);
  Bytes out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = block[i % width];
  return out;
}

Bytes compute_tag(const SchemeConfig& config, std::span<const std::uint8_t> message,
                  const BigUint& s) {
  Bytes input(message.begin(), message.end());
  Bytes encoded = encode_fixed(nt::mod(s, config.params().n), config.params().scalar_width());
  input.insert(input.end(), encoded.begin(), encoded.end());
  Bytes digest = config.hash().digest(input);
  digest.resize(kTagLength);
  return digest;
}

BigUint session_x(const ec::Point& k) { return k.is_infinity() ? BigUint(0) : k.x(); }

Bytes open_payload(const SchemeConfig& config, const BigUint& x,
                   std::span<const std::uint8_t> ciphertext) {
  return xor_bytes(ciphertext, keystream(x, config.params().field_width(), ciphertext.size()));
}

BigUint reduced_x(const SchemeConfig& config, const ec::Point& R) {
  return nt::mod(session_x(R), config.params().n);
}

SigncryptedText signcrypt(const SchemeConfig& config, const BigUint& d_A, const ec::Point& U_B,
                          std::span<const std::uint8_t> message, Rng& rng) {
  check_signcrypt_inputs(config, d_A, U_B, message);
  const BigUint& n = config.params().n;
  for (unsigned attempt = 0; attempt < kNonceAttempts; ++attempt) {
    BigUint r = config.mode() == Mode::Paper ? rng.between(1, n - 1)
                                             : hedged_nonce(config, d_A, message, rng);
    if (r == 0) continue;
    if (auto sct = signcrypt_once(config, d_A, U_B, message, r)) return *std::move(sct);
  }
  throw Error(Errc::RngFailure, "no usable nonce after " + std::to_string(kNonceAttempts) +
                                    " draws");
}

SigncryptedText signcrypt_with_nonce(const SchemeConfig& config, const BigUint& d_A,
                                     const ec::Point& U_B, std::span<const std::uint8_t> message,
                                     const BigUint& r) {
  if (config.mode() == Mode::Strict) {
    throw Error(Errc::NonceRefused, "strict mode derives its own nonces");
  }
  check_signcrypt_inputs(config, d_A, U_B, message);
  require_scalar(config, r, "r");
  auto sct = signcrypt_once(config, d_A, U_B, message, r);
  if (!sct) throw Error(Errc::InvalidArgument, "forced r is degenerate (x_R = 0, K = O or s = 0)");
  return *std::move(sct);
}

UnsigncryptTrace unsigncrypt_traced(const SchemeConfig& config, const BigUint& d_B,
                                    const ec::Point& U_A, const SigncryptedText& sct) {
  UnsigncryptTrace trace;
  const auto& params = config.params();
  auto reject = [&](std::string reason) {
    trace.rejection = std::move(reason);
    return trace;
  };
  if (sct.C.size() < kTagLength + 1) return reject("ciphertext shorter than 33 bytes");

  if (config.mode() == Mode::Strict) {
    if (auto v = ec::validate_public_key(params, sct.R); !v.ok()) {
      return reject("R " + v.to_string());
    }
    if (!has_order_n(config, sct.R)) return reject("R is not of order n");
    if (auto v = ec::validate_public_key(params, U_A); !v.ok()) {
      return reject("sender key " + v.to_string());
    }
    if (sct.s < 1 || sct.s >= params.n) return reject("s outside [1, n-1]");
  }

  ec::Point K = ec::scalar_mul(params, d_B, sct.R);
  if (config.mode() == Mode::Strict && K.is_infinity()) return reject("K = O");

  trace.session_x = session_x(K);
  trace.opened = open_payload(config, trace.session_x, sct.C);
  trace.decrypted = true;

  const std::span<const std::uint8_t> opened(trace.opened);
  auto message = opened.first(opened.size() - kTagLength);
  auto tag = opened.last(kTagLength);
  Bytes expected = compute_tag(config, message, sct.s);
  trace.tag_ok = std::equal(tag.begin(), tag.end(), expected.begin());
  trace.signature_ok = public_verify(config, U_A, message, sct.R, nt::mod(sct.s, params.n));

  if (!trace.tag_ok) return reject("tag mismatch");
  if (!trace.signature_ok) return reject("signature equation fails");
  trace.message = Bytes(message.begin(), message.end());
  return trace;
}

std::optional<Bytes> unsigncrypt(const SchemeConfig& config, const BigUint& d_B,
                                 const ec::Point& U_A, const SigncryptedText& sct) {
  auto trace = unsigncrypt_traced(config, d_B, U_A, sct);
  if (!trace.message) log_rejection(trace.rejection);
  return std::move(trace.message);
}

bool public_verify(const SchemeConfig& config, const ec::Point& U_A,
                   std::span<const std::uint8_t> message, const ec::Point& R, const BigUint& s) {
  const auto& params = config.params();
  ec::Point lhs = ec::scalar_mul(params, s, R);
  ec::Point rhs = ec::point_add(params,
                                ec::scalar_mul(params, hash_to_scalar(config, message), params.G),
                                ec::scalar_mul(params, reduced_x(config, R), U_A));
  return lhs == rhs;
}

}  // namespace hyhlab::hyh
