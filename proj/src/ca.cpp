#include "hyhlab/ca.hpp"

#include <algorithm>

#include "hyhlab/error.hpp"
#include "hyhlab/numtheory.hpp"

namespace hyhlab::attacks {
namespace {

void append(Bytes& out, std::span<const std::uint8_t> data) {
  out.insert(out.end(), data.begin(), data.end());
}

void append_field(Bytes& out, std::string_view label, std::span<const std::uint8_t> value) {
  append(out, as_bytes(label));
  out.push_back(':');
  Bytes len = encode_fixed(value.size(), 4);
  append(out, len);
  append(out, value);
}

Bytes point_bytes(const hyh::SchemeConfig& config, const ec::Point& p) {
  if (p.is_infinity()) return Bytes{0};
  const std::size_t width = config.params().field_width();
  // Off-curve keys may carry out-of-range coordinates; widen rather than fail.
  const std::size_t w = std::max({width, byte_length(p.x()), byte_length(p.y())});
  Bytes out{4};
  append(out, encode_fixed(p.x(), w));
  append(out, encode_fixed(p.y(), w));
  return out;
}

BigUint challenge(const hyh::SchemeConfig& config, const ec::Point& commitment,
                  std::span<const std::uint8_t> message) {
  Bytes input = point_bytes(config, commitment);
  append(input, message);
  return nt::mod(decode_be(config.hash().digest(input)), config.params().n);
}

}  // namespace

Bytes certificate_body(const hyh::SchemeConfig& config, const Certificate& cert) {
  Bytes out;
  append_field(out, "serial", encode_fixed(cert.serial, 8));
  append_field(out, "subject", as_bytes(cert.subject));
  append_field(out, "key", point_bytes(config, cert.public_key));
  append_field(out, "not_after", encode_fixed(static_cast<std::uint64_t>(cert.not_after), 8));
  return out;
}

Bytes schnorr_sign(const hyh::SchemeConfig& config, const BigUint& d,
                   std::span<const std::uint8_t> message) {
  const auto& params = config.params();
  const std::size_t width = params.scalar_width();
  for (std::uint8_t counter = 0;; ++counter) {
    Bytes seed_input = message.empty() ? Bytes{} : Bytes(message.begin(), message.end());
    seed_input.push_back(counter);
    const BigUint k = nt::mod(decode_be(config.hash().hmac(encode_fixed(d, width), seed_input)),
                              params.n);
    if (k == 0) continue;
    const BigUint e = challenge(config, ec::scalar_mul(params, k, params.G), message);
    const BigUint s = nt::mod(k + e * d, params.n);
    if (e == 0 || s == 0) continue;
    Bytes sig = encode_fixed(e, width);
    append(sig, encode_fixed(s, width));
    return sig;
  }
}

bool schnorr_verify(const hyh::SchemeConfig& config, const ec::Point& U,
                    std::span<const std::uint8_t> message, std::span<const std::uint8_t> sig) {
  const auto& params = config.params();
  const std::size_t width = params.scalar_width();
  if (sig.size() != 2 * width) return false;
  const BigUint e = decode_be(sig.first(width));
  const BigUint s = decode_be(sig.last(width));
  if (e == 0 || s == 0 || e >= params.n || s >= params.n) return false;
  const ec::Point commitment =
      ec::point_add(params, ec::scalar_mul(params, s, params.G),
                    ec::negate(params, ec::scalar_mul(params, e, U)));
  if (commitment.is_infinity()) return false;
  return challenge(config, commitment, message) == e;
}

Bytes possession_message(const hyh::SchemeConfig& config, const std::string& identity,
                         const ec::Point& key) {
  Bytes out;
  append_field(out, "pop", as_bytes(identity));
  append_field(out, "key", point_bytes(config, key));
  return out;
}

Bytes prove_possession(const hyh::SchemeConfig& config, const BigUint& d,
                       const std::string& identity, const ec::Point& key) {
  return schnorr_sign(config, d, possession_message(config, identity, key));
}

bool CertVerdict::failed(CertCheck check) const {
  return std::find(failures.begin(), failures.end(), check) != failures.end();
}

std::string CertVerdict::to_string() const {
  if (ok()) return "ok";
  std::string out = "fail(";
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) out += ',';
    switch (failures[i]) {
      case CertCheck::Signature: out += "signature"; break;
      case CertCheck::Expired: out += "expired"; break;
      case CertCheck::Revoked: out += "revoked"; break;
    }
  }
  return out + ")";
}

CaRegistry::CaRegistry(hyh::SchemeConfig config, std::uint64_t seed)
    : config_(config.with_mode(hyh::Mode::Paper)),
      key_(hyh::gen(config_, seed)) {}

Certificate CaRegistry::issue(const std::string& identity, const ec::Point& public_key,
                              Timestamp not_after, bool check_possession,
                              const std::optional<Bytes>& possession_proof) {
  if (check_possession) {
    const auto verdict = ec::validate_public_key(config_.params(), public_key);
    if (!verdict.ok()) {
      throw Error(Errc::InvalidPublicKey, "key for '" + identity + "' " + verdict.to_string());
    }
    if (!ec::scalar_mul(config_.params(), config_.params().n, public_key).is_infinity()) {
      throw Error(Errc::InvalidPublicKey, "key for '" + identity + "' is not of order n");
    }
    if (!possession_proof ||
        !schnorr_verify(config_, public_key, possession_message(config_, identity, public_key),
                        *possession_proof)) {
      throw Error(Errc::PossessionProofInvalid,
                  "'" + identity + "' did not prove possession of the private key");
    }
  }
  Certificate cert;
  cert.serial = issued_.size() + 1;
  cert.subject = identity;
  cert.public_key = public_key;
  cert.not_after = not_after;
  cert.ca_signature = schnorr_sign(config_, key_.d, certificate_body(config_, cert));
  issued_.push_back(cert);
  return cert;
}

void CaRegistry::revoke(std::uint64_t serial) { revoked_.insert(serial); }

CertVerdict CaRegistry::validate(const Certificate& cert, Timestamp now) const {
  CertVerdict verdict;
  if (!schnorr_verify(config_, key_.U, certificate_body(config_, cert), cert.ca_signature)) {
    verdict.failures.push_back(CertCheck::Signature);
  }
  if (now > cert.not_after) verdict.failures.push_back(CertCheck::Expired);
  if (revoked_.contains(cert.serial)) verdict.failures.push_back(CertCheck::Revoked);
  return verdict;
}

std::optional<Certificate> CaRegistry::lookup(const std::string& identity) const {
  for (auto it = issued_.rbegin(); it != issued_.rend(); ++it) {
    if (it->subject == identity) return *it;
  }
  return std::nullopt;
}

Certificate ca_issue(CaRegistry& registry, const std::string& identity,
                     const ec::Point& public_key, Timestamp not_after, bool check_possession,
                     const std::optional<Bytes>& possession_proof) {
  return registry.issue(identity, public_key, not_after, check_possession, possession_proof);
}

CertVerdict cert_validate(const CaRegistry& registry, const Certificate& cert, Timestamp now) {
  return registry.validate(cert, now);
}

}  // namespace hyhlab::attacks
