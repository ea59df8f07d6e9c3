#include "hyhlab/digest.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include "hyhlab/error.hpp"

namespace hyhlab {
namespace {

struct Entry {
  std::string_view name;
  const EVP_MD* (*factory)();
};

constexpr Entry kTable[] = {
    {"SHA-256", EVP_sha256},     {"SHA-384", EVP_sha384},     {"SHA-512", EVP_sha512},
    {"SHA3-256", EVP_sha3_256},  {"SHA3-512", EVP_sha3_512},
};

const EVP_MD* md_of(const void* md) { return static_cast<const EVP_MD*>(md); }

}  // namespace

HashAlgorithm::HashAlgorithm(std::string_view name) : name_(name), md_(nullptr), size_(0) {
  for (const auto& entry : kTable) {
    if (entry.name == name) {
      md_ = entry.factory();
      size_ = static_cast<std::size_t>(EVP_MD_get_size(md_of(md_)));
      return;
    }
  }
  throw Error(Errc::UnsupportedHash, "unknown hash algorithm '" + std::string(name) + "'");
}

Bytes HashAlgorithm::digest(std::span<const std::uint8_t> data) const {
  Bytes out(size_);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, md_of(md_), nullptr) != 1) {
    throw Error(Errc::UnsupportedHash, "EVP_Digest failed for " + name_);
  }
  out.resize(len);
  return out;
}

Bytes HashAlgorithm::hmac(std::span<const std::uint8_t> key,
                          std::span<const std::uint8_t> data) const {
  Bytes out(EVP_MAX_MD_SIZE);
  unsigned int len = 0;
  static const std::uint8_t kEmpty = 0;
  const std::uint8_t* key_ptr = key.empty() ? &kEmpty : key.data();
  if (HMAC(md_of(md_), key_ptr, static_cast<int>(key.size()), data.data(), data.size(),
           out.data(), &len) == nullptr) {
    throw Error(Errc::UnsupportedHash, "HMAC failed for " + name_);
  }
  out.resize(len);
  return out;
}

std::vector<std::string> HashAlgorithm::supported() {
  std::vector<std::string> names;
  for (const auto& entry : kTable) names.emplace_back(entry.name);
  return names;
}

}  // namespace hyhlab
