#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyhlab/bigint.hpp"

namespace hyhlab {

/// Hash algorithm selected by its conventional name ("SHA-256", "SHA-384",
/// "SHA-512", "SHA3-256", "SHA3-512"). Backed by OpenSSL.
class HashAlgorithm {
 public:
  /// Throws UnsupportedHash for unknown names.
  explicit HashAlgorithm(std::string_view name);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] Bytes digest(std::span<const std::uint8_t> data) const;
  [[nodiscard]] Bytes hmac(std::span<const std::uint8_t> key,
                           std::span<const std::uint8_t> data) const;

  static std::vector<std::string> supported();

 private:
  std::string name_;
  const void* md_;  // const EVP_MD*
  std::size_t size_;
};

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace hyhlab
