#include "hyhlab/bigint.hpp"

#include <cctype>

#include "hyhlab/error.hpp"

namespace hyhlab {

std::string to_hex(const BigUint& v) { return v.get_str(16); }

BigUint biguint_from_hex(std::string_view hex) {
  if (hex.empty()) throw Error(Errc::ParseError, "empty hex integer");
  for (char c : hex) {
    if (!std::isxdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "non-hex character in '" + std::string(hex) + "'");
    }
  }
  return BigUint(std::string(hex), 16);
}

std::string bytes_to_hex(std::span<const std::uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes bytes_from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::ParseError, "odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::ParseError, "non-hex character in byte string");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

std::size_t byte_length(const BigUint& v) {
  if (v == 0) return 1;
  return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
}

Bytes encode_fixed(const BigUint& v, std::size_t width) {
  if (v < 0 || (v != 0 && byte_length(v) > width)) {
    throw Error(Errc::InvalidArgument, "value does not fit in " + std::to_string(width) + " bytes");
  }
  Bytes out(width, 0);
  if (v == 0) return out;
  std::size_t count = 0;
  Bytes tmp(byte_length(v));
  mpz_export(tmp.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(count),
            out.end() - static_cast<std::ptrdiff_t>(count));
  return out;
}

BigUint decode_be(std::span<const std::uint8_t> data) {
  BigUint v;
  if (!data.empty()) mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

Bytes xor_bytes(std::span<const std::uint8_t> lhs, std::span<const std::uint8_t> rhs) {
  if (lhs.size() != rhs.size()) throw Error(Errc::InvalidArgument, "xor of unequal lengths");
  Bytes out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] ^ rhs[i];
  return out;
}

}  // namespace hyhlab
