#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hyhlab {

/// Arbitrary-precision integer. Library code only ever stores non-negative
/// magnitudes in it; intermediate signed values stay local to a function.
using BigUint = mpz_class;

using Bytes = std::vector<std::uint8_t>;

/// Lowercase hex without prefix; zero is "0".
std::string to_hex(const BigUint& v);

/// Parses lowercase or uppercase hex without prefix. Throws ParseError on
/// empty input or any non-hex character.
BigUint biguint_from_hex(std::string_view hex);

std::string bytes_to_hex(std::span<const std::uint8_t> data);
Bytes bytes_from_hex(std::string_view hex);

/// Number of bytes needed to hold v (at least 1).
std::size_t byte_length(const BigUint& v);

/// Big-endian, left-padded to width bytes. Throws InvalidArgument if v does
/// not fit.
Bytes encode_fixed(const BigUint& v, std::size_t width);

BigUint decode_be(std::span<const std::uint8_t> data);

/// Element-wise XOR of two equal-length buffers.
Bytes xor_bytes(std::span<const std::uint8_t> lhs, std::span<const std::uint8_t> rhs);

}  // namespace hyhlab
