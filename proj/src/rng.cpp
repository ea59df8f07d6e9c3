#include "hyhlab/rng.hpp"

#include "hyhlab/error.hpp"

namespace hyhlab {

Bytes Rng::bytes(std::size_t count) {
  Bytes out(count);
  std::size_t i = 0;
  while (i < count) {
    std::uint64_t word = engine_();
    for (int k = 0; k < 8 && i < count; ++k, ++i) {
      out[i] = static_cast<std::uint8_t>(word >> (8 * k));
    }
  }
  return out;
}

BigUint Rng::below(const BigUint& bound) {
  if (bound <= 0) throw Error(Errc::InvalidArgument, "Rng::below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t width = (bits + 7) / 8;
  const unsigned excess = static_cast<unsigned>(width * 8 - bits);
  // Rejection sampling on the minimal bit width.
  for (;;) {
    Bytes raw = bytes(width);
    raw[0] &= static_cast<std::uint8_t>(0xff >> excess);
    BigUint v = decode_be(raw);
    if (v < bound) return v;
  }
}

BigUint Rng::between(const BigUint& lo, const BigUint& hi) {
  if (hi < lo) throw Error(Errc::InvalidArgument, "Rng::between with hi < lo");
  return lo + below(hi - lo + 1);
}

}  // namespace hyhlab
