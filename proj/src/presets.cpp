#include "hyhlab/presets.hpp"

namespace hyhlab::presets {
namespace {

ec::CurveParams from_hex(const char* q, const char* a, const char* b, const char* gx,
                         const char* gy, const char* n, const char* h) {
  return ec::CurveParams::make(biguint_from_hex(q), biguint_from_hex(a), biguint_from_hex(b),
                               ec::Point(biguint_from_hex(gx), biguint_from_hex(gy)),
                               biguint_from_hex(n), biguint_from_hex(h));
}

}  // namespace

ec::CurveParams toy20() {
  return from_hex("ffc07", "5d5b5", "49589", "92621", "ed734", "3ff8b", "4");
}

ec::CurveParams secp160r1() {
  return from_hex("ffffffffffffffffffffffffffffffff7fffffff",
                  "ffffffffffffffffffffffffffffffff7ffffffc",
                  "1c97befc54bd7a8b65acf89f81d4d4adc565fa45",
                  "4a96b5688ef573284664698968c38bb913cbfc82",
                  "23a628553168947d59dcc912042351377ac5fb32",
                  "100000000000000000001f4c8f927aed3ca752257", "1");
}

ec::CurveParams f23() { return from_hex("17", "1", "1", "5", "4", "7", "4"); }

}  // namespace hyhlab::presets
