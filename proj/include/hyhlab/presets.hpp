#pragma once

#include "hyhlab/curve.hpp"

namespace hyhlab::presets {

/// q = 1047559 (just under 2^20), #E = 4n with n = 262027 prime. Passes every
/// domain-parameter check; the default curve for self-staged attacks.
ec::CurveParams toy20();

/// SEC 2 secp160r1.
ec::CurveParams secp160r1();

/// y^2 = x^3 + x + 1 over F_23 (28 points), G = (5, 4) of order 7, h = 4.
ec::CurveParams f23();

}  // namespace hyhlab::presets
