#pragma once

#include <string>
#include <vector>

#include "ctrz/rational.hpp"

namespace ctrz {

/// Dense integer polynomial, coefficient i multiplies x^i. No trailing zeros.
using IntPoly = std::vector<BigInt>;

inline constexpr unsigned kDefaultConductorCap = 1000;

unsigned euler_phi(unsigned n);

/// Φ_e, obtained by dividing x^e - 1 by Φ_d for every proper divisor d of e.
/// Throws InputError if e is 0 or above `cap`.
IntPoly cyclotomic_polynomial(unsigned e, unsigned cap = kDefaultConductorCap);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Quotient of `num` by a monic `den`; throws InconsistencyError if the
/// division leaves a remainder.
IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den);

/// e.g. "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1"
std::string to_string(const IntPoly& p);

}  // namespace ctrz
