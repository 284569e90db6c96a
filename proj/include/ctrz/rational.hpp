#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ctrz {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "n" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& n);

/// Inverse of to_string; also accepts non-reduced "p/q". Throws InputError.
BigRational parse_rational(std::string_view text);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// Numerator of q, or ValidationError naming `what` if q has a denominator.
BigInt require_integer(const BigRational& q, std::string_view what);

}  // namespace ctrz
