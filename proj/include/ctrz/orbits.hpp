#pragma once

#include <cstddef>

#include <gmpxx.h>

#include "ctrz/classes.hpp"

namespace ctrz {

enum class OrbitMethod { direct, burnside };

inline constexpr std::size_t kDefaultTupleCap = 10'000'000;

/// Number of orbits of G on ordered t-tuples of points.
///
/// `direct` unions every tuple with its images under the generators;
/// `burnside` averages fix(g)^t over the classes. The tuple cap applies to
/// `direct` only.
mpz_class orbit_count_tuples(const FiniteGroup& g, const ClassSet& cs, unsigned t,
                             OrbitMethod method, std::size_t tuple_cap = kDefaultTupleCap);

}  // namespace ctrz
