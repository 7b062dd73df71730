#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace conewright {

// Exact arithmetic carriers. Every intermediate value in the library is an
// arbitrary-precision rational; integrality of final answers is asserted at
// the point where an integer is extracted, never assumed along the way.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool is_integer(const Rat& q);

// Extracts an integral rational as int64; throws InternalError when the value
// has a nontrivial denominator or does not fit.
long long to_int64(const Rat& q);

// Generalized binomial coefficient C(n, k) for integer n (possibly negative)
// and k >= 0, computed exactly.
Int binomial(long long n, unsigned k);

// Exact rational square root: engaged iff q is a perfect square (q >= 0 and
// both numerator and denominator of the canonical form are squares).
std::optional<Rat> exact_sqrt(const Rat& q);

std::string rat_to_string(const Rat& q);

}  // namespace conewright
