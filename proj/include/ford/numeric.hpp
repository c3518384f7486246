#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace ford {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int abs(const Int& a);
Rat abs(const Rat& a);
int sign(const Int& a);
int sign(const Rat& a);

// Floor division with a positive or negative divisor.
Int floor_div(const Int& a, const Int& b);
Int floor(const Rat& r);
Int ceil(const Rat& r);

// Integer square root; throws std::domain_error for negative input.
Int isqrt(const Int& n);
bool is_square(const Int& n);

// n = f*f*k with k squarefree; n must be positive.
std::pair<Int, Int> squarefree_split(const Int& n);

Rat exact_rational(double x);

Int num(const Rat& r);
Int den(const Rat& r);

std::int64_t to_i64(const Int& a);
std::string to_string(const Int& a);
std::string to_string(const Rat& r);

}  // namespace ford
