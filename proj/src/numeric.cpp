#include "ford/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ford {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
int sign(const Rat& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int floor(const Rat& r) { return floor_div(num(r), den(r)); }

Int ceil(const Rat& r) { return -floor_div(-num(r), den(r)); }

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
  Int f = 1;
  Int k = 1;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2 == 1) k *= p;
  }
  k *= rest;
  return {f, k};
}

Rat exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite value");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer
  auto m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Int numer = m;
  Int denom = 1;
  if (exp >= 0) {
    numer <<= exp;
  } else {
    denom <<= -exp;
  }
  return Rat(numer, denom);
}

Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

std::int64_t to_i64(const Int& a) {
  if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("to_i64: value out of range");
  return a.convert_to<std::int64_t>();
}

std::string to_string(const Int& a) { return a.str(); }

std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace ford
