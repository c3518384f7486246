#pragma once

#include "ford/numeric.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ford {

inline constexpr std::array<int, 9> kHeegner = {1, 2, 3, 7, 11, 19, 43, 67, 163};

/// One of the nine Heegner values. Class A (D = 3 mod 4) uses sigma = (1+sqrt(-D))/2,
/// class B uses sigma = sqrt(-D).
class Discriminant {
 public:
  explicit Discriminant(int d);

  int value() const { return d_; }
  bool class_a() const { return d_ % 4 == 3; }
  bool euclidean() const { return d_ == 1 || d_ == 2 || d_ == 3 || d_ == 7 || d_ == 11; }
  std::size_t unit_count() const { return d_ == 1 ? 4 : (d_ == 3 ? 6 : 2); }
  // sigma^2 = trace*sigma - constant
  int sigma_trace() const { return class_a() ? 1 : 0; }
  int sigma_norm() const { return class_a() ? (d_ + 1) / 4 : d_; }

  friend bool operator==(Discriminant a, Discriminant b) { return a.d_ == b.d_; }

 private:
  int d_;
};

bool is_heegner(int d);

class QuadInt {
 public:
  explicit QuadInt(Discriminant d, Int x = 0, Int y = 0) : d_(d), x_(std::move(x)), y_(std::move(y)) {}

  static QuadInt sigma(Discriminant d) { return QuadInt(d, 0, 1); }

  Discriminant disc() const { return d_; }
  const Int& x() const { return x_; }
  const Int& y() const { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  Int norm() const;
  Int trace() const;  // value + conj(value), an integer
  QuadInt conj() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  QuadInt operator-() const { return QuadInt(d_, -x_, -y_); }
  friend QuadInt operator+(const QuadInt& a, const QuadInt& b);
  friend QuadInt operator-(const QuadInt& a, const QuadInt& b);
  friend QuadInt operator*(const QuadInt& a, const QuadInt& b);
  friend QuadInt operator*(const Int& k, const QuadInt& a) { return QuadInt(a.d_, k * a.x_, k * a.y_); }
  friend bool operator==(const QuadInt& a, const QuadInt& b) {
    return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator<(const QuadInt& a, const QuadInt& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

 private:
  Discriminant d_;
  Int x_;
  Int y_;
};

void require_same(Discriminant a, Discriminant b);

std::vector<QuadInt> units(Discriminant d);
bool is_unit(const QuadInt& a);

// a / b when the quotient lies in the ring.
std::optional<QuadInt> divide_exact(const QuadInt& a, const QuadInt& b);
bool divides(const QuadInt& b, const QuadInt& a);

/// True iff a lies in the canonical sector: argument in [0, 2pi / #units).
bool in_canonical_sector(const QuadInt& a);
/// The unit u with u*a in the canonical sector (1 for zero).
QuadInt canonicalizing_unit(const QuadInt& a);
QuadInt canonical_associate(const QuadInt& a);

/// conj(a)*b = X + Y*sigma written as integer data: twoS = 2 Re, tOverRoot = Im scaled
/// by 2/sqrt(D) in class A and by 1/sqrt(D) in class B.
struct HermitianParts {
  Int X;
  Int Y;
  Int twoS;
  Int tOverRoot;
};
HermitianParts hermitian(const QuadInt& a, const QuadInt& b);

/// Element num / den of the field, always stored reduced with den > 0.
class QuadRat {
 public:
  explicit QuadRat(Discriminant d) : num_(d), den_(1) {}
  QuadRat(QuadInt num, Int den);
  QuadRat(Discriminant d, const Rat& u, const Rat& v);
  explicit QuadRat(const QuadInt& a) : num_(a), den_(1) {}

  Discriminant disc() const { return num_.disc(); }
  const QuadInt& num() const { return num_; }
  const Int& den() const { return den_; }
  Rat u() const { return Rat(num_.x(), den_); }
  Rat v() const { return Rat(num_.y(), den_); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  Rat norm() const;
  QuadRat conj() const { return QuadRat(num_.conj(), den_); }
  QuadRat inverse() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  QuadRat operator-() const { return QuadRat(-num_, den_); }
  friend QuadRat operator+(const QuadRat& a, const QuadRat& b);
  friend QuadRat operator-(const QuadRat& a, const QuadRat& b);
  friend QuadRat operator*(const QuadRat& a, const QuadRat& b);
  friend QuadRat operator/(const QuadRat& a, const QuadRat& b);
  friend bool operator==(const QuadRat& a, const QuadRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(const QuadRat& a, const QuadRat& b);

 private:
  QuadInt num_;
  Int den_;
};

/// Norm form x^2 + xy + k y^2 (class A) or x^2 + D y^2 (class B) on rational coordinates.
Rat norm_form(Discriminant d, const Rat& u, const Rat& v);

/// Slow Euclidean algorithm. Each step replaces the entry of larger norm e by e - q*o.
struct SeaStep {
  bool first_changed;
  QuadInt quotient;
};
struct SeaResult {
  QuadInt gcd;  // canonical associate
  QuadInt first;  // terminal pair, one entry zero
  QuadInt second;
  std::vector<SeaStep> steps;
};
SeaResult slow_euclid(const QuadInt& a, const QuadInt& b);

/// Coprimality via gcd(|a|^2, |b|^2, X, Y) where conj(a)b = X + Y sigma.
bool coprime(const QuadInt& a, const QuadInt& b);
/// Coprimality via the slow Euclidean algorithm (euclidean D only).
bool coprime_by_sea(const QuadInt& a, const QuadInt& b);

struct FloorFrac {
  QuadInt floor;
  Rat frac_u;
  Rat frac_v;
};
FloorFrac floor_frac(Discriminant d, const Rat& u, const Rat& v);

struct Approximation {
  QuadInt alpha;
  QuadInt beta;
  Rat residual_sq;  // |beta z - alpha|^2 for the rational target actually used
};
inline constexpr std::uint64_t kApproximationCap = std::uint64_t{1} << 22;
/// Finds alpha, beta with |beta z - alpha| < bound by pigeonholing fractional parts of j z.
Approximation approximate(const QuadRat& z, const Rat& bound, std::uint64_t cap = kApproximationCap);
Approximation approximate(Discriminant d, std::complex<double> z, const Rat& bound,
                          std::uint64_t cap = kApproximationCap);
/// The same search with the squared bound |beta z - alpha|^2 < bound_sq.
Approximation approximate_sq(Discriminant d, std::complex<double> z, const Rat& bound_sq,
                             std::uint64_t cap = kApproximationCap);
/// sigma coordinates of a complex number, exact to the double input.
std::pair<Rat, Rat> sigma_coords(Discriminant d, std::complex<double> z);

/// All elements with 1 <= norm <= bound.
std::vector<QuadInt> elements_up_to_norm(Discriminant d, const Int& bound);

}  // namespace ford
