#pragma once

#include "ford/spheres.hpp"
#include "ford/window.hpp"

#include <complex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ford::general {

/// <A + M xi, B + M xi, C + M xi> over the frame 0, 1, 1+w, with xi = (sqrt3 - sqrtD)/sqrt12 in
/// class A and sqrtD/sqrt3 in class B.
struct SigmaBary {
  int D = 1;
  Int a, b, c, m;
  friend bool operator==(const SigmaBary&, const SigmaBary&) = default;
  friend bool operator<(const SigmaBary& x, const SigmaBary& y) {
    return std::tie(x.D, x.a, x.b, x.c, x.m) < std::tie(y.D, y.a, y.b, y.c, y.m);
  }
};
std::string bary_string(const SigmaBary& s);

double xi(Discriminant d);

/// Image of S_{alpha,beta} under mu = (w 0; w 1), which sends 0, 1, inf to 0, 1+w, 1.
SigmaBary mu_apply(const FordSphere& s);
/// |beta|^2 and the tangent point alpha/beta of the preimage, read off the integer data.
std::pair<Int, QuadRat> preimage_data(const SigmaBary& b);
/// The Ford sphere whose mu-image is b.
FordSphere mu_inverse(const SigmaBary& b);

/// ab+ac+bc = D m^2 (class B) or ab+ac+bc+(a+b+c)m = ((D-3)/4) m^2 (class A).
bool eq11_verify(const SigmaBary& b);
/// Sign of the weight a+b+c+3 m xi, decided exactly.
int weight_sign(const SigmaBary& b);
Int pair_norm_general(const SigmaBary& p, const SigmaBary& q);

/// Floating-point sphere of the barycentric data, and mu applied in floating point.
ApproxSphere bary_float(const SigmaBary& b);
ApproxSphere mu_float(const FordSphere& s);

/// Rationals with infinity (nullopt).
using ExtRat = std::optional<Rat>;
/// (xy - (D+1)/4)/(x+y-1) in class A, (xy - D)/(x+y) in class B; infinity is the identity.
ExtRat secant_add(const ExtRat& x, const ExtRat& y, Discriminant d);
/// 1 - w in class A, -w in class B.
ExtRat secant_inverse(const ExtRat& w, Discriminant d);

/// Solutions of the class equation with gcd 1 and positive weight, plus the zero-weight (plane)
/// solutions whose preimage has positive |beta|^2: from x = -a/m, y = -c/m
/// with |a|, |c| <= height and 1 <= m <= height, z is the inverse of x+y, the scale is the least
/// positive integer clearing x, y, z and xy+xz+yz, and z is placed in each of the three slots.
/// The m = 0 solutions with |a|, |c| <= height are added, and every candidate is also tried with
/// the other root for m and with all signs reversed.
std::vector<SigmaBary> secant_enumerate(Discriminant d, const Int& height);
/// The members of secant_enumerate whose preimages have |beta|^2 <= norm_bound and tangent point
/// in the window, with a height large enough to reach all of them.
std::vector<SigmaBary> bary_family(Discriminant d, const Int& norm_bound, const Window& window);

/// Canonical coprime pairs by the gcd(|a|^2, |b|^2, X, Y) test.
std::vector<FordSphere> ring_spheres(Discriminant d, const Int& norm_bound, const Window& window);

/// Divides a nonzero pair by its greatest common divisor.
std::pair<QuadInt, QuadInt> reduce_pair(const QuadInt& alpha, const QuadInt& beta);
/// A Ford sphere whose interior meets the ball of radius r tangent to the plane at z.
FordSphere probe(Discriminant d, std::complex<double> z, const Rat& r);

}  // namespace ford::general
