#pragma once

#include "ford/spheres.hpp"
#include "ford/window.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ford::gaussian {

Discriminant disc();
QuadInt gi(const Int& x, const Int& y);

// ---------------------------------------------------------------- ring side

using Pair = std::pair<QuadInt, QuadInt>;

/// Number of slow Euclidean steps needed to reach a zero entry.
std::size_t sea_rank(const QuadInt& alpha, const QuadInt& beta);
/// Replays the reversed steps from the penultimate state [r1, r2] on [r1, 0] and [0, r2].
std::pair<Pair, Pair> parents(const QuadInt& alpha, const QuadInt& beta);

std::vector<FordSphere> ring_spheres(const Int& norm_bound, const Window& window);

// ---------------------------------------------------------------- octahedra

using Triangle = std::array<FordSphere, 3>;
using Sextuple = std::array<FordSphere, 6>;

/// The two octahedral arrangements containing the mutually tangent triple: for the
/// normalization p2 = U + V they add S[U + rho(U+V)], S[U + rho V], S[U + V + rho V].
std::array<Sextuple, 2> octahedral_extensions(const Triangle& t);
/// The eight mutually tangent triples of an octahedral arrangement.
std::vector<Triangle> faces(const Sextuple& s);

struct OctaFamily {
  std::vector<FordSphere> spheres;  // sorted, planes excluded
  std::vector<Sextuple> octahedra;
};
/// Closure of S_{0,1}, S_{1,1}, S_{1,0} under at most depth rounds of octahedral extension.
OctaFamily geometric_spheres(int depth);
/// Extensions through spheres with |beta|^2 <= norm_bound and tangent point within margin of
/// the window; reports the spheres inside the window.
OctaFamily geometric_spheres_bounded(const Int& norm_bound, const Window& window, const Rat& margin = Rat(1));

// ---------------------------------------------------------------- Mobius octahedra

/// Cross ratio (z-q)(r-s) / ((z-s)(r-q)) evaluated with infinity handled projectively.
ExtPoint cross_ratio(const ExtPoint& z, const ExtPoint& q, const ExtPoint& r, const ExtPoint& s);

/// Points A, B, C (one triangle) and D, E, F (the other) with antipodes A-D, B-E, C-F.
struct MobiusOctahedron {
  std::array<ExtPoint, 6> points;
  bool finite() const;
};

enum class Branch { PlusI, MinusI };
/// Image of {0, 1, inf, 1+rho, rho, (1+rho)/2} under the map sending 0, 1, inf to p1, p2, p3.
MobiusOctahedron mobius_octahedron(const ExtPoint& p1, const ExtPoint& p2, const ExtPoint& p3,
                                   Branch branch = Branch::PlusI);
MobiusOctahedron canonical_octahedron(Branch branch = Branch::PlusI);
/// Applies a Mobius map to every vertex.
MobiusOctahedron transform(const MobiusMap& m, const MobiusOctahedron& o);

enum class CrossDenominator { BC_DF, BC_BF };
std::string denominator_name(CrossDenominator v);
/// (AE)^2 = (AB)(AC)(ED)(EF) / denominator, squared so that only squared distances appear.
bool cross_identity_holds(const MobiusOctahedron& o, CrossDenominator v);
/// The variant that holds on the octahedron; nullopt if neither or both hold.
std::optional<CrossDenominator> resolve_denominator(const MobiusOctahedron& o);
/// With (BC)(DF): the identity for all six tangent cross pairs AE, AF, BD, BF, CD, CE, each with
/// the sides opposite its two vertices as denominator. With (BC)(BF): the AE identity only.
bool eq9_check(const MobiusOctahedron& o, CrossDenominator v = CrossDenominator::BC_DF);
/// Mutual radii on both triangles and exact tangency for all 15 pairs.
ContactGraph octahedron_contact_graph(const MobiusOctahedron& o);

// ---------------------------------------------------------------- Descartes side

struct DescartesTriple {
  Int a, b, c;
  friend bool operator==(const DescartesTriple&, const DescartesTriple&) = default;
  friend bool operator<(const DescartesTriple& x, const DescartesTriple& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }
};
/// A triple together with a signed square root m of ab+ac+bc.
struct SignedTriple {
  Int a, b, c, m;
  friend bool operator==(const SignedTriple&, const SignedTriple&) = default;
  friend bool operator<(const SignedTriple& x, const SignedTriple& y) {
    return std::tie(x.a, x.b, x.c, x.m) < std::tie(y.a, y.b, y.c, y.m);
  }
};

bool is_descartes_triple(const DescartesTriple& t);
bool is_descartes_quad(const Quad4& q);
/// (a, b, c, a+b+c + sign*2*sqrt(ab+ac+bc)).
Quad4 descartes_convert(const DescartesTriple& t, int sign);
/// a = |beta|^2 + Im, b = |alpha|^2 + Im, c = -Im, m = Re where conj(alpha) beta = Re + i Im.
SignedTriple to_bary(const QuadInt& alpha, const QuadInt& beta);
Int pair_norm_descartes(const SignedTriple& t1, const SignedTriple& t2);

/// p + q sqrt(3) with rational p, q.
struct Q3 {
  Rat p, q;
  Q3(Rat p_ = 0, Rat q_ = 0) : p(std::move(p_)), q(std::move(q_)) {}
  friend Q3 operator+(const Q3& x, const Q3& y) { return {x.p + y.p, x.q + y.q}; }
  friend Q3 operator-(const Q3& x, const Q3& y) { return {x.p - y.p, x.q - y.q}; }
  friend Q3 operator*(const Q3& x, const Q3& y) { return {x.p * y.p + 3 * x.q * y.q, x.p * y.q + x.q * y.p}; }
  Q3 inverse() const;
  int sign() const;
  friend bool operator==(const Q3&, const Q3&) = default;
};

/// re + i im over Q(sqrt 3).
struct C3 {
  Q3 re, im;
  friend C3 operator+(const C3& x, const C3& y) { return {x.re + y.re, x.im + y.im}; }
  friend C3 operator-(const C3& x, const C3& y) { return {x.re - y.re, x.im - y.im}; }
  friend C3 operator*(const C3& x, const C3& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  Q3 norm() const { return re * re + im * im; }
  C3 inverse() const;
  bool is_zero() const { return re == Q3() && im == Q3(); }
  friend bool operator==(const C3&, const C3&) = default;
};

/// M(z) = iz / ((1-z) w) applied to <a + m/sqrt3, b + m/sqrt3, c + m/sqrt3>, computed exactly.
/// Returns nullopt when the weight is not positive; throws if the image leaves Q(i).
std::optional<NormalSphere> m_image(const SignedTriple& t);
/// The inverse image M^{-1}(S_{alpha,beta}) as an exact point and radius over Q(sqrt 3).
struct ExactSphere3 {
  C3 tangent;
  Q3 radius;  // height for a plane
  bool plane = false;
};
ExactSphere3 m_inverse_image(const FordSphere& s);
ExactSphere3 bary_sphere3(const SignedTriple& t);

/// Signed triples with weight a+b+c+sqrt(3) m > 0 whose M-images are spheres with
/// |beta|^2 <= norm_bound tangent in the window, searched over the given coordinate box.
std::vector<NormalSphere> bary_images(const Int& norm_bound, const Window& window, const Int& lo, const Int& hi);

struct Cor510Witness {
  std::pair<Int, Int> squares;         // a+b = x^2 + y^2
  std::array<Int, 4> eisenstein;       // a+b+c = N(g) + N(h), w-coordinates of g and h
};
std::optional<Cor510Witness> cor510_witness(const Quad4& q);
bool cor510_check(const Quad4& q);

/// Circle in the plane by exact center and positive curvature.
struct Circle {
  QuadRat center;
  Rat curvature;
};
/// The normal sphere at the tangency point of two externally tangent circles, with curvature
/// equal to the sum of the circle curvatures.
NormalSphere sphere_over_tangency(const Circle& c1, const Circle& c2, const QuadRat& point);

}  // namespace ford::gaussian
