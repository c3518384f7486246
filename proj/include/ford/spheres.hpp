#pragma once

#include "ford/quadint.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ford {

class Window;

/// S_{alpha,beta}: the sphere tangent to the plane at alpha/beta with radius 1/(2|beta|^2).
/// beta = 0 is the horizontal plane at height 1. Stored in canonical form: beta is moved
/// into the canonical sector by a unit, and the plane always has alpha = 1.
class FordSphere {
 public:
  FordSphere(QuadInt alpha, QuadInt beta);
  static FordSphere plane(Discriminant d);

  Discriminant disc() const { return alpha_.disc(); }
  const QuadInt& alpha() const { return alpha_; }
  const QuadInt& beta() const { return beta_; }
  bool is_plane() const { return beta_.is_zero(); }
  QuadRat tangent() const;
  Rat radius() const;
  /// 2|beta|^2, the reciprocal of the radius.
  Int curvature() const { return 2 * beta_.norm(); }
  std::string str() const;

  friend bool operator==(const FordSphere& p, const FordSphere& q) {
    return p.alpha_ == q.alpha_ && p.beta_ == q.beta_;
  }
  friend bool operator<(const FordSphere& p, const FordSphere& q) {
    if (p.disc().value() != q.disc().value()) return p.disc().value() < q.disc().value();
    if (!(p.beta_ == q.beta_)) return p.beta_ < q.beta_;
    return p.alpha_ < q.alpha_;
  }

 private:
  QuadInt alpha_;
  QuadInt beta_;
};

/// A sphere above the plane, tangent to it at an exact point, or a horizontal plane.
class NormalSphere {
 public:
  static NormalSphere finite(QuadRat tangent, Rat radius);
  static NormalSphere plane(Discriminant d, Rat height);

  Discriminant disc() const { return tangent_.disc(); }
  bool is_plane() const { return plane_; }
  const QuadRat& tangent() const;
  const Rat& radius() const;
  const Rat& height() const;
  std::string str() const;

  friend bool operator==(const NormalSphere& p, const NormalSphere& q) {
    return p.plane_ == q.plane_ && p.tangent_ == q.tangent_ && p.size_ == q.size_;
  }
  friend bool operator<(const NormalSphere& p, const NormalSphere& q);

 private:
  NormalSphere(QuadRat tangent, Rat size, bool plane) : tangent_(std::move(tangent)), size_(std::move(size)), plane_(plane) {}
  QuadRat tangent_;
  Rat size_;
  bool plane_;
};

NormalSphere to_normal(const FordSphere& s);

/// |alpha delta - beta gamma|^2 = 1.
bool tangent(const FordSphere& p, const FordSphere& q);
/// |z - w|^2 = 4 r s; a sphere touches a plane of height h when 2r = h.
bool tangent(const NormalSphere& p, const NormalSphere& q);
bool interiors_meet(const NormalSphere& p, const NormalSphere& q);
/// |alpha delta - beta gamma|^2, the integer that is 1 on tangent pairs.
Int pair_norm(const FordSphere& p, const FordSphere& q);

/// coeff * sqrt(radicand) with radicand squarefree.
struct SurdRadius {
  Rat coeff;
  Int radicand;

  static SurdRadius sqrt_of(const Rat& square);
  Rat square() const { return coeff * coeff * Rat(radicand); }
  double value() const;
  std::string str() const;
  friend bool operator==(const SurdRadius&, const SurdRadius&) = default;
};

/// |z - w|^2 = 4 r s with surd radii.
bool surd_tangent(const Rat& distance_sq, const SurdRadius& r, const SurdRadius& s);

/// Radii of the three mutually tangent spheres sitting on three distinct points.
std::array<SurdRadius, 3> mutual_radii(const QuadRat& p1, const QuadRat& p2, const QuadRat& p3);

/// A point of the extended plane; nullopt is the point at infinity.
using ExtPoint = std::optional<QuadRat>;

class MobiusMap {
 public:
  MobiusMap(QuadInt a, QuadInt b, QuadInt c, QuadInt d);

  const QuadInt& a() const { return a_; }
  const QuadInt& b() const { return b_; }
  const QuadInt& c() const { return c_; }
  const QuadInt& d() const { return d_; }
  QuadInt det() const { return a_ * d_ - b_ * c_; }
  bool unimodular() const { return det().norm() == 1; }

  /// S_{a alpha + b beta, c alpha + d beta}; requires a unimodular matrix.
  FordSphere apply(const FordSphere& s) const;
  ExtPoint apply(const ExtPoint& z) const;
  MobiusMap compose(const MobiusMap& inner) const;

 private:
  QuadInt a_, b_, c_, d_;
};

using Quad4 = std::array<Int, 4>;

/// (sum u)(sum v) - u.v
Int q_form(const Quad4& u, const Quad4& v);
bool on_quadric(const Quad4& u);
std::string quad_string(const Quad4& u);

/// <a,b,c> over the frame 0, 1, 1+w (D=3, where 1+w = sigma).
NormalSphere bary_to_sphere(const Int& a, const Int& b, const Int& c);
NormalSphere sphere_from_quad(const Quad4& u);
/// Exact tangency of <u> and <v> from |n'(b + c sigma) - n(b' + c' sigma)|^2 = n n', n = a+b+c.
bool bary_spheres_tangent(const Quad4& u, const Quad4& v);

/// The two spheres tangent to three mutually tangent Ford spheres (D=3).
std::pair<FordSphere, FordSphere> completions(const FordSphere& s1, const FordSphere& s2, const FordSphere& s3);

/// Floating-point sphere used by the approximate rendering helper.
struct ApproxSphere {
  std::complex<double> tangent;
  double radius;  // height for planes
  bool plane = false;
};
/// Approximate completions of three mutually tangent spheres with arbitrary tangent points.
std::pair<ApproxSphere, ApproxSphere> approximate_completions(const ApproxSphere& s1, const ApproxSphere& s2,
                                                              const ApproxSphere& s3);
ApproxSphere approximate(const NormalSphere& s);

using CoprimeTest = bool (*)(const QuadInt&, const QuadInt&);
/// Canonical Ford spheres with 1 <= |beta|^2 <= norm_bound and tangent point in the window.
std::vector<FordSphere> enumerate_ring(Discriminant d, const Int& norm_bound, const Window& window,
                                       CoprimeTest is_coprime);

struct ContactGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const;
  bool has_edge(std::size_t i, std::size_t j) const;
  /// 6 vertices, 12 edges, every vertex of degree 4.
  bool is_octahedron() const;
};
ContactGraph contact_graph(const std::vector<NormalSphere>& spheres);
ContactGraph contact_graph(const std::vector<FordSphere>& spheres);

}  // namespace ford
