#include "ford/spheres.hpp"
#include "ford/window.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ford {

// ---------------------------------------------------------------- FordSphere

FordSphere::FordSphere(QuadInt alpha, QuadInt beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  require_same(alpha_.disc(), beta_.disc());
  if (beta_.is_zero()) {
    if (!is_unit(alpha_)) throw std::invalid_argument("the plane S_{1,0} needs a unit alpha, got " + alpha_.str());
    alpha_ = QuadInt(alpha_.disc(), 1, 0);
    return;
  }
  if (!coprime(alpha_, beta_))
    throw std::invalid_argument("Ford sphere needs coprime alpha, beta, got " + alpha_.str() + ", " + beta_.str());
  QuadInt u = canonicalizing_unit(beta_);
  alpha_ = u * alpha_;
  beta_ = u * beta_;
}

FordSphere FordSphere::plane(Discriminant d) { return FordSphere(QuadInt(d, 1, 0), QuadInt(d)); }

QuadRat FordSphere::tangent() const {
  if (is_plane()) throw std::logic_error("the plane has no tangent point");
  return QuadRat(alpha_) / QuadRat(beta_);
}

Rat FordSphere::radius() const {
  if (is_plane()) throw std::logic_error("the plane has no radius");
  return Rat(1, 2 * beta_.norm());
}

std::string FordSphere::str() const { return "S[" + alpha_.str() + "," + beta_.str() + "]"; }

// ---------------------------------------------------------------- NormalSphere

NormalSphere NormalSphere::finite(QuadRat tangent, Rat radius) {
  if (radius <= 0) throw std::invalid_argument("normal sphere radius must be positive");
  return NormalSphere(std::move(tangent), std::move(radius), false);
}

NormalSphere NormalSphere::plane(Discriminant d, Rat height) {
  if (height <= 0) throw std::invalid_argument("plane height must be positive");
  return NormalSphere(QuadRat(d), std::move(height), true);
}

const QuadRat& NormalSphere::tangent() const {
  if (plane_) throw std::logic_error("a plane has no tangent point");
  return tangent_;
}

const Rat& NormalSphere::radius() const {
  if (plane_) throw std::logic_error("a plane has no radius");
  return size_;
}

const Rat& NormalSphere::height() const {
  if (!plane_) throw std::logic_error("a finite sphere has no height");
  return size_;
}

std::string NormalSphere::str() const {
  if (plane_) return "plane(h=" + to_string(size_) + ")";
  return "S(" + tangent_.str() + ", r=" + to_string(size_) + ")";
}

bool operator<(const NormalSphere& p, const NormalSphere& q) {
  if (p.disc().value() != q.disc().value()) return p.disc().value() < q.disc().value();
  if (p.plane_ != q.plane_) return p.plane_;
  if (!(p.tangent_ == q.tangent_)) return p.tangent_ < q.tangent_;
  return p.size_ < q.size_;
}

NormalSphere to_normal(const FordSphere& s) {
  if (s.is_plane()) return NormalSphere::plane(s.disc(), Rat(1));
  return NormalSphere::finite(s.tangent(), s.radius());
}

Int pair_norm(const FordSphere& p, const FordSphere& q) {
  require_same(p.disc(), q.disc());
  return (p.alpha() * q.beta() - p.beta() * q.alpha()).norm();
}

bool tangent(const FordSphere& p, const FordSphere& q) { return pair_norm(p, q) == 1; }

bool tangent(const NormalSphere& p, const NormalSphere& q) {
  require_same(p.disc(), q.disc());
  if (p.is_plane() && q.is_plane()) return false;
  if (p.is_plane()) return 2 * q.radius() == p.height();
  if (q.is_plane()) return 2 * p.radius() == q.height();
  return (p.tangent() - q.tangent()).norm() == 4 * p.radius() * q.radius();
}

bool interiors_meet(const NormalSphere& p, const NormalSphere& q) {
  require_same(p.disc(), q.disc());
  if (p.is_plane() && q.is_plane()) return true;
  if (p.is_plane()) return 2 * q.radius() > p.height();
  if (q.is_plane()) return 2 * p.radius() > q.height();
  return (p.tangent() - q.tangent()).norm() < 4 * p.radius() * q.radius();
}

// ---------------------------------------------------------------- surd radii

SurdRadius SurdRadius::sqrt_of(const Rat& square) {
  if (square <= 0) throw std::domain_error("surd radius needs a positive square");
  // sqrt(p/q) = sqrt(p q) / q
  Int pq = num(square) * den(square);
  auto [f, k] = squarefree_split(pq);
  return {Rat(f, den(square)), k};
}

double SurdRadius::value() const { return coeff.convert_to<double>() * std::sqrt(radicand.convert_to<double>()); }

std::string SurdRadius::str() const {
  if (radicand == 1) return to_string(coeff);
  return to_string(coeff) + "*sqrt(" + radicand.str() + ")";
}

bool surd_tangent(const Rat& distance_sq, const SurdRadius& r, const SurdRadius& s) {
  // r*s is rational exactly when the squarefree radicands agree
  if (r.radicand != s.radicand) return false;
  return distance_sq == 4 * r.coeff * s.coeff * Rat(r.radicand);
}

std::array<SurdRadius, 3> mutual_radii(const QuadRat& p1, const QuadRat& p2, const QuadRat& p3) {
  Rat d12 = (p1 - p2).norm();
  Rat d13 = (p1 - p3).norm();
  Rat d23 = (p2 - p3).norm();
  if (d12 == 0 || d13 == 0 || d23 == 0) throw std::invalid_argument("mutual_radii: coincident points");
  return {SurdRadius::sqrt_of(d12 * d13 / (4 * d23)), SurdRadius::sqrt_of(d12 * d23 / (4 * d13)),
          SurdRadius::sqrt_of(d13 * d23 / (4 * d12))};
}

// ---------------------------------------------------------------- Mobius maps

MobiusMap::MobiusMap(QuadInt a, QuadInt b, QuadInt c, QuadInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  require_same(a_.disc(), b_.disc());
  require_same(a_.disc(), c_.disc());
  require_same(a_.disc(), d_.disc());
  if (det().is_zero()) throw std::invalid_argument("Mobius map with zero determinant");
}

FordSphere MobiusMap::apply(const FordSphere& s) const {
  if (!unimodular())
    throw std::invalid_argument("exact sphere action needs a unimodular determinant, got norm " + det().norm().str());
  return FordSphere(a_ * s.alpha() + b_ * s.beta(), c_ * s.alpha() + d_ * s.beta());
}

ExtPoint MobiusMap::apply(const ExtPoint& z) const {
  if (!z) {
    if (c_.is_zero()) return std::nullopt;
    return QuadRat(a_) / QuadRat(c_);
  }
  QuadRat denom = QuadRat(c_) * *z + QuadRat(d_);
  if (denom.is_zero()) return std::nullopt;
  return (QuadRat(a_) * *z + QuadRat(b_)) / denom;
}

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
  return MobiusMap(a_ * in.a_ + b_ * in.c_, a_ * in.b_ + b_ * in.d_, c_ * in.a_ + d_ * in.c_,
                   c_ * in.b_ + d_ * in.d_);
}

// ---------------------------------------------------------------- quadric

Int q_form(const Quad4& u, const Quad4& v) {
  Int su = u[0] + u[1] + u[2] + u[3];
  Int sv = v[0] + v[1] + v[2] + v[3];
  return su * sv - (u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]);
}

bool on_quadric(const Quad4& u) { return q_form(u, u) == 0; }

std::string quad_string(const Quad4& u) {
  std::ostringstream os;
  os << "(" << u[0] << "," << u[1] << "," << u[2] << "," << u[3] << ")";
  return os.str();
}

NormalSphere bary_to_sphere(const Int& a, const Int& b, const Int& c) {
  Int n = a + b + c;
  if (n <= 0) throw std::invalid_argument("barycentric sphere needs a+b+c > 0");
  Discriminant d(3);
  return NormalSphere::finite(QuadRat(QuadInt(d, b, c), n), Rat(1, 2 * n));
}

NormalSphere sphere_from_quad(const Quad4& u) {
  if (!on_quadric(u)) throw std::invalid_argument(quad_string(u) + " is not on the quadric (a+b+c+d)^2=a^2+b^2+c^2+d^2");
  return bary_to_sphere(u[0], u[1], u[2]);
}

bool bary_spheres_tangent(const Quad4& u, const Quad4& v) {
  Int n = u[0] + u[1] + u[2];
  Int m = v[0] + v[1] + v[2];
  if (n <= 0 || m <= 0) throw std::invalid_argument("barycentric sphere needs a+b+c > 0");
  Discriminant d(3);
  QuadInt diff(d, m * u[1] - n * v[1], m * u[2] - n * v[2]);
  return diff.norm() == n * m;
}

// ---------------------------------------------------------------- completions

namespace {

QuadInt det2(const FordSphere& p, const FordSphere& q) { return p.alpha() * q.beta() - p.beta() * q.alpha(); }

}  // namespace

std::pair<FordSphere, FordSphere> completions(const FordSphere& s1, const FordSphere& s2, const FordSphere& s3) {
  require_same(s1.disc(), s2.disc());
  require_same(s1.disc(), s3.disc());
  if (!tangent(s1, s2) || !tangent(s1, s3) || !tangent(s2, s3))
    throw std::invalid_argument("completions: spheres are not mutually tangent");
  Discriminant d = s1.disc();
  if (d.value() != 3)
    throw std::domain_error("exact completions are available for D=3 only; for D=1 use the octahedral extension");
  // s3 = lambda s1 + mu s2 as vectors (alpha, beta); rho = mu / lambda
  QuadInt inv = det2(s1, s2).conj();  // inverse of a unit
  QuadInt lambda = det2(s3, s2) * inv;
  QuadInt mu = det2(s1, s3) * inv;
  QuadInt rho = mu * lambda.conj();
  std::vector<FordSphere> out;
  for (const auto& u : units(d)) {
    if (!is_unit(u - rho)) continue;
    out.emplace_back(s1.alpha() + u * s2.alpha(), s1.beta() + u * s2.beta());
  }
  if (out.size() != 2) throw std::logic_error("completions: expected two admissible units");
  if (out[1] < out[0]) std::swap(out[0], out[1]);
  return {out[0], out[1]};
}

ApproxSphere approximate(const NormalSphere& s) {
  if (s.is_plane()) return {{0.0, 0.0}, s.height().convert_to<double>(), true};
  return {s.tangent().to_complex(), s.radius().convert_to<double>(), false};
}

std::pair<ApproxSphere, ApproxSphere> approximate_completions(const ApproxSphere& s1, const ApproxSphere& s2,
                                                              const ApproxSphere& s3) {
  std::array<ApproxSphere, 3> in = {s1, s2, s3};
  std::stable_partition(in.begin(), in.end(), [](const ApproxSphere& s) { return s.plane; });
  if (in[1].plane) throw std::invalid_argument("approximate_completions: at most one plane allowed");
  if (in[0].plane) {
    // spheres of radius h/2 whose tangent points lie at distance sqrt(2 h r_i) from z_i
    double h = in[0].radius;
    double r = h / 2.0;
    std::complex<double> z1 = in[1].tangent, z2 = in[2].tangent;
    double d1 = std::sqrt(2.0 * h * in[1].radius);
    double d2 = std::sqrt(2.0 * h * in[2].radius);
    double dist = std::abs(z2 - z1);
    if (dist == 0.0) throw std::invalid_argument("approximate_completions: coincident tangent points");
    double along = (d1 * d1 - d2 * d2 + dist * dist) / (2.0 * dist);
    double across = std::sqrt(std::max(0.0, d1 * d1 - along * along));
    std::complex<double> dir = (z2 - z1) / dist;
    std::complex<double> base = z1 + along * dir;
    std::complex<double> perp = dir * std::complex<double>(0.0, 1.0);
    return {{base + across * perp, r, false}, {base - across * perp, r, false}};
  }
  // |z - z_i|^2 = 4 r r_i: differences are linear in (x, y) for fixed r
  auto [z1, r1, p1] = in[0];
  auto [z2, r2, p2] = in[1];
  auto [z3, r3, p3] = in[2];
  double a11 = -2.0 * (z2.real() - z1.real()), a12 = -2.0 * (z2.imag() - z1.imag());
  double a21 = -2.0 * (z3.real() - z1.real()), a22 = -2.0 * (z3.imag() - z1.imag());
  double c1 = std::norm(z1) - std::norm(z2), c2 = std::norm(z1) - std::norm(z3);
  double k1 = 4.0 * (r2 - r1), k2 = 4.0 * (r3 - r1);
  double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-300) throw std::invalid_argument("approximate_completions: collinear tangent points");
  // (x, y) = (x0, y0) + r (xr, yr)
  double x0 = (c1 * a22 - a12 * c2) / det, y0 = (a11 * c2 - c1 * a21) / det;
  double xr = (k1 * a22 - a12 * k2) / det, yr = (a11 * k2 - k1 * a21) / det;
  double ex = x0 - z1.real(), ey = y0 - z1.imag();
  double qa = xr * xr + yr * yr;
  double qb = 2.0 * (xr * ex + yr * ey) - 4.0 * r1;
  double qc = ex * ex + ey * ey;
  if (qa < 1e-20) {
    // equal radii: one completion is the plane at height 2r
    double r = -qc / qb;
    return {{{0.0, 0.0}, 2.0 * r1, true}, {{x0 + r * xr, y0 + r * yr}, r, false}};
  }
  double disc = std::sqrt(std::max(0.0, qb * qb - 4.0 * qa * qc));
  double ra = (-qb + disc) / (2.0 * qa);
  double rb = (-qb - disc) / (2.0 * qa);
  return {{{x0 + ra * xr, y0 + ra * yr}, ra, false}, {{x0 + rb * xr, y0 + rb * yr}, rb, false}};
}

// ---------------------------------------------------------------- contact graphs

std::vector<std::size_t> ContactGraph::degrees() const {
  std::vector<std::size_t> deg(vertices, 0);
  for (auto [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

bool ContactGraph::has_edge(std::size_t i, std::size_t j) const {
  if (j < i) std::swap(i, j);
  return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
}

bool ContactGraph::is_octahedron() const {
  if (vertices != 6 || edges.size() != 12) return false;
  auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [](std::size_t k) { return k == 4; });
}

ContactGraph contact_graph(const std::vector<NormalSphere>& spheres) {
  ContactGraph g{spheres.size(), {}};
  for (std::size_t i = 0; i < spheres.size(); ++i)
    for (std::size_t j = i + 1; j < spheres.size(); ++j)
      if (tangent(spheres[i], spheres[j])) g.edges.emplace_back(i, j);
  return g;
}

ContactGraph contact_graph(const std::vector<FordSphere>& spheres) {
  ContactGraph g{spheres.size(), {}};
  for (std::size_t i = 0; i < spheres.size(); ++i)
    for (std::size_t j = i + 1; j < spheres.size(); ++j)
      if (tangent(spheres[i], spheres[j])) g.edges.emplace_back(i, j);
  return g;
}

}  // namespace ford

namespace ford {

std::vector<FordSphere> enumerate_ring(Discriminant d, const Int& norm_bound, const Window& window,
                                       CoprimeTest is_coprime) {
  std::vector<FordSphere> out;
  for (const QuadInt& beta : elements_up_to_norm(d, norm_bound)) {
    if (!in_canonical_sector(beta)) continue;
    // alpha = z beta is linear in z, so its coordinates are bounded by the window's vertex images
    Rat lo_x, hi_x, lo_y, hi_y;
    bool first = true;
    for (const auto& [u, v] : window.vertices()) {
      QuadRat img = QuadRat(d, u, v) * QuadRat(beta);
      if (first || img.u() < lo_x) lo_x = img.u();
      if (first || img.u() > hi_x) hi_x = img.u();
      if (first || img.v() < lo_y) lo_y = img.v();
      if (first || img.v() > hi_y) hi_y = img.v();
      first = false;
    }
    Int n = beta.norm();
    QuadInt bc = beta.conj();
    for (Int x = ceil(lo_x); x <= floor(hi_x); ++x) {
      for (Int y = ceil(lo_y); y <= floor(hi_y); ++y) {
        QuadInt alpha(d, x, y);
        QuadInt p = alpha * bc;
        if (!window.contains(Rat(p.x(), n), Rat(p.y(), n))) continue;
        if (!is_coprime(alpha, beta)) continue;
        out.emplace_back(alpha, beta);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ford
