#include "ford/gaussian.hpp"
#include "ford/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ford::gaussian {

Discriminant disc() { return Discriminant(1); }

QuadInt gi(const Int& x, const Int& y) { return QuadInt(disc(), x, y); }

// ---------------------------------------------------------------- ring side

std::size_t sea_rank(const QuadInt& alpha, const QuadInt& beta) { return slow_euclid(alpha, beta).steps.size(); }

std::pair<Pair, Pair> parents(const QuadInt& alpha, const QuadInt& beta) {
  require_same(alpha.disc(), disc());
  SeaResult r = slow_euclid(alpha, beta);
  if (!is_unit(r.gcd)) throw std::invalid_argument("parents: entries are not coprime");
  if (r.steps.empty()) throw std::invalid_argument("parents: rank 0 pair " + alpha.str() + ", " + beta.str());
  QuadInt r1 = r.first, r2 = r.second;
  const SeaStep& last = r.steps.back();
  if (last.first_changed)
    r1 = r1 + last.quotient * r2;
  else
    r2 = r2 + last.quotient * r1;
  QuadInt zero(disc());
  Pair p{r1, zero}, q{zero, r2};
  for (std::size_t i = r.steps.size() - 1; i-- > 0;) {
    const SeaStep& s = r.steps[i];
    for (Pair* v : {&p, &q}) {
      if (s.first_changed)
        v->first = v->first + s.quotient * v->second;
      else
        v->second = v->second + s.quotient * v->first;
    }
  }
  return {p, q};
}

std::vector<FordSphere> ring_spheres(const Int& norm_bound, const Window& window) {
  return enumerate_ring(disc(), norm_bound, window, coprime_by_sea);
}

// ---------------------------------------------------------------- octahedra

namespace {

struct Vec {
  QuadInt a, b;
};

Vec vec(const FordSphere& s) { return {s.alpha(), s.beta()}; }
Vec operator+(const Vec& x, const Vec& y) { return {x.a + y.a, x.b + y.b}; }
Vec operator*(const QuadInt& k, const Vec& x) { return {k * x.a, k * x.b}; }
QuadInt det(const Vec& x, const Vec& y) { return x.a * y.b - x.b * y.a; }
FordSphere sphere(const Vec& x) { return FordSphere(x.a, x.b); }

}  // namespace

std::array<Sextuple, 2> octahedral_extensions(const Triangle& t) {
  for (const auto& s : t) require_same(s.disc(), disc());
  if (!tangent(t[0], t[1]) || !tangent(t[0], t[2]) || !tangent(t[1], t[2]))
    throw std::invalid_argument("octahedral_extensions: spheres are not mutually tangent");
  Vec u = vec(t[0]), p = vec(t[1]), v = vec(t[2]);
  QuadInt inv = det(u, v).conj();
  Vec uu = (det(p, v) * inv) * u;
  Vec vv = (det(u, p) * inv) * v;
  Vec mid = uu + vv;
  std::array<Sextuple, 2> out = {Sextuple{t[0], t[1], t[2], t[0], t[0], t[0]},
                                 Sextuple{t[0], t[1], t[2], t[0], t[0], t[0]}};
  const QuadInt rhos[2] = {gi(0, 1), gi(0, -1)};
  for (int k = 0; k < 2; ++k) {
    const QuadInt& rho = rhos[k];
    out[k][3] = sphere(mid + rho * vv);
    out[k][4] = sphere(uu + rho * vv);
    out[k][5] = sphere(uu + rho * mid);
  }
  return out;
}

std::vector<Triangle> faces(const Sextuple& s) {
  std::vector<Triangle> out;
  for (int mask = 0; mask < 8; ++mask) {
    Triangle t = {s[(mask & 1) ? 3 : 0], s[(mask & 2) ? 4 : 1], s[(mask & 4) ? 5 : 2]};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

namespace {

Triangle roots() {
  Triangle t = {FordSphere(gi(0, 0), gi(1, 0)), FordSphere(gi(1, 0), gi(1, 0)), FordSphere::plane(disc())};
  return t;
}

template <class Admit>
OctaFamily close_octahedra(int depth, Admit admit) {
  OctaFamily fam;
  std::set<FordSphere> spheres;
  std::set<Triangle> seen;
  Triangle root = roots();
  for (const auto& s : root) spheres.insert(s);
  std::sort(root.begin(), root.end());
  std::vector<Triangle> frontier = {root};
  seen.insert(root);
  for (int round = 0; depth < 0 || round < depth; ++round) {
    if (frontier.empty()) break;
    std::vector<Triangle> next;
    for (const auto& tri : frontier) {
      for (const auto& sext : octahedral_extensions(tri)) {
        fam.octahedra.push_back(sext);
        for (const auto& s : sext) spheres.insert(s);
        for (const auto& f : faces(sext)) {
          if (seen.count(f)) continue;
          if (!admit(f[0]) || !admit(f[1]) || !admit(f[2])) continue;
          seen.insert(f);
          next.push_back(f);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& s : spheres)
    if (!s.is_plane()) fam.spheres.push_back(s);
  return fam;
}

}  // namespace

OctaFamily geometric_spheres(int depth) {
  if (depth < 0) throw std::invalid_argument("geometric_spheres: negative depth");
  return close_octahedra(depth, [](const FordSphere&) { return true; });
}

OctaFamily geometric_spheres_bounded(const Int& norm_bound, const Window& window, const Rat& margin) {
  Window grown = window.expanded(margin);
  auto admit = [&](const FordSphere& s) {
    if (s.is_plane()) return true;
    return s.beta().norm() <= norm_bound && grown.contains(s.tangent());
  };
  OctaFamily fam = close_octahedra(-1, admit);
  std::vector<FordSphere> kept;
  for (const auto& s : fam.spheres)
    if (s.beta().norm() <= norm_bound && window.contains(s.tangent())) kept.push_back(s);
  fam.spheres = std::move(kept);
  return fam;
}

// ---------------------------------------------------------------- Mobius octahedra

namespace {

// homogeneous coordinates (z : w); infinity is (1 : 0)
struct Hom {
  QuadRat z, w;
};

Hom hom(const ExtPoint& p) {
  Discriminant d = disc();
  if (!p) return {QuadRat(QuadInt(d, 1, 0)), QuadRat(d)};
  return {*p, QuadRat(QuadInt(d, 1, 0))};
}

ExtPoint dehom(const Hom& h) {
  if (h.w.is_zero()) {
    if (h.z.is_zero()) throw std::invalid_argument("degenerate homogeneous point");
    return std::nullopt;
  }
  return h.z / h.w;
}

QuadRat hdet(const Hom& p, const Hom& q) { return p.z * q.w - p.w * q.z; }

void require_disc(const ExtPoint& p) {
  if (p) require_same(p->disc(), disc());
}

QuadRat qr(const Int& x, const Int& y, const Int& den = 1) { return QuadRat(gi(x, y), den); }

}  // namespace

ExtPoint cross_ratio(const ExtPoint& z, const ExtPoint& q, const ExtPoint& r, const ExtPoint& s) {
  for (const auto* p : {&z, &q, &r, &s}) require_disc(*p);
  Hom hz = hom(z), hq = hom(q), hr = hom(r), hs = hom(s);
  if (hdet(hq, hr).is_zero() || hdet(hq, hs).is_zero() || hdet(hr, hs).is_zero())
    throw std::invalid_argument("cross_ratio: q, r, s must be distinct");
  return dehom({hdet(hz, hq) * hdet(hr, hs), hdet(hz, hs) * hdet(hr, hq)});
}

bool MobiusOctahedron::finite() const {
  return std::all_of(points.begin(), points.end(), [](const ExtPoint& p) { return p.has_value(); });
}

MobiusOctahedron mobius_octahedron(const ExtPoint& p1, const ExtPoint& p2, const ExtPoint& p3, Branch branch) {
  for (const auto* p : {&p1, &p2, &p3}) require_disc(*p);
  Hom h1 = hom(p1), h2 = hom(p2), h3 = hom(p3);
  QuadRat dd = hdet(h3, h1);
  if (dd.is_zero() || hdet(h1, h2).is_zero() || hdet(h2, h3).is_zero())
    throw std::invalid_argument("mobius_octahedron: points must be distinct");
  // columns a*h3 (image of infinity) and b*h1 (image of 0) with a*h3 + b*h1 = h2
  QuadRat a = hdet(h2, h1) / dd;
  QuadRat b = hdet(h3, h2) / dd;
  auto apply = [&](const Hom& x) { return dehom({a * h3.z * x.z + b * h1.z * x.w, a * h3.w * x.z + b * h1.w * x.w}); };
  MobiusOctahedron base = canonical_octahedron(branch);
  MobiusOctahedron out;
  for (std::size_t k = 0; k < 6; ++k) out.points[k] = apply(hom(base.points[k]));
  return out;
}

MobiusOctahedron canonical_octahedron(Branch branch) {
  Int s = branch == Branch::PlusI ? 1 : -1;
  MobiusOctahedron o;
  o.points = {qr(0, 0), qr(1, 0), std::nullopt, qr(1, s), qr(0, s), qr(1, s, 2)};
  return o;
}

MobiusOctahedron transform(const MobiusMap& m, const MobiusOctahedron& o) {
  require_same(m.a().disc(), disc());
  MobiusOctahedron out;
  for (std::size_t k = 0; k < 6; ++k) out.points[k] = m.apply(o.points[k]);
  return out;
}

std::string denominator_name(CrossDenominator v) { return v == CrossDenominator::BC_DF ? "(BC)(DF)" : "(BC)(BF)"; }

namespace {

enum Vertex { A, B, C, D, E, F };

Rat sqd(const MobiusOctahedron& o, int i, int j) { return (*o.points[i] - *o.points[j]).norm(); }

void require_finite(const MobiusOctahedron& o) {
  if (!o.finite()) throw std::invalid_argument("eq9: all six points must be finite");
}

// (XY)^4 = (X X1)^2 (X X2)^2 (Y Y1)^2 (Y Y2)^2 / ((den1)^2 (den2)^2) in squared distances
bool cross_identity(const MobiusOctahedron& o, int x, int y, std::pair<int, int> den1, std::pair<int, int> den2) {
  auto mates = [](int v) {
    int base = v < 3 ? 0 : 3;
    std::array<int, 2> m{};
    int k = 0;
    for (int w = base; w < base + 3; ++w)
      if (w != v) m[k++] = w;
    return m;
  };
  auto mx = mates(x), my = mates(y);
  Rat lhs = sqd(o, x, y);
  lhs *= lhs;
  Rat top = sqd(o, x, mx[0]) * sqd(o, x, mx[1]) * sqd(o, y, my[0]) * sqd(o, y, my[1]);
  Rat bottom = sqd(o, den1.first, den1.second) * sqd(o, den2.first, den2.second);
  if (bottom == 0) return false;
  return lhs == top / bottom;
}

}  // namespace

bool cross_identity_holds(const MobiusOctahedron& o, CrossDenominator v) {
  require_finite(o);
  if (v == CrossDenominator::BC_DF) return cross_identity(o, A, E, {B, C}, {D, F});
  return cross_identity(o, A, E, {B, C}, {B, F});
}

std::optional<CrossDenominator> resolve_denominator(const MobiusOctahedron& o) {
  bool df = cross_identity_holds(o, CrossDenominator::BC_DF);
  bool bf = cross_identity_holds(o, CrossDenominator::BC_BF);
  if (df == bf) return std::nullopt;
  return df ? CrossDenominator::BC_DF : CrossDenominator::BC_BF;
}

bool eq9_check(const MobiusOctahedron& o, CrossDenominator v) {
  require_finite(o);
  if (v == CrossDenominator::BC_BF) return cross_identity_holds(o, v);
  // each tangent cross pair: the denominators are the sides opposite each vertex in its triangle
  const std::array<std::pair<int, int>, 6> pairs = {{{A, E}, {A, F}, {B, D}, {B, F}, {C, D}, {C, E}}};
  auto opposite = [](int v) -> std::pair<int, int> {
    int base = v < 3 ? 0 : 3;
    int i = v - base;
    return {base + (i + 1) % 3, base + (i + 2) % 3};
  };
  for (auto [x, y] : pairs)
    if (!cross_identity(o, x, y, opposite(x), opposite(y))) return false;
  return true;
}

ContactGraph octahedron_contact_graph(const MobiusOctahedron& o) {
  require_finite(o);
  std::array<SurdRadius, 3> r1 = mutual_radii(*o.points[A], *o.points[B], *o.points[C]);
  std::array<SurdRadius, 3> r2 = mutual_radii(*o.points[D], *o.points[E], *o.points[F]);
  std::array<SurdRadius, 6> r = {r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]};
  ContactGraph g{6, {}};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (surd_tangent(sqd(o, i, j), r[i], r[j])) g.edges.emplace_back(i, j);
  return g;
}

// ---------------------------------------------------------------- Descartes side

bool is_descartes_triple(const DescartesTriple& t) {
  if (gcd(gcd(t.a, t.b), t.c) != 1) return false;
  return is_square(t.a * t.b + t.a * t.c + t.b * t.c);
}

bool is_descartes_quad(const Quad4& q) {
  Int s = q[0] + q[1] + q[2] + q[3];
  return s * s == 2 * (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
}

Quad4 descartes_convert(const DescartesTriple& t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("descartes_convert: sign must be +1 or -1");
  Int s = t.a * t.b + t.a * t.c + t.b * t.c;
  if (!is_square(s)) throw std::invalid_argument("descartes_convert: ab+ac+bc = " + s.str() + " is not a square");
  return {t.a, t.b, t.c, t.a + t.b + t.c + 2 * sign * isqrt(s)};
}

SignedTriple to_bary(const QuadInt& alpha, const QuadInt& beta) {
  require_same(alpha.disc(), disc());
  require_same(beta.disc(), disc());
  if (!coprime(alpha, beta)) throw std::invalid_argument("to_bary: entries are not coprime");
  HermitianParts h = hermitian(alpha, beta);
  return {beta.norm() + h.Y, alpha.norm() + h.Y, -h.Y, h.X};
}

Int pair_norm_descartes(const SignedTriple& t1, const SignedTriple& t2) {
  for (const auto* t : {&t1, &t2})
    if (t->m * t->m != t->a * t->b + t->a * t->c + t->b * t->c)
      throw std::invalid_argument("pair_norm_descartes: m^2 differs from ab+ac+bc");
  return t1.a * t2.b + t1.a * t2.c + t1.b * t2.a + t1.b * t2.c + t1.c * t2.a + t1.c * t2.b - 2 * t1.m * t2.m;
}

Q3 Q3::inverse() const {
  Rat n = p * p - 3 * q * q;
  if (n == 0) throw std::domain_error("Q3: inverse of zero");
  return {p / n, -q / n};
}

int Q3::sign() const {
  int sp = ford::sign(p), sq = ford::sign(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 with 3 q^2
  Rat diff = p * p - 3 * q * q;
  return diff > 0 ? sp : sq;
}

C3 C3::inverse() const {
  Q3 n = norm().inverse();
  return {re * n, Q3() - im * n};
}

namespace {

const C3 kOne{Q3(1), Q3()};
const C3 kI{Q3(), Q3(1)};
const C3 kOmega{Q3(Rat(-1, 2)), Q3(0, Rat(1, 2))};
const C3 kOnePlusOmega{Q3(Rat(1, 2)), Q3(0, Rat(1, 2))};

C3 real(const Q3& x) { return {x, Q3()}; }

C3 from_quadrat(const QuadRat& z) { return {Q3(z.u()), Q3(z.v())}; }

}  // namespace

ExactSphere3 bary_sphere3(const SignedTriple& t) {
  Q3 xi(0, Rat(t.m, 3));
  Q3 a = Q3(Rat(t.a)) + xi, b = Q3(Rat(t.b)) + xi, c = Q3(Rat(t.c)) + xi;
  Q3 w = a + b + c;
  if (w.sign() <= 0) throw std::invalid_argument("barycentric sphere needs a positive weight");
  Q3 winv = w.inverse();
  C3 z = (real(b) + real(c) * kOnePlusOmega) * real(winv);
  return {z, winv * Q3(Rat(1, 2)), false};
}

std::optional<NormalSphere> m_image(const SignedTriple& t) {
  Q3 w = Q3(Rat(t.a + t.b + t.c), Rat(t.m));
  if (w.sign() <= 0) return std::nullopt;
  ExactSphere3 s = bary_sphere3(t);
  C3 one_minus = kOne - s.tangent;
  auto rational = [](const Q3& x) {
    if (x.q != 0) throw std::logic_error("M-image left Q(i)");
    return x.p;
  };
  if (one_minus.is_zero()) return NormalSphere::plane(disc(), rational((s.radius + s.radius).inverse()));
  C3 image = kI * s.tangent * (one_minus * kOmega).inverse();
  Q3 radius = s.radius * one_minus.norm().inverse();
  return NormalSphere::finite(QuadRat(disc(), rational(image.re), rational(image.im)), rational(radius));
}

ExactSphere3 m_inverse_image(const FordSphere& s) {
  require_same(s.disc(), disc());
  // M^{-1}(z) = w z / (w z + i)
  if (s.is_plane()) return {kOne, Q3(Rat(1, 2)), false};
  C3 z = from_quadrat(s.tangent());
  Q3 r(s.radius());
  C3 den = kOmega * z + kI;
  if (den.is_zero()) return {C3{}, (r + r).inverse(), true};
  return {kOmega * z * den.inverse(), r * den.norm().inverse(), false};
}

std::vector<NormalSphere> bary_images(const Int& norm_bound, const Window& window, const Int& lo, const Int& hi) {
  std::vector<NormalSphere> out;
  if (norm_bound < 1) return out;
  const std::int64_t l = to_i64(lo), h = to_i64(hi);
  const double rmin = 1.0 / (2.0 * norm_bound.convert_to<double>());
  const double u0 = window.min_u().convert_to<double>(), u1 = window.max_u().convert_to<double>();
  const double v0 = window.min_v().convert_to<double>(), v1 = window.max_v().convert_to<double>();
  const double eps = 1e-7;
  const double s3 = std::sqrt(3.0);
  const std::complex<double> one_plus_omega(0.5, s3 / 2), omega(-0.5, s3 / 2), i(0.0, 1.0);
  std::set<NormalSphere> found;
  for (std::int64_t a = l; a <= h; ++a) {
    for (std::int64_t b = l; b <= h; ++b) {
      for (std::int64_t c = l; c <= h; ++c) {
        std::int64_t s = a * b + a * c + b * c;
        if (s < 0) continue;
        auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(s))));
        if (root * root != s) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        for (std::int64_t sign : {1, -1}) {
          if (sign < 0 && root == 0) break;
          std::int64_t m = sign * root;
          double shift = static_cast<double>(m) / s3;
          double aa = a + shift, bb = b + shift, cc = c + shift;
          double w = aa + bb + cc;
          if (w <= -eps) continue;
          if (w >= eps) {
            std::complex<double> z0 = (bb + cc * one_plus_omega) / w;
            std::complex<double> one_minus = 1.0 - z0;
            if (std::norm(one_minus) < 1e-18) continue;
            std::complex<double> img = i * z0 / (one_minus * omega);
            double r = (1.0 / (2.0 * w)) / std::norm(one_minus);
            if (r < rmin * (1 - 1e-9)) continue;
            if (img.real() < u0 - eps || img.real() > u1 + eps || img.imag() < v0 - eps || img.imag() > v1 + eps)
              continue;
          }
          std::optional<NormalSphere> ns = m_image({a, b, c, m});
          if (!ns || ns->is_plane()) continue;
          if (!window.contains(ns->tangent())) continue;
          if (2 * ns->radius() * Rat(norm_bound) < 1) continue;
          found.insert(*ns);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::optional<Cor510Witness> cor510_witness(const Quad4& q) {
  Int s2 = q[0] + q[1];
  Int s3 = s2 + q[2];
  if (s2 < 0 || s3 < 0) return std::nullopt;
  Cor510Witness w;
  bool found = false;
  for (Int x = 0; x * x <= s2; ++x) {
    Int rest = s2 - x * x;
    if (is_square(rest)) {
      w.squares = {x, isqrt(rest)};
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;
  Int ymax = isqrt(4 * s3 / 3) + 1;
  for (Int y = 0; y <= ymax; ++y) {
    for (Int x = -ymax; x <= ymax; ++x) {
      Int n = eisenstein::omega_norm(x, y);
      if (n > s3) continue;
      if (auto other = eisenstein::eisenstein_norm_witness(s3 - n)) {
        // m^2 + mn + n^2 is the w-norm of m - n w
        w.eisenstein = {x, y, other->first, -other->second};
        return w;
      }
    }
  }
  return std::nullopt;
}

bool cor510_check(const Quad4& q) { return cor510_witness(q).has_value(); }

NormalSphere sphere_over_tangency(const Circle& c1, const Circle& c2, const QuadRat& point) {
  require_same(c1.center.disc(), c2.center.disc());
  require_same(c1.center.disc(), point.disc());
  if (c1.curvature <= 0 || c2.curvature <= 0)
    throw std::invalid_argument("sphere_over_tangency: curvatures must be positive");
  Rat r1 = 1 / c1.curvature, r2 = 1 / c2.curvature;
  if ((c1.center - c2.center).norm() != (r1 + r2) * (r1 + r2))
    throw std::invalid_argument("sphere_over_tangency: circles are not externally tangent");
  Rat t = r1 / (r1 + r2);
  QuadRat expected = c1.center + (c2.center - c1.center) * QuadRat(c1.center.disc(), t, Rat(0));
  if (!(expected == point)) throw std::invalid_argument("sphere_over_tangency: point is not the tangency point");
  return NormalSphere::finite(point, 1 / (c1.curvature + c2.curvature));
}

}  // namespace ford::gaussian
