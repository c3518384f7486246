#include "ford/general.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ford::general {

namespace {

// sign of p + q sqrt(n) for n > 0
int surd_sign(const Int& p, const Int& q, const Int& n) {
  int sp = sign(p), sq = sign(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  Int lhs = p * p, rhs = q * q * n;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}


}  // namespace

std::string bary_string(const SigmaBary& s) {
  std::ostringstream os;
  os << "(" << s.a << "," << s.b << "," << s.c << "," << s.m << ")";
  return os.str();
}

double xi(Discriminant d) {
  double root = std::sqrt(static_cast<double>(d.value()));
  if (d.class_a()) return (std::sqrt(3.0) - root) / std::sqrt(12.0);
  return root / std::sqrt(3.0);
}

SigmaBary mu_apply(const FordSphere& s) {
  Discriminant d = s.disc();
  HermitianParts h = hermitian(s.alpha(), s.beta());
  Int na = s.alpha().norm(), nb = s.beta().norm();
  if (d.class_a()) return {d.value(), nb - h.X, na - h.X, h.X + h.Y, -h.Y};
  return {d.value(), nb - h.X, na - h.X, h.X, h.Y};
}

std::pair<Int, QuadRat> preimage_data(const SigmaBary& b) {
  Discriminant d(b.D);
  if (d.class_a()) {
    Int n = b.a + b.c + b.m;
    if (n <= 0) throw std::invalid_argument("preimage_data: no finite preimage for " + bary_string(b));
    return {n, QuadRat(QuadInt(d, b.c, b.m), n)};
  }
  Int n = b.a + b.c;
  if (n <= 0) throw std::invalid_argument("preimage_data: no finite preimage for " + bary_string(b));
  return {n, QuadRat(QuadInt(d, b.c, -b.m), n)};
}

FordSphere mu_inverse(const SigmaBary& b) {
  Discriminant d(b.D);
  if (!eq11_verify(b)) throw std::invalid_argument(bary_string(b) + " does not satisfy the class equation");
  Int n = b.a + b.c;
  if (d.class_a()) n += b.m;
  if (n == 0) {
    if (b.a == 0 && b.b == 1 && b.c == 0 && b.m == 0) return FordSphere::plane(d);
    throw std::invalid_argument(bary_string(b) + " is not the image of a Ford sphere");
  }
  auto [norm, z] = preimage_data(b);
  for (const QuadInt& beta : elements_up_to_norm(d, norm)) {
    if (beta.norm() != norm) continue;
    QuadRat a = z * QuadRat(beta);
    if (!a.is_integral()) continue;
    if (!coprime(a.num(), beta)) continue;
    FordSphere s(a.num(), beta);
    if (mu_apply(s) == b) return s;
  }
  throw std::invalid_argument(bary_string(b) + " is not the image of a Ford sphere");
}

bool eq11_verify(const SigmaBary& b) {
  Discriminant d(b.D);
  Int sym = b.a * b.b + b.a * b.c + b.b * b.c;
  if (d.class_a()) return 4 * (sym + (b.a + b.b + b.c) * b.m) == (d.value() - 3) * b.m * b.m;
  return sym == d.value() * b.m * b.m;
}

int weight_sign(const SigmaBary& b) {
  Discriminant d(b.D);
  Int s = b.a + b.b + b.c;
  Int three_d = 3 * d.value();
  // class A: 2 * weight = 2s + 3m - m sqrt(3D); class B: weight = s + m sqrt(3D)
  if (d.class_a()) return surd_sign(2 * s + 3 * b.m, -b.m, three_d);
  return surd_sign(s, b.m, three_d);
}

Int pair_norm_general(const SigmaBary& p, const SigmaBary& q) {
  if (p.D != q.D) throw std::invalid_argument("pair_norm_general: mismatched D");
  Discriminant d(p.D);
  Int cross = p.a * q.b + p.a * q.c + p.b * q.a + p.b * q.c + p.c * q.a + p.c * q.b;
  if (d.class_a()) {
    return cross + p.m * (q.a + q.b + q.c) + q.m * (p.a + p.b + p.c) - ((d.value() - 3) / 2) * p.m * q.m;
  }
  return cross - 2 * d.value() * p.m * q.m;
}

ApproxSphere bary_float(const SigmaBary& b) {
  double x = xi(Discriminant(b.D));
  double m = b.m.convert_to<double>();
  double a = b.a.convert_to<double>() + m * x;
  double bb = b.b.convert_to<double>() + m * x;
  double c = b.c.convert_to<double>() + m * x;
  double w = a + bb + c;
  // zero weight is the image of the unit sphere at mu^{-1}(inf), the plane at height 1
  if (weight_sign(b) == 0) return {{0.0, 0.0}, 1.0, true};
  const std::complex<double> one_plus_omega(0.5, std::sqrt(3.0) / 2.0);
  return {(bb + c * one_plus_omega) / w, 1.0 / (2.0 * w), false};
}

ApproxSphere mu_float(const FordSphere& s) {
  const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
  std::complex<double> a = omega * s.alpha().to_complex();
  std::complex<double> b = a + s.beta().to_complex();
  if (std::norm(b) < 1e-24) return {{0.0, 0.0}, 1.0, true};
  return {a / b, 1.0 / (2.0 * std::norm(b)), false};
}

ExtRat secant_add(const ExtRat& x, const ExtRat& y, Discriminant d) {
  if (!x) return y;
  if (!y) return x;
  Rat num, den;
  if (d.class_a()) {
    num = *x * *y - Rat(d.sigma_norm());
    den = *x + *y - 1;
  } else {
    num = *x * *y - Rat(d.value());
    den = *x + *y;
  }
  if (den == 0) return std::nullopt;
  return num / den;
}

ExtRat secant_inverse(const ExtRat& w, Discriminant d) {
  if (!w) return std::nullopt;
  if (d.class_a()) return 1 - *w;
  return -*w;
}

namespace {

using Wide = __int128;

Wide wide_abs(Wide a) { return a < 0 ? -a : a; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  const Wide lim = std::numeric_limits<std::int64_t>::max();
  if (a <= lim && b <= lim) return std::gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide wide_lcm(Wide a, Wide b) { return a / wide_gcd(a, b) * b; }

// sign of p + q sqrt(n) for n > 0
int wide_surd_sign(Wide p, Wide q, Wide n) {
  int sp = (p > 0) - (p < 0), sq = (q > 0) - (q < 0);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sp == 0 ? sq : sp;
  Wide lhs = p * p, rhs = q * q * n;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

struct Frac {
  Wide n, d;
};

Frac reduce(Wide n, Wide d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

struct Collector {
  Discriminant d;
  std::optional<Wide> max_norm;
  std::set<std::array<std::int64_t, 4>> out;

  bool accept(Wide a, Wide b, Wide c, Wide m) const {
    // |beta|^2 of the preimage
    Wide n = a + c + (d.class_a() ? m : 0);
    if (max_norm && (n < 1 || n > *max_norm)) return false;
    const int D = d.value();
    Wide pairs = a * b + a * c + b * c, s = a + b + c;
    int w;
    if (d.class_a()) {
      if (4 * (pairs + s * m) != Wide(D - 3) * m * m) return false;
      w = wide_surd_sign(2 * s + 3 * m, -m, 3 * D);
    } else {
      if (pairs != Wide(D) * m * m) return false;
      w = wide_surd_sign(s, m, 3 * D);
    }
    if (w < 0 || (w == 0 && n < 1)) return false;
    return wide_gcd(wide_gcd(a, b), wide_gcd(c, m)) == 1;
  }

  void insert(Wide a, Wide b, Wide c, Wide m) {
    const Wide lim = std::numeric_limits<std::int64_t>::max();
    for (Wide v : {a, b, c, m})
      if (wide_abs(v) > lim) throw std::overflow_error("secant_enumerate: entries exceed 64 bits");
    out.insert({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c),
                static_cast<std::int64_t>(m)});
  }

  void offer(Wide p, Wide q, Wide r, Wide m) {
    const std::array<std::array<Wide, 3>, 3> placements = {{{p, q, r}, {p, r, q}, {r, p, q}}};
    for (const auto& pl : placements) {
      Wide roots[2] = {m, 0};
      int count = 1;
      if (!d.class_a()) {
        roots[count++] = -m;
      } else if (d.value() != 3) {
        // the roots of ((D-3)/4) m^2 - (a+b+c) m - (ab+ac+bc) sum to 4(a+b+c)/(D-3)
        Wide total = 4 * (pl[0] + pl[1] + pl[2]);
        if (total % (d.value() - 3) == 0) roots[count++] = total / (d.value() - 3) - m;
      }
      for (int i = 0; i < count; ++i) {
        for (Wide sgn : {Wide(1), Wide(-1)}) {
          Wide a = sgn * pl[0], b = sgn * pl[1], c = sgn * pl[2], mm = sgn * roots[i];
          if (accept(a, b, c, mm)) insert(a, b, c, mm);
        }
      }
    }
  }
};

std::vector<SigmaBary> enumerate(Discriminant d, const Int& height, std::optional<Wide> max_norm) {
  Collector col{d, max_norm, {}};
  const std::int64_t h = to_i64(height);
  if (h > 100000) throw std::invalid_argument("secant_enumerate: height too large");
  const Wide k = d.sigma_norm(), D = d.value();
  for (Wide m0 = 1; m0 <= h; ++m0) {
    for (Wide a0 = -h; a0 <= h; ++a0) {
      for (Wide c0 = -h; c0 <= h; ++c0) {
        if (wide_gcd(wide_gcd(a0, c0), m0) != 1) continue;
        // x = -a0/m0, y = -c0/m0 and z the inverse of x + y in the secant group
        Frac z;
        if (d.class_a()) {
          Wide den = m0 * (a0 + c0 + m0);
          if (den == 0) continue;
          z = reduce(den + a0 * c0 - k * m0 * m0, den);
        } else {
          Wide den = m0 * (a0 + c0);
          if (den == 0) continue;
          z = reduce(a0 * c0 - D * m0 * m0, den);
        }
        // xy + z(x + y)
        Frac pairs = reduce(a0 * c0 * z.d - (a0 + c0) * z.n * m0, m0 * m0 * z.d);
        Wide dx = m0 / wide_gcd(a0, m0), dy = m0 / wide_gcd(c0, m0);
        Wide m = wide_lcm(wide_lcm(dx, dy), wide_lcm(z.d, pairs.d));
        col.offer(m / m0 * a0, m / m0 * c0, -(m / z.d) * z.n, m);
      }
    }
  }
  // m = 0: ab + ac + bc = 0 in both classes
  for (Wide a = -h; a <= h; ++a) {
    for (Wide c = -h; c <= h; ++c) {
      if (a + c == 0 || (a * c) % (a + c) != 0) continue;
      col.offer(a, -(a * c) / (a + c), c, 0);
    }
  }
  std::vector<SigmaBary> out;
  out.reserve(col.out.size());
  for (const auto& v : col.out) out.push_back({d.value(), Int(v[0]), Int(v[1]), Int(v[2]), Int(v[3])});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SigmaBary> secant_enumerate(Discriminant d, const Int& height) { return enumerate(d, height, std::nullopt); }

std::vector<SigmaBary> bary_family(Discriminant d, const Int& norm_bound, const Window& window) {
  std::vector<SigmaBary> out;
  if (norm_bound < 1) return out;
  // A, C and M are n times affine functions of the window coordinates
  Rat reach = 1;
  Rat umax = std::max(abs(window.min_u()), abs(window.max_u()));
  Rat vmax = std::max(abs(window.min_v()), abs(window.max_v()));
  reach += umax + vmax;
  Int height = ceil(reach * Rat(norm_bound));
  for (const auto& b : enumerate(d, height, Wide(to_i64(norm_bound)))) {
    Int n = b.a + b.c;
    if (d.class_a()) n += b.m;
    if (n < 1 || n > norm_bound) continue;
    auto [norm, z] = preimage_data(b);
    if (window.contains(z)) out.push_back(b);
  }
  return out;
}

std::vector<FordSphere> ring_spheres(Discriminant d, const Int& norm_bound, const Window& window) {
  return enumerate_ring(d, norm_bound, window, coprime);
}

std::pair<QuadInt, QuadInt> reduce_pair(const QuadInt& alpha, const QuadInt& beta) {
  require_same(alpha.disc(), beta.disc());
  Discriminant d = alpha.disc();
  QuadInt a = alpha, b = beta;
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("reduce_pair: both entries zero");
  while (!coprime(a, b)) {
    HermitianParts h = hermitian(a, b);
    Int g = gcd(gcd(a.norm(), b.norm()), gcd(h.X, h.Y));
    bool divided = false;
    for (const QuadInt& c : elements_up_to_norm(d, g)) {
      if (c.norm() < 2 || g % c.norm() != 0) continue;
      auto qa = divide_exact(a, c), qb = divide_exact(b, c);
      if (qa && qb) {
        a = *qa;
        b = *qb;
        divided = true;
        break;
      }
    }
    if (!divided) throw std::logic_error("reduce_pair: no common divisor found");
  }
  return {a, b};
}

FordSphere probe(Discriminant d, std::complex<double> z, const Rat& r) {
  if (r <= 0) throw std::invalid_argument("probe: radius must be positive");
  // the interiors meet when |z - alpha/beta|^2 < 2r/|beta|^2, i.e. |beta z - alpha|^2 < 2r
  Approximation ap = approximate_sq(d, z, 2 * r);
  auto [a, b] = reduce_pair(ap.alpha, ap.beta);
  return FordSphere(a, b);
}

}  // namespace ford::general
