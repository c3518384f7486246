#include "ford/quadint.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ford {

bool is_heegner(int d) { return std::find(kHeegner.begin(), kHeegner.end(), d) != kHeegner.end(); }

Discriminant::Discriminant(int d) : d_(d) {
  if (!is_heegner(d)) throw std::invalid_argument("D=" + std::to_string(d) + " is not a Heegner number");
}

void require_same(Discriminant a, Discriminant b) {
  if (!(a == b))
    throw std::invalid_argument("discriminant mismatch: D=" + std::to_string(a.value()) +
                                " vs D=" + std::to_string(b.value()));
}

Int QuadInt::norm() const { return x_ * x_ + d_.sigma_trace() * x_ * y_ + d_.sigma_norm() * y_ * y_; }

Int QuadInt::trace() const { return 2 * x_ + d_.sigma_trace() * y_; }

QuadInt QuadInt::conj() const {
  if (d_.class_a()) return QuadInt(d_, x_ + y_, -y_);
  return QuadInt(d_, x_, -y_);
}

std::complex<double> QuadInt::to_complex() const {
  double root = std::sqrt(static_cast<double>(d_.value()));
  double x = x_.convert_to<double>();
  double y = y_.convert_to<double>();
  if (d_.class_a()) return {x + y / 2.0, y * root / 2.0};
  return {x, y * root};
}

std::string QuadInt::str() const {
  std::ostringstream os;
  os << "(" << x_ << "," << y_ << ")";
  return os.str();
}

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
  require_same(a.d_, b.d_);
  return QuadInt(a.d_, a.x_ + b.x_, a.y_ + b.y_);
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
  require_same(a.d_, b.d_);
  return QuadInt(a.d_, a.x_ - b.x_, a.y_ - b.y_);
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
  require_same(a.d_, b.d_);
  Int yy = a.y_ * b.y_;
  return QuadInt(a.d_, a.x_ * b.x_ - a.d_.sigma_norm() * yy,
                 a.x_ * b.y_ + a.y_ * b.x_ + a.d_.sigma_trace() * yy);
}

std::vector<QuadInt> units(Discriminant d) {
  std::vector<QuadInt> out;
  if (d.value() == 1) {
    out = {QuadInt(d, 1, 0), QuadInt(d, 0, 1), QuadInt(d, -1, 0), QuadInt(d, 0, -1)};
  } else if (d.value() == 3) {
    // 1, 1+w, w, -1, -(1+w), -w with w = sigma - 1
    out = {QuadInt(d, 1, 0),  QuadInt(d, 0, 1),  QuadInt(d, -1, 1),
           QuadInt(d, -1, 0), QuadInt(d, 0, -1), QuadInt(d, 1, -1)};
  } else {
    out = {QuadInt(d, 1, 0), QuadInt(d, -1, 0)};
  }
  return out;
}

bool is_unit(const QuadInt& a) { return a.norm() == 1; }

std::optional<QuadInt> divide_exact(const QuadInt& a, const QuadInt& b) {
  require_same(a.disc(), b.disc());
  if (b.is_zero()) throw std::domain_error("division by zero");
  Int n = b.norm();
  QuadInt p = a * b.conj();
  if (p.x() % n != 0 || p.y() % n != 0) return std::nullopt;
  return QuadInt(a.disc(), p.x() / n, p.y() / n);
}

bool divides(const QuadInt& b, const QuadInt& a) {
  if (b.is_zero()) return a.is_zero();
  return divide_exact(a, b).has_value();
}

bool in_canonical_sector(const QuadInt& a) {
  int d = a.disc().value();
  if (d == 1 || d == 3) return a.x() > 0 && a.y() >= 0;
  return a.y() > 0 || (a.y() == 0 && a.x() > 0);
}

QuadInt canonicalizing_unit(const QuadInt& a) {
  if (a.is_zero()) return QuadInt(a.disc(), 1, 0);
  for (const auto& u : units(a.disc())) {
    if (in_canonical_sector(u * a)) return u;
  }
  throw std::logic_error("no unit places " + a.str() + " in the canonical sector");
}

QuadInt canonical_associate(const QuadInt& a) { return canonicalizing_unit(a) * a; }

HermitianParts hermitian(const QuadInt& a, const QuadInt& b) {
  require_same(a.disc(), b.disc());
  QuadInt p = a.conj() * b;
  HermitianParts h{p.x(), p.y(), 2 * p.x() + a.disc().sigma_trace() * p.y(), p.y()};
  return h;
}

// ---------------------------------------------------------------- QuadRat

QuadRat::QuadRat(QuadInt num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("QuadRat: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Int g = gcd(gcd(num_.x(), num_.y()), den_);
  if (g > 1) {
    num_ = QuadInt(num_.disc(), num_.x() / g, num_.y() / g);
    den_ /= g;
  }
}

QuadRat::QuadRat(Discriminant d, const Rat& u, const Rat& v) : num_(d), den_(1) {
  Int l = lcm(ford::den(u), ford::den(v));
  *this = QuadRat(QuadInt(d, ford::num(u) * (l / ford::den(u)), ford::num(v) * (l / ford::den(v))), l);
}

Rat QuadRat::norm() const { return Rat(num_.norm(), den_ * den_); }

QuadRat QuadRat::inverse() const {
  if (is_zero()) throw std::domain_error("QuadRat: inverse of zero");
  Int n = num_.norm();
  return QuadRat(den_ * num_.conj(), n);
}

std::complex<double> QuadRat::to_complex() const {
  std::complex<double> c = num_.to_complex();
  return c / den_.convert_to<double>();
}

std::string QuadRat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

QuadRat operator+(const QuadRat& a, const QuadRat& b) {
  return QuadRat(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
}

QuadRat operator-(const QuadRat& a, const QuadRat& b) {
  return QuadRat(b.den_ * a.num_ - a.den_ * b.num_, a.den_ * b.den_);
}

QuadRat operator*(const QuadRat& a, const QuadRat& b) { return QuadRat(a.num_ * b.num_, a.den_ * b.den_); }

QuadRat operator/(const QuadRat& a, const QuadRat& b) { return a * b.inverse(); }

bool operator<(const QuadRat& a, const QuadRat& b) {
  Int lx = a.num_.x() * b.den_;
  Int rx = b.num_.x() * a.den_;
  if (lx != rx) return lx < rx;
  return a.num_.y() * b.den_ < b.num_.y() * a.den_;
}

Rat norm_form(Discriminant d, const Rat& u, const Rat& v) {
  return u * u + d.sigma_trace() * u * v + d.sigma_norm() * v * v;
}

// ---------------------------------------------------------------- slow Euclid

namespace {

QuadInt unit_digit(const QuadInt& e, const QuadInt& o) {
  const auto us = units(e.disc());
  QuadInt best = us.front();
  Int best_norm = (e - best * o).norm();
  for (std::size_t i = 1; i < us.size(); ++i) {
    Int n = (e - us[i] * o).norm();
    if (n < best_norm) {
      best_norm = n;
      best = us[i];
    }
  }
  return best;
}

QuadInt lattice_digit(const QuadInt& e, const QuadInt& o) {
  Discriminant d = e.disc();
  Int n = o.norm();
  QuadInt p = e * o.conj();
  Int fx = floor_div(p.x(), n);
  Int fy = floor_div(p.y(), n);
  QuadInt best(d, fx, fy);
  Int best_norm = (e - best * o).norm();
  for (int dx = 0; dx <= 1; ++dx) {
    for (int dy = 0; dy <= 1; ++dy) {
      QuadInt q(d, fx + dx, fy + dy);
      Int m = (e - q * o).norm();
      if (m < best_norm) {
        best_norm = m;
        best = q;
      }
    }
  }
  return best;
}

QuadInt sea_digit(const QuadInt& e, const QuadInt& o) {
  int d = e.disc().value();
  return (d == 1 || d == 3) ? unit_digit(e, o) : lattice_digit(e, o);
}

}  // namespace

SeaResult slow_euclid(const QuadInt& a, const QuadInt& b) {
  require_same(a.disc(), b.disc());
  if (!a.disc().euclidean())
    throw std::domain_error("slow Euclidean algorithm needs a euclidean D, got D=" +
                            std::to_string(a.disc().value()));
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("slow Euclidean algorithm: both entries zero");
  SeaResult r{QuadInt(a.disc()), a, b, {}};
  while (!r.first.is_zero() && !r.second.is_zero()) {
    Int na = r.first.norm();
    Int nb = r.second.norm();
    bool change_first = nb < na;
    QuadInt& e = change_first ? r.first : r.second;
    const QuadInt& o = change_first ? r.second : r.first;
    QuadInt q = sea_digit(e, o);
    QuadInt next = e - q * o;
    if (next.norm() >= (change_first ? na : nb))
      throw std::runtime_error("slow Euclidean algorithm failed to decrease the norm at " + e.str());
    e = next;
    r.steps.push_back({change_first, q});
  }
  r.gcd = canonical_associate(r.first.is_zero() ? r.second : r.first);
  return r;
}

bool coprime(const QuadInt& a, const QuadInt& b) {
  require_same(a.disc(), b.disc());
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("coprime: both entries zero");
  HermitianParts h = hermitian(a, b);
  Int g = gcd(gcd(a.norm(), b.norm()), gcd(h.X, h.Y));
  return g == 1;
}

bool coprime_by_sea(const QuadInt& a, const QuadInt& b) { return is_unit(slow_euclid(a, b).gcd); }

FloorFrac floor_frac(Discriminant d, const Rat& u, const Rat& v) {
  Int fu = floor(u);
  Int fv = floor(v);
  return {QuadInt(d, fu, fv), u - Rat(fu), v - Rat(fv)};
}

// ---------------------------------------------------------------- approximation

namespace {

Approximation pigeonhole(Discriminant d, const Rat& u, const Rat& v, const Rat& bound_sq, std::uint64_t cap) {
  if (bound_sq <= 0) throw std::invalid_argument("approximate: bound must be positive");
  const Int pu = num(u), qu = den(u), pv = num(v), qv = den(v);
  for (std::uint64_t n = 1;; n *= 2) {
    std::uint64_t cells = n * n;
    if (cells > cap)
      throw std::runtime_error("approximate: iteration cap " + std::to_string(cap) + " exceeded");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen;
    for (std::uint64_t j = 0; j <= cells; ++j) {
      Int ju = pu * j;
      Int jv = pv * j;
      Int ru = ju - floor_div(ju, qu) * qu;  // j*u mod 1, scaled by qu
      Int rv = jv - floor_div(jv, qv) * qv;
      auto cu = static_cast<std::uint64_t>(Int(ru * n / qu));
      auto cv = static_cast<std::uint64_t>(Int(rv * n / qv));
      auto [it, fresh] = seen.try_emplace({cu, cv}, j);
      if (fresh) continue;
      std::uint64_t k = it->second;
      it->second = j;
      Rat du = Rat(ru, qu) - Rat(Int(pu * k) - floor_div(Int(pu * k), qu) * qu, qu);
      Rat dv = Rat(rv, qv) - Rat(Int(pv * k) - floor_div(Int(pv * k), qv) * qv, qv);
      Rat res = norm_form(d, du, dv);
      if (res < bound_sq) {
        Int m = j - k;
        QuadInt alpha(d, floor_div(Int(pu * j), qu) - floor_div(Int(pu * k), qu),
                      floor_div(Int(pv * j), qv) - floor_div(Int(pv * k), qv));
        return {alpha, QuadInt(d, m, 0), res};
      }
    }
  }
}

}  // namespace

Approximation approximate(const QuadRat& z, const Rat& bound, std::uint64_t) {
  if (bound <= 0) throw std::invalid_argument("approximate: bound must be positive");
  return {z.num(), QuadInt(z.disc(), z.den(), 0), Rat(0)};
}

std::pair<Rat, Rat> sigma_coords(Discriminant d, std::complex<double> z) {
  double root = std::sqrt(static_cast<double>(d.value()));
  if (d.class_a()) {
    double v = 2.0 * z.imag() / root;
    return {exact_rational(z.real() - v / 2.0), exact_rational(v)};
  }
  return {exact_rational(z.real()), exact_rational(z.imag() / root)};
}

Approximation approximate(Discriminant d, std::complex<double> z, const Rat& bound, std::uint64_t cap) {
  if (bound <= 0) throw std::invalid_argument("approximate: bound must be positive");
  auto [u, v] = sigma_coords(d, z);
  return pigeonhole(d, u, v, bound * bound, cap);
}

Approximation approximate_sq(Discriminant d, std::complex<double> z, const Rat& bound_sq, std::uint64_t cap) {
  auto [u, v] = sigma_coords(d, z);
  return pigeonhole(d, u, v, bound_sq, cap);
}

std::vector<QuadInt> elements_up_to_norm(Discriminant d, const Int& bound) {
  std::vector<QuadInt> out;
  if (bound < 1) return out;
  // 4*norm = (2x + t y)^2 + (4k - t^2) y^2 and 4k - t^2 = D
  Int ymax = isqrt(4 * bound / d.value()) + 1;
  for (Int y = -ymax; y <= ymax; ++y) {
    Int xmax = isqrt(bound) + abs(y) + 1;
    for (Int x = -xmax; x <= xmax; ++x) {
      QuadInt a(d, x, y);
      Int n = a.norm();
      if (n >= 1 && n <= bound) out.push_back(a);
    }
  }
  return out;
}

}  // namespace ford
