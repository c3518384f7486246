#include "ford/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ford::eisenstein {

Discriminant disc() { return Discriminant(3); }

QuadInt from_omega(const Int& x, const Int& y) { return QuadInt(disc(), x - y, y); }

std::pair<Int, Int> omega_coords(const QuadInt& a) {
  if (a.disc().value() != 3) throw std::invalid_argument("omega coordinates need D=3");
  return {a.x() + a.y(), a.y()};
}

Int omega_norm(const Int& x, const Int& y) { return x * x - x * y + y * y; }

Quad4 to_bary(const QuadInt& alpha, const QuadInt& beta) {
  if (alpha.disc().value() != 3 || beta.disc().value() != 3)
    throw std::invalid_argument("barycentric quadruples need D=3");
  if (!coprime(alpha, beta)) throw std::invalid_argument("barycentric quadruple needs a coprime pair");
  auto [x, y] = omega_coords(alpha);
  auto [u, v] = omega_coords(beta);
  return {u * u + v * v - u * v + x * v - x * u - y * v, x * u - y * u + y * v, y * u - x * v,
          x * x + y * y - x * y + x * v - x * u - y * v};
}

Quad4 to_bary(const FordSphere& s) { return to_bary(s.alpha(), s.beta()); }

Quad4 gsea_step(const Quad4& q, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("gSEA slot must be 1..4");
  std::size_t s = static_cast<std::size_t>(k - 1);
  Quad4 r = q;
  for (std::size_t j = 0; j < 4; ++j)
    if (j != s) r[j] += q[s];
  r[s] = -q[s];
  return r;
}

GseaTrace gsea(const Quad4& q) {
  if (!on_quadric(q)) throw std::invalid_argument(quad_string(q) + " is not on the quadric");
  if (q[0] + q[1] + q[2] + q[3] <= 0) throw std::invalid_argument("gSEA needs a positive coordinate sum");
  GseaTrace t{{}, {q}};
  while (true) {
    const Quad4& cur = t.states.back();
    std::size_t k = 0;
    for (std::size_t j = 1; j < 4; ++j)
      if (cur[j] < cur[k]) k = j;
    if (cur[k] >= 0) break;
    Quad4 next = gsea_step(cur, static_cast<int>(k + 1));
    if (next[0] + next[1] + next[2] + next[3] >= cur[0] + cur[1] + cur[2] + cur[3])
      throw std::runtime_error("gSEA failed to decrease the coordinate sum at " + quad_string(cur));
    t.codes.push_back(static_cast<int>(k + 1));
    t.states.push_back(next);
  }
  return t;
}

std::size_t rank(const Quad4& q) { return gsea(q).codes.size(); }

std::array<Quad4, 3> parents(const Quad4& q) {
  GseaTrace t = gsea(q);
  if (t.codes.empty()) throw std::invalid_argument(quad_string(q) + " has rank 0 and no parents");
  const Quad4& term = t.terminal();
  std::size_t hit = 0;
  for (std::size_t j = 0; j < 4; ++j)
    if (term[j] != 0) hit = j;
  std::array<Quad4, 3> out;
  std::size_t slot = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == hit) continue;
    Quad4 e{0, 0, 0, 0};
    e[j] = 1;
    for (auto it = t.codes.rbegin(); it != t.codes.rend(); ++it) e = gsea_step(e, *it);
    out[slot++] = e;
  }
  return out;
}

Quad4 tetra_rule(const Quad4& a, const Quad4& b, const Quad4& c, const Quad4& d) {
  const std::array<const Quad4*, 4> all = {&a, &b, &c, &d};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (q_form(*all[i], *all[j]) != 1) throw std::invalid_argument("tetra_rule: inputs are not mutually tangent");
  Quad4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i] + c[i] - d[i];
  return r;
}

Matrix4 reflection_matrix(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("reflection index must be 1..4");
  Matrix4 m;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) m[i - 1][j - 1] = (i == j) + (i == k) - 3 * (i == k && j == k);
  return m;
}

Matrix4 identity4() {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

Matrix4 multiply(const Matrix4& x, const Matrix4& y) {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Int s = 0;
      for (std::size_t l = 0; l < 4; ++l) s += x[i][l] * y[l][j];
      m[i][j] = s;
    }
  return m;
}

Quad4 row_times(const Quad4& q, const Matrix4& m) {
  Quad4 r;
  for (std::size_t j = 0; j < 4; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += q[i] * m[i][j];
    r[j] = s;
  }
  return r;
}

Quad4 times_column(const Matrix4& m, const Quad4& q) {
  Quad4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += m[i][j] * q[j];
    r[i] = s;
  }
  return r;
}

// ---------------------------------------------------------------- descent

FordSphere BaryDescent::operator()(const Quad4& q) {
  auto it = memo_.find(q);
  if (it != memo_.end()) return it->second;
  const Discriminant d = disc();
  const Quad4 basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::optional<FordSphere> found;
  if (q == basis[0]) {
    found = FordSphere(QuadInt(d, 0, 0), QuadInt(d, 1, 0));
  } else if (q == basis[1]) {
    found = FordSphere(QuadInt(d, 1, 0), QuadInt(d, 1, 0));
  } else if (q == basis[2]) {
    found = FordSphere(QuadInt(d, 0, 1), QuadInt(d, 1, 0));
  } else if (q == basis[3]) {
    found = FordSphere::plane(d);
  } else {
    GseaTrace t = gsea(q);
    const Quad4& term = t.terminal();
    if (term[0] + term[1] + term[2] + term[3] != 1)
      throw std::invalid_argument(quad_string(q) + " is not primitive (gcd " +
                                  Int(term[0] + term[1] + term[2] + term[3]).str() + ")");
    auto ps = parents(q);
    FordSphere u = (*this)(ps[0]);
    FordSphere v = (*this)(ps[1]);
    FordSphere w = (*this)(ps[2]);
    auto [c1, c2] = completions(u, v, w);
    if (to_bary(c1) == q) {
      found = c1;
    } else if (to_bary(c2) == q) {
      found = c2;
    } else {
      throw std::logic_error("descent: no completion matches " + quad_string(q));
    }
  }
  memo_.emplace(q, *found);
  return *found;
}

// ---------------------------------------------------------------- generators

namespace {

bool sea_coprime(const QuadInt& a, const QuadInt& b) { return coprime_by_sea(a, b); }

using Tetra = std::array<Quad4, 4>;

Tetra sorted(Tetra t) {
  std::sort(t.begin(), t.end());
  return t;
}

Int weight(const Quad4& q) { return q[0] + q[1] + q[2]; }

TetraFamily collect(const std::set<Tetra>& seen, const std::set<Quad4>& roots,
                    const std::function<bool(const Quad4&)>& keep) {
  std::set<Quad4> spheres, planes;
  for (const auto& q : roots)
    if (keep(q)) spheres.insert(q);
  for (const auto& t : seen) {
    for (const auto& q : t) {
      if (weight(q) == 0) {
        planes.insert(q);
      } else if (keep(q)) {
        spheres.insert(q);
      }
    }
  }
  return {{spheres.begin(), spheres.end()}, {planes.begin(), planes.end()}, seen.size()};
}

}  // namespace

std::vector<FordSphere> ring_spheres(const Int& norm_bound, const Window& window) {
  return enumerate_ring(disc(), norm_bound, window, &sea_coprime);
}

TetraFamily geometric_quads(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const Quad4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e4{0, 0, 0, 1};
  std::set<Quad4> roots = {e1, e2, e3};
  std::set<Tetra> seen;
  std::vector<Tetra> frontier;
  if (depth >= 1) {
    Quad4 child = tetra_rule(e1, e2, e3, e4);
    for (const Tetra& t : {sorted({e1, e2, e3, e4}), sorted({e1, e2, e3, child})}) {
      seen.insert(t);
      frontier.push_back(t);
    }
  }
  for (int round = 2; round <= depth; ++round) {
    std::vector<Tetra> next;
    for (const Tetra& t : frontier) {
      for (std::size_t k = 0; k < 4; ++k) {
        Tetra n = t;
        for (std::size_t i = 0; i < 4; ++i) n[k][i] = t[(k + 1) % 4][i] + t[(k + 2) % 4][i] + t[(k + 3) % 4][i] - t[k][i];
        n = sorted(n);
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return collect(seen, roots, [](const Quad4&) { return true; });
}

TetraFamily geometric_quads_bounded(const Int& weight_bound, const Window& window, const Rat& margin) {
  const Quad4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e4{0, 0, 0, 1};
  const Window near = window.expanded(margin);
  auto inside = [](const Window& w, const Quad4& q) {
    Int n = weight(q);
    return w.contains(Rat(q[1], n), Rat(q[2], n));
  };
  auto admissible = [&](const Quad4& q) {
    Int n = weight(q);
    if (n == 0) return true;
    return n > 0 && n <= weight_bound && inside(near, q);
  };
  std::set<Tetra> seen;
  std::deque<Tetra> queue;
  for (const Tetra& t : {sorted({e1, e2, e3, e4}), sorted({e1, e2, e3, tetra_rule(e1, e2, e3, e4)})}) {
    if (std::all_of(t.begin(), t.end(), admissible) && seen.insert(t).second) queue.push_back(t);
  }
  while (!queue.empty()) {
    Tetra t = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < 4; ++k) {
      Quad4 q;
      for (std::size_t i = 0; i < 4; ++i) q[i] = t[(k + 1) % 4][i] + t[(k + 2) % 4][i] + t[(k + 3) % 4][i] - t[k][i];
      if (!admissible(q)) continue;
      Tetra n = t;
      n[k] = q;
      n = sorted(n);
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  std::set<Quad4> roots;
  for (const Quad4& r : {e1, e2, e3})
    if (weight(r) <= weight_bound) roots.insert(r);
  return collect(seen, roots, [&](const Quad4& q) { return weight(q) <= weight_bound && inside(window, q); });
}

std::vector<FordSphere> geometric_spheres(int depth) {
  TetraFamily fam = geometric_quads(depth);
  BaryDescent descend;
  std::vector<FordSphere> out;
  for (const auto& q : fam.spheres) out.push_back(descend(q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quad4> bary_solutions(const Int& weight_bound, const Window& window) {
  std::vector<Quad4> out;
  for (Int n = 1; n <= weight_bound; ++n) {
    Rat rn(n);
    for (Int b = ceil(window.min_u() * rn); b <= floor(window.max_u() * rn); ++b) {
      for (Int c = ceil(window.min_v() * rn); c <= floor(window.max_v() * rn); ++c) {
        if (!window.contains(Rat(b, n), Rat(c, n))) continue;
        Int a = n - b - c;
        Int e = a * b + a * c + b * c;
        if (e % n != 0) continue;
        Int d = -e / n;
        if (gcd(gcd(a, b), gcd(c, d)) != 1) continue;
        out.push_back({a, b, c, d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Int, Int>> eisenstein_norm_witness(const Int& n) {
  Int target = abs(n);
  // 4(m^2 + mk + k^2) = (2k + m)^2 + 3 m^2
  for (Int m = 0; 3 * m * m <= 4 * target; ++m) {
    Int rest = 4 * target - 3 * m * m;
    if (!is_square(rest)) continue;
    Int s = isqrt(rest);
    if ((s - m) % 2 != 0) continue;
    return std::make_pair(m, Int((s - m) / 2));
  }
  return std::nullopt;
}

bool cor46(const Quad4& q) { return eisenstein_norm_witness(q[0] + q[1] + q[2]).has_value(); }

// ---------------------------------------------------------------- f map

namespace {

// sign of a + b sqrt(n)
int surd_sign(const Int& a, const Int& b, const Int& n) {
  int sa = sign(a), sb = sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Int lhs = a * a;
  Int rhs = b * b * n;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

}  // namespace

QuadSurd::QuadSurd(Int p, Int q, Int n, Int r) : p_(std::move(p)), q_(std::move(q)), n_(std::move(n)), r_(std::move(r)) {
  if (r_ == 0) throw std::domain_error("quadratic surd with zero denominator");
  if (n_ < 1) throw std::invalid_argument("quadratic surd radicand must be positive");
  auto [f, k] = squarefree_split(n_);
  q_ *= f;
  n_ = k;
  if (n_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0) n_ = 1;
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Int g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

int QuadSurd::compare(const Int& k) const { return surd_sign(p_ - k * r_, q_, n_); }

double QuadSurd::value() const {
  return (p_.convert_to<double>() + q_.convert_to<double>() * std::sqrt(n_.convert_to<double>())) /
         r_.convert_to<double>();
}

std::string QuadSurd::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
  } else {
    os << "(" << p_ << (q_ < 0 ? "-" : "+") << abs(q_) << "*sqrt(" << n_ << "))";
  }
  if (r_ != 1) os << "/" << r_;
  return os.str();
}

QuadSurd f_map(const QuadSurd& x) {
  if (x.compare(0) <= 0) throw std::domain_error("f is undefined at the non-positive value " + x.str());
  int c = x.compare(1);
  if (c == 0) throw std::domain_error("f is undefined at 1");
  if (c > 0) return QuadSurd(x.p() - x.r(), x.q(), x.n(), x.r());
  // x/(1-x) = (p + q s)((r-p) + q s) / ((r-p)^2 - q^2 n)
  Int rp = x.r() - x.p();
  return QuadSurd(x.p() * rp + x.q() * x.q() * x.n(), x.q() * x.r(), x.n(), rp * rp - x.q() * x.q() * x.n());
}

FMapOrbit f_map_orbit(const QuadSurd& x, std::size_t max_steps) {
  if (x.compare(0) <= 0) throw std::domain_error("f-map orbit needs a positive start, got " + x.str());
  FMapOrbit o{{x}, OrbitVerdict::Cap, 0};
  std::map<QuadSurd, std::size_t> index{{x, 0}};
  for (std::size_t step = 0; step < max_steps; ++step) {
    const QuadSurd& cur = o.orbit.back();
    if (cur.compare(1) == 0) {
      o.verdict = OrbitVerdict::Terminates;
      return o;
    }
    QuadSurd next = f_map(cur);
    auto [it, fresh] = index.try_emplace(next, o.orbit.size());
    if (!fresh) {
      o.verdict = OrbitVerdict::Periodic;
      o.period = o.orbit.size() - it->second;
      o.orbit.push_back(next);
      return o;
    }
    o.orbit.push_back(next);
  }
  if (o.orbit.back().compare(1) == 0) o.verdict = OrbitVerdict::Terminates;
  return o;
}

std::string verdict_name(OrbitVerdict v) {
  switch (v) {
    case OrbitVerdict::Periodic:
      return "periodic";
    case OrbitVerdict::Terminates:
      return "terminates";
    case OrbitVerdict::Cap:
      return "cap";
  }
  return "?";
}

}  // namespace ford::eisenstein
