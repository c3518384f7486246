#include "ford/circles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ford::circles {

FordCircle::FordCircle(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ <= 0) throw std::invalid_argument("Ford circle needs a positive denominator, got " + b_.str());
  if (gcd(a_, b_) != 1) throw std::invalid_argument("Ford circle needs gcd(a,b)=1, got " + str());
}

std::string FordCircle::str() const { return "C(" + a_.str() + "," + b_.str() + ")"; }

bool operator<(const FordCircle& p, const FordCircle& q) {
  Int l = p.a_ * q.b_;
  Int r = q.a_ * p.b_;
  if (l != r) return l < r;
  return p.b_ < q.b_;
}

NormalCircle to_normal(const FordCircle& c) { return {c.tangent(), c.radius()}; }

bool tangent(const NormalCircle& p, const NormalCircle& q) {
  Rat d = p.tangent - q.tangent;
  return d * d == 4 * p.radius * q.radius;
}

bool interiors_meet(const NormalCircle& p, const NormalCircle& q) {
  Rat d = p.tangent - q.tangent;
  return d * d < 4 * p.radius * q.radius;
}

bool tangent(const FordCircle& p, const FordCircle& q) { return abs(Int(p.a() * q.b() - p.b() * q.a())) == 1; }

bool tangent_geometric(const FordCircle& p, const FordCircle& q) { return tangent(to_normal(p), to_normal(q)); }

FordCircle child(const FordCircle& p, const FordCircle& q) {
  if (!tangent(p, q)) throw std::invalid_argument("child: " + p.str() + " and " + q.str() + " are not tangent");
  return FordCircle(p.a() + q.a(), p.b() + q.b());
}

SeaRun slow_euclid(const Int& a, const Int& b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("slow Euclidean algorithm needs positive entries");
  SeaRun run{{}, {a, b}};
  auto& [x, y] = run.terminal;
  while (x != y) {
    if (x > y) {
      x -= y;
      run.word.push_back(Letter::L);
    } else {
      y -= x;
      run.word.push_back(Letter::R);
    }
  }
  return run;
}

std::pair<Int, Int> replay_inverse(const std::vector<Letter>& word, std::pair<Int, Int> start) {
  auto& [x, y] = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == Letter::L) {
      x += y;
    } else {
      y += x;
    }
  }
  return start;
}

std::string word_string(const std::vector<Letter>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += word[i] == Letter::L ? 'L' : 'R';
  }
  return s;
}

std::pair<FordCircle, FordCircle> parents(const FordCircle& c) {
  if (c.b() == 1) throw std::invalid_argument("parents: " + c.str() + " is a root circle");
  Int shift = floor_div(c.a(), c.b());
  Int a0 = c.a() - shift * c.b();
  SeaRun run = slow_euclid(a0, c.b());
  auto [x, y] = replay_inverse(run.word, {0, 1});
  auto [u, v] = replay_inverse(run.word, {1, 0});
  return {FordCircle(x + shift * y, y), FordCircle(u + shift * v, v)};
}

bool valid(const BaryTriple& t) {
  if (t.s + t.t <= 0) return false;
  if (gcd(gcd(t.s, t.t), t.u) != 1) return false;
  Int sum = t.s + t.t + t.u;
  return sum * sum == t.s * t.s + t.t * t.t + t.u * t.u;
}

BaryTriple to_bary(const FordCircle& c) {
  const Int& a = c.a();
  const Int& b = c.b();
  return {b * b - a * b, a * b, a * a - a * b};
}

NormalCircle bary_circle(const BaryTriple& t) {
  if (!valid(t)) throw std::invalid_argument("barycentric triple violates its invariants");
  Int n = t.s + t.t;
  return {Rat(t.t, n), Rat(1, 2 * n)};
}

FordCircle from_bary(const BaryTriple& t) {
  NormalCircle nc = bary_circle(t);
  Int n = t.s + t.t;
  if (!is_square(n)) throw std::domain_error("barycentric circle weight " + n.str() + " is not a perfect square");
  Int b = isqrt(n);
  Rat a = nc.tangent * Rat(b);
  if (den(a) != 1) throw std::domain_error("barycentric circle tangent point does not have denominator " + b.str());
  return FordCircle(num(a), b);
}

bool check_square(const BaryTriple& t) { return is_square(abs(Int(t.s + t.t))); }

std::vector<FordCircle> generate(int depth, const Interval& window, std::optional<Int> max_den) {
  if (depth < 0) throw std::invalid_argument("generate: depth must be nonnegative");
  if (window.hi < window.lo) throw std::invalid_argument("generate: empty window");
  std::vector<FordCircle> row;
  for (Int n = floor(window.lo); n <= ceil(window.hi); ++n) row.emplace_back(n, 1);
  for (int round = 0; round < depth; ++round) {
    std::vector<FordCircle> next;
    next.reserve(row.size() * 2);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      const FordCircle& p = row[i];
      const FordCircle& q = row[i + 1];
      next.push_back(p);
      bool overlaps = p.tangent() < window.hi && q.tangent() > window.lo;
      bool small = !max_den || p.b() + q.b() <= *max_den;
      if (overlaps && small) next.push_back(child(p, q));
    }
    next.push_back(row.back());
    if (next.size() == row.size()) break;
    row = std::move(next);
  }
  std::vector<FordCircle> out;
  for (auto& c : row) {
    if (window.contains(c.tangent())) out.push_back(c);
  }
  return out;
}

std::vector<FordCircle> enumerate_ring(const Int& max_den, const Interval& window) {
  std::vector<FordCircle> out;
  for (Int b = 1; b <= max_den; ++b) {
    for (Int a = ceil(window.lo * Rat(b)); Rat(a, b) <= window.hi; ++a) {
      if (gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BaryTriple> enumerate_bary(const Int& max_weight, const Interval& window) {
  std::vector<BaryTriple> out;
  const std::int64_t nmax = to_i64(max_weight);
  for (std::int64_t n = 1; n <= nmax; ++n) {
    std::int64_t tlo = to_i64(ceil(window.lo * n));
    std::int64_t thi = to_i64(floor(window.hi * n));
    for (std::int64_t t = tlo; t <= thi; ++t) {
      std::int64_t s = n - t;
      std::int64_t st = s * t;
      if (st % n != 0) continue;
      std::int64_t u = -st / n;
      if (std::gcd(std::gcd(s, t), u) != 1) continue;
      out.push_back({s, t, u});
    }
  }
  return out;
}

int stern_brocot_depth(const FordCircle& c) {
  if (c.b() == 1) return 0;
  Int a0 = c.a() - floor_div(c.a(), c.b()) * c.b();
  return static_cast<int>(slow_euclid(a0, c.b()).word.size());
}

std::optional<FordCircle> overlapping_circle(const Rat& x, const Rat& r, const Int& max_den) {
  if (r <= 0) throw std::invalid_argument("overlapping_circle: radius must be positive");
  NormalCircle target{x, r};
  for (Int b = 1; b <= max_den; ++b) {
    Int a0 = floor(x * Rat(b));
    for (Int a = a0; a <= a0 + 1; ++a) {
      if (gcd(a, b) != 1) continue;
      FordCircle c(a, b);
      if (interiors_meet(to_normal(c), target)) return c;
    }
  }
  return std::nullopt;
}

}  // namespace ford::circles
