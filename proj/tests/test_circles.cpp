#include "ford/circles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

using namespace ford;
using namespace ford::circles;

namespace {

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

bool tangent_float(const FordCircle& p, const FordCircle& q) {
  double x1 = static_cast<double>(p.tangent()), x2 = static_cast<double>(q.tangent());
  double r1 = static_cast<double>(p.radius()), r2 = static_cast<double>(q.radius());
  double dist = std::hypot(x1 - x2, r1 - r2);
  return std::abs(dist - (r1 + r2)) < 1e-12;
}

}  // namespace

TEST(Circles, AlgebraicTangencyMatchesGeometry) {
  for (int b = 1; b <= 12; ++b)
    for (int a = 0; a <= b; ++a)
      for (int d = 1; d <= 12; ++d)
        for (int c = 0; c <= d; ++c) {
          if (std::gcd(a, b) != 1 || std::gcd(c, d) != 1 || (a == c && b == d)) continue;
          FordCircle p(a, b), q(c, d);
          EXPECT_EQ(tangent(p, q), tangent_float(p, q));
          EXPECT_EQ(tangent(p, q), tangent_geometric(p, q));
          EXPECT_FALSE(interiors_meet(to_normal(p), to_normal(q)));
        }
}

TEST(Circles, ChildIsMediantAndTangentToParents) {
  FordCircle p(1, 3), q(1, 2);
  FordCircle c = child(p, q);
  EXPECT_EQ(c, FordCircle(2, 5));
  EXPECT_TRUE(tangent(c, p));
  EXPECT_TRUE(tangent(c, q));
  EXPECT_THROW(child(FordCircle(1, 3), FordCircle(2, 3)), std::invalid_argument);
}

TEST(Circles, SlowEuclidGoldenTrace) {
  SeaRun run = slow_euclid(14, 5);
  EXPECT_EQ(word_string(run.word), "L,L,R,L,L,L");
  EXPECT_EQ(run.terminal, std::make_pair(Int(1), Int(1)));
  EXPECT_EQ(replay_inverse(run.word, run.terminal), std::make_pair(Int(14), Int(5)));
}

TEST(Circles, SlowEuclidStepCountIsQuotientSum) {
  for (int a = 1; a <= 40; ++a)
    for (int b = 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      int x = a, y = b, quotients = 0;
      while (y != 0) {
        quotients += x / y;
        x %= y;
        std::swap(x, y);
      }
      EXPECT_EQ(static_cast<int>(slow_euclid(a, b).word.size()), quotients - 1);
    }
}

TEST(Circles, ParentsAreTangentAndProduceChild) {
  for (int b = 2; b <= 30; ++b)
    for (int a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      FordCircle c(a, b);
      auto [p, q] = parents(c);
      EXPECT_TRUE(tangent(p, q));
      EXPECT_EQ(p.b() + q.b(), c.b());
      EXPECT_EQ(p.a() + q.a(), c.a());
    }
}

TEST(Circles, RingCountIsFareyLength) {
  for (int n = 1; n <= 30; ++n) {
    std::size_t expected = 1;
    for (int k = 1; k <= n; ++k) expected += euler_phi(k);
    EXPECT_EQ(enumerate_ring(n, {Rat(0), Rat(1)}).size(), expected);
  }
}

TEST(Circles, BarycentricRoundTrip) {
  for (int b = 1; b <= 25; ++b)
    for (int a = 0; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      FordCircle c(a, b);
      BaryTriple t = to_bary(c);
      EXPECT_TRUE(valid(t));
      EXPECT_TRUE(check_square(t));
      EXPECT_EQ(from_bary(t), c);
      NormalCircle n = bary_circle(t);
      EXPECT_EQ(n, to_normal(c));
    }
}

TEST(Circles, BarycentricEnumerationMatchesRing) {
  Interval w{Rat(0), Rat(1)};
  std::set<std::pair<Rat, Rat>> ring, bary;
  for (const auto& c : enumerate_ring(12, w)) ring.insert({c.tangent(), c.radius()});
  for (const auto& t : enumerate_bary(144, w)) {
    NormalCircle n = bary_circle(t);
    bary.insert({n.tangent, n.radius});
  }
  EXPECT_EQ(ring, bary);
}

TEST(Circles, GenerationDepthIsSternBrocotDepth) {
  Interval w{Rat(0), Rat(1)};
  for (int depth = 0; depth <= 6; ++depth) {
    std::set<std::pair<Int, Int>> got;
    for (const auto& c : generate(depth, w)) got.insert({c.a(), c.b()});
    for (int b = 1; b <= 64; ++b)
      for (int a = 0; a <= b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        bool in = stern_brocot_depth(FordCircle(a, b)) <= depth;
        EXPECT_EQ(got.count({a, b}) == 1, in) << a << "/" << b << " depth " << depth;
      }
  }
  EXPECT_EQ(stern_brocot_depth(FordCircle(1, 50)), 49);
}

TEST(Circles, OverlapProbeFindsCircleForLargeBalls) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    Rat x = exact_rational(unit(rng));
    Rat r(1, 200);
    auto hit = overlapping_circle(x, r, 400);
    ASSERT_TRUE(hit.has_value());
    EXPECT_TRUE(interiors_meet(to_normal(*hit), NormalCircle{x, r}));
  }
}
