#include "ford/general.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace ford;
using namespace ford::general;

namespace ford::general {
void PrintTo(const SigmaBary& b, std::ostream* os) { *os << bary_string(b); }
}  // namespace ford::general

TEST(General, MuImagesSolveTheClassEquation) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (const auto& s : ring_spheres(disc, Int(25), Window::unit_cell())) {
      SigmaBary b = mu_apply(s);
      EXPECT_TRUE(eq11_verify(b)) << bary_string(b);
      EXPECT_EQ(weight_sign(b), mu_float(s).plane ? 0 : 1);
      EXPECT_EQ(mu_inverse(b), s);
      auto [n, z] = preimage_data(b);
      EXPECT_EQ(n, s.beta().norm());
      EXPECT_EQ(z, s.tangent());
    }
  }
}

TEST(General, ClassEquationByHand) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (const auto& s : ring_spheres(disc, Int(15), Window::unit_cell())) {
      SigmaBary b = mu_apply(s);
      Int lhs = b.a * b.b + b.a * b.c + b.b * b.c;
      if (disc.class_a())
        EXPECT_EQ(4 * (lhs + (b.a + b.b + b.c) * b.m), (d - 3) * b.m * b.m);
      else
        EXPECT_EQ(lhs, d * b.m * b.m);
    }
  }
}

TEST(General, MuFloatOracleMatchesBarycentricSphere) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (const auto& s : ring_spheres(disc, Int(12), Window::unit_cell())) {
      ApproxSphere direct = mu_float(s);
      ApproxSphere via = bary_float(mu_apply(s));
      EXPECT_EQ(direct.plane, via.plane);
      if (!direct.plane) EXPECT_NEAR(std::abs(direct.tangent - via.tangent), 0.0, 1e-9);
      EXPECT_NEAR(direct.radius, via.radius, 1e-9);
    }
  }
}

TEST(General, PairingDetectsTangency) {
  for (int d : {1, 2, 7, 19}) {
    Discriminant disc(d);
    auto ss = ring_spheres(disc, Int(10), Window::unit_cell());
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = i + 1; j < ss.size(); ++j)
        EXPECT_EQ(pair_norm_general(mu_apply(ss[i]), mu_apply(ss[j])), pair_norm(ss[i], ss[j]));
  }
}

TEST(General, SecantGroupLaw) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 50; ++i) {
      ExtRat x = Rat(num(rng), den(rng)), y = Rat(num(rng), den(rng)), w = Rat(num(rng), den(rng));
      EXPECT_FALSE(secant_add(x, secant_inverse(x, disc), disc).has_value());
      EXPECT_EQ(secant_add(x, std::nullopt, disc), x);
      EXPECT_EQ(secant_add(x, y, disc), secant_add(y, x, disc));
      EXPECT_EQ(secant_add(secant_add(x, y, disc), w, disc), secant_add(x, secant_add(y, w, disc), disc));
    }
  }
}

TEST(General, SecantEnumerationVerifies) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    auto sols = secant_enumerate(disc, Int(6));
    EXPECT_FALSE(sols.empty());
    for (const auto& b : sols) {
      EXPECT_TRUE(eq11_verify(b));
      EXPECT_EQ(gcd(gcd(b.a, b.b), gcd(b.c, b.m)), 1);
      EXPECT_GE(weight_sign(b), 0);
    }
  }
}

TEST(General, BarycentricFamilyMatchesRing) {
  for (int d : {1, 2, 3, 7, 11, 19, 43}) {
    Discriminant disc(d);
    std::set<SigmaBary> ring, bary;
    for (const auto& s : ring_spheres(disc, Int(12), Window::unit_cell())) ring.insert(mu_apply(s));
    for (const auto& b : bary_family(disc, Int(12), Window::unit_cell())) bary.insert(b);
    EXPECT_EQ(ring, bary) << d;
  }
}

TEST(General, RingAgreesWithSeaForEuclideanRings) {
  for (int d : {1, 2, 3, 7, 11}) {
    Discriminant disc(d);
    auto a = ring_spheres(disc, Int(20), Window::unit_cell());
    auto b = enumerate_ring(disc, Int(20), Window::unit_cell(), coprime_by_sea);
    EXPECT_EQ(a, b);
  }
}

TEST(General, ReducePair) {
  Discriminant disc(19);
  QuadInt g(disc, 2, 1), a(disc, 1, 0), b(disc, 0, 1);
  auto [x, y] = reduce_pair(g * a, g * b);
  EXPECT_TRUE(coprime(x, y));
  EXPECT_TRUE(divide_exact(g * a, x).has_value());
}

TEST(General, ProbeMeetsBall) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 5; ++i) {
      std::complex<double> z(unit(rng), unit(rng));
      Rat r(1, 100);
      FordSphere s = probe(disc, z, r);
      ASSERT_FALSE(s.is_plane());
      auto [u, v] = sigma_coords(disc, z);
      NormalSphere ball = NormalSphere::finite(QuadRat(disc, u, v), r);
      EXPECT_TRUE(interiors_meet(to_normal(s), ball));
    }
  }
}
