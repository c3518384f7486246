#include "ford/quadint.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace ford;

namespace {

std::complex<double> sigma_value(int d) {
  if (d % 4 == 3) return {0.5, std::sqrt(static_cast<double>(d)) / 2};
  return {0.0, std::sqrt(static_cast<double>(d))};
}

std::complex<double> value(const QuadInt& a) {
  return static_cast<double>(a.x()) + static_cast<double>(a.y()) * sigma_value(a.disc().value());
}

// Common divisor search: some element of norm > 1 dividing both, by brute force over small norms.
bool coprime_oracle(const QuadInt& a, const QuadInt& b) {
  Int limit = a.is_zero() ? b.norm() : (b.is_zero() ? a.norm() : std::min(a.norm(), b.norm()));
  for (const QuadInt& g : elements_up_to_norm(a.disc(), limit)) {
    if (g.norm() <= 1) continue;
    if (divides(g, a) && divides(g, b)) return false;
  }
  return true;
}

}  // namespace

TEST(Discriminant, HeegnerOnly) {
  for (int d : kHeegner) EXPECT_NO_THROW(Discriminant{d});
  for (int d : {0, 4, 5, 6, 8, 15, 23}) EXPECT_THROW(Discriminant{d}, std::invalid_argument);
}

TEST(QuadInt, NormMatchesComplexModulus) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-40, 40);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 200; ++i) {
      QuadInt a(disc, coord(rng), coord(rng));
      EXPECT_NEAR(static_cast<double>(a.norm()), std::norm(value(a)), 1e-6);
      EXPECT_NEAR(static_cast<double>(a.trace()), 2 * value(a).real(), 1e-9);
    }
  }
}

TEST(QuadInt, ProductMatchesComplexProduct) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-30, 30);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 200; ++i) {
      QuadInt a(disc, coord(rng), coord(rng)), b(disc, coord(rng), coord(rng));
      std::complex<double> p = value(a * b), q = value(a) * value(b);
      EXPECT_NEAR(p.real(), q.real(), 1e-6);
      EXPECT_NEAR(p.imag(), q.imag(), 1e-6);
      EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    }
  }
}

TEST(QuadInt, UnitsHaveNormOne) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    auto us = units(disc);
    EXPECT_EQ(us.size(), disc.unit_count());
    for (const auto& u : us) EXPECT_EQ(u.norm(), 1);
    std::size_t count = 0;
    for (const auto& g : elements_up_to_norm(disc, Int(1))) count += g.norm() == 1;
    EXPECT_EQ(count, us.size());
  }
}

TEST(QuadInt, CanonicalAssociateIsUniqueInSector) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 100; ++i) {
      QuadInt a(disc, coord(rng), coord(rng));
      if (a.is_zero()) continue;
      int inside = 0;
      for (const auto& u : units(disc)) inside += in_canonical_sector(u * a);
      EXPECT_EQ(inside, 1) << a.str();
      EXPECT_TRUE(in_canonical_sector(canonical_associate(a)));
      EXPECT_EQ(canonical_associate(a), canonicalizing_unit(a) * a);
    }
  }
}

TEST(QuadInt, ElementsUpToNormMatchesBruteForce) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    std::size_t brute = 0;
    for (int x = -60; x <= 60; ++x)
      for (int y = -60; y <= 60; ++y) {
        Int n = QuadInt(disc, x, y).norm();
        brute += n >= 1 && n <= 40;
      }
    EXPECT_EQ(elements_up_to_norm(disc, Int(40)).size(), brute) << d;
  }
}

TEST(QuadInt, HermitianPartsMatchComplexConjugateProduct) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-25, 25);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 100; ++i) {
      QuadInt a(disc, coord(rng), coord(rng)), b(disc, coord(rng), coord(rng));
      HermitianParts h = hermitian(a, b);
      EXPECT_EQ(QuadInt(disc, h.X, h.Y), a.conj() * b);
      std::complex<double> p = std::conj(value(a)) * value(b);
      EXPECT_NEAR(static_cast<double>(h.twoS), 2 * p.real(), 1e-6);
      double scale = disc.class_a() ? 2 / std::sqrt(static_cast<double>(d)) : 1 / std::sqrt(static_cast<double>(d));
      EXPECT_NEAR(static_cast<double>(h.tOverRoot), p.imag() * scale, 1e-6);
    }
  }
}

TEST(QuadInt, DivideExact) {
  Discriminant disc(7);
  QuadInt a(disc, 3, 2), b(disc, -1, 4);
  auto q = divide_exact(a * b, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a);
  EXPECT_FALSE(divide_exact(QuadInt(disc, 1, 0), QuadInt(disc, 2, 0)).has_value());
}

TEST(QuadInt, SlowEuclidReachesGcd) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coord(-15, 15);
  for (int d : {1, 2, 3, 7, 11}) {
    Discriminant disc(d);
    for (int i = 0; i < 100; ++i) {
      QuadInt g(disc, coord(rng), coord(rng));
      QuadInt a = g * QuadInt(disc, coord(rng), coord(rng));
      QuadInt b = g * QuadInt(disc, coord(rng), coord(rng));
      if (a.is_zero() && b.is_zero()) continue;
      SeaResult r = slow_euclid(a, b);
      EXPECT_TRUE(r.first.is_zero() || r.second.is_zero());
      EXPECT_TRUE(divides(r.gcd, a) && divides(r.gcd, b));
      if (!g.is_zero()) EXPECT_TRUE(divides(g, r.gcd));
      QuadInt e = r.first, o = r.second;
      for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it) {
        if (it->first_changed)
          e = e + it->quotient * o;
        else
          o = o + it->quotient * e;
      }
      EXPECT_EQ(e, a);
      EXPECT_EQ(o, b);
    }
  }
}

TEST(QuadInt, CoprimeTestsAgreeWithDivisorSearch) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int d : kHeegner) {
    Discriminant disc(d);
    for (int i = 0; i < 150; ++i) {
      QuadInt a(disc, coord(rng), coord(rng)), b(disc, coord(rng), coord(rng));
      if (a.is_zero() && b.is_zero()) continue;
      bool expected = coprime_oracle(a, b);
      EXPECT_EQ(coprime(a, b), expected) << d << " " << a.str() << " " << b.str();
      if (disc.euclidean()) {
        EXPECT_EQ(coprime_by_sea(a, b), expected);
      }
    }
  }
}

TEST(QuadInt, QuadRatArithmetic) {
  Discriminant disc(11);
  QuadRat z(QuadInt(disc, 3, -2), Int(5)), w(QuadInt(disc, -1, 4), Int(3));
  EXPECT_EQ((z * w) / w, z);
  EXPECT_EQ(z - z, QuadRat(disc));
  EXPECT_EQ(z * z.inverse(), QuadRat(QuadInt(disc, 1, 0)));
  EXPECT_EQ(z.norm(), norm_form(disc, z.u(), z.v()));
  std::complex<double> c = z.to_complex();
  EXPECT_NEAR(std::norm(c), static_cast<double>(z.norm()), 1e-12);
}

TEST(QuadInt, FloorFracInUnitSquare) {
  Discriminant disc(2);
  FloorFrac f = floor_frac(disc, Rat(-7, 3), Rat(5, 2));
  EXPECT_EQ(f.floor, QuadInt(disc, -3, 2));
  EXPECT_EQ(f.frac_u, Rat(2, 3));
  EXPECT_EQ(f.frac_v, Rat(1, 2));
}

TEST(QuadInt, ApproximationMeetsBound) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    std::complex<double> z(0.318309886, 0.2718281828);
    Rat bound(1, 30);
    Approximation a = approximate(disc, z, bound);
    EXPECT_FALSE(a.beta.is_zero());
    EXPECT_LT(a.residual_sq, bound * bound);
    double resid = std::abs(value(a.beta) * z - value(a.alpha));
    EXPECT_LT(resid, 1.0 / 30 + 1e-9);
  }
}

TEST(QuadInt, SigmaCoordsRoundTrip) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    auto [u, v] = sigma_coords(disc, {0.75, 1.25});
    std::complex<double> back = QuadRat(disc, u, v).to_complex();
    EXPECT_NEAR(back.real(), 0.75, 1e-12);
    EXPECT_NEAR(back.imag(), 1.25, 1e-12);
  }
}
