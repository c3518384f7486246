#include "ford/eisenstein.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace ford;
using namespace ford::eisenstein;

namespace {

// Tangent point and radius of a barycentric quadruple computed directly in floating point.
std::pair<std::complex<double>, double> bary_float(const Quad4& q) {
  double a = static_cast<double>(q[0]), b = static_cast<double>(q[1]), c = static_cast<double>(q[2]);
  double n = a + b + c;
  std::complex<double> one_plus_omega(0.5, std::sqrt(3.0) / 2);
  return {(b + c * one_plus_omega) / n, 1 / (2 * n)};
}

}  // namespace

TEST(Eisenstein, OmegaCoordinates) {
  QuadInt w = from_omega(0, 1);
  EXPECT_EQ(w * w + w + QuadInt(disc(), 1, 0), QuadInt(disc()));
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      QuadInt a = from_omega(x, y);
      EXPECT_EQ(omega_coords(a), std::make_pair(Int(x), Int(y)));
      EXPECT_EQ(a.norm(), omega_norm(x, y));
      EXPECT_EQ(omega_norm(x, y), x * x - x * y + y * y);
    }
}

TEST(Eisenstein, GseaGoldenTrace) {
  Quad4 q{12, 12, 3, -8};
  GseaTrace t = gsea(q);
  EXPECT_EQ(t.codes, (std::vector<int>{4, 3, 1, 2, 1, 4}));
  EXPECT_EQ(rank(q), 6u);
  EXPECT_EQ(t.terminal(), (Quad4{0, 0, 0, 1}));
  auto ps = parents(q);
  std::set<Quad4> got(ps.begin(), ps.end());
  EXPECT_EQ(got, (std::set<Quad4>{{2, 2, 0, -1}, {5, 6, 2, -4}, {6, 5, 2, -4}}));
}

TEST(Eisenstein, StepIsTheReflectionMatrix) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coord(-30, 30);
  for (int k = 1; k <= 4; ++k) {
    Matrix4 m = reflection_matrix(k);
    EXPECT_EQ(multiply(m, m), identity4());
    for (int i = 0; i < 20; ++i) {
      Quad4 q{coord(rng), coord(rng), coord(rng), coord(rng)};
      Quad4 expected = q;
      for (int j = 0; j < 4; ++j)
        if (j != k - 1) expected[j] += q[k - 1];
      expected[k - 1] = -q[k - 1];
      EXPECT_EQ(gsea_step(q, k), expected);
      EXPECT_EQ(row_times(q, m), expected);
      EXPECT_EQ(gsea_step(gsea_step(q, k), k), q);
    }
  }
}

TEST(Eisenstein, StepsPreserveTheQuadric) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> slot(1, 4);
  Quad4 q{1, 0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    q = gsea_step(q, slot(rng));
    EXPECT_TRUE(on_quadric(q));
  }
}

TEST(Eisenstein, BarycentricMatchesRing) {
  Window tri = Window::fundamental_triangle();
  BaryDescent descend;
  for (const FordSphere& s : ring_spheres(Int(40), tri)) {
    Quad4 q = to_bary(s);
    EXPECT_TRUE(on_quadric(q));
    EXPECT_EQ(q[0] + q[1] + q[2], s.beta().norm());
    auto [z, r] = bary_float(q);
    EXPECT_NEAR(std::abs(z - s.tangent().to_complex()), 0.0, 1e-12);
    EXPECT_NEAR(r, static_cast<double>(s.radius()), 1e-15);
    EXPECT_EQ(sphere_from_quad(q), to_normal(s));
    EXPECT_EQ(descend(q), s);
  }
}

TEST(Eisenstein, ThreeFamiliesAgree) {
  Window tri = Window::fundamental_triangle();
  std::set<Quad4> ring, geo, bary;
  for (const auto& s : ring_spheres(Int(25), tri)) ring.insert(to_bary(s));
  for (const auto& q : geometric_quads_bounded(Int(25), tri).spheres) geo.insert(q);
  for (const auto& q : bary_solutions(Int(25), tri)) bary.insert(q);
  EXPECT_EQ(ring, geo);
  EXPECT_EQ(ring, bary);
}

TEST(Eisenstein, TetraRuleGivesTheOtherCompletion) {
  Quad4 a{1, 0, 0, 0}, b{0, 1, 0, 0}, c{0, 0, 1, 0}, d{0, 0, 0, 1};
  Quad4 e = tetra_rule(a, b, c, d);
  EXPECT_EQ(e, (Quad4{1, 1, 1, -1}));
  for (const auto& x : {a, b, c}) EXPECT_EQ(q_form(e, x), 1);
}

TEST(Eisenstein, NormFormWitness) {
  for (int n = 0; n <= 300; ++n) {
    bool brute = false;
    for (int m = -20; m <= 20 && !brute; ++m)
      for (int k = -20; k <= 20 && !brute; ++k) brute = m * m + m * k + k * k == n;
    auto w = eisenstein_norm_witness(n);
    EXPECT_EQ(w.has_value(), brute) << n;
    if (w) EXPECT_EQ(w->first * w->first + w->first * w->second + w->second * w->second, n);
  }
  for (const auto& s : ring_spheres(Int(30), Window::fundamental_triangle())) EXPECT_TRUE(cor46(to_bary(s)));
}

TEST(Eisenstein, QuadraticSurdsArePeriodic) {
  FMapOrbit golden = f_map_orbit(QuadSurd(1, 1, 5, 2), 500);
  EXPECT_EQ(golden.verdict, OrbitVerdict::Periodic);
  FMapOrbit root2 = f_map_orbit(QuadSurd(0, 1, 2, 1), 500);
  EXPECT_EQ(root2.verdict, OrbitVerdict::Periodic);
  FMapOrbit third = f_map_orbit(QuadSurd::rational(7, 3), 500);
  EXPECT_EQ(third.verdict, OrbitVerdict::Terminates);
}

TEST(Eisenstein, FMapFloatOracle) {
  QuadSurd x(1, 1, 5, 2);
  double v = x.value();
  for (int i = 0; i < 10; ++i) {
    double expected = v > 1 ? v - 1 : v / (1 - v);
    x = f_map(x);
    EXPECT_NEAR(x.value(), expected, 1e-9);
    v = x.value();
  }
}
