#include "ford/gaussian.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace ford;
using namespace ford::gaussian;

namespace {

FordSphere sphere(int ax, int ay, int bx, int by) { return FordSphere(gi(ax, ay), gi(bx, by)); }

}  // namespace

TEST(Gaussian, SeaRankAndParents) {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& s : ring_spheres(Int(n), Window::unit_cell())) {
      if (s.beta().norm() != n || sea_rank(s.alpha(), s.beta()) < 1) continue;
      auto [p, q] = parents(s.alpha(), s.beta());
      FordSphere ps(p.first, p.second), qs(q.first, q.second);
      EXPECT_TRUE(tangent(ps, qs));
      EXPECT_TRUE(tangent(ps, s));
      EXPECT_TRUE(tangent(qs, s));
    }
  }
  EXPECT_THROW(parents(gi(1, 0), gi(0, 0)), std::invalid_argument);
}

TEST(Gaussian, OctahedralExtensionsAreOctahedra) {
  Triangle t{sphere(0, 0, 1, 0), sphere(1, 0, 1, 0), sphere(1, 0, 0, 0)};
  for (const auto& sx : octahedral_extensions(t)) {
    std::vector<FordSphere> v(sx.begin(), sx.end());
    ContactGraph g = contact_graph(v);
    EXPECT_TRUE(g.is_octahedron());
    for (int i = 0; i < 3; ++i) EXPECT_FALSE(g.has_edge(i, i + 3));
    auto fs = faces(sx);
    EXPECT_EQ(fs.size(), 8u);
    for (const auto& f : fs) {
      EXPECT_TRUE(tangent(f[0], f[1]));
      EXPECT_TRUE(tangent(f[1], f[2]));
      EXPECT_TRUE(tangent(f[0], f[2]));
    }
  }
}

TEST(Gaussian, ThreeFamiliesAgree) {
  Window cell = Window::unit_cell();
  std::set<NormalSphere> ring, geo, bary;
  for (const auto& s : ring_spheres(Int(20), cell)) ring.insert(to_normal(s));
  for (const auto& s : geometric_spheres_bounded(Int(20), cell).spheres) geo.insert(to_normal(s));
  for (const auto& s : bary_images(Int(20), cell, Int(-20), Int(60))) bary.insert(s);
  EXPECT_EQ(ring, geo);
  EXPECT_EQ(ring, bary);
}

TEST(Gaussian, ToBarySatisfiesDescartesRelation) {
  for (const auto& s : ring_spheres(Int(30), Window::unit_cell())) {
    SignedTriple t = to_bary(s.alpha(), s.beta());
    EXPECT_EQ(t.m * t.m, t.a * t.b + t.a * t.c + t.b * t.c);
    EXPECT_EQ(t.a + t.c, s.beta().norm());
    auto img = m_image(t);
    ASSERT_TRUE(img.has_value());
    EXPECT_EQ(*img, to_normal(s));
    ExactSphere3 pre = m_inverse_image(s);
    ExactSphere3 direct = bary_sphere3(t);
    EXPECT_TRUE(pre.tangent == direct.tangent);
    EXPECT_TRUE(pre.radius == direct.radius);
  }
}

TEST(Gaussian, MImageFloatOracle) {
  const std::complex<double> i(0, 1), omega(-0.5, std::sqrt(3.0) / 2);
  for (const auto& s : ring_spheres(Int(10), Window::unit_cell())) {
    SignedTriple t = to_bary(s.alpha(), s.beta());
    double shift = static_cast<double>(t.m) / std::sqrt(3.0);
    double a = static_cast<double>(t.a) + shift, b = static_cast<double>(t.b) + shift,
           c = static_cast<double>(t.c) + shift;
    double w = a + b + c;
    std::complex<double> z = (b + c * (1.0 + omega)) / w;
    double r = 1 / (2 * w);
    std::complex<double> image = i * z / ((1.0 - z) * omega);
    double radius = r / std::norm(1.0 - z);
    EXPECT_NEAR(std::abs(image - s.tangent().to_complex()), 0.0, 1e-9);
    EXPECT_NEAR(radius, static_cast<double>(s.radius()), 1e-9);
  }
}

TEST(Gaussian, DescartesConversion) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> coord(0, 30);
  int tested = 0;
  while (tested < 50) {
    DescartesTriple t{coord(rng), coord(rng), coord(rng)};
    if (!is_descartes_triple(t)) continue;
    ++tested;
    for (int sign : {1, -1}) {
      Quad4 q = descartes_convert(t, sign);
      EXPECT_TRUE(is_descartes_quad(q));
      Int s = q[0] + q[1] + q[2] + q[3];
      EXPECT_EQ(s * s, 2 * (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]));
    }
  }
}

TEST(Gaussian, TwoSquareAndNormWitnesses) {
  for (const auto& s : ring_spheres(Int(30), Window::unit_cell())) {
    SignedTriple t = to_bary(s.alpha(), s.beta());
    DescartesTriple d{t.a, t.b, t.c};
    if (!is_descartes_triple(d)) continue;
    Quad4 q = descartes_convert(d, 1);
    auto w = cor510_witness(q);
    if (!w) continue;
    EXPECT_EQ(w->squares.first * w->squares.first + w->squares.second * w->squares.second, q[0] + q[1]);
    EXPECT_TRUE(cor510_check(q));
  }
}

TEST(Gaussian, CanonicalOctahedronResolvesDenominator) {
  MobiusOctahedron o = mobius_octahedron(QuadRat(gi(0, 0)), QuadRat(gi(1, 0)), QuadRat(gi(0, 1)));
  ASSERT_TRUE(o.finite());
  auto v = resolve_denominator(o);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, CrossDenominator::BC_DF);
  EXPECT_TRUE(eq9_check(o));
  EXPECT_TRUE(octahedron_contact_graph(o).is_octahedron());
}

TEST(Gaussian, CrossRatioFloatOracle) {
  QuadRat z(gi(3, 1)), q(gi(0, 0)), r(gi(1, 2)), s(gi(-2, 1));
  ExtPoint cr = cross_ratio(z, q, r, s);
  ASSERT_TRUE(cr.has_value());
  auto c = [](const QuadRat& x) { return x.to_complex(); };
  std::complex<double> expected = (c(z) - c(q)) * (c(r) - c(s)) / ((c(z) - c(s)) * (c(r) - c(q)));
  EXPECT_NEAR(std::abs(cr->to_complex() - expected), 0.0, 1e-12);
}

TEST(Gaussian, SphereOverTangency) {
  Circle c1{QuadRat(gi(0, 0)), Rat(1)}, c2{QuadRat(gi(2, 0)), Rat(1)};
  NormalSphere s = sphere_over_tangency(c1, c2, QuadRat(gi(1, 0)));
  EXPECT_EQ(s.radius(), Rat(1, 2));
  EXPECT_EQ(s.tangent(), QuadRat(gi(1, 0)));
}
