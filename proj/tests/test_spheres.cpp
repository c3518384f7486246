#include "ford/spheres.hpp"
#include "ford/window.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ford;

namespace {

bool tangent_float(const FordSphere& p, const FordSphere& q) {
  std::complex<double> z = p.tangent().to_complex(), w = q.tangent().to_complex();
  double r = static_cast<double>(p.radius()), s = static_cast<double>(q.radius());
  double dist = std::sqrt(std::norm(z - w) + (r - s) * (r - s));
  return std::abs(dist - (r + s)) < 1e-10;
}

std::vector<FordSphere> small_spheres(Discriminant d) {
  return enumerate_ring(d, Int(8), Window::unit_cell(), coprime);
}

}  // namespace

TEST(Spheres, CanonicalFormIgnoresUnits) {
  for (int d : kHeegner) {
    Discriminant disc(d);
    QuadInt alpha(disc, 2, 1), beta(disc, 3, -1);
    if (!coprime(alpha, beta)) continue;
    FordSphere s(alpha, beta);
    for (const auto& u : units(disc)) EXPECT_EQ(FordSphere(u * alpha, u * beta), s);
    EXPECT_TRUE(in_canonical_sector(s.beta()));
    EXPECT_EQ(s.radius(), Rat(1, 2 * beta.norm()));
  }
}

TEST(Spheres, AlgebraicTangencyMatchesGeometry) {
  for (int d : kHeegner) {
    auto ss = small_spheres(Discriminant(d));
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = i + 1; j < ss.size(); ++j) {
        EXPECT_EQ(tangent(ss[i], ss[j]), tangent_float(ss[i], ss[j]));
        EXPECT_EQ(tangent(ss[i], ss[j]), tangent(to_normal(ss[i]), to_normal(ss[j])));
        EXPECT_FALSE(interiors_meet(to_normal(ss[i]), to_normal(ss[j])));
      }
  }
}

TEST(Spheres, PlaneTouchesIntegerSpheres) {
  Discriminant disc(2);
  FordSphere plane = FordSphere::plane(disc);
  EXPECT_TRUE(tangent(plane, FordSphere(QuadInt(disc, 5, 3), QuadInt(disc, 1, 0))));
  EXPECT_FALSE(tangent(plane, FordSphere(QuadInt(disc, 1, 0), QuadInt(disc, 0, 1))));
}

TEST(Spheres, MobiusMapsPreserveTangency) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int d : {1, 2, 3, 7}) {
    Discriminant disc(d);
    auto ss = small_spheres(disc);
    int made = 0;
    while (made < 5) {
      QuadInt a(disc, coord(rng), coord(rng)), b(disc, coord(rng), coord(rng)), c(disc, coord(rng), coord(rng));
      // d chosen so that ad - bc = 1 when a divides 1 + bc
      if (a.is_zero()) continue;
      auto dd = divide_exact(QuadInt(disc, 1, 0) + b * c, a);
      if (!dd) continue;
      MobiusMap m(a, b, c, *dd);
      ASSERT_TRUE(m.unimodular());
      ++made;
      for (std::size_t i = 0; i < ss.size(); ++i)
        for (std::size_t j = i + 1; j < ss.size(); ++j)
          EXPECT_EQ(tangent(m.apply(ss[i]), m.apply(ss[j])), tangent(ss[i], ss[j]));
      for (const auto& s : ss) {
        ExtPoint image = m.apply(ExtPoint(s.tangent()));
        FordSphere t = m.apply(s);
        if (t.is_plane())
          EXPECT_FALSE(image.has_value());
        else
          EXPECT_EQ(*image, t.tangent());
      }
    }
  }
}

TEST(Spheres, MutualRadiiGiveMutualTangency) {
  Discriminant disc(1);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int i = 0; i < 40; ++i) {
    QuadRat p(disc, Rat(coord(rng), 3), Rat(coord(rng), 4));
    QuadRat q(disc, Rat(coord(rng), 5), Rat(coord(rng), 2));
    QuadRat r(disc, Rat(coord(rng), 7), Rat(coord(rng), 3));
    if (p == q || q == r || p == r) continue;
    auto radii = mutual_radii(p, q, r);
    std::array<QuadRat, 3> pts{p, q, r};
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        Rat dist = (pts[a] - pts[b]).norm();
        EXPECT_TRUE(surd_tangent(dist, radii[a], radii[b]));
        EXPECT_NEAR(static_cast<double>(dist), 4 * radii[a].value() * radii[b].value(), 1e-9);
      }
  }
}

TEST(Spheres, QuadricTangencyBridge) {
  Quad4 a{1, 0, 0, 0}, b{0, 1, 0, 0}, c{0, 0, 1, 0};
  EXPECT_TRUE(on_quadric(a));
  EXPECT_EQ(q_form(a, b), 1);
  EXPECT_TRUE(bary_spheres_tangent(a, b));
  Quad4 e{1, 1, 1, -1};
  EXPECT_TRUE(on_quadric(e));
  EXPECT_EQ(q_form(e, a), 1);
  EXPECT_TRUE(bary_spheres_tangent(e, a));
  EXPECT_TRUE(bary_spheres_tangent(e, c));
  Quad4 f{12, 12, 3, -8};
  EXPECT_TRUE(on_quadric(f));
  EXPECT_EQ(q_form(f, a) == 1, bary_spheres_tangent(f, a));
}

TEST(Spheres, CompletionsAreTangentToTheTriple) {
  Discriminant disc(3);
  FordSphere s1(QuadInt(disc, 0, 0), QuadInt(disc, 1, 0));
  FordSphere s2(QuadInt(disc, 1, 0), QuadInt(disc, 1, 0));
  FordSphere s3(QuadInt(disc, 0, 1), QuadInt(disc, 1, 0));
  ASSERT_TRUE(tangent(s1, s2) && tangent(s2, s3) && tangent(s1, s3));
  auto [p, q] = completions(s1, s2, s3);
  for (const auto& s : {p, q})
    for (const auto& t : {s1, s2, s3}) EXPECT_TRUE(tangent(s, t));
  EXPECT_FALSE(p == q);
  auto [ap, aq] = approximate_completions(approximate(to_normal(s1)), approximate(to_normal(s2)),
                                          approximate(to_normal(s3)));
  const FordSphere& finite = p.is_plane() ? q : p;
  ASSERT_FALSE(finite.is_plane());
  const ApproxSphere& af = ap.plane ? aq : ap;
  EXPECT_NEAR(af.radius, static_cast<double>(finite.radius()), 1e-9);
  EXPECT_NEAR(std::abs(af.tangent - finite.tangent().to_complex()), 0.0, 1e-9);
}

TEST(Spheres, SurdRadiusSquareRoot) {
  SurdRadius r = SurdRadius::sqrt_of(Rat(12, 25));
  EXPECT_EQ(r.coeff, Rat(2, 5));
  EXPECT_EQ(r.radicand, 3);
  EXPECT_EQ(r.square(), Rat(12, 25));
}

TEST(Spheres, ContactGraphOfFourMutuallyTangent) {
  Discriminant disc(3);
  std::vector<FordSphere> ss{FordSphere(QuadInt(disc, 0, 0), QuadInt(disc, 1, 0)),
                             FordSphere(QuadInt(disc, 1, 0), QuadInt(disc, 1, 0)),
                             FordSphere(QuadInt(disc, 0, 1), QuadInt(disc, 1, 0)), FordSphere::plane(disc)};
  ContactGraph g = contact_graph(ss);
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_FALSE(g.is_octahedron());
}

TEST(Spheres, WindowParsing) {
  Window w = Window::parse("0,0,1/2,1");
  EXPECT_TRUE(w.contains(Rat(1, 2), Rat(1)));
  EXPECT_FALSE(w.contains(Rat(3, 4), Rat(0)));
  Window t = Window::parse("triangle");
  EXPECT_TRUE(t.contains(Rat(1, 2), Rat(1, 2)));
  EXPECT_FALSE(t.contains(Rat(0), Rat(1, 2)) && t.contains(Rat(1), Rat(1)));
  EXPECT_THROW(Window::parse("1,2,3"), std::invalid_argument);
}
