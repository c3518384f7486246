#include "ford/verify.hpp"

#include "ford/circles.hpp"
#include "ford/eisenstein.hpp"
#include "ford/gaussian.hpp"
#include "ford/general.hpp"
#include "ford/quadint.hpp"
#include "ford/spheres.hpp"
#include "ford/window.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ford::verify {

namespace {

CheckReport timed(const std::string& name, const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

template <class T>
std::size_t missing(const std::set<T>& from, const std::set<T>& in) {
  std::size_t k = 0;
  for (const auto& x : from)
    if (!in.count(x)) ++k;
  return k;
}

std::string quad_list(const std::vector<Quad4>& qs) {
  std::string s;
  for (const auto& q : qs) s += (s.empty() ? "" : " ") + quad_string(q);
  return s;
}

}  // namespace

CheckReport gsea_golden() {
  return timed("gSEA golden trace (12,12,3,-8)", [](CheckReport& r) {
    const Quad4 q{12, 12, 3, -8};
    eisenstein::GseaTrace t = eisenstein::gsea(q);
    const std::vector<int> codes = {4, 3, 1, 2, 1, 4};
    std::array<Quad4, 3> ps = eisenstein::parents(q);
    std::vector<Quad4> got(ps.begin(), ps.end());
    std::sort(got.begin(), got.end());
    std::vector<Quad4> want = {{2, 2, 0, -1}, {5, 6, 2, -4}, {6, 5, 2, -4}};
    std::sort(want.begin(), want.end());
    std::ostringstream os;
    os << "codes [";
    for (std::size_t i = 0; i < t.codes.size(); ++i) os << (i ? "," : "") << t.codes[i];
    os << "], rank " << t.codes.size() << ", terminal " << quad_string(t.terminal()) << ", parents " << quad_list(got);
    r.detail = os.str();
    r.checked = 3;
    r.passed = t.codes == codes && eisenstein::rank(q) == 6 && got == want;
  });
}

CheckReport sea_golden() {
  return timed("SEA golden trace (14,5)", [](CheckReport& r) {
    circles::SeaRun run = circles::slow_euclid(14, 5);
    std::string word = circles::word_string(run.word);
    r.detail = "word " + word + ", terminal (" + run.terminal.first.str() + "," + run.terminal.second.str() + ")";
    r.checked = 2;
    r.passed = word == "L,L,R,L,L,L" && run.terminal == std::make_pair(Int(1), Int(1));
  });
}

namespace {

std::set<circles::NormalCircle> circle_sets(const Int& max_den, int depth, bool prune, std::size_t& p_size,
                                            std::set<circles::NormalCircle>& ring, std::set<circles::NormalCircle>& bary) {
  const circles::Interval unit{Rat(0), Rat(1)};
  for (const auto& c : circles::enumerate_ring(max_den, unit)) ring.insert(circles::to_normal(c));
  for (const auto& t : circles::enumerate_bary(max_den * max_den, unit)) bary.insert(circles::bary_circle(t));
  std::set<circles::NormalCircle> geo;
  auto gen = prune ? circles::generate(depth, unit, max_den) : circles::generate(depth, unit);
  for (const auto& c : gen)
    if (c.b() <= max_den) geo.insert(circles::to_normal(c));
  p_size = ring.size();
  return geo;
}

void compare_circles(CheckReport& r, const Int& max_den, int depth, bool prune) {
  std::size_t n = 0;
  std::set<circles::NormalCircle> ring, bary;
  auto geo = circle_sets(max_den, depth, prune, n, ring, bary);
  std::ostringstream os;
  os << "|P|=" << ring.size() << " |G|=" << geo.size() << " |B|=" << bary.size() << " at depth " << depth;
  std::size_t miss = missing(ring, geo);
  if (miss) {
    int need = 0;
    std::string example;
    for (const auto& c : circles::enumerate_ring(max_den, {Rat(0), Rat(1)})) {
      int k = circles::stern_brocot_depth(c);
      if (k > need) {
        need = k;
        example = c.str();
      }
    }
    os << "; G misses " << miss << " ring circles, deepest " << example << " needs depth " << need;
  }
  r.detail = os.str();
  r.checked = ring.size();
  r.passed = ring == geo && ring == bary;
}

}  // namespace

CheckReport circle_equality(const Int& max_den, int depth) {
  return timed("Ford circle equality P=G=B, b<=" + max_den.str() + ", depth " + std::to_string(depth),
               [&](CheckReport& r) { compare_circles(r, max_den, depth, false); });
}

CheckReport circle_equality_full_depth(const Int& max_den) {
  return timed("Ford circle equality P=G=B, b<=" + max_den.str() + ", full depth", [&](CheckReport& r) {
    int need = 0;
    for (const auto& c : circles::enumerate_ring(max_den, {Rat(0), Rat(1)}))
      need = std::max(need, circles::stern_brocot_depth(c));
    compare_circles(r, max_den, need, true);
  });
}

CheckReport tangency_bridge(int bound) {
  return timed("tangency bridge q_form=1 <=> tangent, |entries|<=" + std::to_string(bound), [&](CheckReport& r) {
    std::vector<Quad4> pts;
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b)
        for (int c = -bound; c <= bound; ++c) {
          int n = a + b + c;
          if (n <= 0) continue;
          int e = a * b + a * c + b * c;
          if (e % n != 0) continue;
          int d = -e / n;
          if (std::abs(d) > bound) continue;
          pts.push_back({a, b, c, d});
        }
    std::size_t tangent_pairs = 0, mismatches = 0;
    std::string first;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        bool algebraic = q_form(pts[i], pts[j]) == 1;
        bool geometric = bary_spheres_tangent(pts[i], pts[j]);
        if (geometric) ++tangent_pairs;
        if (algebraic != geometric) {
          if (!mismatches) first = quad_string(pts[i]) + " " + quad_string(pts[j]);
          ++mismatches;
        }
      }
    }
    std::size_t pairs = pts.size() * (pts.size() - 1) / 2;
    std::ostringstream os;
    os << pts.size() << " quadric points, " << pairs << " pairs, " << tangent_pairs << " tangent, " << mismatches
       << " mismatches";
    if (mismatches) os << " (first " << first << ")";
    r.detail = os.str();
    r.checked = pairs;
    r.passed = mismatches == 0 && !pts.empty();
  });
}

CheckReport eisenstein_equality(const Int& norm_bound) {
  return timed("Eisenstein equality P=G=B, |beta|^2<=" + norm_bound.str(), [&](CheckReport& r) {
    const Window tri = Window::fundamental_triangle();
    std::set<Quad4> ring_q, geo_q, bary_q;
    std::set<NormalSphere> ring_s, geo_s, bary_s;
    for (const auto& s : eisenstein::ring_spheres(norm_bound, tri)) {
      ring_q.insert(eisenstein::to_bary(s));
      ring_s.insert(to_normal(s));
    }
    eisenstein::TetraFamily fam = eisenstein::geometric_quads_bounded(norm_bound, tri);
    for (const auto& q : fam.spheres) {
      geo_q.insert(q);
      geo_s.insert(sphere_from_quad(q));
    }
    for (const auto& q : eisenstein::bary_solutions(norm_bound, tri)) {
      bary_q.insert(q);
      bary_s.insert(sphere_from_quad(q));
    }
    std::ostringstream os;
    os << "|P|=" << ring_q.size() << " |G|=" << geo_q.size() << " |B|=" << bary_q.size() << " (" << fam.tetrahedra
       << " tetrahedra)";
    if (ring_q != geo_q) os << "; P\\G " << missing(ring_q, geo_q) << ", G\\P " << missing(geo_q, ring_q);
    if (ring_q != bary_q) os << "; P\\B " << missing(ring_q, bary_q) << ", B\\P " << missing(bary_q, ring_q);
    r.detail = os.str();
    r.checked = ring_q.size();
    r.passed = !ring_q.empty() && ring_q == geo_q && ring_q == bary_q && ring_s == geo_s && ring_s == bary_s;
  });
}

CheckReport gaussian_equality(const Int& norm_bound) {
  return timed("Gaussian equality P=G=M(B), |beta|^2<=" + norm_bound.str(), [&](CheckReport& r) {
    const Window cell = Window::unit_cell();
    auto ring = gaussian::ring_spheres(norm_bound, cell);
    std::set<FordSphere> ring_set(ring.begin(), ring.end());
    gaussian::OctaFamily fam = gaussian::geometric_spheres_bounded(norm_bound, cell);
    std::set<FordSphere> geo_set(fam.spheres.begin(), fam.spheres.end());
    std::set<NormalSphere> ring_normal, image;
    for (const auto& s : ring) ring_normal.insert(to_normal(s));
    for (const auto& s : gaussian::bary_images(norm_bound, cell, Int(-20), Int(60))) image.insert(s);
    std::size_t bad_octa = 0;
    for (const auto& sext : fam.octahedra) {
      ContactGraph g = contact_graph(std::vector<FordSphere>(sext.begin(), sext.end()));
      bool ok = g.is_octahedron() && !g.has_edge(0, 3) && !g.has_edge(1, 4) && !g.has_edge(2, 5);
      if (!ok) ++bad_octa;
    }
    std::ostringstream os;
    os << "|P|=" << ring_set.size() << " |G|=" << geo_set.size() << " |M(B)|=" << image.size() << "; "
       << fam.octahedra.size() << " sextuples, " << bad_octa << " non-octahedral";
    if (ring_set != geo_set) os << "; P\\G " << missing(ring_set, geo_set) << ", G\\P " << missing(geo_set, ring_set);
    if (ring_normal != image)
      os << "; P\\M(B) " << missing(ring_normal, image) << ", M(B)\\P " << missing(image, ring_normal);
    r.detail = os.str();
    r.checked = ring_set.size() + fam.octahedra.size();
    r.passed = !ring_set.empty() && ring_set == geo_set && ring_normal == image && bad_octa == 0;
  });
}

CheckReport general_equality(int d, const Int& norm_bound) {
  return timed("mu(P) = B for D=" + std::to_string(d) + ", |beta|^2<=" + norm_bound.str(), [&](CheckReport& r) {
    Discriminant disc(d);
    const Window cell = Window::unit_cell();
    auto ring = general::ring_spheres(disc, norm_bound, cell);
    std::vector<general::SigmaBary> images;
    std::size_t float_bad = 0;
    for (const auto& s : ring) {
      images.push_back(general::mu_apply(s));
      ApproxSphere want = general::mu_float(s);
      ApproxSphere got = general::bary_float(images.back());
      if (std::abs(want.tangent - got.tangent) > 1e-9 || std::abs(want.radius - got.radius) > 1e-9) ++float_bad;
    }
    std::set<general::SigmaBary> image_set(images.begin(), images.end());
    auto fam = general::bary_family(disc, norm_bound, cell);
    std::set<general::SigmaBary> fam_set(fam.begin(), fam.end());
    std::size_t pair_bad = 0, tangent_pairs = 0;
    std::vector<NormalSphere> normal;
    for (const auto& s : ring) normal.push_back(to_normal(s));
    for (std::size_t i = 0; i < ring.size(); ++i) {
      for (std::size_t j = i + 1; j < ring.size(); ++j) {
        Int pg = general::pair_norm_general(images[i], images[j]);
        bool geometric = tangent(normal[i], normal[j]);
        if (geometric) ++tangent_pairs;
        if (pg != pair_norm(ring[i], ring[j]) || (pg == 1) != geometric || pg < 1) ++pair_bad;
      }
    }
    std::ostringstream os;
    os << "|mu(P)|=" << image_set.size() << " |B|=" << fam_set.size() << ", " << tangent_pairs << " tangent pairs, "
       << pair_bad << " pairing failures, " << float_bad << " float mismatches";
    if (image_set != fam_set)
      os << "; mu(P)\\B " << missing(image_set, fam_set) << ", B\\mu(P) " << missing(fam_set, image_set);
    r.detail = os.str();
    r.checked = image_set.size();
    r.passed = !image_set.empty() && image_set == fam_set && pair_bad == 0 && float_bad == 0 &&
               image_set.size() == ring.size();
  });
}

CheckReport general_equality(const std::vector<int>& ds, const Int& norm_bound) {
  return timed("mu(P) = B for D in {1,2,3,7,11,19}, |beta|^2<=" + norm_bound.str(), [&](CheckReport& r) {
    r.passed = true;
    for (int d : ds) {
      CheckReport one = general_equality(d, norm_bound);
      r.checked += one.checked;
      r.passed = r.passed && one.passed;
      std::ostringstream os;
      os << std::fixed << std::setprecision(1) << one.seconds;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("D=") + std::to_string(d) + " " +
                  (one.passed ? "ok" : "FAIL") + " [" + one.detail + ", " + os.str() + "s]";
    }
  });
}

CheckReport corollaries(int bound) {
  return timed("corollaries over constructed solutions, |entries|<=" + std::to_string(bound), [&](CheckReport& r) {
    const std::int64_t h = bound;
    std::size_t c25 = 0, c46 = 0, c510 = 0, fails = 0;
    std::string first;
    auto fail = [&](const std::string& what) {
      if (!fails) first = what;
      ++fails;
    };
    // circles: s + t > 0, st + su + tu = 0, gcd 1
    for (std::int64_t s = -h; s <= h; ++s)
      for (std::int64_t t = -h; t <= h; ++t) {
        std::int64_t n = s + t;
        if (n <= 0 || (s * t) % n != 0) continue;
        std::int64_t u = -(s * t) / n;
        if (std::abs(u) > h || std::gcd(std::gcd(s, t), u) != 1) continue;
        ++c25;
        if (!circles::check_square({s, t, u})) fail("square " + std::to_string(s) + "," + std::to_string(t));
      }
    // tetrahedral quadric: a + b + c > 0, gcd 1
    for (std::int64_t a = -h; a <= h; ++a)
      for (std::int64_t b = -h; b <= h; ++b)
        for (std::int64_t c = -h; c <= h; ++c) {
          std::int64_t n = a + b + c;
          if (n <= 0) continue;
          std::int64_t e = a * b + a * c + b * c;
          if (e % n != 0) continue;
          std::int64_t d = -e / n;
          if (std::abs(d) > h || std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) continue;
          ++c46;
          Quad4 q{a, b, c, d};
          if (!eisenstein::cor46(q)) fail("norm form " + quad_string(q));
        }
    // Descartes triples with a positive-weight sign of m, converted with both signs
    for (std::int64_t a = -h; a <= h; ++a)
      for (std::int64_t b = -h; b <= h; ++b)
        for (std::int64_t c = -h; c <= h; ++c) {
          std::int64_t e = a * b + a * c + b * c;
          if (e < 0) continue;
          auto m = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(e))));
          if (m * m != e || std::gcd(std::gcd(a, b), c) != 1) continue;
          // positive weight a+b+c+sqrt(3) m for m >= 0, decided exactly
          std::int64_t s = a + b + c;
          bool positive = s > 0 || (m > 0 && s * s < 3 * m * m);
          if (!positive) continue;
          for (int sign : {1, -1}) {
            Quad4 q = gaussian::descartes_convert({a, b, c}, sign);
            if (abs(q[3]) > h) continue;
            ++c510;
            if (!gaussian::is_descartes_quad(q) || !gaussian::cor510_check(q)) fail("Descartes " + quad_string(q));
          }
        }
    std::ostringstream os;
    os << c25 << " circle triples, " << c46 << " tetrahedral quadruples, " << c510 << " Descartes quadruples, "
       << fails << " failures";
    if (fails) os << " (first " << first << ")";
    r.detail = os.str();
    r.checked = c25 + c46 + c510;
    r.passed = fails == 0 && c25 && c46 && c510;
  });
}

CheckReport coprime_agreement(int d, std::size_t samples, std::uint64_t seed) {
  return timed("coprimality tests agree, D=" + std::to_string(d), [&](CheckReport& r) {
    Discriminant disc(d);
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(d));
    std::uniform_int_distribution<int> coord(-60, 60), small(-4, 4);
    std::size_t disagree = 0, coprime_count = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      QuadInt a(disc, coord(rng), coord(rng)), b(disc, coord(rng), coord(rng));
      if (i % 2 == 1) {
        QuadInt f(disc, small(rng), small(rng));
        if (f.is_zero()) f = QuadInt(disc, 2, 1);
        a = f * a;
        b = f * b;
      }
      if (a.is_zero() && b.is_zero()) b = QuadInt(disc, 1, 0);
      bool g = coprime(a, b);
      bool e = coprime_by_sea(a, b);
      if (g) ++coprime_count;
      if (g != e) ++disagree;
    }
    r.detail = std::to_string(samples) + " pairs, " + std::to_string(coprime_count) + " coprime, " +
               std::to_string(disagree) + " disagreements";
    r.checked = samples;
    r.passed = disagree == 0;
  });
}

CheckReport coprime_agreement(const std::vector<int>& ds, std::size_t samples, std::uint64_t seed) {
  return timed("coprimality tests agree for D in {1,2,3,7,11}", [&](CheckReport& r) {
    r.passed = true;
    for (int d : ds) {
      CheckReport one = coprime_agreement(d, samples, seed);
      r.checked += one.checked;
      r.passed = r.passed && one.passed;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("D=") + std::to_string(d) + " " + one.detail;
    }
  });
}

CheckReport fmap_periodicity(std::size_t rationals, std::uint64_t seed) {
  return timed("f-map orbits", [&](CheckReport& r) {
    using eisenstein::QuadSurd;
    const std::vector<std::pair<std::string, QuadSurd>> surds = {
        {"sqrt2", QuadSurd(0, 1, 2, 1)}, {"golden", QuadSurd(1, 1, 5, 2)}, {"sqrt7", QuadSurd(0, 1, 7, 1)}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& [name, x] : surds) {
      auto orbit = eisenstein::f_map_orbit(x, 1000);
      os << name << " " << eisenstein::verdict_name(orbit.verdict);
      if (orbit.verdict == eisenstein::OrbitVerdict::Periodic) os << " (period " << orbit.period << ")";
      os << "; ";
      ok = ok && orbit.verdict == eisenstein::OrbitVerdict::Periodic;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 500), den(1, 97);
    std::size_t exits = 0;
    for (std::size_t i = 0; i < rationals; ++i) {
      auto orbit = eisenstein::f_map_orbit(QuadSurd::rational(num(rng), den(rng)), 100000);
      if (orbit.verdict == eisenstein::OrbitVerdict::Terminates) ++exits;
    }
    os << exits << "/" << rationals << " rationals leave the domain";
    ok = ok && exits == rationals;
    r.detail = os.str();
    r.checked = surds.size() + rationals;
    r.passed = ok;
  });
}

CheckReport eq9_resolution(std::size_t samples, std::uint64_t seed) {
  return timed("octahedral distance identity", [&](CheckReport& r) {
    Discriminant d = gaussian::disc();
    auto g = [&](int x, int y) { return QuadInt(d, x, y); };
    // z -> 1/(z + 2) keeps all six canonical vertices finite
    MobiusMap base(g(0, 0), g(1, 0), g(1, 0), g(2, 0));
    gaussian::MobiusOctahedron o = gaussian::transform(base, gaussian::canonical_octahedron());
    std::optional<gaussian::CrossDenominator> v = gaussian::resolve_denominator(o);
    bool df = gaussian::cross_identity_holds(o, gaussian::CrossDenominator::BC_DF);
    bool bf = gaussian::cross_identity_holds(o, gaussian::CrossDenominator::BC_BF);
    std::ostringstream os;
    os << "(BC)(DF) " << (df ? "holds" : "fails") << ", (BC)(BF) " << (bf ? "holds" : "fails") << " -> ";
    os << (v ? gaussian::denominator_name(*v) : std::string("unresolved"));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-6, 6);
    std::uniform_int_distribution<int> branch(0, 1);
    std::size_t tried = 0, passed = 0, graphs = 0;
    while (tried < samples) {
      QuadInt a = g(coord(rng), coord(rng)), b = g(coord(rng), coord(rng));
      QuadInt c = g(coord(rng), coord(rng)), e = g(coord(rng), coord(rng));
      if ((a * e - b * c).is_zero()) continue;
      MobiusMap m(a, b, c, e);
      gaussian::Branch br = branch(rng) ? gaussian::Branch::PlusI : gaussian::Branch::MinusI;
      auto img = gaussian::transform(m, gaussian::canonical_octahedron(br));
      if (!img.finite()) continue;
      ++tried;
      if (v && gaussian::eq9_check(img, *v)) ++passed;
      if (gaussian::octahedron_contact_graph(img).is_octahedron()) ++graphs;
    }
    os << "; " << passed << "/" << samples << " random images satisfy it, " << graphs << " octahedral contact graphs";
    r.detail = os.str();
    r.checked = samples + 1;
    r.passed = v.has_value() && passed == samples && graphs == samples;
  });
}

std::vector<CheckReport> run_suite(const std::string& suite, int d, const Int& bound) {
  const std::vector<int> general_ds = {1, 2, 3, 7, 11, 19};
  const std::vector<int> euclid_ds = {1, 2, 3, 7, 11};
  std::vector<CheckReport> out;
  bool all = suite == "all";
  if (!all && suite != "equality" && suite != "tangency" && suite != "corollaries" && suite != "algorithms")
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (all || suite == "algorithms") {
    out.push_back(gsea_golden());
    out.push_back(sea_golden());
    out.push_back(fmap_periodicity(10, 7));
    out.push_back(eq9_resolution(100, 11));
  }
  if (all || suite == "equality") {
    Int nb = bound > 0 ? bound : Int(30);
    if (d == 0) {
      out.push_back(circle_equality_full_depth(nb));
      out.push_back(eisenstein_equality(nb));
      out.push_back(gaussian_equality(nb));
      out.push_back(general_equality(general_ds, nb));
    } else {
      if (d == 3) out.push_back(eisenstein_equality(nb));
      if (d == 1) out.push_back(gaussian_equality(nb));
      out.push_back(general_equality(d, nb));
    }
  }
  if (all || suite == "tangency") out.push_back(tangency_bridge(bound > 0 ? to_i64(bound) : 20));
  if (all || suite == "corollaries") {
    out.push_back(corollaries(bound > 0 ? static_cast<int>(to_i64(bound)) : 100));
    if (d == 0)
      out.push_back(coprime_agreement(euclid_ds, 1000, 5));
    else if (Discriminant(d).euclidean())
      out.push_back(coprime_agreement(d, 1000, 5));
  }
  return out;
}

std::string format(const CheckReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << " [" << r.checked << " checked, "
     << std::fixed << std::setprecision(2) << r.seconds << "s]";
  return os.str();
}

}  // namespace ford::verify
