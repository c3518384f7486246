#include "ford/verify.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ford;
using namespace ford::verify;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<CheckReport()> run;
  double seconds_limit;  // 0 for no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gSEA trace of (12,12,3,-8)", [] { return gsea_golden(); }, 0},
      {2, "circle SEA trace of (14,5)", [] { return sea_golden(); }, 0},
      {3, "Ford circles b<=50: ring = depth-12 geometric = barycentric", [] { return circle_equality(Int(50), 12); }, 1},
      {4, "quadric pairing is 1 exactly on tangent pairs, entries <= 20", [] { return tangency_bridge(20); }, 10},
      {5, "Eisenstein families |beta|^2 <= 50 agree", [] { return eisenstein_equality(Int(50)); }, 30},
      {6, "Gaussian families |beta|^2 <= 50 agree, octahedral contacts", [] { return gaussian_equality(Int(50)); }, 60},
      {7, "mu images for D in {1,2,3,7,11,19}, |beta|^2 <= 30", [] { return general_equality({1, 2, 3, 7, 11, 19}, Int(30)); }, 120},
      {8, "corollaries over solutions with entries <= 100", [] { return corollaries(100); }, 0},
      {9, "coprimality tests agree on 1000 random pairs per D", [] { return coprime_agreement({1, 2, 3, 7, 11}, 1000, 20261015); }, 0},
      {10, "f-map orbits", [] { return fmap_periodicity(10, 20261015); }, 0},
      {11, "octahedral distance identity on 100 random images", [] { return eq9_resolution(100, 20261015); }, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    CheckReport r = c.run();
    bool ok = r.passed && (c.seconds_limit == 0 || r.seconds < c.seconds_limit);
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s [%zu checked, %.2fs%s] %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                r.checked, r.seconds, c.seconds_limit > 0 ? (" limit " + std::to_string(static_cast<int>(c.seconds_limit)) + "s").c_str() : "",
                r.detail.c_str());
    std::fflush(stdout);
    if (c.id == 3) {
      CheckReport full = circle_equality_full_depth(Int(50));
      std::printf("INFO criterion 3 at full generation depth: %s [%zu checked] %s\n",
                  full.passed ? "sets agree" : "sets differ", full.checked, full.detail.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
