#pragma once

#include "ford/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ford::verify {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::string detail;
  double seconds = 0.0;
};

/// gSEA on (12,12,3,-8): codes, rank and parents.
CheckReport gsea_golden();
/// Circle SEA on (14,5): the letter word and the terminal pair.
CheckReport sea_golden();
/// Ring, geometric (mediant rounds) and barycentric Ford circles with b <= max_den on [0,1].
CheckReport circle_equality(const Int& max_den, int depth);
/// Same comparison with the geometric family generated to the depth needed by max_den.
CheckReport circle_equality_full_depth(const Int& max_den);
/// q_form(u,v) = 1 exactly when the barycentric spheres are tangent, over quadric points with
/// |entries| <= bound and a+b+c > 0.
CheckReport tangency_bridge(int bound);
/// Ring, tetrahedral and barycentric Eisenstein families in the fundamental triangle.
CheckReport eisenstein_equality(const Int& norm_bound);
/// Ring, octahedral and M-image Gaussian families in the unit square, plus octahedral contact
/// graphs of every generated sextuple.
CheckReport gaussian_equality(const Int& norm_bound);
/// mu images of ring spheres against the class-equation family, and the pairing identity.
CheckReport general_equality(int d, const Int& norm_bound);
CheckReport general_equality(const std::vector<int>& ds, const Int& norm_bound);
/// Perfect-square, Eisenstein-norm and two-squares corollaries over constructed solutions.
CheckReport corollaries(int bound);
/// gcd-vector coprimality against the slow Euclidean gcd on random pairs.
CheckReport coprime_agreement(int d, std::size_t samples, std::uint64_t seed);
CheckReport coprime_agreement(const std::vector<int>& ds, std::size_t samples, std::uint64_t seed);
/// f-map orbits of three quadratic surds and of random rationals.
CheckReport fmap_periodicity(std::size_t rationals, std::uint64_t seed);
/// Resolves the denominator of the octahedral distance identity and checks random images.
CheckReport eq9_resolution(std::size_t samples, std::uint64_t seed);

/// Suite names accepted by run_suite: equality, tangency, corollaries, algorithms, all.
std::vector<CheckReport> run_suite(const std::string& suite, int d, const Int& bound);
std::string format(const CheckReport& r);

}  // namespace ford::verify
