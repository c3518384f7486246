#pragma once

#include "ford/spheres.hpp"
#include "ford/window.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ford::eisenstein {

Discriminant disc();
/// x + y w with w = sigma - 1.
QuadInt from_omega(const Int& x, const Int& y);
std::pair<Int, Int> omega_coords(const QuadInt& a);
/// Norm in w coordinates: x^2 - xy + y^2.
Int omega_norm(const Int& x, const Int& y);

/// The quadruple (a,b,c,d) on (a+b+c+d)^2 = a^2+b^2+c^2+d^2 describing S_{alpha,beta}.
Quad4 to_bary(const QuadInt& alpha, const QuadInt& beta);
Quad4 to_bary(const FordSphere& s);

/// One step of the generalized slow Euclidean algorithm on slot k (1..4): the entry q_k is
/// added to the other three and then negated.
Quad4 gsea_step(const Quad4& q, int k);

struct GseaTrace {
  std::vector<int> codes;
  std::vector<Quad4> states;  // states[0] is the input, states.back() the terminal
  const Quad4& terminal() const { return states.back(); }
};
GseaTrace gsea(const Quad4& q);
std::size_t rank(const Quad4& q);
/// The reversed trace replayed on the three basis vectors other than the terminal one.
std::array<Quad4, 3> parents(const Quad4& q);

/// a + b + c - d.
Quad4 tetra_rule(const Quad4& a, const Quad4& b, const Quad4& c, const Quad4& d);

using Matrix4 = std::array<std::array<Int, 4>, 4>;
/// (M_k)_{ij} = delta_ij + delta_ik - 3 delta_ik delta_jk.
Matrix4 reflection_matrix(int k);
Matrix4 multiply(const Matrix4& x, const Matrix4& y);
Matrix4 identity4();
/// Row vector times matrix: q M_k is the gSEA step on slot k.
Quad4 row_times(const Quad4& q, const Matrix4& m);
/// Matrix times column vector: M_k q replaces q_k by the sum of the others minus q_k.
Quad4 times_column(const Matrix4& m, const Quad4& q);

/// Inverts to_bary by descending through parents and choosing the matching completion.
class BaryDescent {
 public:
  FordSphere operator()(const Quad4& q);

 private:
  std::map<Quad4, FordSphere> memo_;
};

/// Coprime pairs with |beta|^2 <= norm_bound and alpha/beta in the window.
std::vector<FordSphere> ring_spheres(const Int& norm_bound, const Window& window);

struct TetraFamily {
  std::vector<Quad4> spheres;  // sorted, a+b+c > 0
  std::vector<Quad4> planes;   // a+b+c = 0
  std::size_t tetrahedra = 0;
};
/// Closure of the three root spheres under at most depth rounds of completion.
TetraFamily geometric_quads(int depth);
/// Tetrahedra reachable through spheres with a+b+c <= weight_bound whose tangent points stay
/// within margin of the window; reports the spheres inside the window.
TetraFamily geometric_quads_bounded(const Int& weight_bound, const Window& window, const Rat& margin = Rat(2));
std::vector<FordSphere> geometric_spheres(int depth);

/// All quadric points with gcd 1, 0 < a+b+c <= weight_bound and tangent point in the window.
std::vector<Quad4> bary_solutions(const Int& weight_bound, const Window& window);

/// |a+b+c| = m^2 + mn + n^2 for some integers, found by bounded search.
bool cor46(const Quad4& q);
std::optional<std::pair<Int, Int>> eisenstein_norm_witness(const Int& n);

/// (p + q sqrt(n)) / r with r > 0 and n squarefree; q = 0 for rationals.
class QuadSurd {
 public:
  QuadSurd(Int p, Int q, Int n, Int r);
  static QuadSurd rational(const Int& p, const Int& r) { return QuadSurd(p, 0, 1, r); }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& n() const { return n_; }
  const Int& r() const { return r_; }
  bool is_rational() const { return q_ == 0; }
  /// Sign of value - k for an integer k.
  int compare(const Int& k) const;
  double value() const;
  std::string str() const;

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
  friend bool operator<(const QuadSurd& a, const QuadSurd& b) {
    return std::tie(a.p_, a.q_, a.n_, a.r_) < std::tie(b.p_, b.q_, b.n_, b.r_);
  }

 private:
  Int p_, q_, n_, r_;
};

/// f(x) = x - 1 for x > 1 and x / (1 - x) for 0 < x < 1.
QuadSurd f_map(const QuadSurd& x);

enum class OrbitVerdict { Periodic, Terminates, Cap };
struct FMapOrbit {
  std::vector<QuadSurd> orbit;
  OrbitVerdict verdict;
  std::size_t period = 0;  // for periodic orbits
};
FMapOrbit f_map_orbit(const QuadSurd& x, std::size_t max_steps);
std::string verdict_name(OrbitVerdict v);

}  // namespace ford::eisenstein
