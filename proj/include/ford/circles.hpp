#pragma once

#include "ford/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ford::circles {

/// C_{a,b}: tangent to the real line at a/b with radius 1/(2b^2).
class FordCircle {
 public:
  FordCircle(Int a, Int b);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  Rat tangent() const { return Rat(a_, b_); }
  Rat radius() const { return Rat(1, 2 * b_ * b_); }
  std::string str() const;

  friend bool operator==(const FordCircle& p, const FordCircle& q) { return p.a_ == q.a_ && p.b_ == q.b_; }
  /// Orders by tangent point, then denominator.
  friend bool operator<(const FordCircle& p, const FordCircle& q);

 private:
  Int a_;
  Int b_;
};

/// Circle above the real line given by its tangent point and radius.
struct NormalCircle {
  Rat tangent;
  Rat radius;
  friend bool operator==(const NormalCircle&, const NormalCircle&) = default;
  friend bool operator<(const NormalCircle& p, const NormalCircle& q) {
    if (p.tangent != q.tangent) return p.tangent < q.tangent;
    return p.radius < q.radius;
  }
};

NormalCircle to_normal(const FordCircle& c);
bool tangent(const NormalCircle& p, const NormalCircle& q);
bool interiors_meet(const NormalCircle& p, const NormalCircle& q);

/// |ad - bc| = 1.
bool tangent(const FordCircle& p, const FordCircle& q);
bool tangent_geometric(const FordCircle& p, const FordCircle& q);

/// The mediant circle C_{a+c,b+d}; throws if the inputs are not tangent.
FordCircle child(const FordCircle& p, const FordCircle& q);

enum class Letter { L, R };

struct SeaRun {
  std::vector<Letter> word;
  std::pair<Int, Int> terminal;
};
/// L(a,b) = (a-b, b), R(a,b) = (a, b-a), applied until the entries agree.
SeaRun slow_euclid(const Int& a, const Int& b);
/// Applies the inverse letters of word (last letter first) to the pair.
std::pair<Int, Int> replay_inverse(const std::vector<Letter>& word, std::pair<Int, Int> start);
std::string word_string(const std::vector<Letter>& word);

std::pair<FordCircle, FordCircle> parents(const FordCircle& c);

/// <s,t> with u completing (s+t+u)^2 = s^2+t^2+u^2.
struct BaryTriple {
  Int s;
  Int t;
  Int u;
  friend bool operator==(const BaryTriple&, const BaryTriple&) = default;
};
bool valid(const BaryTriple& t);
BaryTriple to_bary(const FordCircle& c);
NormalCircle bary_circle(const BaryTriple& t);
FordCircle from_bary(const BaryTriple& t);
/// s+t is a perfect square.
bool check_square(const BaryTriple& t);

struct Interval {
  Rat lo;
  Rat hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

/// Ford circles reachable from the integer roots in the window by at most depth rounds of
/// mediant insertion; max_den prunes children with larger denominators.
std::vector<FordCircle> generate(int depth, const Interval& window, std::optional<Int> max_den = std::nullopt);
/// All C_{a,b} with gcd(a,b) = 1, b <= max_den, a/b in the window.
std::vector<FordCircle> enumerate_ring(const Int& max_den, const Interval& window);
/// All valid barycentric triples with s+t <= max_weight and tangent point in the window.
std::vector<BaryTriple> enumerate_bary(const Int& max_weight, const Interval& window);

/// Stern-Brocot depth of a/b in [0,1]: the generation round in which it first appears.
int stern_brocot_depth(const FordCircle& c);

/// A Ford circle with denominator at most max_den whose interior meets C(x, r), if any.
std::optional<FordCircle> overlapping_circle(const Rat& x, const Rat& r, const Int& max_den);

}  // namespace ford::circles
