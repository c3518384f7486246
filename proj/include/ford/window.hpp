#pragma once

#include "ford/quadint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ford {

/// Closed convex polygon in sigma coordinates (u, v) of the point u + v*sigma.
class Window {
 public:
  explicit Window(std::vector<std::pair<Rat, Rat>> vertices);

  /// [0,1] x [0,1]: for D=1 the unit square with corners 0, 1, i, 1+i.
  static Window unit_cell();
  /// Triangle 0, 1, sigma; for D=3 this is 0, 1, 1+w.
  static Window fundamental_triangle();
  static Window box(const Rat& u0, const Rat& v0, const Rat& u1, const Rat& v1);
  /// Parses "u0,v0,u1,v1" (rationals such as 1/2 allowed), "cell" or "triangle".
  static Window parse(const std::string& text);

  bool contains(const Rat& u, const Rat& v) const;
  bool contains(const QuadRat& z) const { return contains(z.u(), z.v()); }

  const std::vector<std::pair<Rat, Rat>>& vertices() const { return vertices_; }
  Rat min_u() const;
  Rat max_u() const;
  Rat min_v() const;
  Rat max_v() const;

  /// Bounding box grown by margin on each side.
  Window expanded(const Rat& margin) const;

 private:
  std::vector<std::pair<Rat, Rat>> vertices_;
};

}  // namespace ford
