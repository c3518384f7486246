#include "ford/window.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ford {

namespace {

Rat cross(const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a, const Rat& u, const Rat& v) {
  return (a.first - o.first) * (v - o.second) - (a.second - o.second) * (u - o.first);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("window: cannot parse rational '" + s + "'");
  }
}

}  // namespace

Window::Window(std::vector<std::pair<Rat, Rat>> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw std::invalid_argument("window needs at least three vertices");
  Rat area = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    area += p.first * q.second - q.first * p.second;
  }
  if (area == 0) throw std::invalid_argument("window is degenerate");
  if (area < 0) std::reverse(vertices_.begin(), vertices_.end());
}

Window Window::unit_cell() { return box(0, 0, 1, 1); }

Window Window::fundamental_triangle() { return Window({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}); }

Window Window::box(const Rat& u0, const Rat& v0, const Rat& u1, const Rat& v1) {
  if (!(u0 < u1) || !(v0 < v1)) throw std::invalid_argument("window box must have u0 < u1 and v0 < v1");
  return Window({{u0, v0}, {u1, v0}, {u1, v1}, {u0, v1}});
}

Window Window::parse(const std::string& text) {
  if (text == "cell") return unit_cell();
  if (text == "triangle") return fundamental_triangle();
  std::vector<Rat> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rat(item));
  if (parts.size() != 4) throw std::invalid_argument("window must be 'u0,v0,u1,v1', 'cell' or 'triangle'");
  return box(parts[0], parts[1], parts[2], parts[3]);
}

bool Window::contains(const Rat& u, const Rat& v) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], u, v) < 0) return false;
  }
  return true;
}

Rat Window::min_u() const {
  return std::min_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.first < b.first; })
      ->first;
}
Rat Window::max_u() const {
  return std::max_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.first < b.first; })
      ->first;
}
Rat Window::min_v() const {
  return std::min_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.second < b.second; })
      ->second;
}
Rat Window::max_v() const {
  return std::max_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.second < b.second; })
      ->second;
}

Window Window::expanded(const Rat& margin) const {
  return box(min_u() - margin, min_v() - margin, max_u() + margin, max_v() + margin);
}

}  // namespace ford
