#include "ford/cli.hpp"

#include "ford/circles.hpp"
#include "ford/eisenstein.hpp"
#include "ford/gaussian.hpp"
#include "ford/general.hpp"
#include "ford/verify.hpp"
#include "ford/window.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ford::cli {

namespace {

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw std::invalid_argument("empty coordinate in '" + text + "'");
    std::size_t pos = item[0] == '-' || item[0] == '+' ? 1 : 0;
    if (pos == item.size() || !std::all_of(item.begin() + static_cast<long>(pos), item.end(), ::isdigit))
      throw std::invalid_argument("not an integer: '" + item + "'");
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_ints(text).at(0));
  return Rat(parse_ints(text.substr(0, slash)).at(0), parse_ints(text.substr(slash + 1)).at(0));
}

std::string off_quadric(const Quad4& q) {
  return quad_string(q) + " is not on the quadric (a+b+c+d)^2 = a^2+b^2+c^2+d^2";
}

std::string tuple(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

Record record(const FordSphere& s) {
  Record r;
  r.d = s.disc().value();
  r.alpha = {s.alpha().x(), s.alpha().y()};
  r.beta = {s.beta().x(), s.beta().y()};
  QuadRat t = s.tangent();
  r.tangent_num = {t.num().x(), t.num().y()};
  r.tangent_den = t.den();
  r.curvature = s.curvature();
  return r;
}

Record record(const circles::FordCircle& c) {
  Record r;
  r.alpha = {c.a()};
  r.beta = {c.b()};
  r.tangent_num = {c.a()};
  r.tangent_den = c.b();
  r.curvature = 2 * c.b() * c.b();
  return r;
}

bool record_less(const Record& p, const Record& q) {
  std::vector<Rat> tp, tq;
  for (const auto& x : p.tangent_num) tp.emplace_back(x, p.tangent_den);
  for (const auto& x : q.tangent_num) tq.emplace_back(x, q.tangent_den);
  if (tp != tq) return tp < tq;
  return p.curvature < q.curvature;
}

circles::Interval parse_interval(const std::string& text) {
  if (text.empty()) return {Rat(0), Rat(1)};
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() == 2) return {parse_rat(parts[0]), parse_rat(parts[1])};
  if (parts.size() == 4) return {parse_rat(parts[0]), parse_rat(parts[2])};
  throw std::invalid_argument("circle window must be 'lo,hi'");
}

Int require_bound(const GenerateOptions& opt) {
  if (!opt.bound) throw std::invalid_argument(opt.mode + " mode needs --bound");
  if (*opt.bound < 0) throw std::invalid_argument("--bound must be nonnegative");
  return Int(*opt.bound);
}

std::vector<Record> generate_circles(const GenerateOptions& opt) {
  if (opt.d != 0) throw std::invalid_argument("the circles family takes no --d");
  circles::Interval w = parse_interval(opt.window);
  std::vector<Record> out;
  if (opt.mode == "ring") {
    if (opt.depth) throw std::invalid_argument("conflicting flags: ring mode takes --bound, not --depth");
    for (const auto& c : circles::enumerate_ring(require_bound(opt), w)) out.push_back(record(c));
  } else if (opt.mode == "geometric") {
    if (!opt.depth) throw std::invalid_argument("geometric mode for circles needs --depth");
    std::optional<Int> cap;
    if (opt.bound) cap = Int(*opt.bound);
    for (const auto& c : circles::generate(*opt.depth, w, cap)) out.push_back(record(c));
  } else {
    if (opt.depth) throw std::invalid_argument("conflicting flags: barycentric mode takes --bound, not --depth");
    Int b = require_bound(opt);
    for (const auto& t : circles::enumerate_bary(b * b, w)) {
      Record r = record(circles::from_bary(t));
      r.bary = std::vector<Int>{t.s, t.t, t.u};
      out.push_back(r);
    }
  }
  return out;
}

int family_disc(const GenerateOptions& opt) {
  if (opt.family == "eisenstein") {
    if (opt.d != 0 && opt.d != 3) throw std::invalid_argument("the eisenstein family needs D=3");
    return 3;
  }
  if (opt.family == "gaussian") {
    if (opt.d != 0 && opt.d != 1) throw std::invalid_argument("the gaussian family needs D=1");
    return 1;
  }
  if (opt.d == 0) throw std::invalid_argument("the sigma family needs --d");
  Discriminant check(opt.d);
  return check.value();
}

bool keep(const FordSphere& s, const Window& w, const std::optional<long long>& bound) {
  if (s.is_plane() || !w.contains(s.tangent())) return false;
  return !bound || s.beta().norm() <= *bound;
}

std::vector<FordSphere> geometric_spheres(int d, const GenerateOptions& opt, const Window& w) {
  std::vector<FordSphere> out;
  if (d == 3) {
    if (opt.depth) {
      for (const auto& s : eisenstein::geometric_spheres(*opt.depth))
        if (keep(s, w, opt.bound)) out.push_back(s);
    } else {
      eisenstein::BaryDescent descend;
      for (const auto& q : eisenstein::geometric_quads_bounded(require_bound(opt), w).spheres)
        out.push_back(descend(q));
    }
  } else if (d == 1) {
    if (opt.depth) {
      for (const auto& s : gaussian::geometric_spheres(*opt.depth).spheres)
        if (keep(s, w, opt.bound)) out.push_back(s);
    } else {
      out = gaussian::geometric_spheres_bounded(require_bound(opt), w).spheres;
    }
  } else {
    throw std::invalid_argument("geometric generation is available for D=1 and D=3 only");
  }
  return out;
}

std::vector<Record> generate_spheres(const GenerateOptions& opt) {
  int d = family_disc(opt);
  Discriminant disc(d);
  std::string wtext = opt.window.empty() ? (opt.family == "eisenstein" ? "triangle" : "cell") : opt.window;
  Window w = Window::parse(wtext);
  std::vector<Record> out;
  if (opt.mode == "ring") {
    if (opt.depth) throw std::invalid_argument("conflicting flags: ring mode takes --bound, not --depth");
    Int b = require_bound(opt);
    std::vector<FordSphere> ss;
    if (opt.family == "eisenstein")
      ss = eisenstein::ring_spheres(b, w);
    else if (opt.family == "gaussian")
      ss = gaussian::ring_spheres(b, w);
    else
      ss = general::ring_spheres(disc, b, w);
    for (const auto& s : ss) out.push_back(record(s));
  } else if (opt.mode == "geometric") {
    if (!opt.depth && !opt.bound) throw std::invalid_argument("geometric mode needs --depth or --bound");
    for (const auto& s : geometric_spheres(d, opt, w)) out.push_back(record(s));
  } else {
    if (opt.depth) throw std::invalid_argument("conflicting flags: barycentric mode takes --bound, not --depth");
    Int b = require_bound(opt);
    if (opt.family == "eisenstein") {
      eisenstein::BaryDescent descend;
      for (const auto& q : eisenstein::bary_solutions(b, w)) {
        Record r = record(descend(q));
        r.bary = std::vector<Int>(q.begin(), q.end());
        out.push_back(r);
      }
    } else if (opt.family == "gaussian") {
      // a, b, c are n times (1 - y, |z|^2 - y, y) for z = x + iy in the window
      Rat zmax = 0, ymax = 0;
      for (const auto& [u, v] : w.vertices()) {
        zmax = std::max(zmax, Rat(u * u + v * v));
        ymax = std::max(ymax, Rat(abs(v)));
      }
      Int h = ceil(Rat(b) * (1 + zmax + ymax)) + 1;
      for (const auto& ns : gaussian::bary_images(b, w, -h, h)) {
        FordSphere s = ford_from_normal(ns);
        Record r = record(s);
        gaussian::SignedTriple t = gaussian::to_bary(s.alpha(), s.beta());
        r.bary = std::vector<Int>{t.a, t.b, t.c, t.m};
        out.push_back(r);
      }
    } else {
      for (const auto& sb : general::bary_family(disc, b, w)) {
        Record r = record(general::mu_inverse(sb));
        r.bary = std::vector<Int>{sb.a, sb.b, sb.c, sb.m};
        out.push_back(r);
      }
    }
  }
  return out;
}

nlohmann::json ints(const std::vector<Int>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_i64(x));
  return a;
}

}  // namespace

FordSphere ford_from_normal(const NormalSphere& s) {
  Discriminant d = s.disc();
  if (s.is_plane()) {
    if (s.height() != 1) throw std::invalid_argument("only the plane at height 1 is a Ford sphere");
    return FordSphere::plane(d);
  }
  Rat n = 1 / (2 * s.radius());
  if (den(n) != 1) throw std::invalid_argument(s.str() + " does not have a Ford radius");
  for (const QuadInt& beta : elements_up_to_norm(d, num(n))) {
    if (beta.norm() != num(n) || !in_canonical_sector(beta)) continue;
    QuadRat a = s.tangent() * QuadRat(beta);
    if (a.is_integral() && coprime(a.num(), beta)) return FordSphere(a.num(), beta);
  }
  throw std::invalid_argument(s.str() + " is not a Ford sphere");
}

std::vector<Record> generate(const GenerateOptions& opt) {
  if (opt.mode != "ring" && opt.mode != "geometric" && opt.mode != "barycentric")
    throw std::invalid_argument("unknown mode '" + opt.mode + "'");
  if (opt.format != "json" && opt.format != "svg") throw std::invalid_argument("unknown format '" + opt.format + "'");
  if (opt.depth && *opt.depth < 0) throw std::invalid_argument("--depth must be nonnegative");
  std::vector<Record> out;
  if (opt.family == "circles")
    out = generate_circles(opt);
  else if (opt.family == "eisenstein" || opt.family == "gaussian" || opt.family == "sigma")
    out = generate_spheres(opt);
  else
    throw std::invalid_argument("unknown family '" + opt.family + "'");
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::string to_json(const GenerateOptions& opt, const std::vector<Record>& records) {
  nlohmann::json doc;
  doc["D"] = records.empty() ? (opt.family == "circles" ? 0 : family_disc(opt)) : records.front().d;
  doc["family"] = opt.family;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["D"] = r.d;
    j["alphaCoords"] = ints(r.alpha);
    j["betaCoords"] = ints(r.beta);
    j["tangentNumCoords"] = ints(r.tangent_num);
    j["tangentDen"] = to_i64(r.tangent_den);
    j["curvature"] = to_i64(r.curvature);
    if (r.bary) j["baryCoords"] = ints(*r.bary);
    arr.push_back(j);
  }
  doc["spheres"] = arr;
  return doc.dump(2) + "\n";
}

std::string to_svg(const GenerateOptions& opt, const std::vector<Record>& records) {
  const double width = 800.0;
  std::ostringstream os;
  os << std::setprecision(6);
  auto radius = [](const Record& r) { return 1.0 / r.curvature.convert_to<double>(); };
  if (opt.family == "circles") {
    circles::Interval w = parse_interval(opt.window);
    double lo = w.lo.convert_to<double>(), hi = w.hi.convert_to<double>();
    double scale = width / (hi - lo);
    double rmax = 0.5;
    double height = 2.0 * rmax * scale + 20.0;
    double base = height - 10.0;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<line x1=\"0\" y1=\"" << base << "\" x2=\"" << width << "\" y2=\"" << base
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& r : records) {
      double x = Rat(r.tangent_num[0], r.tangent_den).convert_to<double>();
      double rad = radius(r);
      os << "<circle cx=\"" << (x - lo) * scale << "\" cy=\"" << base - rad * scale << "\" r=\"" << rad * scale
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
  }
  Discriminant d(family_disc(opt));
  std::string wtext = opt.window.empty() ? (opt.family == "eisenstein" ? "triangle" : "cell") : opt.window;
  Window w = Window::parse(wtext);
  std::vector<std::complex<double>> corners;
  for (const auto& [u, v] : w.vertices()) corners.push_back(QuadRat(d, u, v).to_complex());
  double x0 = corners[0].real(), x1 = x0, y0 = corners[0].imag(), y1 = y0;
  for (const auto& c : corners) {
    x0 = std::min(x0, c.real());
    x1 = std::max(x1, c.real());
    y0 = std::min(y0, c.imag());
    y1 = std::max(y1, c.imag());
  }
  const double pad = 0.5;
  double scale = width / (x1 - x0 + 2 * pad);
  double height = (y1 - y0 + 2 * pad) * scale;
  auto px = [&](std::complex<double> z) { return std::make_pair((z.real() - x0 + pad) * scale, (y1 + pad - z.imag()) * scale); };
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<polygon points=\"";
  for (std::size_t i = 0; i < corners.size(); ++i) {
    auto [x, y] = px(corners[i]);
    os << (i ? " " : "") << x << "," << y;
  }
  os << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  for (const auto& r : records) {
    QuadRat t(QuadInt(d, r.tangent_num[0], r.tangent_num[1]), r.tangent_den);
    auto [x, y] = px(t.to_complex());
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << radius(r) * scale
       << "\" fill=\"steelblue\" fill-opacity=\"0.35\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string convert(const std::string& from, const std::string& to, int d, const std::string& coords) {
  if ((from != "ring" && from != "barycentric") || (to != "ring" && to != "barycentric"))
    throw std::invalid_argument("--from and --to must be ring or barycentric");
  Discriminant disc(d);
  std::vector<Int> v = parse_ints(coords);
  if (from == to) return tuple(v);
  if (from == "ring") {
    if (v.size() == 2) v = {v[0], Int(0), v[1], Int(0)};
    if (v.size() != 4)
      throw std::invalid_argument("a ring pair needs alpha,beta as integers or four sigma-basis coordinates");
    QuadInt alpha(disc, v[0], v[1]), beta(disc, v[2], v[3]);
    if (!coprime(alpha, beta)) throw std::invalid_argument("alpha and beta are not coprime");
    if (d == 3) {
      Quad4 q = eisenstein::to_bary(alpha, beta);
      return tuple({q.begin(), q.end()});
    }
    if (d == 1) {
      gaussian::SignedTriple t = gaussian::to_bary(alpha, beta);
      return tuple({t.a, t.b, t.c, t.m});
    }
    general::SigmaBary b = general::mu_apply(FordSphere(alpha, beta));
    return tuple({b.a, b.b, b.c, b.m});
  }
  if (v.size() != 4) throw std::invalid_argument("barycentric data needs four integers");
  FordSphere s = FordSphere::plane(disc);
  if (d == 3) {
    Quad4 q{v[0], v[1], v[2], v[3]};
    if (!on_quadric(q)) throw std::invalid_argument(off_quadric(q));
    eisenstein::BaryDescent descend;
    s = descend(q);
  } else if (d == 1) {
    gaussian::SignedTriple t{v[0], v[1], v[2], v[3]};
    if (t.m * t.m != t.a * t.b + t.a * t.c + t.b * t.c)
      throw std::invalid_argument(tuple(v) + " violates m^2 = ab+ac+bc");
    auto ns = gaussian::m_image(t);
    if (!ns) throw std::invalid_argument(tuple(v) + " has nonpositive weight");
    s = ford_from_normal(*ns);
  } else {
    s = general::mu_inverse({d, v[0], v[1], v[2], v[3]});
  }
  if (s.is_plane()) return "plane " + tuple({s.alpha().x(), s.alpha().y(), Int(0), Int(0)});
  return tuple({s.alpha().x(), s.alpha().y(), s.beta().x(), s.beta().y()});
}

std::string trace(const std::string& values, int d) {
  std::vector<Int> v = parse_ints(values);
  std::ostringstream os;
  if (v.size() == 4) {
    if (d != 0 && d != 3) throw std::invalid_argument("the generalized trace needs D=3");
    Quad4 q{v[0], v[1], v[2], v[3]};
    if (!on_quadric(q)) throw std::invalid_argument(off_quadric(q));
    eisenstein::GseaTrace t = eisenstein::gsea(q);
    if (t.codes.empty()) os << quad_string(q) << " has rank 0\n";
    for (std::size_t i = 0; i < t.codes.size(); ++i)
      os << quad_string(t.states[i]) << " -" << t.codes[i] << "-> " << quad_string(t.states[i + 1]) << "\n";
    return os.str();
  }
  if (v.size() == 2) {
    circles::SeaRun run = circles::slow_euclid(v[0], v[1]);
    std::pair<Int, Int> cur{v[0], v[1]};
    if (run.word.empty()) os << "[" << cur.first << "," << cur.second << "] has rank 0\n";
    for (circles::Letter l : run.word) {
      std::pair<Int, Int> next = l == circles::Letter::L ? std::make_pair(Int(cur.first - cur.second), cur.second)
                                                         : std::make_pair(cur.first, Int(cur.second - cur.first));
      os << "[" << cur.first << "," << cur.second << "] -" << (l == circles::Letter::L ? "L" : "R") << "-> ["
         << next.first << "," << next.second << "]\n";
      cur = next;
    }
    return os.str();
  }
  throw std::invalid_argument("trace needs a pair or a quadruple");
}

int run(int argc, char** argv) {
  CLI::App app{"Ford circles and Ford spheres over imaginary quadratic rings"};
  app.require_subcommand(1);

  GenerateOptions gen;
  std::string out_path;
  long long bound_value = 0;
  int depth_value = 0;
  auto* g = app.add_subcommand("generate", "generate a family of circles or spheres");
  g->add_option("--family", gen.family, "circles, eisenstein, gaussian or sigma")->required();
  g->add_option("--d", gen.d, "Heegner value D");
  g->add_option("--mode", gen.mode, "ring, geometric or barycentric");
  auto* bound_opt = g->add_option("--bound", bound_value, "bound on |beta|^2 (denominator for circles)");
  auto* depth_opt = g->add_option("--depth", depth_value, "generation rounds");
  g->add_option("--window", gen.window, "cell, triangle, or u0,v0,u1,v1 (lo,hi for circles)");
  g->add_option("--out", out_path, "output path (stdout if omitted)");
  g->add_option("--format", gen.format, "json or svg");

  std::string suite = "all";
  int verify_d = 0;
  long long verify_bound = 0;
  auto* v = app.add_subcommand("verify", "run an invariant suite");
  v->add_option("--suite", suite, "equality, tangency, corollaries, algorithms or all");
  v->add_option("--d", verify_d, "restrict to one D");
  v->add_option("--bound", verify_bound, "size bound for the suite");

  std::string from, to, coords;
  int convert_d = 3;
  auto* c = app.add_subcommand("convert", "convert between ring pairs and barycentric data");
  c->add_option("--from", from)->required();
  c->add_option("--to", to)->required();
  c->add_option("--d", convert_d);
  c->add_option("coords", coords, "comma separated integers")->required();

  std::string values;
  int trace_d = 0;
  auto* t = app.add_subcommand("gsea", "print a slow Euclidean trace");
  t->add_option("values", values, "pair a,b or quadruple a,b,c,d")->required();
  t->add_option("--d", trace_d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*g) {
      if (*bound_opt) gen.bound = bound_value;
      if (*depth_opt) gen.depth = depth_value;
      auto records = generate(gen);
      std::string text = gen.format == "svg" ? to_svg(gen, records) : to_json(gen, records);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
      }
      return 0;
    }
    if (*v) {
      auto reports = verify::run_suite(suite, verify_d, Int(verify_bound));
      bool ok = true;
      for (const auto& r : reports) {
        std::cout << verify::format(r) << "\n";
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }
    if (*c) {
      std::cout << convert(from, to, convert_d, coords) << "\n";
      return 0;
    }
    if (*t) {
      std::cout << trace(values, trace_d);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ford::cli
