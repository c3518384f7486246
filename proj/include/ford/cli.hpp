#pragma once

#include "ford/spheres.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ford::cli {

struct GenerateOptions {
  std::string family = "circles";  // circles | eisenstein | gaussian | sigma
  int d = 0;                       // 0 picks the family default
  std::string mode = "ring";       // ring | geometric | barycentric
  std::optional<long long> bound;
  std::optional<int> depth;
  std::string window;              // empty picks the family default
  std::string format = "json";     // json | svg
};

/// One generated circle or sphere with integer data; circles use D = 0 and real coordinates.
struct Record {
  int d = 0;
  std::vector<Int> alpha, beta, tangent_num;
  Int tangent_den;
  Int curvature;
  std::optional<std::vector<Int>> bary;
};

/// Validates the options and produces the sorted records.
std::vector<Record> generate(const GenerateOptions& opt);
std::string to_json(const GenerateOptions& opt, const std::vector<Record>& records);
std::string to_svg(const GenerateOptions& opt, const std::vector<Record>& records);

/// ring -> barycentric or back, coordinates comma separated.
std::string convert(const std::string& from, const std::string& to, int d, const std::string& coords);
/// gSEA trace of a quadruple (D=3) or circle SEA trace of a pair.
std::string trace(const std::string& values, int d);

/// A Ford sphere given by its tangent point and radius, found by searching |beta|^2 = 1/(2r).
FordSphere ford_from_normal(const NormalSphere& s);

int run(int argc, char** argv);

}  // namespace ford::cli
