#pragma once

// Sign grids of a two-parameter polynomial and the polylines where the sign
// changes, for plotting phi(a, b) = 0.

#include <array>
#include <functional>
#include <map>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "disclab/poly.hpp"

namespace disclab {

struct CurveGrid {
  std::string a_name, b_name;
  double a_min = -2, a_max = 2, b_min = -2, b_max = 2;
  std::size_t resolution = 256;
  /// sign[j][i] is the sign at cell center (a_i, b_j).
  std::vector<std::vector<int>> sign;
  std::vector<std::vector<double>> value;
  /// Sign-change segments (a0, b0, a1, b1).
  std::vector<std::array<double, 4>> segments;

  double a_at(std::size_t i) const { return a_min + (a_max - a_min) * (i + 0.5) / resolution; }
  double b_at(std::size_t j) const { return b_min + (b_max - b_min) * (j + 0.5) / resolution; }

  /// Columns a,b,sign; one row per cell, b outer, a inner.
  std::string csv() const {
    std::ostringstream o;
    o.precision(17);
    o << "a,b,sign\n";
    for (std::size_t j = 0; j < resolution; ++j)
      for (std::size_t i = 0; i < resolution; ++i) o << a_at(i) << ',' << b_at(j) << ',' << sign[j][i] << '\n';
    return o.str();
  }

  std::string svg(double px = 512) const {
    std::ostringstream o;
    auto X = [&](double a) { return (a - a_min) / (a_max - a_min) * px; };
    auto Y = [&](double b) { return px - (b - b_min) / (b_max - b_min) * px; };
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px << "\" viewBox=\"0 0 " << px
      << ' ' << px << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<g stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& s : segments)
      o << "<line x1=\"" << X(s[0]) << "\" y1=\"" << Y(s[1]) << "\" x2=\"" << X(s[2]) << "\" y2=\"" << Y(s[3])
        << "\"/>\n";
    o << "</g>\n<text x=\"4\" y=\"" << px - 4 << "\" font-size=\"12\">" << a_name << " / " << b_name << "</text>\n";
    o << "</svg>\n";
    return o.str();
  }
};

/// Evaluates phi at cell centers of a resolution x resolution grid and runs
/// marching squares over the centers. phi may involve only the two named
/// parameters.
inline CurveGrid curve_trace(const Polynomial& phi, const std::string& a, const std::string& b, double a_min,
                             double a_max, double b_min, double b_max, std::size_t resolution) {
  const auto& vs = *phi.vars();
  auto ai = vs.find(a), bi = vs.find(b);
  if (!ai || !bi || *ai == *bi) throw Error(ErrorKind::WrongArity, "curve needs two distinct parameters of phi");
  for (auto v : phi.support())
    if (v != *ai && v != *bi)
      throw Error(ErrorKind::WrongArity, "phi involves '" + vs.name(v) + "' besides " + a + " and " + b);
  if (resolution < 2) throw Error(ErrorKind::Usage, "resolution must be at least 2");
  if (!(a_max > a_min) || !(b_max > b_min)) throw Error(ErrorKind::Usage, "empty parameter range");

  CurveGrid g;
  g.a_name = a;
  g.b_name = b;
  g.a_min = a_min;
  g.a_max = a_max;
  g.b_min = b_min;
  g.b_max = b_max;
  g.resolution = resolution;
  g.sign.assign(resolution, std::vector<int>(resolution));
  g.value.assign(resolution, std::vector<double>(resolution));
  std::vector<double> pt(vs.size(), 0.0);
  for (std::size_t j = 0; j < resolution; ++j)
    for (std::size_t i = 0; i < resolution; ++i) {
      pt[*ai] = g.a_at(i);
      pt[*bi] = g.b_at(j);
      double v = evaluate(phi, std::span<const double>(pt));
      g.value[j][i] = v;
      g.sign[j][i] = (v > 0) - (v < 0);
    }

  // Crossing point on the edge between two centers of opposite sign.
  auto cross = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
    double v0 = g.value[j0][i0], v1 = g.value[j1][i1];
    double t = (v0 == v1) ? 0.5 : v0 / (v0 - v1);
    return std::array<double, 2>{g.a_at(i0) + t * (g.a_at(i1) - g.a_at(i0)), g.b_at(j0) + t * (g.b_at(j1) - g.b_at(j0))};
  };
  auto differs = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
    return g.sign[j0][i0] * g.sign[j1][i1] < 0 || (g.sign[j0][i0] == 0) != (g.sign[j1][i1] == 0);
  };
  for (std::size_t j = 0; j + 1 < resolution; ++j)
    for (std::size_t i = 0; i + 1 < resolution; ++i) {
      // Edges of the square of centers: bottom, right, top, left.
      std::vector<std::array<double, 2>> pts;
      if (differs(i, j, i + 1, j)) pts.push_back(cross(i, j, i + 1, j));
      if (differs(i + 1, j, i + 1, j + 1)) pts.push_back(cross(i + 1, j, i + 1, j + 1));
      if (differs(i, j + 1, i + 1, j + 1)) pts.push_back(cross(i, j + 1, i + 1, j + 1));
      if (differs(i, j, i, j + 1)) pts.push_back(cross(i, j, i, j + 1));
      if (pts.size() == 2) {
        g.segments.push_back({pts[0][0], pts[0][1], pts[1][0], pts[1][1]});
      } else if (pts.size() == 4) {
        // Saddle: pair by the value at the square's center.
        double c = 0.25 * (g.value[j][i] + g.value[j][i + 1] + g.value[j + 1][i] + g.value[j + 1][i + 1]);
        bool joined = (c > 0) == (g.value[j][i] > 0);
        if (joined) {
          g.segments.push_back({pts[0][0], pts[0][1], pts[1][0], pts[1][1]});
          g.segments.push_back({pts[2][0], pts[2][1], pts[3][0], pts[3][1]});
        } else {
          g.segments.push_back({pts[0][0], pts[0][1], pts[3][0], pts[3][1]});
          g.segments.push_back({pts[1][0], pts[1][1], pts[2][0], pts[2][1]});
        }
      } else if (pts.size() == 3) {
        g.segments.push_back({pts[0][0], pts[0][1], pts[1][0], pts[1][1]});
        g.segments.push_back({pts[1][0], pts[1][1], pts[2][0], pts[2][1]});
      }
    }
  return g;
}

/// Number of connected components of the segment set (endpoints shared up to
/// a small fraction of a cell).
inline std::size_t count_components(const CurveGrid& g) {
  const std::size_t n = g.segments.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  const double eps = 1e-6 * std::max(g.a_max - g.a_min, g.b_max - g.b_min);
  std::map<std::pair<long long, long long>, std::size_t> at;
  for (std::size_t s = 0; s < n; ++s)
    for (int e = 0; e < 2; ++e) {
      auto key = std::make_pair(std::llround(g.segments[s][2 * e] / eps), std::llround(g.segments[s][2 * e + 1] / eps));
      auto [it, fresh] = at.emplace(key, s);
      if (!fresh) parent[find(s)] = find(it->second);
    }
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) ++c;
  return c;
}

}  // namespace disclab
