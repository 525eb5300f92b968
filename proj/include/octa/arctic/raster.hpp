#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octa/arctic/curve.hpp"
#include "octa/exactmath/parallel.hpp"

namespace octa {

struct BBox {
  double u_min = -1, u_max = 1, v_min = -1, v_max = 1;
};

struct Polyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
};

/// Sign grid of P on a (resolution + 1)^2 lattice of nodes and the zero set
/// as polylines. Row r is v = v_min + r h_v, column c is u = u_min + c h_u.
struct CurveRaster {
  BBox box;
  int resolution = 0;
  std::vector<std::int8_t> sign;
  std::vector<Polyline> polylines;

  int nodes() const { return resolution + 1; }
  std::int8_t sign_at(int row, int col) const { return sign[static_cast<std::size_t>(row * nodes() + col)]; }
  double cell_u() const { return (box.u_max - box.u_min) / resolution; }
  double cell_v() const { return (box.v_max - box.v_min) / resolution; }

  /// Connected components (8-neighbour) of the cells the curve passes through.
  int curve_components() const;

  /// Smallest distance from (u, v) to a polyline vertex.
  double distance_to(double u, double v) const {
    double best = INFINITY;
    for (const auto& pl : polylines) {
      for (const auto& p : pl.points) best = std::min(best, std::hypot(p[0] - u, p[1] - v));
    }
    return best;
  }

  std::string to_svg(int canvas = 800) const;
  std::string to_csv() const;
};

namespace detail {

/// P as a polynomial in u with coefficients in v, in long double.
struct DoublePoly {
  std::vector<std::vector<long double>> by_u;  // by_u[i][j]: coefficient of u^i v^j

  explicit DoublePoly(const MPoly& p) {
    if (!parameters_of_curve(p).empty()) throw std::invalid_argument("curve_raster: P has free parameters");
    const std::size_t iu = p.index_of("u"), iv = p.index_of("v");
    by_u.assign(static_cast<std::size_t>(p.degree("u") + 1), std::vector<long double>(static_cast<std::size_t>(p.degree("v") + 1), 0));
    for (const auto& [e, c] : p.terms()) by_u[static_cast<std::size_t>(e[iu])][static_cast<std::size_t>(e[iv])] = c.get_d();
  }

  /// Coefficients in u at fixed v.
  std::vector<long double> at_v(long double v) const {
    std::vector<long double> out;
    for (const auto& row : by_u) {
      long double acc = 0;
      for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * v + *it;
      out.push_back(acc);
    }
    return out;
  }

  static long double horner(const std::vector<long double>& c, long double u) {
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  long double operator()(long double u, long double v) const { return horner(at_v(v), u); }
};

// corner order: 0 = (r, c), 1 = (r, c+1), 2 = (r+1, c+1), 3 = (r+1, c)
// edge k joins corners k and k+1 (mod 4)
template <class Center>
std::vector<std::pair<int, int>> cell_segments(const std::array<std::int8_t, 4>& s, Center center) {
  std::vector<int> crossing;
  for (int k = 0; k < 4; ++k) {
    if ((s[k] > 0) != (s[(k + 1) % 4] > 0)) crossing.push_back(k);
  }
  if (crossing.size() == 2) return {{crossing[0], crossing[1]}};
  if (crossing.size() != 4) return {};
  // saddle: the center sign decides which corners connect
  if ((center() > 0) == (s[0] > 0)) return {{0, 1}, {2, 3}};
  return {{3, 0}, {1, 2}};
}

}  // namespace detail

/// Samples P on the grid and traces its zero set by marching squares with
/// linear interpolation along cell edges. Zero values count as negative.
inline CurveRaster curve_raster(const ArcticCurve& c, BBox box = {}, int resolution = 512) {
  if (resolution < 2) throw std::invalid_argument("curve_raster: resolution must be at least 2");
  const detail::DoublePoly f(c.P);
  CurveRaster r;
  r.box = box;
  r.resolution = resolution;
  const int n = resolution + 1;
  const double hu = r.cell_u(), hv = r.cell_v();
  std::vector<long double> value(static_cast<std::size_t>(n) * n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const auto c = f.at_v(box.v_min + static_cast<double>(row) * hv);
    for (int col = 0; col < n; ++col) value[row * n + col] = detail::DoublePoly::horner(c, box.u_min + col * hu);
  });
  r.sign.resize(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) r.sign[i] = value[i] > 0 ? 1 : -1;

  // crossing points keyed by the grid edge they lie on
  auto node = [n](int row, int col) { return static_cast<long>(row) * n + col; };
  auto point_on = [&](long a, long b) {
    const long double fa = value[static_cast<std::size_t>(a)], fb = value[static_cast<std::size_t>(b)];
    const double s = fa == fb ? 0.5 : static_cast<double>(fa / (fa - fb));
    const double ua = box.u_min + (a % n) * hu, va = box.v_min + (a / n) * hv;
    const double ub = box.u_min + (b % n) * hu, vb = box.v_min + (b / n) * hv;
    return std::array<double, 2>{ua + s * (ub - ua), va + s * (vb - va)};
  };
  using Edge = std::pair<long, long>;
  std::map<Edge, std::vector<Edge>> adj;
  for (int row = 0; row + 1 < n; ++row) {
    for (int col = 0; col + 1 < n; ++col) {
      const std::array<long, 4> k{node(row, col), node(row, col + 1), node(row + 1, col + 1), node(row + 1, col)};
      std::array<std::int8_t, 4> s;
      for (int i = 0; i < 4; ++i) s[i] = r.sign[static_cast<std::size_t>(k[i])];
      auto center = [&] { return f(box.u_min + (col + 0.5) * hu, box.v_min + (row + 0.5) * hv); };
      for (auto [e0, e1] : detail::cell_segments(s, center)) {
        auto edge = [&](int e) { return Edge{std::min(k[e], k[(e + 1) % 4]), std::max(k[e], k[(e + 1) % 4])}; };
        adj[edge(e0)].push_back(edge(e1));
        adj[edge(e1)].push_back(edge(e0));
      }
    }
  }

  // each crossing has at most two neighbours; open chains first, then loops, in key order
  std::map<Edge, bool> seen;
  auto trace = [&](Edge start) {
    Polyline pl;
    Edge cur = start;
    while (true) {
      pl.points.push_back(point_on(cur.first, cur.second));
      seen[cur] = true;
      Edge next{-1, -1};
      for (const auto& e : adj[cur]) {
        if (!seen[e]) {
          next = e;
          break;
        }
      }
      if (next.first < 0) {
        const auto& nb = adj[cur];
        pl.closed = pl.points.size() > 2 && std::find(nb.begin(), nb.end(), start) != nb.end();
        break;
      }
      cur = next;
    }
    return pl;
  };
  for (const auto& [e, nb] : adj) {
    if (nb.size() == 1 && !seen[e]) r.polylines.push_back(trace(e));
  }
  for (const auto& [e, nb] : adj) {
    if (!seen[e]) r.polylines.push_back(trace(e));
  }
  return r;
}

inline int CurveRaster::curve_components() const {
  const int n = resolution;
  std::vector<int> mark(static_cast<std::size_t>(n) * n, 0);
  auto on_curve = [&](int row, int col) {
    const auto s = sign_at(row, col);
    return s != sign_at(row, col + 1) || s != sign_at(row + 1, col) || s != sign_at(row + 1, col + 1);
  };
  int count = 0;
  std::vector<std::pair<int, int>> stack;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (mark[static_cast<std::size_t>(row * n + col)] || !on_curve(row, col)) continue;
      ++count;
      stack.push_back({row, col});
      mark[static_cast<std::size_t>(row * n + col)] = count;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (int da = -1; da <= 1; ++da) {
          for (int db = -1; db <= 1; ++db) {
            const int x = a + da, y = b + db;
            if (x < 0 || y < 0 || x >= n || y >= n) continue;
            auto& m = mark[static_cast<std::size_t>(x * n + y)];
            if (m || !on_curve(x, y)) continue;
            m = count;
            stack.push_back({x, y});
          }
        }
      }
    }
  }
  return count;
}

inline std::string CurveRaster::to_svg(int canvas) const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas << "\" height=\"" << canvas
      << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << canvas << "\" height=\"" << canvas << "\" fill=\"white\"/>\n";
  char buf[64];
  for (const auto& pl : polylines) {
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    auto emit = [&](const std::array<double, 2>& p, bool first) {
      const double x = (p[0] - box.u_min) / (box.u_max - box.u_min) * canvas;
      const double y = (box.v_max - p[1]) / (box.v_max - box.v_min) * canvas;
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", first ? "" : " ", x, y);
      out << buf;
    };
    for (std::size_t i = 0; i < pl.points.size(); ++i) emit(pl.points[i], i == 0);
    if (pl.closed && !pl.points.empty()) emit(pl.points.front(), false);
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string CurveRaster::to_csv() const {
  std::ostringstream out;
  for (int row = nodes() - 1; row >= 0; --row) {
    for (int col = 0; col < nodes(); ++col) {
      if (col) out << ',';
      out << static_cast<int>(sign_at(row, col));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace octa
