#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "octa/density/recursion.hpp"

namespace octa {

enum class ProfileScale { raw, times_k, abs };

inline const char* to_string(ProfileScale s) {
  switch (s) {
    case ProfileScale::raw: return "raw";
    case ProfileScale::times_k: return "times_k";
    case ProfileScale::abs: return "abs";
  }
  return "?";
}

inline ProfileScale parse_profile_scale(const std::string& s) {
  if (s == "raw") return ProfileScale::raw;
  if (s == "times_k") return ProfileScale::times_k;
  if (s == "abs") return ProfileScale::abs;
  throw std::invalid_argument("unknown scale " + s);
}

/// Dense image of one density layer over its bounding box. Row 0 is the top
/// (largest j), column 0 the smallest i. Points off the support hold NaN.
struct Raster {
  int k = 0;
  int i0 = 0, j0 = 0;  // lattice coordinates of column 0 and of the bottom row
  int width = 0, height = 0;
  ProfileScale scale = ProfileScale::raw;
  std::vector<double> values;
  double min = 0, max = 0;  // clipping range of the gray mapping

  static bool is_sentinel(double v) { return std::isnan(v); }

  double at(int row, int col) const { return values[static_cast<std::size_t>(row * width + col)]; }
  double at_lattice(int i, int j) const { return at(j0 + height - 1 - j, i - i0); }
  std::pair<int, int> pixel_of(int i, int j) const { return {j0 + height - 1 - j, i - i0}; }

  /// Gray level in [1, maxval] for supported pixels, 0 for the sentinel.
  unsigned gray(int row, int col, unsigned maxval) const {
    const double v = at(row, col);
    if (is_sentinel(v)) return 0;
    if (max <= min) return maxval;
    const double c = std::clamp(v, min, max);
    return 1u + static_cast<unsigned>(std::lround((c - min) / (max - min) * (maxval - 1)));
  }

  /// Inverse of gray() up to quantization.
  double value_of_gray(unsigned g, unsigned maxval) const {
    if (g == 0) return std::numeric_limits<double>::quiet_NaN();
    if (max <= min) return max;
    return min + (static_cast<double>(g) - 1.0) / (maxval - 1) * (max - min);
  }

  void write_pgm_p5(std::ostream& os) const {
    os << "P5\n" << width << ' ' << height << "\n255\n";
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) os.put(static_cast<char>(gray(r, c, 255)));
    }
  }

  void write_pgm_p2(std::ostream& os) const {
    os << "P2\n" << width << ' ' << height << "\n65535\n";
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) os << gray(r, c, 65535) << (c + 1 < width ? ' ' : '\n');
    }
  }

  /// "i,j,value" over supported pixels, sorted by (i, j).
  void write_csv(std::ostream& os) const {
    os << "i,j,value\n";
    char buf[32];
    for (int i = i0; i < i0 + width; ++i) {
      for (int j = j0; j < j0 + height; ++j) {
        const double v = at_lattice(i, j);
        if (is_sentinel(v)) continue;
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << i << ',' << j << ',' << buf << '\n';
      }
    }
  }

  nlohmann::json metadata() const {
    return {{"k", k}, {"scale", to_string(scale)}, {"min", min}, {"max", max}};
  }
};

/// Rasterizes the layer with the chosen scaling. The gray range is the data
/// range unless `clip` is given.
inline Raster profile_raster(const DensityGrid& g, ProfileScale scale,
                             std::optional<std::pair<double, double>> clip = std::nullopt) {
  Raster r;
  r.k = g.k();
  r.scale = scale;
  r.width = r.height = 2 * g.k() + 1;
  r.i0 = g.eps() - g.k();
  r.j0 = g.eta() - g.k();
  r.values.assign(static_cast<std::size_t>(r.width * r.height), std::numeric_limits<double>::quiet_NaN());
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = r.i0; i < r.i0 + r.width; ++i) {
    for (int j = r.j0; j < r.j0 + r.height; ++j) {
      if (!g.in_support(i, j)) continue;
      double v = g.approx(i, j);
      if (scale == ProfileScale::times_k) v *= g.k();
      if (scale == ProfileScale::abs) v = std::abs(v);
      auto [row, col] = r.pixel_of(i, j);
      r.values[static_cast<std::size_t>(row * r.width + col)] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (clip) {
    r.min = clip->first;
    r.max = clip->second;
  } else {
    r.min = lo;
    r.max = hi;
  }
  return r;
}

}  // namespace octa
