// Copyright 2026 The Gridcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridcast/static_map.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gridcast/errors.hpp"
#include "io_util.hpp"

namespace gridcast
{

namespace
{

constexpr int kChannels = 2;

int span_pixels(double lo, double hi, double resolution)
{
  const double cells = (hi - lo) / resolution;
  const int n = static_cast<int>(std::lround(cells));
  if (n <= 0 || std::abs(cells - n) > 1e-9) {
    throw ConfigError("map extent span " + std::to_string(hi - lo) +
                      " is not a positive multiple of resolution " + std::to_string(resolution));
  }
  return n;
}

// PNPOLY even-odd crossing test.
bool point_in_polygon(const Vec2 & p, const std::vector<Vec2> & poly)
{
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Vec2 & a = poly[i];
    const Vec2 & b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) &&
        p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}

// Liang-Barsky clip of segment [a, b] to the extent. Returns false when the
// segment misses the rectangle entirely.
bool clip_segment(const Extent & extent, Vec2 & a, Vec2 & b)
{
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  double t0 = 0.0;
  double t1 = 1.0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {a.x - extent.x_min, extent.x_max - a.x, a.y - extent.y_min,
                       extent.y_max - a.y};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) {
        return false;
      }
      continue;
    }
    const double r = q[k] / p[k];
    if (p[k] < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    if (t0 > t1) {
      return false;
    }
  }
  const Vec2 start = a;
  a = {start.x + t0 * dx, start.y + t0 * dy};
  b = {start.x + t1 * dx, start.y + t1 * dy};
  return true;
}

}  // namespace

void ScenarioGeometry::validate() const
{
  for (const auto & poly : driveable_polygons) {
    if (poly.size() < 3) {
      throw ConfigError("driveable polygon with fewer than 3 vertices");
    }
  }
  for (const auto & line : centerlines) {
    if (line.size() < 2) {
      throw ConfigError("centerline with fewer than 2 points");
    }
  }
}

int MapConfig::width() const { return span_pixels(extent.x_min, extent.x_max, resolution); }

int MapConfig::height() const { return span_pixels(extent.y_min, extent.y_max, resolution); }

void MapConfig::validate() const
{
  if (resolution <= 0.0) {
    throw ConfigError("map resolution must be positive");
  }
  (void)width();
  (void)height();
}

StaticMapRaster::StaticMapRaster(const Extent & extent, double resolution)
: extent_(extent), resolution_(resolution)
{
  width_ = span_pixels(extent.x_min, extent.x_max, resolution);
  height_ = span_pixels(extent.y_min, extent.y_max, resolution);
  const std::size_t nbits = static_cast<std::size_t>(width_) * height_ * kChannels;
  bits_.assign((nbits + 63) / 64, 0);
}

std::size_t StaticMapRaster::bit_index(int row, int col, int channel) const
{
  return (static_cast<std::size_t>(row) * width_ + col) * kChannels + channel;
}

bool StaticMapRaster::at(int row, int col, int channel) const
{
  const std::size_t i = bit_index(row, col, channel);
  return (bits_[i >> 6] >> (i & 63)) & 1u;
}

void StaticMapRaster::set(int row, int col, int channel, bool value)
{
  const std::size_t i = bit_index(row, col, channel);
  if (value) {
    bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  } else {
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
}

std::size_t StaticMapRaster::count(int channel) const
{
  std::size_t total = 0;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      total += at(r, c, channel) ? 1 : 0;
    }
  }
  return total;
}

Vec2 StaticMapRaster::pixel_center(int row, int col) const
{
  return {extent_.x_min + (col + 0.5) * resolution_, extent_.y_min + (row + 0.5) * resolution_};
}

bool StaticMapRaster::operator==(const StaticMapRaster & other) const
{
  return height_ == other.height_ && width_ == other.width_ && bits_ == other.bits_ &&
         resolution_ == other.resolution_ && extent_.x_min == other.extent_.x_min &&
         extent_.x_max == other.extent_.x_max && extent_.y_min == other.extent_.y_min &&
         extent_.y_max == other.extent_.y_max;
}

void StaticMapRaster::unpack_channel(int channel, double * out) const
{
  std::size_t k = 0;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      out[k++] = at(r, c, channel) ? 1.0 : 0.0;
    }
  }
}

StaticMapRaster rasterize(const ScenarioGeometry & geometry, const VcsFrame & frame,
                          const MapConfig & config)
{
  config.validate();
  geometry.validate();
  StaticMapRaster raster(config.extent, config.resolution);
  const int h = raster.height();
  const int w = raster.width();
  const double res = config.resolution;
  const Extent & extent = config.extent;

  // Channel 0: driveable area via point-in-polygon at pixel centers.
  for (const auto & poly_gcs : geometry.driveable_polygons) {
    std::vector<Vec2> poly(poly_gcs.size());
    for (std::size_t i = 0; i < poly_gcs.size(); ++i) {
      poly[i] = to_vcs(poly_gcs[i], frame);
    }
    // Bounding box keeps the test local to the polygon.
    double bx0 = poly[0].x, bx1 = poly[0].x, by0 = poly[0].y, by1 = poly[0].y;
    for (const Vec2 & v : poly) {
      bx0 = std::min(bx0, v.x);
      bx1 = std::max(bx1, v.x);
      by0 = std::min(by0, v.y);
      by1 = std::max(by1, v.y);
    }
    const int r_lo = std::max(0, static_cast<int>(std::floor((by0 - extent.y_min) / res)));
    const int r_hi = std::min(h - 1, static_cast<int>(std::floor((by1 - extent.y_min) / res)));
    const int c_lo = std::max(0, static_cast<int>(std::floor((bx0 - extent.x_min) / res)));
    const int c_hi = std::min(w - 1, static_cast<int>(std::floor((bx1 - extent.x_min) / res)));
    for (int r = r_lo; r <= r_hi; ++r) {
      for (int c = c_lo; c <= c_hi; ++c) {
        if (!raster.at(r, c, 0) && point_in_polygon(raster.pixel_center(r, c), poly)) {
          raster.set(r, c, 0, true);
        }
      }
    }
  }

  // Channel 1: centerlines, one pixel wide.
  auto to_pixel = [&](const Vec2 & p, int & row, int & col) {
    row = std::clamp(static_cast<int>(std::floor((p.y - extent.y_min) / res)), 0, h - 1);
    col = std::clamp(static_cast<int>(std::floor((p.x - extent.x_min) / res)), 0, w - 1);
  };
  for (const auto & line_gcs : geometry.centerlines) {
    for (std::size_t i = 0; i + 1 < line_gcs.size(); ++i) {
      Vec2 a = to_vcs(line_gcs[i], frame);
      Vec2 b = to_vcs(line_gcs[i + 1], frame);
      if (!clip_segment(extent, a, b)) {
        continue;
      }
      int r0, c0, r1, c1;
      to_pixel(a, r0, c0);
      to_pixel(b, r1, c1);
      // Bresenham.
      const int dc = std::abs(c1 - c0);
      const int dr = -std::abs(r1 - r0);
      const int sc = c0 < c1 ? 1 : -1;
      const int sr = r0 < r1 ? 1 : -1;
      int err = dc + dr;
      while (true) {
        raster.set(r0, c0, 1, true);
        if (r0 == r1 && c0 == c1) {
          break;
        }
        const int e2 = 2 * err;
        if (e2 >= dr) {
          err += dr;
          c0 += sc;
        }
        if (e2 <= dc) {
          err += dc;
          r0 += sr;
        }
      }
    }
  }
  return raster;
}

GridSpec make_grid(const Extent & extent, int n)
{
  if (n < 1) {
    throw ConfigError("grid subdivision must be >= 1, got " + std::to_string(n));
  }
  GridSpec grid;
  grid.n = n;
  grid.extent = extent;
  grid.centers.resize(static_cast<std::size_t>(n) * n);
  const double cw = extent.width() / n;
  const double ch = extent.height() / n;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      grid.centers[static_cast<std::size_t>(row) * n + col] = {
        extent.x_min + (col + 0.5) * cw, extent.y_min + (row + 0.5) * ch};
    }
  }
  return grid;
}

std::optional<int> assign_latent(const TargetPosition & target, const GridSpec & grid)
{
  const Extent & e = grid.extent;
  if (target.x < e.x_min || target.x > e.x_max || target.y < e.y_min || target.y > e.y_max) {
    return std::nullopt;
  }
  const int n = grid.n;
  int col = static_cast<int>(std::floor((target.x - e.x_min) / grid.cell_width()));
  int row = static_cast<int>(std::floor((target.y - e.y_min) / grid.cell_height()));
  col = std::min(col, n - 1);  // maximum edge is closed
  row = std::min(row, n - 1);
  return row * n + col;
}

void write_pgm(const StaticMapRaster & raster, int channel, const std::string & path)
{
  // Image rows sweep the forward (x) axis from max to min so "up" in the
  // image is ahead of the vehicle; columns sweep y from max to min so the
  // vehicle's left is on the left.
  std::string pixels;
  pixels.reserve(static_cast<std::size_t>(raster.width()) * raster.height());
  for (int c = raster.width() - 1; c >= 0; --c) {
    for (int r = raster.height() - 1; r >= 0; --r) {
      pixels.push_back(raster.at(r, c, channel) ? static_cast<char>(255) : 0);
    }
  }
  detail::atomic_write_file(path, detail::encode_pgm(raster.height(), raster.width(), pixels));
}

}  // namespace gridcast
