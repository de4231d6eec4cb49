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

#ifndef GRIDCAST_STATIC_MAP_HPP_
#define GRIDCAST_STATIC_MAP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridcast/features.hpp"
#include "gridcast/geometry.hpp"

namespace gridcast
{

/// Road geometry in the global frame: driveable-area polygons and lane
/// centerline polylines.
struct ScenarioGeometry
{
  std::vector<std::vector<Vec2>> driveable_polygons;
  std::vector<std::vector<Vec2>> centerlines;

  bool empty() const { return driveable_polygons.empty() && centerlines.empty(); }
  void validate() const;  // polygons >= 3 vertices, polylines >= 2 points
};

/// Spatial window of the rasterized map in the vehicle frame. The default
/// window is biased forward of the vehicle: x in [-12.8, 51.2] m, y in
/// [-32, 32] m at 0.5 m/pixel, which yields a 128x128 raster.
struct MapConfig
{
  Extent extent{-12.8, 51.2, -32.0, 32.0};
  double resolution = 0.5;

  int width() const;   // pixels along x
  int height() const;  // pixels along y
  void validate() const;
};

/// Two-channel binary occupancy raster in the vehicle frame. Channel 0 is
/// the driveable area, channel 1 the centerlines. Cell (row, col) covers
/// y in [y_min + row*res, y_min + (row+1)*res) and the analogous x slab;
/// storage is packed bits.
class StaticMapRaster
{
public:
  StaticMapRaster() = default;
  StaticMapRaster(const Extent & extent, double resolution);

  int height() const { return height_; }
  int width() const { return width_; }
  const Extent & extent() const { return extent_; }
  double resolution() const { return resolution_; }

  bool at(int row, int col, int channel) const;
  void set(int row, int col, int channel, bool value);
  std::size_t count(int channel) const;

  Vec2 pixel_center(int row, int col) const;

  bool operator==(const StaticMapRaster & other) const;

  /// Unpacks one channel into doubles (row-major), for the map encoder.
  void unpack_channel(int channel, double * out) const;

private:
  std::size_t bit_index(int row, int col, int channel) const;

  Extent extent_{};
  double resolution_ = 0.0;
  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rasterizes scenario geometry into the vehicle frame of the given pose.
/// Driveable polygons are filled by an even-odd point-in-polygon test at
/// pixel centers; centerlines are drawn one pixel wide with Bresenham after
/// clipping each segment to the map window. Empty geometry yields an
/// all-zero raster.
StaticMapRaster rasterize(const ScenarioGeometry & geometry, const VcsFrame & frame,
                          const MapConfig & config);

/// n x n subdivision of a rectangle with precomputed subregion centers.
/// Cell ordering is row-major with row 0 at minimum y and column 0 at
/// minimum x: j = row * n + col.
struct GridSpec
{
  int n = 0;
  Extent extent;
  std::vector<Vec2> centers;

  std::size_t size() const { return centers.size(); }
  double cell_width() const { return extent.width() / n; }
  double cell_height() const { return extent.height() / n; }
};

GridSpec make_grid(const Extent & extent, int n);

/// Index of the subregion containing the target, or nullopt when the target
/// lies outside the grid rectangle. Cells are half-open: a point on an
/// interior boundary belongs to the higher-index cell, and the maximum edge
/// is closed.
std::optional<int> assign_latent(const TargetPosition & target, const GridSpec & grid);

/// Writes one raster channel as a binary PGM (0/255). The image is rotated
/// so the vehicle forward axis points up and the vehicle's left is on the
/// left of the image.
void write_pgm(const StaticMapRaster & raster, int channel, const std::string & path);

}  // namespace gridcast

#endif  // GRIDCAST_STATIC_MAP_HPP_
