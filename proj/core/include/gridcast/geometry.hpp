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

#ifndef GRIDCAST_GEOMETRY_HPP_
#define GRIDCAST_GEOMETRY_HPP_

#include <cmath>

namespace gridcast
{

struct Vec2
{
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2 & o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2 & o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2 & o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

inline double distance(const Vec2 & a, const Vec2 & b) { return (a - b).norm(); }

/// Axis-aligned rectangle in some planar coordinate system, in meters.
struct Extent
{
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(const Vec2 & p) const
  {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
};

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double a)
{
  double r = std::remainder(a, 2.0 * M_PI);
  if (r <= -M_PI) {
    r += 2.0 * M_PI;
  }
  return r;
}

/// Pose of the ego vehicle in the global frame. The local frame it induces
/// has +x pointing along the vehicle heading and +y to the vehicle's left.
struct VcsFrame
{
  Vec2 origin;
  double heading = 0.0;  // radians, normalized to (-pi, pi]
};

/// Maps a global-frame point into the vehicle frame (rotate by -heading,
/// then shift so the frame origin lands at (0, 0)).
inline Vec2 to_vcs(const Vec2 & point, const VcsFrame & frame)
{
  const double c = std::cos(frame.heading);
  const double s = std::sin(frame.heading);
  const Vec2 d = point - frame.origin;
  return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

/// Inverse of to_vcs.
inline Vec2 from_vcs(const Vec2 & point, const VcsFrame & frame)
{
  const double c = std::cos(frame.heading);
  const double s = std::sin(frame.heading);
  return {frame.origin.x + c * point.x - s * point.y,
          frame.origin.y + s * point.x + c * point.y};
}

}  // namespace gridcast

#endif  // GRIDCAST_GEOMETRY_HPP_
