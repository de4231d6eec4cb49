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

#ifndef GRIDCAST_TESTS_TEST_UTIL_HPP_
#define GRIDCAST_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "gridcast/geometry.hpp"
#include "gridcast/track.hpp"

namespace gridcast::testutil
{

/// Straight constant-speed track along the given global heading.
inline Track straight_track(Vec2 start, double heading, double speed_mps, std::size_t n,
                            std::int64_t dt_ms = 100)
{
  Track track;
  const Vec2 dir{std::cos(heading), std::sin(heading)};
  for (std::size_t i = 0; i < n; ++i) {
    const double t_s = static_cast<double>(i) * static_cast<double>(dt_ms) / 1000.0;
    track.samples.push_back({static_cast<std::int64_t>(i) * dt_ms,
                             {start.x + dir.x * speed_mps * t_s, start.y + dir.y * speed_mps * t_s}});
  }
  return track;
}

/// Constant-speed, constant-radius arc. turn_sign +1 turns left (counter-
/// clockwise), -1 right. start_angle is the angular position of the first
/// sample on the circle; the vehicle moves tangentially.
inline Track arc_track(Vec2 center, double radius, double speed_mps, int turn_sign, std::size_t n,
                       double start_angle = 0.0, std::int64_t dt_ms = 100,
                       bool with_headings = false)
{
  Track track;
  const double omega = turn_sign * speed_mps / radius;  // rad/s
  for (std::size_t i = 0; i < n; ++i) {
    const double t_s = static_cast<double>(i) * static_cast<double>(dt_ms) / 1000.0;
    const double a = start_angle + omega * t_s;
    track.samples.push_back({static_cast<std::int64_t>(i) * dt_ms,
                             {center.x + radius * std::cos(a), center.y + radius * std::sin(a)}});
    if (with_headings) {
      track.headings.push_back(normalize_angle(a + turn_sign * M_PI / 2.0));
    }
  }
  return track;
}

/// Applies a global rotation then translation to every sample (and heading).
inline Track rigid_motion(const Track & track, double angle, Vec2 shift)
{
  Track out = track;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (auto & sample : out.samples) {
    const Vec2 p = sample.position;
    sample.position = {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
  }
  for (auto & h : out.headings) {
    h = normalize_angle(h + angle);
  }
  return out;
}

/// Random wiggly track (positions follow a random walk of headings).
inline Track random_track(std::mt19937 & rng, std::size_t n, std::int64_t dt_ms = 100)
{
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Track track;
  double heading = (u01(rng) * 2.0 - 1.0) * M_PI;
  const double speed = 2.0 + 15.0 * u01(rng);
  Vec2 pos{(u01(rng) * 2.0 - 1.0) * 100.0, (u01(rng) * 2.0 - 1.0) * 100.0};
  for (std::size_t i = 0; i < n; ++i) {
    track.samples.push_back({static_cast<std::int64_t>(i) * dt_ms, pos});
    heading += (u01(rng) * 2.0 - 1.0) * 0.1;
    const double step = speed * static_cast<double>(dt_ms) / 1000.0;
    pos = {pos.x + step * std::cos(heading), pos.y + step * std::sin(heading)};
  }
  return track;
}

}  // namespace gridcast::testutil

#endif  // GRIDCAST_TESTS_TEST_UTIL_HPP_
