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

#include "gridcast/features.hpp"

#include <cmath>
#include <string>

#include "gridcast/errors.hpp"

namespace gridcast
{

namespace
{

// Heading of step t under the same convention vcs_frame_at uses: the
// explicit heading when present, else the direction of the displacement
// into step t (out of step 0 for t == 0).
double heading_at(const Track & track, std::size_t t)
{
  if (track.has_headings()) {
    return normalize_angle(track.headings[t]);
  }
  const std::size_t from = (t == 0) ? 0 : t - 1;
  const std::size_t to = (t == 0) ? 1 : t;
  const Vec2 d = track.samples[to].position - track.samples[from].position;
  if (d.x == 0.0 && d.y == 0.0) {
    throw DegenerateHeading("no displacement between samples " + std::to_string(from) +
                            " and " + std::to_string(to) + " and no explicit heading");
  }
  return normalize_angle(std::atan2(d.y, d.x));
}

}  // namespace

VcsFrame vcs_frame_at(const Track & track, std::size_t t)
{
  track.validate();
  if (t >= track.size()) {
    throw HorizonOutOfRange("frame index " + std::to_string(t) + " out of range for track of " +
                            std::to_string(track.size()) + " samples");
  }
  return VcsFrame{track.samples[t].position, heading_at(track, t)};
}

InputFeatures compute_features(const Track & track, std::size_t up_to)
{
  track.validate();
  if (up_to >= track.size()) {
    throw HorizonOutOfRange("feature end index " + std::to_string(up_to) +
                            " out of range for track of " + std::to_string(track.size()) +
                            " samples");
  }

  InputFeatures out;
  out.steps.resize(up_to + 1);

  double prev_heading = heading_at(track, 0);
  for (std::size_t tau = 1; tau <= up_to; ++tau) {
    const double heading = heading_at(track, tau);
    const VcsFrame frame{track.samples[tau].position, heading};

    // Displacement into step tau, rotated into the frame of step tau. The
    // frame origin is the endpoint, so transform the start point.
    const Vec2 local_prev = to_vcs(track.samples[tau - 1].position, frame);
    const double dx = -local_prev.x;
    const double dy = -local_prev.y;

    const double dt_s =
      static_cast<double>(track.samples[tau].timestamp_ms - track.samples[tau - 1].timestamp_ms) /
      1000.0;
    FeatureStep & step = out.steps[tau];
    step.dx = dx;
    step.dy = dy;
    step.v = std::hypot(dx, dy) / dt_s;
    step.h = normalize_angle(heading - prev_heading);
    prev_heading = heading;
  }

  // Padding for step 0 keeps the sequence aligned with the track.
  out.steps[0] = FeatureStep{0.0, 0.0, up_to >= 1 ? out.steps[1].v : 0.0, 0.0};
  return out;
}

TargetPosition ground_truth_target(const Track & track, std::size_t t, int horizon)
{
  track.validate();
  if (horizon < 1) {
    throw HorizonOutOfRange("horizon must be >= 1, got " + std::to_string(horizon));
  }
  const std::size_t future = t + static_cast<std::size_t>(horizon);
  if (future >= track.size()) {
    throw HorizonOutOfRange("target step " + std::to_string(future) +
                            " out of range for track of " + std::to_string(track.size()) +
                            " samples");
  }
  const VcsFrame frame = vcs_frame_at(track, t);
  const Vec2 local = to_vcs(track.samples[future].position, frame);
  return TargetPosition{local.x, local.y, horizon};
}

}  // namespace gridcast
