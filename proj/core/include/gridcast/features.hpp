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

#ifndef GRIDCAST_FEATURES_HPP_
#define GRIDCAST_FEATURES_HPP_

#include <cstddef>
#include <vector>

#include "gridcast/geometry.hpp"
#include "gridcast/track.hpp"

namespace gridcast
{

/// One step of the dynamics input: displacement expressed in the vehicle
/// frame of that step, speed, and heading change since the previous step.
struct FeatureStep
{
  double dx = 0.0;  // meters, vehicle frame of this step
  double dy = 0.0;  // meters, vehicle frame of this step
  double v = 0.0;   // meters/second, >= 0
  double h = 0.0;   // radians, heading change from previous step
};

struct InputFeatures
{
  std::vector<FeatureStep> steps;

  std::size_t size() const { return steps.size(); }
};

/// Future position expressed in the vehicle frame of the step it was
/// predicted from, together with the horizon in time steps.
struct TargetPosition
{
  double x = 0.0;
  double y = 0.0;
  int horizon = 1;
};

/// Vehicle frame at step t: origin at the position of step t, heading from
/// the per-sample heading when the track carries one, otherwise from the
/// displacement into step t. Step 0 falls back to the displacement out of
/// step 0 so that a frame exists for the start of a sequence.
///
/// Throws DegenerateHeading when the defining displacement is exactly zero
/// and no explicit heading exists (stationary vehicle).
VcsFrame vcs_frame_at(const Track & track, std::size_t t);

/// Builds the per-step dynamics features for steps 0..up_to. Each step's
/// displacement is expressed in the vehicle frame of that step, speed is
/// displacement length over the sample interval, and h is the change in
/// heading since the previous step. Step 0 is emitted as (0, 0, v<1>, 0)
/// padding so the sequence has one entry per track sample considered.
///
/// With displacement-derived headings, h<1> is 0: the heading of step 0 is
/// defined as the direction of the first displacement, so the first heading
/// change is measurable only from step 2 on.
InputFeatures compute_features(const Track & track, std::size_t up_to);

/// Position horizon steps past t, expressed in the vehicle frame of step t.
/// Throws HorizonOutOfRange when t + horizon is past the end of the track.
TargetPosition ground_truth_target(const Track & track, std::size_t t, int horizon);

}  // namespace gridcast

#endif  // GRIDCAST_FEATURES_HPP_
