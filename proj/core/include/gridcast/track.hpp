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

#ifndef GRIDCAST_TRACK_HPP_
#define GRIDCAST_TRACK_HPP_

#include <cstdint>
#include <vector>

#include "gridcast/errors.hpp"
#include "gridcast/geometry.hpp"

namespace gridcast
{

struct TrackSample
{
  std::int64_t timestamp_ms = 0;
  Vec2 position;  // meters, global frame
};

/// Timestamped global-frame positions of one vehicle. Headings are optional;
/// when present there is one per sample (radians, global frame).
struct Track
{
  std::vector<TrackSample> samples;
  std::vector<double> headings;

  std::size_t size() const { return samples.size(); }
  bool has_headings() const { return !headings.empty(); }

  /// Throws InvalidTrack unless timestamps are strictly increasing, there are
  /// at least two samples, and headings (if any) match the sample count.
  void validate() const
  {
    if (samples.size() < 2) {
      throw InvalidTrack("track needs at least 2 samples, got " +
                         std::to_string(samples.size()));
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
      if (samples[i].timestamp_ms <= samples[i - 1].timestamp_ms) {
        throw InvalidTrack("track timestamps not strictly increasing at index " +
                           std::to_string(i));
      }
    }
    if (!headings.empty() && headings.size() != samples.size()) {
      throw InvalidTrack("track has " + std::to_string(headings.size()) +
                         " headings for " + std::to_string(samples.size()) + " samples");
    }
  }
};

}  // namespace gridcast

#endif  // GRIDCAST_TRACK_HPP_
