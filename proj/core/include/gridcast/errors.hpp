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

#ifndef GRIDCAST_ERRORS_HPP_
#define GRIDCAST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gridcast
{

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error
{
public:
  explicit Error(const std::string & what) : std::runtime_error(what) {}
};

/// Two consecutive samples coincide and no explicit heading is available.
class DegenerateHeading : public Error
{
public:
  using Error::Error;
};

/// Requested prediction horizon reaches past the end of the track.
class HorizonOutOfRange : public Error
{
public:
  using Error::Error;
};

/// Input sequence has too few samples for the requested operation.
class TooShort : public Error
{
public:
  using Error::Error;
};

/// Malformed input file; the message names the offending row or field.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// RANSAC consensus fell below the configured minimum.
class FitFailure : public Error
{
public:
  using Error::Error;
};

/// A gradient evaluation produced NaN or infinity; training aborts.
class NonFiniteGradient : public Error
{
public:
  using Error::Error;
};

/// A network input or raw head output contains NaN or infinity.
class NonFiniteInput : public Error
{
public:
  using Error::Error;
};

/// Tensor dimensions do not match the model configuration.
class ShapeMismatch : public Error
{
public:
  using Error::Error;
};

/// Metric requested over an empty set of (sample, step) terms.
class EmptyEvaluation : public Error
{
public:
  using Error::Error;
};

/// Measurement-noise correction asked for sqrt of a negative value.
class NoiseExceedsMetric : public Error
{
public:
  using Error::Error;
};

/// Filesystem-level failure (missing path, write error, rename failure).
class IoError : public Error
{
public:
  using Error::Error;
};

/// Run configuration failed validation (unknown key, out-of-range value).
class ConfigError : public Error
{
public:
  using Error::Error;
};

/// Track violates its invariants (unordered timestamps, too few samples).
class InvalidTrack : public Error
{
public:
  using Error::Error;
};

}  // namespace gridcast

#endif  // GRIDCAST_ERRORS_HPP_
