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

#ifndef GRIDCAST_SRC_IO_UTIL_HPP_
#define GRIDCAST_SRC_IO_UTIL_HPP_

#include <cstdio>
#include <string>

namespace gridcast::detail
{

/// Writes contents to path atomically (temp file in the same directory,
/// then rename). Throws IoError on any failure.
void atomic_write_file(const std::string & path, const std::string & contents);

/// Reads a whole file into a string. Throws IoError when unreadable.
std::string read_file(const std::string & path);

/// P5 (binary) PGM with maxval 255. pixels is row-major, top row first.
std::string encode_pgm(int width, int height, const std::string & pixels);

/// Round-trip formatting for doubles (shortest form is not required, exact
/// reload is).
std::string format_double(double value);

}  // namespace gridcast::detail

#endif  // GRIDCAST_SRC_IO_UTIL_HPP_
