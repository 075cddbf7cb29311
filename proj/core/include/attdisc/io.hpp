// Copyright 2026 The attdisc Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "attdisc/types.hpp"

namespace attdisc {

// Attractor file format (text):
//   header line:      m n
//   per attractor:    a line with the period p, then p lines of n characters
//                     over {0,1}
// Whitespace is tolerated anywhere, `#` starts a comment that runs to the end
// of the line, and bits within a state row may optionally be separated by
// spaces. A singleton attractor is written with p = 1.

/// Parses an instance from file content. The noise bound is not part of the
/// file format; it accompanies the parsed attractors into the Instance.
/// Throws ParseError with a line-numbered diagnostic on malformed input and
/// Error when instance invariants fail (m < 2, duplicate attractors, ...).
Instance parse_instance(std::string_view text, int noise_bound = 0,
                        int lcm_cap = Instance::kDefaultLcmCap);

/// parse_instance applied to a file on disk.
Instance load_instance(const std::filesystem::path& path, int noise_bound = 0,
                       int lcm_cap = Instance::kDefaultLcmCap);

/// Inverse of parse_instance: emits text that parses back to an equal
/// instance (the noise bound is not serialized).
std::string serialize_instance(const Instance& instance);

}  // namespace attdisc
