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

// Worked instances used across the suites. example1/2 are periodic,
// example3 is singleton, prop1 is the two-attractor pair showing why single
// node additions can stall.

namespace fixtures {

inline constexpr const char* kExample1 = R"(3 5
2
00001
11100
1
10100
1
11001
)";

inline constexpr const char* kExample2 = R"(3 6
6
010101
011011
000101
111011
110101
101011
6
010011
011100
000011
111100
110011
101100
4
010001
101110
110001
001110
)";

inline constexpr const char* kExample3 = R"(3 8
1
10000001
1
11101001
1
10001110
)";

inline constexpr const char* kProp1 = R"(2 5
2
00101
00110
2
00010
00001
)";

}  // namespace fixtures
