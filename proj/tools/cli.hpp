// Copyright 2026 The gusq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `gusq` command-line front end. run() is the whole program minus process
// plumbing so tests can drive it with in-memory streams.

#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace gusq::cli {

/// Exit codes: 0 success, 2 usage, 1 numeric, 3 size, 4 invalid Gram, 5 empty range, 6 truncation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re,im" or a bare real number.
std::complex<double> parse_complex(const std::string& text);

/// Radians, accepting `pi` forms: "pi", "-pi", "2pi", "0.5*pi", "pi/2", "3pi/4".
double parse_angle(const std::string& text);

}  // namespace gusq::cli
