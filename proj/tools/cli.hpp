// Copyright 2026 The cosetsum Authors
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

#ifndef COSETSUM_CLI_HPP
#define COSETSUM_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosetsum::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;      // flag, list or matrix-JSON parse failures
inline constexpr int kExitDimension = 3;  // shape/index/photon-count errors
inline constexpr int kExitInvariance = 4; // sum rule outside tolerance, failed self-test

class CliParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// "2,3,4" -> {2, 3, 4}; throws CliParseError on anything else.
std::vector<int> parse_index_list(const std::string &text);

/// "0,0.5,-1e-2" -> doubles; throws CliParseError on anything else.
std::vector<double> parse_double_list(const std::string &text);

/// Runs the command line (without the program name). All regular output goes
/// to `out`, diagnostics to `err`. Returns one of the exit codes above.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace cosetsum::cli

#endif
