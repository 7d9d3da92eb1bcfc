// Copyright 2026 The BOLT Authors
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

#ifndef BOLT_TOOLS_CLI_HPP
#define BOLT_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bolt/graph.hpp"
#include "bolt/random.hpp"

namespace bolt::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kParseError = 2,
  kConfigError = 3,
  kEmptyGraph = 4,
  kUndefinedMetric = 5,
  kIoError = 6,
};

/// Invalid flags, labels or generator specs.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `er:<n>:<p>`, `ba:<n>:<k>`, `er-x:<n>:<x>` or `ba-x:<n>:<x>`. The -x forms
/// resolve to p = n^(1/x)/n and k = n^(1/x)/2 rounded up.
struct GeneratorSpec {
  enum class Kind { kEr, kBa };
  Kind kind = Kind::kEr;
  std::uint64_t n = 0;
  double p = 0.0;       // ER only
  std::uint64_t k = 0;  // BA only
  std::string text;
};

/// Throws ConfigError on malformed text.
[[nodiscard]] GeneratorSpec parse_generator_spec(std::string_view text);

[[nodiscard]] Graph generate(const GeneratorSpec& spec, RngSeed seed);

/// Shortest text that reads back to the same double.
[[nodiscard]] std::string format_double(double x);

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out` unless --output names a file; diagnostics and the one-line summary
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bolt::cli

#endif  // BOLT_TOOLS_CLI_HPP
