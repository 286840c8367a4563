/*
   Copyright 2026 The llab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LLAB_CLI_HPP
#define LLAB_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace llab {

enum class OutputFormat { text, json, csv };

struct RunConfig {
    unsigned workers = 1;
    unsigned naive_cap = 26;
    bool allow_over_cap = false;
    std::filesystem::path cache_dir = "lc_cache";
    bool use_cache = true;
    OutputFormat output_format = OutputFormat::text;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int cap_exceeded = 2;
inline constexpr int invalid_arguments = 3;
}  // namespace exit_code

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace llab

#endif
