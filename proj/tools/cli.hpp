// Copyright 2026 The Spinform Authors
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

#ifndef SPINFORM_TOOLS_CLI_HPP
#define SPINFORM_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinform/tensor_core.hpp"

namespace spinform::cli {

enum ExitCode : int { kPass = 0, kVerdictFailure = 1, kUsageError = 2 };

/// Machine-readable command report. `passed` is the conjunction of all recorded verdicts.
class Report {
   public:
    explicit Report(std::string command);

    void verdict(const std::string &name, bool passed);
    void residual(const std::string &name, double value);
    void value(const std::string &name, nlohmann::json v);
    void seed(std::uint64_t s);
    void tolerances(const Tolerances &tol);

    bool passed() const { return passed_; }
    nlohmann::json to_json() const;

   private:
    std::string command_;
    bool passed_ = true;
    nlohmann::json verdicts_ = nlohmann::json::object();
    nlohmann::json residuals_ = nlohmann::json::object();
    nlohmann::json values_ = nlohmann::json::object();
    nlohmann::json seeds_ = nlohmann::json::array();
    nlohmann::json tolerances_ = nlohmann::json::object();
};

/// Runs the invariant suites; `full` adds the larger oracle sweeps.
Report run_selftest(bool full, const Tolerances &tol);

/// Entry point shared by the executable and the tests. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace spinform::cli

#endif  // SPINFORM_TOOLS_CLI_HPP
