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

#ifndef COSETSUM_SELFCHECK_HPP
#define COSETSUM_SELFCHECK_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cosetsum {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

struct CheckOptions {
    /// Run only checks whose name contains this substring (empty = all).
    std::string filter;
    /// If positive, replaces each check's primary comparison tolerance.
    /// Useful for sanity-testing the harness itself.
    double tolerance_override = 0.0;
};

/// The library's end-to-end verification battery: interference dips,
/// closed-form/oracle agreement, coset zero patterns, sum-rule invariance,
/// the permanent-to-determinant reductions, character tables, and the
/// Ryser/determinant performance contrast. Each check is independent and
/// deterministic.
std::vector<CheckResult> run_acceptance_checks(const CheckOptions &options = {});

/// Prints one PASS/FAIL line per check; returns the number of failures.
int report_acceptance_checks(const std::vector<CheckResult> &results, std::ostream &out);

}  // namespace cosetsum

#endif
