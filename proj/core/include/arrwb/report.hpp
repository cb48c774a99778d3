// Copyright 2026 The Authors.
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

#ifndef ARRWB_REPORT_HPP_
#define ARRWB_REPORT_HPP_

#include <span>
#include <string>

#include "arrwb/harness.hpp"

namespace arrwb {

inline constexpr int kReportSchemaVersion = 1;

// One report as a JSON object.
std::string report_json(const VerificationReport& r);
// {"schema_version", "reports", "summary"} where the summary counts verdicts
// and (p, codim) pairs.
std::string reports_json(std::span<const VerificationReport> reports);
// Fixed-width text table over the same data, followed by the summary.
std::string render_table(std::span<const VerificationReport> reports);

std::string self_test_json(std::span<const SelfTestItem> items);
std::string render_self_test(std::span<const SelfTestItem> items);

// 1 if any verdict is violated, else 2 if any is incomplete, else 0.
int exit_code(std::span<const VerificationReport> reports);

}  // namespace arrwb

#endif  // ARRWB_REPORT_HPP_
