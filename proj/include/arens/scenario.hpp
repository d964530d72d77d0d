/*
 * Copyright 2026 the arens-workbench authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arens/json_io.hpp"

namespace arens {

/// Declarative verification scenario. The seed fully determines every
/// sampled tuple; reports are byte-stable for a fixed (scenario, seed,
/// version).
struct Scenario {
    std::map<std::string, SpaceRef> spaces;
    std::map<std::string, RegOperator> operators;
    std::vector<Json> checks;
    std::uint64_t seed = 20260810;
    int samples = 200;

    static Scenario parse(const Json& j);
};

struct CheckResult {
    std::string name;
    std::string check;
    std::string operator_name;
    std::string rho;
    std::string outcome;   // pass | fail | not_representable
    std::string expected;  // pass | fail
    bool ok = false;
    std::uint64_t cases = 0;
    Json witness;  // null when none
    std::string location;
    double ms = 0.0;  // wall time; text report only, never in JSON
};

struct Report {
    std::string scenario_name;
    std::string version;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;
    bool all_ok = true;

    [[nodiscard]] Json to_json() const;      // deterministic, byte-stable
    [[nodiscard]] std::string to_text() const;  // human-readable, with timing
};

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    int jobs = 1;
};

Report run_scenario(const Scenario& s, const std::string& name, const RunOptions& opts = {});
Report run_scenario_file(const std::string& path, const RunOptions& opts = {});

/// Stable, versioned listing of space kinds, operator variants, check kinds
/// and element forms.
Json catalog_json();
std::string catalog_text();

/// The 0-vs-1 irregularity witness with a printed derivation trace.
/// Returns 0 when both evaluators produce the expected exact values.
int demo_irregularity(std::ostream& os);

}  // namespace arens
