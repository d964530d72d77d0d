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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "arens/errors.hpp"
#include "arens/scenario.hpp"
#include "arens/version.hpp"

namespace {

int write_report(const arens::Report& report, const std::string& format,
                 const std::string& out_path) {
    std::string text =
        format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out.good()) {
            std::cerr << "cannot write report to " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return report.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for order-bidual extensions of regular "
                 "multilinear operators on vector lattices"};
    app.set_version_flag("--version", arens::kVersion);
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a scenario file and report outcomes");
    std::string scenario_path;
    std::string report_format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int samples = 0;
    bool samples_set = false;
    int jobs = 1;
    verify->add_option("scenario", scenario_path, "scenario JSON file")->required();
    verify->add_option("--report", report_format, "report format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to this path");
    verify->add_option("--seed", seed, "override the scenario seed")
        ->each([&](const std::string&) { seed_set = true; });
    verify->add_option("--samples", samples, "override the scenario sample count")
        ->each([&](const std::string&) { samples_set = true; });
    verify->add_option("--jobs", jobs, "run checks concurrently")->check(CLI::PositiveNumber);

    auto* catalog = app.add_subcommand("catalog", "list space, operator and check kinds");
    std::string catalog_format = "text";
    catalog->add_option("--format", catalog_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* demo = app.add_subcommand("demo", "run a built-in demonstration");
    std::string demo_name;
    demo->add_option("name", demo_name, "demo name (irregularity)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            arens::RunOptions opts;
            if (seed_set) opts.seed = seed;
            if (samples_set) opts.samples = samples;
            opts.jobs = jobs;
            const arens::Report report = arens::run_scenario_file(scenario_path, opts);
            return write_report(report, report_format, out_path);
        }
        if (catalog->parsed()) {
            if (catalog_format == "json") {
                std::cout << arens::catalog_json().dump(2) << "\n";
            } else {
                std::cout << arens::catalog_text();
            }
            return 0;
        }
        if (demo->parsed()) {
            if (demo_name == "irregularity") return arens::demo_irregularity(std::cout);
            std::cerr << "unknown demo: " << demo_name << "\n";
            return 2;
        }
    } catch (const arens::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const arens::InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
