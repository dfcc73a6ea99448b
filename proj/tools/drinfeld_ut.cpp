/*
   Copyright 2026 The drinfeld-ut Authors

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

// Command-line front end: matrix, scan, verify and fixtures subcommands.
// Exit codes: 0 success, 1 verification or fixture failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "drinfeld/drinfeld.hpp"

#ifndef DRINFELD_FIXTURE_DIR
#define DRINFELD_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace drinfeld;

constexpr int kUsageError = 2;

struct Options {
    std::uint64_t q = 0;
    int k = 0;
    std::vector<int> k_range;
    std::string mode = "single";
    std::string level = "gamma1";
    std::string format = "text";
    unsigned jobs = 0;
    std::vector<std::string> theorems;
    std::vector<std::uint64_t> q_list{2, 3, 4, 5, 7, 8, 9};
    int k_bound = 0;
    std::string fixture_dir = DRINFELD_FIXTURE_DIR;
};

void emit(const std::vector<std::pair<WeightParams, std::vector<BlockReport>>>& groups, Level level, const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [params, rows] : groups)
            for (const auto& r : rows) arr.push_back(r);
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv_header << "\n";
        for (const auto& [params, rows] : groups)
            for (const auto& r : rows) std::cout << to_csv_row(r) << "\n";
    } else {
        for (const auto& [params, rows] : groups) {
            std::cout << text_heading(params, level) << "\n";
            for (const auto& r : rows) std::cout << to_text(r);
        }
    }
}

int cmd_matrix(const Options& o) {
    const auto params = WeightParams(FieldParams::from_q(o.q), o.k, parse_cusp_mode(o.mode));
    const Level level = parse_level(o.level);
    emit({{params, reports_for(params, level)}}, level, o.format);
    return 0;
}

int cmd_scan(const Options& o) {
    const FieldParams field = FieldParams::from_q(o.q);
    const CuspMode mode = parse_cusp_mode(o.mode);
    const Level level = parse_level(o.level);
    const int lo = std::max(o.k_range.at(0), 2), hi = o.k_range.at(1);
    std::vector<std::pair<WeightParams, std::vector<BlockReport>>> groups;
    if (lo <= hi) {
        const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::future<std::vector<BlockReport>>> pending;
        std::vector<WeightParams> order;
        for (int k = lo; k <= hi; ++k) order.emplace_back(field, k, mode);
        // weights are evaluated in parallel batches; output order follows k
        for (std::size_t start = 0; start < order.size(); start += jobs) {
            const std::size_t end = std::min(order.size(), start + jobs);
            pending.clear();
            for (std::size_t i = start; i < end; ++i)
                pending.push_back(std::async(std::launch::async, [&, i] { return reports_for(order[i], level); }));
            for (std::size_t i = start; i < end; ++i) groups.emplace_back(order[i], pending[i - start].get());
        }
    }
    if (!groups.empty()) emit(groups, level, o.format);
    return 0;
}

int cmd_verify(const Options& o) {
    const auto theorems = o.theorems.empty() ? known_theorems() : o.theorems;
    for (const auto& id : theorems)
        if (std::find(known_theorems().begin(), known_theorems().end(), id) == known_theorems().end()) {
            std::cerr << "error: unknown theorem id '" << id << "'\n";
            return kUsageError;
        }
    for (auto q : o.q_list) FieldParams::from_q(q);
    bool ok = true;
    for (const auto& r : run_verification(theorems, o.q_list, o.k_bound)) {
        std::cout << describe(r) << "\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

int cmd_fixtures(const Options& o) {
    bool ok = true;
    for (const auto& f : load_fixture_dir(o.fixture_dir)) {
        const auto r = check_fixture(f);
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
        if (!r.passed) std::cout << r.diff;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atkin U_t on Drinfeld cusp forms of level t: matrices, spectra and diagonalizability"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> modes{"single", "double"}, levels{"gamma1", "gamma"}, formats{"text", "json", "csv"};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "single (cusp forms) or double (double cusp forms)")->check(CLI::IsMember(modes));
        sub->add_option("--level", o.level, "gamma1 or gamma")->check(CLI::IsMember(levels));
        sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember(formats));
    };

    auto* matrix = app.add_subcommand("matrix", "blocks, characteristic and minimal polynomials for one weight");
    matrix->add_option("--q", o.q, "field size, a prime power")->required();
    matrix->add_option("--k", o.k, "weight, at least 2")->required()->check(CLI::Range(2, 1 << 20));
    add_common(matrix);

    auto* scan = app.add_subcommand("scan", "one report row per block over a range of weights");
    scan->add_option("--q", o.q, "field size, a prime power")->required();
    scan->add_option("--k-range", o.k_range, "MIN MAX")->required()->expected(2);
    scan->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");
    add_common(scan);

    auto* verify = app.add_subcommand("verify", "check the diagonalizability statements over parameter ranges");
    verify->add_option("--theorems", o.theorems, "subset of T3.1,T3.2,T4.3,T4.5,S4.2,T5.1 (default: all)")->delimiter(',');
    verify->add_option("--q", o.q_list, "comma-separated prime powers")->delimiter(',');
    verify->add_option("--k-bound", o.k_bound, "largest weight for open-ended ranges");

    auto* fixtures = app.add_subcommand("fixtures", "recompute the shipped fixture matrices and compare");
    fixtures->add_option("--dir", o.fixture_dir, "fixture directory")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*matrix) return cmd_matrix(o);
        if (*scan) return cmd_scan(o);
        if (*verify) return cmd_verify(o);
        if (*fixtures) return cmd_fixtures(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
