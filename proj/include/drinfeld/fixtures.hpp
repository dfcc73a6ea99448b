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

#ifndef DRINFELD_FIXTURES_HPP
#define DRINFELD_FIXTURES_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke.hpp"
#include "spectral.hpp"

namespace drinfeld {

/// Expected blocks for one (q, k, mode), read from a plain-text fixture file:
///
///     # comment
///     q 25
///     k 33
///     mode single
///     block 1 [[0, -t^26], [-t^2, 0]]
///     char_poly 1 X^2 - t^28
///     diagonalizable 1 true
///
/// Entries use the canonical polynomial format, so comparison is by string.
struct Fixture {
    std::string name;
    std::uint64_t q = 0;
    int k = 0;
    CuspMode mode = CuspMode::single;
    std::map<int, std::string> blocks;
    std::map<int, std::string> char_polys;
    std::map<int, bool> diagonalizable;
};

struct FixtureResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string diff;  // unified-style diff of mismatching lines
};

inline Fixture parse_fixture(std::istream& in, std::string name) {
    Fixture f;
    f.name = std::move(name);
    std::string line;
    int lineno = 0;
    auto bad = [&](const std::string& what) {
        throw std::invalid_argument(f.name + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "q") {
            ls >> f.q;
        } else if (key == "k") {
            ls >> f.k;
        } else if (key == "mode") {
            std::string m;
            ls >> m;
            f.mode = parse_cusp_mode(m);
        } else if (key == "block" || key == "char_poly" || key == "diagonalizable") {
            int j = -1;
            ls >> j;
            std::string rest;
            std::getline(ls, rest);
            rest.erase(0, rest.find_first_not_of(' '));
            if (j < 0 || rest.empty()) bad("expected '<key> <residue> <value>'");
            if (key == "block")
                f.blocks[j] = rest;
            else if (key == "char_poly")
                f.char_polys[j] = rest;
            else if (rest == "true" || rest == "false")
                f.diagonalizable[j] = rest == "true";
            else
                bad("diagonalizable must be true or false");
        } else {
            bad("unknown key '" + key + "'");
        }
        if (ls.fail()) bad("malformed line");
    }
    if (f.q == 0 || f.k == 0) bad("fixture must set q and k");
    return f;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path.string());
    return parse_fixture(in, path.filename().string());
}

/// Recomputes every block named in the fixture and compares the canonical text.
inline FixtureResult check_fixture(const Fixture& f) {
    FixtureResult res;
    res.name = f.name;
    const auto params = WeightParams::from_q(f.q, f.k, f.mode);
    std::map<int, UtBlock> by_residue;
    for (auto& b : build_ut_matrix(params)) by_residue.emplace(b.residue, std::move(b));
    std::ostringstream minus, plus;
    auto compare = [&](const std::string& key, int j, const std::string& want, const std::string& got) {
        ++res.checks;
        if (want == got) return;
        res.passed = false;
        minus << "-" << key << " " << j << " " << want << "\n";
        plus << "+" << key << " " << j << " " << got << "\n";
    };
    auto block = [&](int j) -> const UtBlock* {
        auto it = by_residue.find(j);
        return it == by_residue.end() ? nullptr : &it->second;
    };
    for (const auto& [j, want] : f.blocks) {
        const UtBlock* b = block(j);
        compare("block", j, want, b ? b->entries.to_string() : "<missing>");
    }
    for (const auto& [j, want] : f.char_polys) {
        const UtBlock* b = block(j);
        compare("char_poly", j, want, b ? char_poly(*b).to_string() : "<missing>");
    }
    for (const auto& [j, want] : f.diagonalizable) {
        const UtBlock* b = block(j);
        std::string got = b ? (diagonalizability_verdict(*b).diagonalizable ? "true" : "false") : "<missing>";
        compare("diagonalizable", j, want ? "true" : "false", got);
    }
    if (!res.passed) res.diff = "--- expected/" + f.name + "\n+++ computed/" + f.name + "\n" + minus.str() + plus.str();
    return res;
}

/// All *.txt fixtures in a directory, sorted by file name.
inline std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Fixture> out;
    for (const auto& p : files) out.push_back(load_fixture(p));
    return out;
}

}  // namespace drinfeld

#endif  // DRINFELD_FIXTURES_HPP
