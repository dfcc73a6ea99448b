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

#ifndef DRINFELD_REPORT_HPP
#define DRINFELD_REPORT_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gamma_level.hpp"
#include "hecke.hpp"
#include "spectral.hpp"

namespace drinfeld {

enum class Level { gamma1, gamma };

inline std::string_view to_string(Level l) noexcept { return l == Level::gamma1 ? "gamma1" : "gamma"; }
inline Level parse_level(std::string_view s) {
    if (s == "gamma1") return Level::gamma1;
    if (s == "gamma") return Level::gamma;
    throw std::invalid_argument("unknown level '" + std::string(s) + "'");
}

/// One row of output: a residue-class block with its spectral data. At level gamma the zero complement of
/// the Gamma(t) matrix is reported as an extra row with residue -1 and no matrix entries.
struct BlockReport {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t r = 0;
    int k = 0;
    CuspMode mode = CuspMode::single;
    Level level = Level::gamma1;
    int residue = 0;
    std::size_t dim = 0;
    std::vector<int> indices;
    std::vector<std::vector<std::string>> matrix;
    std::string char_poly;
    std::string min_poly;
    bool diagonalizable = true;
    bool gamma0_tagged = false;
    std::string witness;

    friend bool operator==(const BlockReport&, const BlockReport&) = default;
};

inline BlockReport make_block_report(const WeightParams& params, Level level, const UtBlock& block) {
    BlockReport rep;
    rep.q = params.field.q;
    rep.p = params.field.p;
    rep.r = params.field.r;
    rep.k = params.k;
    rep.mode = params.mode;
    rep.level = level;
    rep.residue = block.residue;
    rep.dim = block.dim();
    rep.indices = block.indices;
    for (std::size_t i = 0; i < block.dim(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < block.dim(); ++j) row.push_back(block.entries(i, j).to_string());
        rep.matrix.push_back(std::move(row));
    }
    const Verdict v = diagonalizability_verdict(block);
    rep.char_poly = v.char_poly.to_string();
    rep.min_poly = v.min_poly.to_string();
    rep.diagonalizable = v.diagonalizable;
    rep.gamma0_tagged = block.gamma0_tagged;
    rep.witness = v.describe();
    return rep;
}

/// Row for the zero complement of a Gamma(t) matrix, or nothing when the complement is empty.
inline std::vector<BlockReport> complement_report(const GammaMatrix& g) {
    if (g.complement_dim() == 0) return {};
    const std::uint32_t p = g.params.p();
    BlockReport rep;
    rep.q = g.params.field.q;
    rep.p = p;
    rep.r = g.params.field.r;
    rep.k = g.params.k;
    rep.mode = g.params.mode;
    rep.level = Level::gamma;
    rep.residue = -1;
    rep.dim = g.complement_dim();
    rep.char_poly = XPoly::x_power(g.complement_dim(), p).to_string();
    rep.min_poly = XPoly::x_power(1, p).to_string();
    rep.diagonalizable = true;
    rep.witness = "separable_min_poly";
    return {rep};
}

/// All report rows for one (q, k, mode, level).
inline std::vector<BlockReport> reports_for(const WeightParams& params, Level level) {
    std::vector<BlockReport> out;
    if (level == Level::gamma1) {
        for (const auto& b : tag_gamma0_classes(params, build_ut_matrix(params))) out.push_back(make_block_report(params, level, b));
        return out;
    }
    const GammaMatrix g = build_gamma_matrix(params);
    for (const auto& b : g.corner_blocks) out.push_back(make_block_report(params, level, b));
    for (auto& c : complement_report(g)) out.push_back(std::move(c));
    return out;
}

inline void to_json(nlohmann::json& j, const BlockReport& r) {
    j = nlohmann::json{{"q", r.q},
                       {"p", r.p},
                       {"r", r.r},
                       {"k", r.k},
                       {"mode", std::string(to_string(r.mode))},
                       {"level", std::string(to_string(r.level))},
                       {"residue", r.residue},
                       {"dim", r.dim},
                       {"indices", r.indices},
                       {"matrix", r.matrix},
                       {"char_poly", r.char_poly},
                       {"min_poly", r.min_poly},
                       {"diagonalizable", r.diagonalizable},
                       {"gamma0_tagged", r.gamma0_tagged},
                       {"witness", r.witness}};
}

inline void from_json(const nlohmann::json& j, BlockReport& r) {
    j.at("q").get_to(r.q);
    j.at("p").get_to(r.p);
    j.at("r").get_to(r.r);
    j.at("k").get_to(r.k);
    r.mode = parse_cusp_mode(j.at("mode").get<std::string>());
    r.level = parse_level(j.at("level").get<std::string>());
    j.at("residue").get_to(r.residue);
    j.at("dim").get_to(r.dim);
    j.at("indices").get_to(r.indices);
    j.at("matrix").get_to(r.matrix);
    j.at("char_poly").get_to(r.char_poly);
    j.at("min_poly").get_to(r.min_poly);
    j.at("diagonalizable").get_to(r.diagonalizable);
    j.at("gamma0_tagged").get_to(r.gamma0_tagged);
    j.at("witness").get_to(r.witness);
}

/// Checks one JSON object against the BlockReport layout; returns an empty string when valid, otherwise a
/// description of the first problem.
inline std::string validate_report_json(const nlohmann::json& j) {
    if (!j.is_object()) return "report is not an object";
    struct Field {
        const char* name;
        bool (nlohmann::json::*check)() const noexcept;
    };
    static const Field fields[] = {{"q", &nlohmann::json::is_number_unsigned},   {"p", &nlohmann::json::is_number_unsigned},
                                   {"r", &nlohmann::json::is_number_unsigned},   {"k", &nlohmann::json::is_number_integer},
                                   {"mode", &nlohmann::json::is_string},         {"level", &nlohmann::json::is_string},
                                   {"residue", &nlohmann::json::is_number_integer}, {"dim", &nlohmann::json::is_number_unsigned},
                                   {"indices", &nlohmann::json::is_array},       {"matrix", &nlohmann::json::is_array},
                                   {"char_poly", &nlohmann::json::is_string},    {"min_poly", &nlohmann::json::is_string},
                                   {"diagonalizable", &nlohmann::json::is_boolean}, {"gamma0_tagged", &nlohmann::json::is_boolean},
                                   {"witness", &nlohmann::json::is_string}};
    for (const auto& f : fields) {
        if (!j.contains(f.name)) return std::string("missing field ") + f.name;
        if (!(j.at(f.name).*f.check)()) return std::string("wrong type for field ") + f.name;
    }
    if (j.size() != std::size(fields)) return "unexpected extra fields";
    const auto& m = j.at("matrix");
    for (const auto& row : m) {
        if (!row.is_array() || row.size() != m.size()) return "matrix is not square";
        for (const auto& e : row)
            if (!e.is_string()) return "matrix entry is not a string";
    }
    if (j.at("indices").size() != m.size()) return "indices and matrix size differ";
    return {};
}

inline constexpr std::string_view csv_header = "q,p,r,k,mode,level,residue,dim,char_poly,min_poly,diagonalizable,gamma0_tagged";

inline std::string to_csv_row(const BlockReport& r) {
    std::ostringstream os;
    os << r.q << ',' << r.p << ',' << r.r << ',' << r.k << ',' << to_string(r.mode) << ',' << to_string(r.level) << ',' << r.residue << ','
       << r.dim << ',' << r.char_poly << ',' << r.min_poly << ',' << (r.diagonalizable ? "true" : "false") << ','
       << (r.gamma0_tagged ? "true" : "false");
    return os.str();
}

inline std::string matrix_text(const BlockReport& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.matrix.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < r.matrix[i].size(); ++j) s += (j ? ", " : "") + r.matrix[i][j];
        s += "]";
    }
    return s + "]";
}

/// Human-readable block listing.
inline std::string to_text(const BlockReport& r) {
    std::ostringstream os;
    if (r.residue < 0) {
        os << "zero complement, dim " << r.dim << "\n";
    } else {
        os << "M_" << r.residue << " = " << matrix_text(r) << "\n";
        os << "  indices: {";
        for (std::size_t i = 0; i < r.indices.size(); ++i) os << (i ? ", " : "") << r.indices[i];
        os << "}" << (r.gamma0_tagged ? "  [Gamma_0(t) class]" : "") << "\n";
    }
    os << "  char_poly: " << r.char_poly << "\n";
    os << "  min_poly: " << r.min_poly << "\n";
    os << "  diagonalizable: " << (r.diagonalizable ? "yes" : "no") << " (" << r.witness << ")\n";
    return os.str();
}

inline std::string text_heading(const WeightParams& params, Level level) {
    std::ostringstream os;
    os << "q=" << params.field.q << " p=" << params.field.p << " r=" << params.field.r << " k=" << params.k << " mode=" << to_string(params.mode)
       << " level=" << to_string(level);
    return os.str();
}

}  // namespace drinfeld

#endif  // DRINFELD_REPORT_HPP
