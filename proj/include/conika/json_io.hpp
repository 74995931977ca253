// Copyright 2026 The conika authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file json_io.hpp
 * JSON serialization for every exchange type. Formats:
 *
 *   ComplexMatrix     {"rows": r, "cols": c, "entries": [[re, im], ...]}   (row-major)
 *   StateVector       {"dim": n, "amplitudes": [[re, im], ...]}
 *   Povm              {"dim": d, "label": s, "elements": [matrix, ...]}
 *   BipartiteState    {"dim": d, "coefficients": matrix}
 *   ProbabilityTable  {"m": m, "values": [[...], ...], "norm": x}
 *   DesignCertificate / WitnessReport   flat objects keyed by field name
 *
 * Doubles round-trip exactly (serialized with enough digits to recover
 * the bit pattern), so a file written by one build re-ingests to an
 * identical value.
 */
#pragma once

#include <json.hpp>

#include "certifier.hpp"
#include "complex_matrix.hpp"
#include "entanglement.hpp"
#include "povm.hpp"
#include "witnesses.hpp"

namespace conika {

using json = nlohmann::ordered_json;

inline void to_json(json &j, const ComplexMatrix &m) {
    json entries = json::array();
    for (const auto &e : m.entries()) {
        entries.push_back(json::array({e.real(), e.imag()}));
    }
    j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline void from_json(const json &j, ComplexMatrix &m) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto &entries = j.at("entries");
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix JSON: entries length " +
                                    std::to_string(entries.size()) +
                                    " does not equal rows*cols = " +
                                    std::to_string(rows * cols));
    }
    m = ComplexMatrix(rows, cols);
    std::size_t k = 0;
    for (const auto &e : entries) {
        m.entries()[k++] = cx{e.at(0).get<double>(), e.at(1).get<double>()};
    }
}

inline void to_json(json &j, const StateVector &v) {
    json amps = json::array();
    for (const auto &a : v.amplitudes) {
        amps.push_back(json::array({a.real(), a.imag()}));
    }
    j = json{{"dim", v.dim()}, {"amplitudes", std::move(amps)}};
}

inline void from_json(const json &j, StateVector &v) {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto &amps = j.at("amplitudes");
    if (amps.size() != dim) {
        throw std::invalid_argument("StateVector JSON: amplitudes length does not match dim");
    }
    v.amplitudes.clear();
    v.amplitudes.reserve(dim);
    for (const auto &a : amps) {
        v.amplitudes.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    }
}

inline void to_json(json &j, const Povm &p) {
    j = json{{"dim", p.dim}, {"label", p.label}, {"elements", p.elements}};
}

inline void from_json(const json &j, Povm &p) {
    p.dim = j.at("dim").get<std::size_t>();
    p.label = j.value("label", std::string{});
    p.elements = j.at("elements").get<std::vector<ComplexMatrix>>();
    for (const auto &e : p.elements) {
        if (e.rows() != p.dim || e.cols() != p.dim) {
            throw std::invalid_argument("Povm JSON: element shape does not match dim");
        }
    }
}

inline void to_json(json &j, const DesignCertificate &c) {
    j = json{{"k_s", c.k_s},
             {"k_a", c.k_a},
             {"k_plus", c.k_plus},
             {"k_minus", c.k_minus},
             {"design_residual", c.design_residual},
             {"povm_residual", c.povm_residual},
             {"is_conical_design", c.is_conical_design},
             {"is_projective_design", c.is_projective_design}};
}

inline void from_json(const json &j, DesignCertificate &c) {
    c.k_s = j.at("k_s").get<double>();
    c.k_a = j.at("k_a").get<double>();
    c.k_plus = j.at("k_plus").get<double>();
    c.k_minus = j.at("k_minus").get<double>();
    c.design_residual = j.at("design_residual").get<double>();
    c.povm_residual = j.at("povm_residual").get<double>();
    c.is_conical_design = j.at("is_conical_design").get<bool>();
    c.is_projective_design = j.at("is_projective_design").get<bool>();
}

inline void to_json(json &j, const BipartiteState &s) {
    j = json{{"dim", s.dim}, {"coefficients", s.coefficients}};
}

inline void from_json(const json &j, BipartiteState &s) {
    s.dim = j.at("dim").get<std::size_t>();
    s.coefficients = j.at("coefficients").get<ComplexMatrix>();
    if (s.coefficients.rows() != s.dim || s.coefficients.cols() != s.dim) {
        throw std::invalid_argument("BipartiteState JSON: coefficient shape does not match dim");
    }
}

inline void to_json(json &j, const ProbabilityTable &t) {
    json rows = json::array();
    for (std::size_t a = 0; a < t.m; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < t.m; ++b) {
            row.push_back(t.values[a * t.m + b]);
        }
        rows.push_back(std::move(row));
    }
    j = json{{"m", t.m}, {"values", std::move(rows)}, {"norm", t.norm}};
}

inline void from_json(const json &j, ProbabilityTable &t) {
    t.m = j.at("m").get<std::size_t>();
    t.norm = j.at("norm").get<double>();
    t.values.assign(t.m * t.m, 0.0);
    const auto &rows = j.at("values");
    if (rows.size() != t.m) {
        throw std::invalid_argument("ProbabilityTable JSON: row count does not match m");
    }
    for (std::size_t a = 0; a < t.m; ++a) {
        if (rows[a].size() != t.m) {
            throw std::invalid_argument("ProbabilityTable JSON: column count does not match m");
        }
        for (std::size_t b = 0; b < t.m; ++b) {
            t.values[a * t.m + b] = rows[a][b].get<double>();
        }
    }
}

inline void to_json(json &j, const WitnessReport &r) {
    j = json{{"s_minus_N", r.s_minus_N},
             {"s_plus_N", r.s_plus_N},
             {"e_minus_N", r.e_minus_N},
             {"e_plus_N", r.e_plus_N},
             {"s_minus_NPT", r.s_minus_NPT},
             {"s_plus_NPT", r.s_plus_NPT},
             {"e_minus_NPT", r.e_minus_NPT},
             {"e_plus_NPT", r.e_plus_NPT},
             {"numeric_s_minus_N", r.numeric_s_minus_N},
             {"numeric_s_plus_N", r.numeric_s_plus_N},
             {"numeric_s_minus_NPT", r.numeric_s_minus_NPT},
             {"numeric_s_plus_NPT", r.numeric_s_plus_NPT}};
}

inline void from_json(const json &j, WitnessReport &r) {
    r.s_minus_N = j.at("s_minus_N").get<double>();
    r.s_plus_N = j.at("s_plus_N").get<double>();
    r.e_minus_N = j.at("e_minus_N").get<double>();
    r.e_plus_N = j.at("e_plus_N").get<double>();
    r.s_minus_NPT = j.at("s_minus_NPT").get<double>();
    r.s_plus_NPT = j.at("s_plus_NPT").get<double>();
    r.e_minus_NPT = j.at("e_minus_NPT").get<double>();
    r.e_plus_NPT = j.at("e_plus_NPT").get<double>();
    r.numeric_s_minus_N = j.at("numeric_s_minus_N").get<double>();
    r.numeric_s_plus_N = j.at("numeric_s_plus_N").get<double>();
    r.numeric_s_minus_NPT = j.at("numeric_s_minus_NPT").get<double>();
    r.numeric_s_plus_NPT = j.at("numeric_s_plus_NPT").get<double>();
}

} // namespace conika
