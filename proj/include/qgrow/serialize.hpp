#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qgrow/grow.hpp"
#include "qgrow/subsystem_code.hpp"

namespace qgrow {

namespace iodetail {

inline std::vector<std::string> row_strings(const BinaryMatrix& m) {
    std::vector<std::string> out;
    for (const BitVector& r : m.rows) out.push_back(r.to_string());
    return out;
}

inline BinaryMatrix matrix_from_json(const nlohmann::json& arr, std::size_t n,
                                     const char* name) {
    if (!arr.is_array()) throw std::invalid_argument(std::string(name) + " must be an array");
    BinaryMatrix m(n);
    for (const auto& item : arr) {
        if (!item.is_string())
            throw std::invalid_argument(std::string(name) + " rows must be strings");
        const std::string s = item.get<std::string>();
        if (s.size() != n)
            throw std::invalid_argument(std::string(name) + " row has length " +
                                        std::to_string(s.size()) + ", expected n=" +
                                        std::to_string(n));
        for (char c : s)
            if (c != '0' && c != '1')
                throw std::invalid_argument(std::string(name) + " rows must be 0/1 strings");
        m.append_row(BitVector::from_string(s));
    }
    return m;
}

}  // namespace iodetail

// Version-1 code file: counts, 0/1 row strings, and a free-form metadata map.
inline std::string emit_code_file(const CssSubsystemCode& code) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["n"] = code.n;
    j["k"] = code.k;
    j["gauge_x"] = iodetail::row_strings(code.gauge_x);
    j["gauge_z"] = iodetail::row_strings(code.gauge_z);
    j["bare_x"] = iodetail::row_strings(code.bare_x);
    j["bare_z"] = iodetail::row_strings(code.bare_z);
    j["metadata"] = code.metadata;
    return j.dump(2) + "\n";
}

inline CssSubsystemCode parse_code_file(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("code file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("code file must be a JSON object");
    if (!j.contains("schema_version") || j["schema_version"] != 1)
        throw std::invalid_argument("code file schema_version must be 1");
    for (const char* field : {"n", "k"})
        if (!j.contains(field) || !j[field].is_number_unsigned())
            throw std::invalid_argument(std::string("code file needs unsigned field ") + field);
    CssSubsystemCode code(j["n"].get<std::size_t>());
    code.k = j["k"].get<std::size_t>();
    for (const char* field : {"gauge_x", "gauge_z", "bare_x", "bare_z"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("code file needs field ") + field);
    code.gauge_x = iodetail::matrix_from_json(j["gauge_x"], code.n, "gauge_x");
    code.gauge_z = iodetail::matrix_from_json(j["gauge_z"], code.n, "gauge_z");
    code.bare_x = iodetail::matrix_from_json(j["bare_x"], code.n, "bare_x");
    code.bare_z = iodetail::matrix_from_json(j["bare_z"], code.n, "bare_z");
    if (code.bare_x.row_count() != code.k || code.bare_z.row_count() != code.k)
        throw std::invalid_argument("bare logical lists must each have k rows");
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw std::invalid_argument("metadata must be an object");
        for (const auto& [key, value] : j["metadata"].items()) {
            if (!value.is_string())
                throw std::invalid_argument("metadata values must be strings");
            code.metadata[key] = value.get<std::string>();
        }
    }
    return code;
}

// Growth logs stream as JSON lines, one record per algorithm phase keyed by
// (round, logical, phase).
inline std::string emit_growth_log(const GrowthLog& log) {
    std::ostringstream out;
    nlohmann::ordered_json head;
    head["record"] = "seed";
    head["seed_lower_x"] = log.seed_lower_x;
    head["seed_lower_z"] = log.seed_lower_z;
    head["rounds_x"] = log.rounds_x;
    head["rounds_z"] = log.rounds_z;
    out << head.dump() << "\n";
    for (const GrowthRecord& r : log.records) {
        nlohmann::ordered_json j;
        j["record"] = "phase";
        j["round"] = r.round;
        j["type"] = std::string(1, type_char(r.type));
        j["logical"] = r.logical;
        j["phase"] = r.phase;
        j["qubits_added"] = r.qubits_added;
        j["pairs"] = r.pairs;
        j["shifts"] = r.shifts;
        j["overlaps"] = r.overlaps;
        j["gauge_overlaps"] = r.gauge_overlaps;
        j["bare_x_weights"] = r.bare_x_weights;
        j["bare_z_weights"] = r.bare_z_weights;
        j["profile"] = {{"w_x", r.profile.w_x},
                        {"w_z", r.profile.w_z},
                        {"q_x", r.profile.q_x},
                        {"q_z", r.profile.q_z}};
        j["n"] = r.n;
        j["lower_x"] = r.lower_x;
        j["lower_z"] = r.lower_z;
        out << j.dump() << "\n";
    }
    return out.str();
}

inline GrowthLog parse_growth_log(const std::string& text) {
    GrowthLog log;
    std::istringstream in(text);
    std::string line;
    bool seen_head = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("growth log line is not JSON: ") + e.what());
        }
        try {
            if (j.at("record") == "seed") {
                log.seed_lower_x = j.at("seed_lower_x").get<std::size_t>();
                log.seed_lower_z = j.at("seed_lower_z").get<std::size_t>();
                log.rounds_x = j.at("rounds_x").get<std::size_t>();
                log.rounds_z = j.at("rounds_z").get<std::size_t>();
                seen_head = true;
                continue;
            }
            GrowthRecord r;
            r.round = j.at("round").get<std::size_t>();
            r.type = j.at("type").get<std::string>() == "X" ? PauliType::X : PauliType::Z;
            r.logical = j.at("logical").get<std::size_t>();
            r.phase = j.at("phase").get<std::string>();
            r.qubits_added = j.at("qubits_added").get<std::vector<std::size_t>>();
            r.pairs = j.at("pairs").get<std::vector<std::pair<std::size_t, std::size_t>>>();
            r.shifts = j.at("shifts").get<std::vector<std::pair<std::size_t, std::size_t>>>();
            r.overlaps = j.at("overlaps").get<std::vector<std::size_t>>();
            r.gauge_overlaps = j.at("gauge_overlaps").get<std::vector<std::size_t>>();
            r.bare_x_weights = j.at("bare_x_weights").get<std::vector<std::size_t>>();
            r.bare_z_weights = j.at("bare_z_weights").get<std::vector<std::size_t>>();
            r.profile.w_x = j.at("profile").at("w_x").get<std::size_t>();
            r.profile.w_z = j.at("profile").at("w_z").get<std::size_t>();
            r.profile.q_x = j.at("profile").at("q_x").get<std::size_t>();
            r.profile.q_z = j.at("profile").at("q_z").get<std::size_t>();
            r.n = j.at("n").get<std::size_t>();
            r.lower_x = j.at("lower_x").get<std::size_t>();
            r.lower_z = j.at("lower_z").get<std::size_t>();
            log.records.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("growth log record is malformed: ") +
                                        e.what());
        }
    }
    if (!seen_head) throw std::invalid_argument("growth log has no seed record");
    return log;
}

// Tanner graph in DOT, one undirected edge per check incidence. Coloring:
// data nodes blue, X-check nodes green, Z-check nodes red.
inline std::string emit_dot(const CssSubsystemCode& code) {
    std::ostringstream out;
    out << "graph tanner {\n  node [style=filled];\n";
    for (std::size_t q = 0; q < code.n; ++q)
        out << "  d" << q << " [color=blue];\n";
    for (std::size_t r = 0; r < code.gauge_x.row_count(); ++r)
        out << "  x" << r << " [color=green];\n";
    for (std::size_t r = 0; r < code.gauge_z.row_count(); ++r)
        out << "  z" << r << " [color=red];\n";
    for (std::size_t r = 0; r < code.gauge_x.row_count(); ++r)
        for (std::size_t q : code.gauge_x.rows[r].support())
            out << "  x" << r << " -- d" << q << ";\n";
    for (std::size_t r = 0; r < code.gauge_z.row_count(); ++r)
        for (std::size_t q : code.gauge_z.rows[r].support())
            out << "  z" << r << " -- d" << q << ";\n";
    out << "}\n";
    return out.str();
}

// Degree histogram CSV with one row per (node class, degree) pair.
inline std::string emit_degrees_csv(const CssSubsystemCode& code) {
    std::map<std::size_t, std::size_t> data, xch, zch;
    std::vector<std::size_t> dx = column_degrees(code.gauge_x);
    std::vector<std::size_t> dz = column_degrees(code.gauge_z);
    for (std::size_t q = 0; q < code.n; ++q) ++data[dx[q] + dz[q]];
    for (const BitVector& row : code.gauge_x.rows) ++xch[row.weight()];
    for (const BitVector& row : code.gauge_z.rows) ++zch[row.weight()];
    std::ostringstream out;
    out << "node-class,degree,count\n";
    for (const auto& [deg, count] : data) out << "data," << deg << "," << count << "\n";
    for (const auto& [deg, count] : xch) out << "x-check," << deg << "," << count << "\n";
    for (const auto& [deg, count] : zch) out << "z-check," << deg << "," << count << "\n";
    return out.str();
}

}  // namespace qgrow
