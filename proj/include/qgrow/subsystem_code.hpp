#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "qgrow/matrix.hpp"
#include "qgrow/pauli.hpp"

namespace qgrow {

// CSS-like subsystem code. The gauge group is generated by pure-X rows
// (gauge_x) and pure-Z rows (gauge_z), given as support vectors over the
// n qubits. bare_x/bare_z hold one bare logical representative per logical
// qubit (row j = support of the type-P representative of logical j).
struct CssSubsystemCode {
    std::size_t n = 0;
    std::size_t k = 0;
    BinaryMatrix gauge_x;
    BinaryMatrix gauge_z;
    BinaryMatrix bare_x;
    BinaryMatrix bare_z;
    std::map<std::string, std::string> metadata;

    CssSubsystemCode() = default;
    explicit CssSubsystemCode(std::size_t n)
        : n(n), gauge_x(n), gauge_z(n), bare_x(n), bare_z(n) {}

    bool operator==(const CssSubsystemCode&) const = default;
};

// Pure-type generating sets of the center of the gauge group, each given as
// an rref basis of supports. A pure-X element lies in the center iff it is a
// gauge_x row combination orthogonal to every gauge_z row, and symmetrically;
// for CSS-like groups these two parts generate the whole center.
struct CenterParts {
    BinaryMatrix x;
    BinaryMatrix z;
};

inline CenterParts stabilizer_center_parts(const CssSubsystemCode& code) {
    auto part = [](const BinaryMatrix& same, const BinaryMatrix& other) {
        BinaryMatrix gens(same.cols);
        if (same.row_count() == 0) return gens;
        // Combinations u of `same` rows with (other * same^T) u = 0; with no
        // opposite-type rows the nullspace is everything, as it should be.
        BinaryMatrix overlap = multiply(other, transpose(same));
        BinaryMatrix combos = nullspace(overlap);
        for (const auto& u : combos.rows) {
            BitVector g(same.cols);
            for (std::size_t i : u.support()) g ^= same.rows[i];
            gens.append_row(std::move(g));
        }
        return rref(gens).mat;
    };
    return CenterParts{part(code.gauge_x, code.gauge_z), part(code.gauge_z, code.gauge_x)};
}

inline std::vector<PauliWord> stabilizer_center(const CssSubsystemCode& code) {
    CenterParts parts = stabilizer_center_parts(code);
    std::vector<PauliWord> gens;
    for (const auto& row : parts.x.rows) gens.push_back(x_word(row));
    for (const auto& row : parts.z.rows) gens.push_back(z_word(row));
    return gens;
}

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;  // n - (r_x + r_z + s)/2
    std::size_t r_x = 0;
    std::size_t r_z = 0;
    std::size_t s = 0;  // independent center generators
    std::size_t g = 0;  // gauge qubits, (r_x + r_z - s)/2
};

inline CodeParameters code_parameters(const CssSubsystemCode& code) {
    CodeParameters p;
    p.n = code.n;
    p.r_x = rank(code.gauge_x);
    p.r_z = rank(code.gauge_z);
    CenterParts parts = stabilizer_center_parts(code);
    p.s = parts.x.row_count() + parts.z.row_count();
    p.g = (p.r_x + p.r_z - p.s) / 2;
    p.k = p.n - p.s - p.g;
    return p;
}

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const CssSubsystemCode& code) {
    ValidationReport rep;
    auto flag = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

    auto check_width = [&](const BinaryMatrix& m, const char* name) {
        if (m.cols != code.n)
            flag(std::string(name) + " has width " + std::to_string(m.cols) + ", expected n=" +
                 std::to_string(code.n));
    };
    check_width(code.gauge_x, "gauge_x");
    check_width(code.gauge_z, "gauge_z");
    check_width(code.bare_x, "bare_x");
    check_width(code.bare_z, "bare_z");
    if (!rep.ok()) return rep;  // shape errors make the rest meaningless

    if (code.bare_x.row_count() != code.k || code.bare_z.row_count() != code.k)
        flag("bare logical lists must each have k=" + std::to_string(code.k) + " rows (got " +
             std::to_string(code.bare_x.row_count()) + " X, " +
             std::to_string(code.bare_z.row_count()) + " Z)");

    // Bare representatives commute with every gauge generator of the
    // opposite type (same type is automatic for pure-type words).
    for (std::size_t j = 0; j < code.bare_x.row_count(); ++j)
        for (std::size_t r = 0; r < code.gauge_z.row_count(); ++r)
            if (code.bare_x.rows[j].dot(code.gauge_z.rows[r]))
                flag("bare_x[" + std::to_string(j) + "] anticommutes with gauge_z row " +
                     std::to_string(r));
    for (std::size_t j = 0; j < code.bare_z.row_count(); ++j)
        for (std::size_t r = 0; r < code.gauge_x.row_count(); ++r)
            if (code.bare_z.rows[j].dot(code.gauge_x.rows[r]))
                flag("bare_z[" + std::to_string(j) + "] anticommutes with gauge_x row " +
                     std::to_string(r));

    // Pairing: odd support overlap on the diagonal, even off the diagonal.
    for (std::size_t i = 0; i < code.bare_x.row_count(); ++i)
        for (std::size_t j = 0; j < code.bare_z.row_count(); ++j) {
            bool odd = code.bare_x.rows[i].dot(code.bare_z.rows[j]);
            if (i == j && !odd)
                flag("bare_x[" + std::to_string(i) + "] must anticommute with bare_z[" +
                     std::to_string(i) + "] (support overlap is even)");
            if (i != j && odd)
                flag("bare_x[" + std::to_string(i) + "] must commute with bare_z[" +
                     std::to_string(j) + "]");
        }

    // Nontriviality: representatives are not gauge elements.
    RrefResult rx = rref(code.gauge_x), rz = rref(code.gauge_z);
    for (std::size_t j = 0; j < code.bare_x.row_count(); ++j)
        if (in_rowspace(code.bare_x.rows[j], rx))
            flag("bare_x[" + std::to_string(j) + "] lies in the X gauge row space");
    for (std::size_t j = 0; j < code.bare_z.row_count(); ++j)
        if (in_rowspace(code.bare_z.rows[j], rz))
            flag("bare_z[" + std::to_string(j) + "] lies in the Z gauge row space");

    CodeParameters p = code_parameters(code);
    if (p.k != code.k)
        flag("stored k=" + std::to_string(code.k) + " but rank computation gives k=" +
             std::to_string(p.k));
    return rep;
}

// Relabel qubits: old qubit q becomes perm[q]. perm must be a permutation
// of 0..n-1.
inline CssSubsystemCode permute_qubits(const CssSubsystemCode& code,
                                       const std::vector<std::size_t>& perm) {
    if (perm.size() != code.n)
        throw std::invalid_argument("permute_qubits: permutation length must equal n");
    std::vector<bool> seen(code.n, false);
    for (std::size_t p : perm) {
        if (p >= code.n || seen[p])
            throw std::invalid_argument("permute_qubits: not a permutation");
        seen[p] = true;
    }
    auto apply = [&](const BinaryMatrix& m) {
        BinaryMatrix out(m.row_count(), m.cols);
        for (std::size_t r = 0; r < m.row_count(); ++r)
            for (std::size_t q : m.rows[r].support()) out.set(r, perm[q], true);
        return out;
    };
    CssSubsystemCode out(code.n);
    out.k = code.k;
    out.gauge_x = apply(code.gauge_x);
    out.gauge_z = apply(code.gauge_z);
    out.bare_x = apply(code.bare_x);
    out.bare_z = apply(code.bare_z);
    out.metadata = code.metadata;
    return out;
}

struct WeightProfile {
    std::size_t w_x = 0;  // max gauge_x row weight
    std::size_t w_z = 0;
    std::size_t q_x = 0;  // max gauge_x column weight (qubit degree)
    std::size_t q_z = 0;
};

inline std::vector<std::size_t> column_degrees(const BinaryMatrix& m) {
    std::vector<std::size_t> deg(m.cols, 0);
    for (const auto& row : m.rows)
        for (std::size_t c : row.support()) ++deg[c];
    return deg;
}

inline WeightProfile weight_profile(const CssSubsystemCode& code) {
    WeightProfile p;
    for (const auto& row : code.gauge_x.rows) p.w_x = std::max(p.w_x, row.weight());
    for (const auto& row : code.gauge_z.rows) p.w_z = std::max(p.w_z, row.weight());
    for (std::size_t d : column_degrees(code.gauge_x)) p.q_x = std::max(p.q_x, d);
    for (std::size_t d : column_degrees(code.gauge_z)) p.q_z = std::max(p.q_z, d);
    return p;
}

// Bipartite incidence graph between data qubits and the two check families.
struct TannerGraph {
    std::size_t data_nodes = 0;
    std::size_t x_check_nodes = 0;
    std::size_t z_check_nodes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> x_edges;  // (x-check row, qubit)
    std::vector<std::pair<std::size_t, std::size_t>> z_edges;  // (z-check row, qubit)
};

inline TannerGraph tanner_graph(const CssSubsystemCode& code) {
    TannerGraph g;
    g.data_nodes = code.n;
    g.x_check_nodes = code.gauge_x.row_count();
    g.z_check_nodes = code.gauge_z.row_count();
    for (std::size_t r = 0; r < code.gauge_x.row_count(); ++r)
        for (std::size_t c : code.gauge_x.rows[r].support()) g.x_edges.emplace_back(r, c);
    for (std::size_t r = 0; r < code.gauge_z.row_count(); ++r)
        for (std::size_t c : code.gauge_z.rows[r].support()) g.z_edges.emplace_back(r, c);
    return g;
}

// Degree histogram over all Tanner-graph nodes (data and checks together).
inline std::map<std::size_t, std::size_t> degree_histogram(const CssSubsystemCode& code) {
    std::map<std::size_t, std::size_t> hist;
    std::vector<std::size_t> dx = column_degrees(code.gauge_x);
    std::vector<std::size_t> dz = column_degrees(code.gauge_z);
    for (std::size_t i = 0; i < code.n; ++i) ++hist[dx[i] + dz[i]];
    for (const auto& row : code.gauge_x.rows) ++hist[row.weight()];
    for (const auto& row : code.gauge_z.rows) ++hist[row.weight()];
    return hist;
}

}  // namespace qgrow
