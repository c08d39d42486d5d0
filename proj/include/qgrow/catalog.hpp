#pragma once

#include <string>

#include "qgrow/carve.hpp"
#include "qgrow/subsystem_code.hpp"

namespace qgrow {

namespace catdetail {

inline void require_dims(bool ok, const char* who) {
    if (!ok) throw std::invalid_argument(std::string(who) + ": dimensions must be >= 2");
}

inline BitVector edge(std::size_t n, std::size_t a, std::size_t b) {
    BitVector v(n);
    v.set(a, true);
    v.set(b, true);
    return v;
}

}  // namespace catdetail

// [[4,1,2]] subspace seed: stabilizers <XXXX, ZZ(0,2), ZZ(1,3)>.
inline CssSubsystemCode seed_412() {
    CssSubsystemCode c(4);
    c.k = 1;
    c.gauge_x = BinaryMatrix::from_strings({"1111"});
    c.gauge_z = BinaryMatrix::from_strings({"1010", "0101"});
    c.bare_x = BinaryMatrix::from_strings({"1010"});
    c.bare_z = BinaryMatrix::from_strings({"1100"});
    c.metadata["name"] = "seed412";
    return c;
}

// [[4,2,2]] subsystem seed: gauge <XXXX, ZZZZ>, logicals (XXII, ZIZI) and
// (XIXI, ZZII).
inline CssSubsystemCode seed_422() {
    CssSubsystemCode c(4);
    c.k = 2;
    c.gauge_x = BinaryMatrix::from_strings({"1111"});
    c.gauge_z = BinaryMatrix::from_strings({"1111"});
    c.bare_x = BinaryMatrix::from_strings({"1100", "1010"});
    c.bare_z = BinaryMatrix::from_strings({"1010", "1100"});
    c.metadata["name"] = "seed422";
    return c;
}

// [[6,4,2]] iceberg code: stabilizers X^6 and Z^6, logicals X_0X_j / Z_jZ_5.
inline CssSubsystemCode iceberg() {
    CssSubsystemCode c(6);
    c.k = 4;
    c.gauge_x = BinaryMatrix::from_strings({"111111"});
    c.gauge_z = BinaryMatrix::from_strings({"111111"});
    c.bare_x = BinaryMatrix::from_strings({"110000", "101000", "100100", "100010"});
    c.bare_z = BinaryMatrix::from_strings({"010001", "001001", "000101", "000011"});
    c.metadata["name"] = "iceberg";
    return c;
}

// 2d Bacon-Shor on a rows x cols grid (row-major): XX gauge on horizontal
// edges, ZZ gauge on vertical edges; bare X = last column, bare Z = first
// row.
inline CssSubsystemCode bacon_shor_2d(std::size_t rows, std::size_t cols) {
    catdetail::require_dims(rows >= 2 && cols >= 2, "bacon_shor_2d");
    const std::size_t n = rows * cols;
    auto q = [&](std::size_t i, std::size_t j) { return i * cols + j; };

    CssSubsystemCode c(n);
    c.k = 1;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j)
            c.gauge_x.append_row(catdetail::edge(n, q(i, j), q(i, j + 1)));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i + 1 < rows; ++i)
            c.gauge_z.append_row(catdetail::edge(n, q(i, j), q(i + 1, j)));

    BitVector bx(n), bz(n);
    for (std::size_t i = 0; i < rows; ++i) bx.set(q(i, cols - 1), true);
    for (std::size_t j = 0; j < cols; ++j) bz.set(q(0, j), true);
    c.bare_x.append_row(std::move(bx));
    c.bare_z.append_row(std::move(bz));
    c.metadata["name"] = "bs" + std::to_string(rows) + "x" + std::to_string(cols);
    return c;
}

// 3d Bacon-Shor on an a x b x c grid, (layer, row, column)-major: XX gauge on
// axis-0 edges, ZZ gauge on axis-1 and axis-2 edges; bare X = the full i=0
// face, bare Z = the axis-0 line through the origin.
inline CssSubsystemCode bacon_shor_3d(std::size_t a, std::size_t b, std::size_t c) {
    catdetail::require_dims(a >= 2 && b >= 2 && c >= 2, "bacon_shor_3d");
    const std::size_t n = a * b * c;
    auto q = [&](std::size_t i, std::size_t j, std::size_t l) { return (i * b + j) * c + l; };

    CssSubsystemCode code(n);
    code.k = 1;
    for (std::size_t i = 0; i + 1 < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t l = 0; l < c; ++l)
                code.gauge_x.append_row(catdetail::edge(n, q(i, j, l), q(i + 1, j, l)));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j + 1 < b; ++j)
            for (std::size_t l = 0; l < c; ++l)
                code.gauge_z.append_row(catdetail::edge(n, q(i, j, l), q(i, j + 1, l)));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t l = 0; l + 1 < c; ++l)
                code.gauge_z.append_row(catdetail::edge(n, q(i, j, l), q(i, j, l + 1)));

    BitVector bx(n), bz(n);
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t l = 0; l < c; ++l) bx.set(q(0, j, l), true);
    for (std::size_t i = 0; i < a; ++i) bz.set(q(i, 0, 0), true);
    code.bare_x.append_row(std::move(bx));
    code.bare_z.append_row(std::move(bz));
    code.metadata["name"] =
        "bs" + std::to_string(a) + "x" + std::to_string(b) + "x" + std::to_string(c);
    return code;
}

// Rotated surface code of distance d on a d x d grid (row-major). Bulk
// plaquettes checkerboard between X ((r+c) even) and Z; weight-2 boundary
// checks continue the checkerboard: Z on the top/bottom rows, X on the
// left/right columns. Bare X = first row, bare Z = first column.
inline CssSubsystemCode rotated_surface(std::size_t d) {
    catdetail::require_dims(d >= 2, "rotated_surface");
    const std::size_t n = d * d;
    auto q = [&](std::size_t r, std::size_t c) { return r * d + c; };

    CssSubsystemCode code(n);
    code.k = 1;
    for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t c = 0; c + 1 < d; ++c) {
            BitVector v(n);
            v.set(q(r, c), true);
            v.set(q(r, c + 1), true);
            v.set(q(r + 1, c), true);
            v.set(q(r + 1, c + 1), true);
            ((r + c) % 2 == 0 ? code.gauge_x : code.gauge_z).append_row(std::move(v));
        }
    for (std::size_t c = 0; c + 1 < d; c += 2)
        code.gauge_z.append_row(catdetail::edge(n, q(0, c), q(0, c + 1)));
    for (std::size_t c = d % 2; c + 1 < d; c += 2)
        code.gauge_z.append_row(catdetail::edge(n, q(d - 1, c), q(d - 1, c + 1)));
    for (std::size_t r = 1; r + 1 < d; r += 2)
        code.gauge_x.append_row(catdetail::edge(n, q(r, 0), q(r + 1, 0)));
    for (std::size_t r = (d + 1) % 2; r + 1 < d; r += 2)
        code.gauge_x.append_row(catdetail::edge(n, q(r, d - 1), q(r + 1, d - 1)));

    BitVector bx(n), bz(n);
    for (std::size_t c = 0; c < d; ++c) bx.set(q(0, c), true);
    for (std::size_t r = 0; r < d; ++r) bz.set(q(r, 0), true);
    code.bare_x.append_row(std::move(bx));
    code.bare_z.append_row(std::move(bz));
    code.metadata["name"] = "surface" + std::to_string(d);
    return code;
}

// Z-gauge-fixed 2d Bacon-Shor: the vertical ZZ dominoes are promoted to
// stabilizers, which collapses the X side to the adjacent-column strip
// operators (weight 2*rows). A subspace [[rows*cols, 1, min(rows, cols)]]
// code and the starting point for stabilizer carving.
inline CssSubsystemCode bacon_shor_subspace(std::size_t rows, std::size_t cols) {
    catdetail::require_dims(rows >= 2 && cols >= 2, "bacon_shor_subspace");
    const std::size_t n = rows * cols;
    auto q = [&](std::size_t i, std::size_t j) { return i * cols + j; };

    CssSubsystemCode c(n);
    c.k = 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
        BitVector strip(n);
        for (std::size_t i = 0; i < rows; ++i) {
            strip.set(q(i, j), true);
            strip.set(q(i, j + 1), true);
        }
        c.gauge_x.append_row(std::move(strip));
    }
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i + 1 < rows; ++i)
            c.gauge_z.append_row(catdetail::edge(n, q(i, j), q(i + 1, j)));

    BitVector bx(n), bz(n);
    for (std::size_t i = 0; i < rows; ++i) bx.set(q(i, 0), true);
    for (std::size_t j = 0; j < cols; ++j) bz.set(q(0, j), true);
    c.bare_x.append_row(std::move(bx));
    c.bare_z.append_row(std::move(bz));
    c.metadata["name"] = "bsfix" + std::to_string(rows) + "x" + std::to_string(cols);
    return c;
}

// [[36,1,6]] compass code: carve one 2x2 X plaquette out of each of the six
// window positions (column pairs 0/2/4, row windows 0 and 2) of the Z-fixed
// 6x6 Bacon-Shor. The leftover strip remainders supply the third plaquette
// row, so the carved regions end up with checks of weight at most 4.
inline CssSubsystemCode compass_6x6() {
    CssSubsystemCode code = bacon_shor_subspace(6, 6);
    for (std::size_t i : {std::size_t{0}, std::size_t{2}, std::size_t{4}})
        for (std::size_t j : {std::size_t{0}, std::size_t{2}})
            code = carve_x_stabilizer(code, i, j, 2, 6);
    code.metadata["name"] = "compass6x6";
    return code;
}

// Name-keyed access for the CLI and tests: seed412, seed422, iceberg,
// compass6x6, bs<r>x<c>, bs<a>x<b>x<c>, surface<d>.
inline CssSubsystemCode catalog_code(const std::string& name) {
    auto parse_dims = [](const std::string& body) {
        std::vector<std::size_t> dims;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t next = body.find('x', pos);
            std::string part = body.substr(pos, next == std::string::npos ? next : next - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                return std::vector<std::size_t>{};
            dims.push_back(std::stoul(part));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return dims;
    };

    if (name == "seed412") return seed_412();
    if (name == "seed422") return seed_422();
    if (name == "iceberg") return iceberg();
    if (name == "compass6x6") return compass_6x6();
    if (name.rfind("surface", 0) == 0) {
        auto dims = parse_dims(name.substr(7));
        if (dims.size() == 1) return rotated_surface(dims[0]);
    }
    if (name.rfind("bsfix", 0) == 0) {
        auto dims = parse_dims(name.substr(5));
        if (dims.size() == 2) return bacon_shor_subspace(dims[0], dims[1]);
    }
    if (name.rfind("bs", 0) == 0) {
        auto dims = parse_dims(name.substr(2));
        if (dims.size() == 2) return bacon_shor_2d(dims[0], dims[1]);
        if (dims.size() == 3) return bacon_shor_3d(dims[0], dims[1], dims[2]);
    }
    throw std::invalid_argument(
        "catalog_code: unknown name \"" + name +
        "\" (expected seed412, seed422, iceberg, compass6x6, bs<r>x<c>, bs<a>x<b>x<c>, "
        "bsfix<r>x<c>, or surface<d>)");
}

}  // namespace qgrow
