#pragma once

#include <optional>
#include <utility>

#include "qgrow/bitvec.hpp"

namespace qgrow {

// Dense GF(2) matrix: a list of equal-length rows.
struct BinaryMatrix {
    std::size_t cols = 0;
    std::vector<BitVector> rows;

    BinaryMatrix() = default;
    explicit BinaryMatrix(std::size_t cols) : cols(cols) {}
    BinaryMatrix(std::size_t row_count, std::size_t cols)
        : cols(cols), rows(row_count, BitVector(cols)) {}

    static BinaryMatrix from_strings(const std::vector<std::string>& lines) {
        BinaryMatrix m(lines.empty() ? 0 : lines[0].size());
        for (const auto& line : lines) m.append_row(BitVector::from_string(line));
        return m;
    }

    std::size_t row_count() const { return rows.size(); }

    void append_row(BitVector v) {
        if (v.size() != cols) throw std::invalid_argument("BinaryMatrix: row length mismatch");
        rows.push_back(std::move(v));
    }

    bool get(std::size_t r, std::size_t c) const { return rows[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows[r].set(c, v); }

    bool operator==(const BinaryMatrix&) const = default;
};

// Row-reduced echelon form with zero rows dropped; pivots[i] is the pivot
// column of row i, strictly increasing.
struct RrefResult {
    BinaryMatrix mat;
    std::vector<std::size_t> pivots;
};

// Rref that also tracks row operations: ops[i] gives the combination of
// original rows (as a bitmask over row indices) equal to mat.rows[i].
struct TrackedRref {
    BinaryMatrix mat;
    std::vector<std::size_t> pivots;
    std::vector<BitVector> ops;
};

inline TrackedRref tracked_rref(const BinaryMatrix& m) {
    TrackedRref r;
    r.mat = m;
    std::vector<BitVector> ops(m.row_count(), BitVector(m.row_count()));
    for (std::size_t i = 0; i < m.row_count(); ++i) ops[i].set(i, true);

    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < r.mat.row_count(); ++col) {
        std::size_t pivot = lead;
        while (pivot < r.mat.row_count() && !r.mat.get(pivot, col)) ++pivot;
        if (pivot == r.mat.row_count()) continue;
        std::swap(r.mat.rows[lead], r.mat.rows[pivot]);
        std::swap(ops[lead], ops[pivot]);
        for (std::size_t i = 0; i < r.mat.row_count(); ++i) {
            if (i != lead && r.mat.get(i, col)) {
                r.mat.rows[i] ^= r.mat.rows[lead];
                ops[i] ^= ops[lead];
            }
        }
        r.pivots.push_back(col);
        ++lead;
    }
    r.mat.rows.resize(lead);
    ops.resize(lead);
    r.ops = std::move(ops);
    return r;
}

inline RrefResult rref(const BinaryMatrix& m) {
    TrackedRref t = tracked_rref(m);
    return RrefResult{std::move(t.mat), std::move(t.pivots)};
}

inline std::size_t rank(const BinaryMatrix& m) { return rref(m).mat.row_count(); }

// Inverse of a square full-rank matrix: the tracked row operations that turn
// it into the identity.
inline std::optional<BinaryMatrix> inverse(const BinaryMatrix& m) {
    if (m.row_count() != m.cols) return std::nullopt;
    TrackedRref t = tracked_rref(m);
    if (t.pivots.size() != m.cols) return std::nullopt;
    BinaryMatrix out(m.cols);
    for (const BitVector& op : t.ops) out.append_row(op);
    return out;
}

// Reduce v against an rref basis; returns the residual.
inline BitVector reduce_by_rref(BitVector v, const RrefResult& r) {
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        if (v.get(r.pivots[i])) v ^= r.mat.rows[i];
    return v;
}

inline bool in_rowspace(const BitVector& v, const RrefResult& r) {
    return reduce_by_rref(v, r).is_zero();
}

inline bool in_rowspace(const BitVector& v, const BinaryMatrix& m) {
    return in_rowspace(v, rref(m));
}

// Coordinates of v over the original rows of m, if v lies in the rowspace.
inline std::optional<BitVector> express_in_rowspace(const BitVector& v, const BinaryMatrix& m) {
    TrackedRref t = tracked_rref(m);
    BitVector residual = v;
    BitVector coords(m.row_count());
    for (std::size_t i = 0; i < t.pivots.size(); ++i) {
        if (residual.get(t.pivots[i])) {
            residual ^= t.mat.rows[i];
            coords ^= t.ops[i];
        }
    }
    if (!residual.is_zero()) return std::nullopt;
    return coords;
}

// Basis of {x : m x = 0}, one row per free column.
inline BinaryMatrix nullspace(const BinaryMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    BinaryMatrix basis(m.cols);
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector x(m.cols);
        x.set(f, true);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.mat.get(i, f)) x.set(r.pivots[i], true);
        basis.append_row(std::move(x));
    }
    return basis;
}

inline BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.cols, m.row_count());
    for (std::size_t r = 0; r < m.row_count(); ++r)
        for (std::size_t c : m.rows[r].support()) t.set(c, r, true);
    return t;
}

// a (r x k) times b (k x c).
inline BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols != b.row_count()) throw std::invalid_argument("multiply: shape mismatch");
    BinaryMatrix out(a.row_count(), b.cols);
    for (std::size_t i = 0; i < a.row_count(); ++i)
        for (std::size_t j : a.rows[i].support()) out.rows[i] ^= b.rows[j];
    return out;
}

// a (r x k) times column vector x (k).
inline BitVector multiply(const BinaryMatrix& a, const BitVector& x) {
    if (a.cols != x.size()) throw std::invalid_argument("multiply: shape mismatch");
    BitVector out(a.row_count());
    for (std::size_t i = 0; i < a.row_count(); ++i) out.set(i, a.rows[i].dot(x));
    return out;
}

}  // namespace qgrow
