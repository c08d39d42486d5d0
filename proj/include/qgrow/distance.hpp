#pragma once

#include <optional>

#include "qgrow/subsystem_code.hpp"

namespace qgrow {

struct MinWeightResult {
    std::size_t weight = 0;
    BitVector witness;
};

namespace detail {

// Depth-first combination walk over `pool` indices, carrying the XOR of the
// selected column syndromes. Calls accept on each zero-syndrome candidate;
// returns the first accepted witness.
template <typename Accept>
bool combination_search(const std::vector<std::size_t>& pool,
                        const std::vector<BitVector>& syndrome, std::size_t start,
                        std::size_t remaining, BitVector& partial, BitVector& chosen,
                        const Accept& accept) {
    if (remaining == 0) {
        if (!partial.is_zero()) return false;
        return accept(chosen);
    }
    for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
        std::size_t q = pool[i];
        partial ^= syndrome[q];
        chosen.set(q, true);
        if (combination_search(pool, syndrome, i + 1, remaining - 1, partial, chosen, accept))
            return true;
        chosen.set(q, false);
        partial ^= syndrome[q];
    }
    return false;
}

}  // namespace detail

// Minimum-weight nonzero v with (constraints * v = 0) and v outside the row
// space of `avoid`, searching by ascending weight up to w_max; nullopt when
// every weight <= w_max fails. Deterministic: first hit in lexicographic
// order at the minimal weight.
inline std::optional<MinWeightResult> min_weight_vector(const BinaryMatrix& constraints,
                                                        const BinaryMatrix& avoid,
                                                        std::size_t w_max) {
    const std::size_t n = constraints.cols;
    if (avoid.cols != n && avoid.row_count() > 0)
        throw std::invalid_argument("min_weight_vector: width mismatch");
    RrefResult av = rref(avoid);

    std::vector<BitVector> syndrome(n, BitVector(constraints.row_count()));
    for (std::size_t r = 0; r < constraints.row_count(); ++r)
        for (std::size_t c : constraints.rows[r].support()) syndrome[c].set(r, true);

    if (w_max == 0 || n == 0) return std::nullopt;

    // Weight 1: scan every qubit (including constraint-free ones).
    for (std::size_t q = 0; q < n; ++q) {
        if (!syndrome[q].is_zero()) continue;
        BitVector v(n);
        v.set(q, true);
        if (!in_rowspace(v, av)) return MinWeightResult{1, v};
    }

    // Weight >= 2: once no weight-1 word works, any minimal word is
    // supported entirely on constraint-touched qubits (removing a free qubit
    // from a candidate either leaves a smaller valid word or exposes a
    // weight-1 one).
    std::vector<std::size_t> pool;
    for (std::size_t q = 0; q < n; ++q)
        if (!syndrome[q].is_zero()) pool.push_back(q);

    auto accept = [&](const BitVector& v) { return !in_rowspace(v, av); };
    for (std::size_t w = 2; w <= w_max && w <= pool.size(); ++w) {
        BitVector partial(constraints.row_count());
        BitVector chosen(n);
        if (detail::combination_search(pool, syndrome, 0, w, partial, chosen, accept))
            return MinWeightResult{w, chosen};
    }
    return std::nullopt;
}

// Minimum weight of a pure-type-P word commuting with every stabilizer
// generator but outside the same-type gauge row space.
inline std::optional<std::size_t> dressed_distance(const CssSubsystemCode& code, PauliType type,
                                                   std::size_t w_max) {
    CenterParts center = stabilizer_center_parts(code);
    const BinaryMatrix& constraints = type == PauliType::X ? center.z : center.x;
    const BinaryMatrix& avoid = type == PauliType::X ? code.gauge_x : code.gauge_z;
    auto r = min_weight_vector(constraints, avoid, w_max);
    if (!r) return std::nullopt;
    return r->weight;
}

inline std::optional<std::size_t> dressed_distance(const CssSubsystemCode& code, PauliType type) {
    return dressed_distance(code, type, code.n);
}

// Minimum weight of a pure-type-P word commuting with every gauge generator
// but outside the same-type gauge row space.
inline std::optional<std::size_t> bare_distance(const CssSubsystemCode& code, PauliType type,
                                                std::size_t w_max) {
    const BinaryMatrix& constraints = type == PauliType::X ? code.gauge_z : code.gauge_x;
    const BinaryMatrix& avoid = type == PauliType::X ? code.gauge_x : code.gauge_z;
    auto r = min_weight_vector(constraints, avoid, w_max);
    if (!r) return std::nullopt;
    return r->weight;
}

inline std::optional<std::size_t> bare_distance(const CssSubsystemCode& code, PauliType type) {
    return bare_distance(code, type, code.n);
}

}  // namespace qgrow
