#pragma once

#include "qgrow/lego.hpp"
#include "qgrow/subsystem_code.hpp"

namespace qgrow {

namespace choidetail {

inline bool is_subspace(const CssSubsystemCode& code) {
    for (const auto& gx : code.gauge_x.rows)
        for (const auto& gz : code.gauge_z.rows)
            if (gx.dot(gz)) return false;
    return true;
}

}  // namespace choidetail

// Encoder state of a subspace CSS code on n physical legs followed by k
// logical legs: independent stabilizers act on the physical part alone, and
// each logical pairs its bare representative with X or Z on its own leg.
inline LegoBlock choi_block(const CssSubsystemCode& code) {
    if (!choidetail::is_subspace(code))
        throw std::invalid_argument("choi_block: gauge group is not Abelian");
    RrefResult hx = rref(code.gauge_x), hz = rref(code.gauge_z);
    if (hx.mat.row_count() + hz.mat.row_count() + code.k != code.n)
        throw std::invalid_argument("choi_block: stabilizer rank does not match n - k");

    const std::size_t legs = code.n + code.k;
    LegoBlock b(legs);
    auto lift = [&](const BitVector& row) {
        BitVector v = row;
        v.resize(legs);
        return v;
    };
    for (const auto& row : hx.mat.rows) b.gens.push_back(x_word(lift(row)));
    for (const auto& row : hz.mat.rows) b.gens.push_back(z_word(lift(row)));
    for (std::size_t j = 0; j < code.k; ++j) {
        BitVector x = lift(code.bare_x.rows[j]);
        x.set(code.n + j, true);
        b.gens.push_back(x_word(x));
        BitVector z = lift(code.bare_z.rows[j]);
        z.set(code.n + j, true);
        b.gens.push_back(z_word(z));
    }
    for (std::size_t q = 0; q < code.n; ++q) b.labels[q] = "q" + std::to_string(q);
    for (std::size_t j = 0; j < code.k; ++j) b.labels[code.n + j] = "L" + std::to_string(j);
    return b;
}

// Inverse of choi_block: read a subspace CSS code off a stabilizer-state
// block whose last k legs are logical. Demands positive signs and a CSS
// presentation; both hold for any contraction of sign-free CSS blocks.
inline CssSubsystemCode code_from_choi_block(const LegoBlock& block, std::size_t k) {
    if (block.legs < k) throw std::invalid_argument("code_from_choi_block: fewer legs than k");
    const std::size_t n = block.legs - k;
    const std::size_t g = block.gens.size();

    // Symplectic rows [x|z] over all legs, plus the restriction to the 2k
    // logical columns used to find the subgroup acting only on the physical
    // part.
    BinaryMatrix sym(2 * block.legs);
    BinaryMatrix logical_cols(2 * k);
    for (const PauliWord& w : block.gens) {
        BitVector row(2 * block.legs), lg(2 * k);
        for (std::size_t i = 0; i < block.legs; ++i) {
            row.set(i, w.x.get(i));
            row.set(block.legs + i, w.z.get(i));
        }
        for (std::size_t j = 0; j < k; ++j) {
            lg.set(j, w.x.get(n + j));
            lg.set(k + j, w.z.get(n + j));
        }
        sym.append_row(std::move(row));
        logical_cols.append_row(std::move(lg));
    }

    auto materialize = [&](const BitVector& combo) {
        PauliWord w = detail::masked_product(block.gens, combo, block.legs);
        if (w.sign != +1)
            throw std::invalid_argument("code_from_choi_block: negative stabilizer sign");
        return w;
    };

    BinaryMatrix stab_x(n), stab_z(n);  // [x|z] halves of the physical-only subgroup
    std::vector<PauliWord> stab_words;
    for (const BitVector& combo : nullspace(transpose(logical_cols)).rows) {
        if (combo.is_zero()) continue;
        PauliWord w = materialize(combo);
        BitVector x(n), z(n);
        for (std::size_t i = 0; i < n; ++i) {
            x.set(i, w.x.get(i));
            z.set(i, w.z.get(i));
        }
        stab_x.append_row(std::move(x));
        stab_z.append_row(std::move(z));
        stab_words.push_back(std::move(w));
    }

    // CSS split of the physical stabilizer group: pure-type elements are
    // indexed by combinations whose opposite half cancels.
    auto pure_part = [&](const BinaryMatrix& same, const BinaryMatrix& other) {
        BinaryMatrix rows(n);
        for (const BitVector& combo : nullspace(transpose(other)).rows) {
            if (detail::masked_product(stab_words, combo, block.legs).sign != +1)
                throw std::invalid_argument("code_from_choi_block: negative pure-type sign");
            BitVector acc(n);
            for (std::size_t i : combo.support()) acc ^= same.rows[i];
            rows.append_row(std::move(acc));
        }
        return rref(rows).mat;
    };
    CssSubsystemCode code(n);
    code.k = k;
    code.gauge_x = pure_part(stab_x, stab_z);
    code.gauge_z = pure_part(stab_z, stab_x);
    if (code.gauge_x.row_count() + code.gauge_z.row_count() != rank(sym) - 2 * k)
        throw std::invalid_argument("code_from_choi_block: stabilizer group is not CSS");

    // Logical representatives: the group element that is pure X (or Z) on the
    // physical part and exactly X (or Z) on logical leg j. Solve over the
    // constrained columns: all logical columns plus the opposite-type
    // physical half.
    auto extract_logical = [&](std::size_t j, PauliType type) {
        BinaryMatrix constrained(2 * k + n);
        for (std::size_t r = 0; r < g; ++r) {
            BitVector row(2 * k + n);
            for (std::size_t c = 0; c < 2 * k; ++c) row.set(c, logical_cols.get(r, c));
            for (std::size_t i = 0; i < n; ++i) {
                bool opp = type == PauliType::X ? sym.get(r, block.legs + i)
                                                : sym.get(r, i);
                row.set(2 * k + i, opp);
            }
            constrained.append_row(std::move(row));
        }
        BitVector target(2 * k + n);
        target.set(type == PauliType::X ? j : k + j, true);
        auto combo = express_in_rowspace(target, constrained);
        if (!combo)
            throw std::invalid_argument("code_from_choi_block: missing pure logical representative");
        PauliWord w = materialize(*combo);
        if ((type == PauliType::X ? w.z : w.x).any())
            throw std::logic_error("code_from_choi_block: representative is not pure");
        BitVector phys(n);
        const BitVector& bits = type == PauliType::X ? w.x : w.z;
        for (std::size_t i = 0; i < n; ++i) phys.set(i, bits.get(i));
        return phys;
    };
    code.bare_x = BinaryMatrix(n);
    code.bare_z = BinaryMatrix(n);
    for (std::size_t j = 0; j < k; ++j) {
        code.bare_x.append_row(extract_logical(j, PauliType::X));
        code.bare_z.append_row(extract_logical(j, PauliType::Z));
    }
    return code;
}

}  // namespace qgrow
