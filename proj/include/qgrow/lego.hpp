#pragma once

#include <map>
#include <string>

#include "qgrow/matrix.hpp"
#include "qgrow/pauli.hpp"

namespace qgrow {

// A stabilizer lego block: a tensor on `legs` qubit legs, fully described by
// its commuting, independent Pauli generators. A block with generators ==
// legs is a state; fewer generators describe a map with kernel.
struct LegoBlock {
    std::size_t legs = 0;
    std::vector<PauliWord> gens;
    std::vector<std::string> labels;  // per-leg opaque tags
    std::map<std::string, std::string> metadata;

    LegoBlock() = default;
    explicit LegoBlock(std::size_t legs) : legs(legs), labels(legs) {}
};

// Thrown when a contraction annihilates the tensor (the enforced Bell word's
// negation is already in the group).
struct NullContraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline LegoBlock spider(std::size_t valence, PauliType type) {
    if (valence < 1) throw std::invalid_argument("spider: valence must be >= 1");
    LegoBlock b(valence);
    BitVector all(valence);
    for (std::size_t i = 0; i < valence; ++i) all.set(i, true);
    PauliWord full = type == PauliType::Z ? x_word(all) : z_word(all);
    b.gens.push_back(full);
    for (std::size_t i = 0; i + 1 < valence; ++i) {
        BitVector pair(valence);
        pair.set(i, true);
        pair.set(i + 1, true);
        b.gens.push_back(type == PauliType::Z ? z_word(pair) : x_word(pair));
    }
    return b;
}

// 5-leg weight-reduction blocks: legs 0-3 are physical (0 and 2 inputs,
// 1 and 3 outputs), leg 4 carries the gauge qubit. The Z flavor stabilizes
// <XXXX, ZZII, IIZZ> on the physical legs and couples the gauge leg through
// the logical pair (ZIZI, XXII); the X flavor swaps the colors.
inline LegoBlock nonisometric_lego(PauliType type) {
    LegoBlock b(5);
    auto word = [&](const std::string& phys, char gauge) {
        std::string s = phys + gauge;
        return PauliWord::from_string(s);
    };
    if (type == PauliType::Z) {
        b.gens = {word("XXXX", 'I'), word("ZZII", 'I'), word("IIZZ", 'I'), word("ZIZI", 'Z'),
                  word("XXII", 'X')};
    } else {
        b.gens = {word("ZZZZ", 'I'), word("XXII", 'I'), word("IIXX", 'I'), word("XIXI", 'X'),
                  word("ZZII", 'Z')};
    }
    b.labels = {"in0", "out0", "in1", "out1", "gauge"};
    return b;
}

inline LegoBlock zn_lego() { return nonisometric_lego(PauliType::Z); }
inline LegoBlock xn_lego() { return nonisometric_lego(PauliType::X); }

// [[6,4,2]] block: stabilizers X^6 and Z^6; the four logical pairs
// X_0X_j / Z_jZ_5 (j = 1..4) ride along as metadata.
inline LegoBlock iceberg_642() {
    LegoBlock b(6);
    b.gens = {PauliWord::from_string("XXXXXX"), PauliWord::from_string("ZZZZZZ")};
    for (int j = 1; j <= 4; ++j) {
        std::string x(6, 'I'), z(6, 'I');
        x[0] = 'X';
        x[j] = 'X';
        z[j] = 'Z';
        z[5] = 'Z';
        b.metadata["logical_x_" + std::to_string(j)] = x;
        b.metadata["logical_z_" + std::to_string(j)] = z;
    }
    return b;
}

inline LegoBlock tensor_product(const LegoBlock& a, const LegoBlock& b) {
    LegoBlock out(a.legs + b.legs);
    for (const PauliWord& g : a.gens) {
        PauliWord p(out.legs);
        p.sign = g.sign;
        for (std::size_t i : g.x.support()) p.x.set(i, true);
        for (std::size_t i : g.z.support()) p.z.set(i, true);
        out.gens.push_back(std::move(p));
    }
    for (const PauliWord& g : b.gens) {
        PauliWord p(out.legs);
        p.sign = g.sign;
        for (std::size_t i : g.x.support()) p.x.set(a.legs + i, true);
        for (std::size_t i : g.z.support()) p.z.set(a.legs + i, true);
        out.gens.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < a.legs; ++i) out.labels[i] = a.labels[i];
    for (std::size_t i = 0; i < b.legs; ++i) out.labels[a.legs + i] = b.labels[i];
    out.metadata = a.metadata;
    out.metadata.insert(b.metadata.begin(), b.metadata.end());
    return out;
}

namespace detail {

// Symplectic row [x|z] of a word, for rowspace computations.
inline BitVector symplectic_row(const PauliWord& p) {
    BitVector row(2 * p.n_qubits());
    for (std::size_t i : p.x.support()) row.set(i, true);
    for (std::size_t i : p.z.support()) row.set(p.n_qubits() + i, true);
    return row;
}

// Product of the generators selected by `mask`, in ascending index order
// (the factors commute, so the sign is order-independent).
inline PauliWord masked_product(const std::vector<PauliWord>& gens, const BitVector& mask,
                                std::size_t legs) {
    PauliWord acc(legs);
    for (std::size_t i : mask.support()) acc = acc * gens[i];
    return acc;
}

// Measurement update: enforce `w` (sign +1) as a stabilizer of the block.
inline void enforce_word(LegoBlock& b, const PauliWord& w) {
    std::vector<std::size_t> anti;
    for (std::size_t i = 0; i < b.gens.size(); ++i)
        if (!b.gens[i].commutes_with(w)) anti.push_back(i);

    if (!anti.empty()) {
        std::size_t pivot = anti[0];
        for (std::size_t i = 1; i < anti.size(); ++i)
            b.gens[anti[i]] = b.gens[anti[i]] * b.gens[pivot];
        b.gens[pivot] = w;
        return;
    }

    // w commutes with everything: +-w may already be in the group.
    BinaryMatrix rows(2 * b.legs);
    for (const PauliWord& g : b.gens) rows.append_row(symplectic_row(g));
    auto coords = express_in_rowspace(symplectic_row(w), rows);
    if (!coords) {
        b.gens.push_back(w);  // enlarges a map-with-kernel block
        return;
    }
    PauliWord present = masked_product(b.gens, *coords, b.legs);
    if (present.sign != w.sign) throw NullContraction("null contraction: -" + w.to_string().substr(1) + " is stabilized");
}

}  // namespace detail

// Glue legs a and b of one block (Bell-pair enforcement): measures X_aX_b
// and Z_aZ_b, retains the generators acting as identity on both legs, and
// deletes the legs. Throws NullContraction when the tensor vanishes.
inline LegoBlock self_trace(const LegoBlock& block, std::size_t leg_a, std::size_t leg_b) {
    if (leg_a == leg_b || leg_a >= block.legs || leg_b >= block.legs)
        throw std::invalid_argument("self_trace: bad leg pair");

    LegoBlock work = block;
    BitVector pair(block.legs);
    pair.set(leg_a, true);
    pair.set(leg_b, true);
    PauliWord xx = x_word(pair), zz = z_word(pair);
    detail::enforce_word(work, xx);
    detail::enforce_word(work, zz);

    // Every generator now commutes with xx and zz, so its restriction to
    // {a,b} is II, XX, ZZ or (XZ,XZ); clean to II by multiplying the
    // enforced words in.
    std::vector<std::size_t> keep_legs;
    for (std::size_t i = 0; i < block.legs; ++i)
        if (i != leg_a && i != leg_b) keep_legs.push_back(i);

    LegoBlock out(block.legs - 2);
    for (const PauliWord& g0 : work.gens) {
        PauliWord g = g0;
        if (g.x.get(leg_a)) g = g * xx;
        if (g.z.get(leg_a)) g = g * zz;
        if (g.x.get(leg_a) || g.z.get(leg_a) || g.x.get(leg_b) || g.z.get(leg_b))
            throw std::logic_error("self_trace: restriction not cleaned");
        PauliWord reduced(g.x.slice(keep_legs), g.z.slice(keep_legs), g.sign);
        if (reduced.x.is_zero() && reduced.z.is_zero()) {
            if (reduced.sign < 0) throw NullContraction("null contraction: -identity generated");
            continue;  // the enforced Bell words themselves
        }
        out.gens.push_back(std::move(reduced));
    }

    // Drop dependent rows (can arise when tracing map-with-kernel blocks),
    // checking sign consistency while we go.
    std::vector<PauliWord> independent;
    BinaryMatrix basis(2 * out.legs);
    for (const PauliWord& g : out.gens) {
        BitVector row = detail::symplectic_row(g);
        auto coords = express_in_rowspace(row, basis);
        if (!coords) {
            basis.append_row(row);
            independent.push_back(g);
            continue;
        }
        PauliWord same = detail::masked_product(independent, *coords, out.legs);
        if (same.sign != g.sign)
            throw NullContraction("null contraction: -identity generated");
    }
    out.gens = std::move(independent);
    for (std::size_t i = 0; i < keep_legs.size(); ++i) out.labels[i] = block.labels[keep_legs[i]];
    out.metadata = block.metadata;
    return out;
}

// Reorder legs: new leg i is old leg order[i].
inline LegoBlock permute_legs(const LegoBlock& block, const std::vector<std::size_t>& order) {
    if (order.size() != block.legs) throw std::invalid_argument("permute_legs: size mismatch");
    LegoBlock out(block.legs);
    for (const PauliWord& g : block.gens)
        out.gens.emplace_back(g.x.slice(order), g.z.slice(order), g.sign);
    for (std::size_t i = 0; i < order.size(); ++i) out.labels[i] = block.labels[order[i]];
    out.metadata = block.metadata;
    return out;
}

// Same stabilizer group: equal symplectic row spaces with matching signs.
inline bool blocks_equivalent(const LegoBlock& a, const LegoBlock& b) {
    if (a.legs != b.legs || a.gens.size() != b.gens.size()) return false;
    BinaryMatrix rows_b(2 * b.legs);
    for (const PauliWord& g : b.gens) rows_b.append_row(detail::symplectic_row(g));
    for (const PauliWord& g : a.gens) {
        auto coords = express_in_rowspace(detail::symplectic_row(g), rows_b);
        if (!coords) return false;
        if (detail::masked_product(b.gens, *coords, b.legs).sign != g.sign) return false;
    }
    return true;
}

// True when some generating set of the block is pure-type row by row: the
// pure-X and pure-Z elements of the group together span it.
inline bool is_css_block(const LegoBlock& b) {
    BinaryMatrix xmat(b.legs), zmat(b.legs);
    for (const PauliWord& g : b.gens) {
        xmat.append_row(g.x);
        zmat.append_row(g.z);
    }
    // Combinations u with zero z-part give pure-X group elements.
    auto pure_rank = [&](const BinaryMatrix& zero_side, const BinaryMatrix& value_side) {
        BinaryMatrix combos = nullspace(transpose(zero_side));
        BinaryMatrix elems(value_side.cols);
        for (const auto& u : combos.rows) {
            BitVector e(value_side.cols);
            for (std::size_t i : u.support()) e ^= value_side.rows[i];
            elems.append_row(std::move(e));
        }
        return rank(elems);
    };
    BinaryMatrix all(2 * b.legs);
    for (const PauliWord& g : b.gens) all.append_row(detail::symplectic_row(g));
    return pure_rank(zmat, xmat) + pure_rank(xmat, zmat) == rank(all);
}

}  // namespace qgrow
