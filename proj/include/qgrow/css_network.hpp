#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgrow/choi.hpp"
#include "qgrow/lego.hpp"
#include "qgrow/matrix.hpp"
#include "qgrow/network.hpp"
#include "qgrow/pauli.hpp"
#include "qgrow/subsystem_code.hpp"

namespace qgrow {

// A CSS code given by its check matrices alone; k = n - rank(h_x) - rank(h_z).
struct CssCodeInput {
    BinaryMatrix h_x;
    BinaryMatrix h_z;
};

struct UniversalityReport {
    bool ok = false;
    std::optional<PauliWord> witness;  // generator missed by, or foreign to, the network
};

namespace cssdetail {

inline void require_commuting(const BinaryMatrix& a, const BinaryMatrix& b, const char* who) {
    if (a.cols != b.cols)
        throw std::invalid_argument(std::string(who) + ": column count mismatch");
    BinaryMatrix prod = multiply(a, transpose(b));
    for (const BitVector& row : prod.rows)
        if (!row.is_zero()) throw std::invalid_argument(std::string(who) + ": checks do not commute");
}

// Greedily extend `mod` (an rref'd stabilizer basis) with kernel vectors of
// the opposite checks; the residues are one logical representative per coset.
inline BinaryMatrix pick_logicals(const BinaryMatrix& commuting_with, const RrefResult& mod,
                                  std::size_t want) {
    BinaryMatrix out(mod.mat.cols);
    BinaryMatrix span = mod.mat;
    RrefResult cur = rref(span);
    for (const BitVector& cand : nullspace(commuting_with).rows) {
        if (out.row_count() == want) break;
        BitVector red = reduce_by_rref(cand, cur);
        if (red.is_zero()) continue;
        out.append_row(red);
        span.append_row(std::move(red));
        cur = rref(span);
    }
    return out;
}

// One X/Z logical pair per encoded qubit, the Z side rotated so pair i meets
// pair j in exactly delta_ij anticommutations.
inline std::pair<BinaryMatrix, BinaryMatrix> standard_logicals(const BinaryMatrix& h_x,
                                                               const BinaryMatrix& h_z) {
    RrefResult rx = rref(h_x), rz = rref(h_z);
    const std::size_t k = h_x.cols - rx.mat.row_count() - rz.mat.row_count();
    BinaryMatrix lx = pick_logicals(h_z, rx, k);
    BinaryMatrix lz = pick_logicals(h_x, rz, k);
    if (k == 0) return {std::move(lx), std::move(lz)};
    auto inv = inverse(multiply(lx, transpose(lz)));
    assert(inv);  // independent logical bases always pair non-degenerately
    return {std::move(lx), multiply(transpose(*inv), lz)};
}

inline void check_input(const CssCodeInput& input) {
    if (input.h_x.cols == 0) throw std::invalid_argument("css code input: no qubits");
    require_commuting(input.h_x, input.h_z, "css code input");
}

// Append one spider to the network and hand back its external legs. With
// decompose set, valences above 3 are built as a fused chain of 3-leg spiders
// of the same color, which contracts to the same block.
inline std::vector<LegRef> add_spider(ConjoinNetwork& net, std::size_t valence, PauliType type,
                                      bool decompose) {
    std::vector<LegRef> legs(valence);
    if (!decompose || valence <= 3) {
        std::size_t b = net.blocks.size();
        net.blocks.push_back(spider(valence, type));
        for (std::size_t i = 0; i < valence; ++i) legs[i] = {b, i};
        return legs;
    }
    const std::size_t count = valence - 2;
    const std::size_t first = net.blocks.size();
    for (std::size_t c = 0; c < count; ++c) net.blocks.push_back(spider(3, type));
    for (std::size_t c = 0; c + 1 < count; ++c)
        net.contractions.push_back({{first + c, 2}, {first + c + 1, 0}});
    legs[0] = {first, 0};
    legs[1] = {first, 1};
    for (std::size_t i = 2; i + 1 < valence; ++i) legs[i] = {first + i - 1, 1};
    legs[valence - 1] = {first + count - 1, 2};
    return legs;
}

}  // namespace cssdetail

// Stabilizer generators of the encoder's Choi state over n+k qubits: the
// checks padded with identity, plus each logical pair coupled to X or Z on
// its own appended qubit. All generators come out pure-type.
inline std::vector<PauliWord> choi_state(const CssCodeInput& input) {
    cssdetail::check_input(input);
    auto [lx, lz] = cssdetail::standard_logicals(input.h_x, input.h_z);
    CssSubsystemCode code(input.h_x.cols);
    code.k = lx.row_count();
    code.gauge_x = input.h_x;
    code.gauge_z = input.h_z;
    code.bare_x = std::move(lx);
    code.bare_z = std::move(lz);
    return choi_block(code).gens;
}

// Spider network preparing the CSS state with the given pure-type generators.
// Every data qubit gets a Z-spider facing the Z-check nodes; when X-checks
// touch the qubit its wire continues through an X-spider facing those, so
// check nodes never meet a spider of their own color (same-color contact
// would fuse and wipe out the check structure). Check nodes are one X-spider
// per Z-check and one Z-spider per X-check, of valence equal to the check
// weight; contractions follow the Tanner incidences.
inline ConjoinNetwork css_state_network(const BinaryMatrix& x_gens, const BinaryMatrix& z_gens,
                                        bool decompose = false) {
    cssdetail::require_commuting(x_gens, z_gens, "css_state_network");
    for (const BinaryMatrix* m : {&x_gens, &z_gens})
        for (const BitVector& row : m->rows)
            if (row.is_zero())
                throw std::invalid_argument("css_state_network: zero-weight check");
    const std::size_t n = x_gens.cols;

    ConjoinNetwork net;
    net.open_legs.resize(n);
    std::vector<std::vector<LegRef>> x_ports(n), z_ports(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t deg_x = 0, deg_z = 0;
        for (const BitVector& row : x_gens.rows) deg_x += row.get(q);
        for (const BitVector& row : z_gens.rows) deg_z += row.get(q);
        std::vector<LegRef> zl = cssdetail::add_spider(net, deg_z + 1, PauliType::Z, decompose);
        z_ports[q].assign(zl.begin() + 1, zl.end());
        if (deg_x == 0) {
            net.open_legs[q] = zl[0];
        } else {
            std::vector<LegRef> xl =
                cssdetail::add_spider(net, deg_x + 2, PauliType::X, decompose);
            net.contractions.push_back({zl[0], xl[0]});
            net.open_legs[q] = xl[deg_x + 1];
            x_ports[q].assign(xl.begin() + 1, xl.begin() + 1 + deg_x);
        }
    }
    std::vector<std::size_t> x_used(n, 0), z_used(n, 0);
    for (const BitVector& row : x_gens.rows) {
        std::vector<LegRef> legs =
            cssdetail::add_spider(net, row.weight(), PauliType::Z, decompose);
        std::size_t t = 0;
        for (std::size_t q : row.support())
            net.contractions.push_back({legs[t++], x_ports[q][x_used[q]++]});
    }
    for (const BitVector& row : z_gens.rows) {
        std::vector<LegRef> legs =
            cssdetail::add_spider(net, row.weight(), PauliType::X, decompose);
        std::size_t t = 0;
        for (std::size_t q : row.support())
            net.contractions.push_back({legs[t++], z_ports[q][z_used[q]++]});
    }
    return net;
}

// End-to-end constructive check that the code is reachable from spiders:
// express the Choi state as a checks-only CSS state, realize that state as a
// spider network, contract, and compare groups with signs both ways.
inline UniversalityReport verify_universality(const CssCodeInput& input, bool decompose = false) {
    std::vector<PauliWord> gens = choi_state(input);
    const std::size_t legs = gens.empty() ? 0 : gens.front().n_qubits();
    BinaryMatrix hx2(legs), hz2(legs);
    for (const PauliWord& g : gens) {
        if (g.z.is_zero())
            hx2.append_row(g.x);
        else
            hz2.append_row(g.z);
    }
    LegoBlock got = contract_network(css_state_network(hx2, hz2, decompose));

    UniversalityReport rep;
    BinaryMatrix got_rows(2 * got.legs), want_rows(2 * legs);
    for (const PauliWord& g : got.gens) got_rows.append_row(detail::symplectic_row(g));
    for (const PauliWord& g : gens) want_rows.append_row(detail::symplectic_row(g));
    for (const PauliWord& g : gens) {
        auto coords = express_in_rowspace(detail::symplectic_row(g), got_rows);
        if (!coords || detail::masked_product(got.gens, *coords, legs).sign != g.sign) {
            rep.witness = g;
            return rep;
        }
    }
    for (const PauliWord& g : got.gens) {
        auto coords = express_in_rowspace(detail::symplectic_row(g), want_rows);
        if (!coords || detail::masked_product(gens, *coords, legs).sign != g.sign) {
            rep.witness = g;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace qgrow
