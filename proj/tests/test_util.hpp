#pragma once

#include <random>
#include <string>
#include <vector>

#include "qgrow/carve.hpp"
#include "qgrow/css_network.hpp"
#include "qgrow/grow.hpp"
#include "qgrow/lego.hpp"
#include "qgrow/network.hpp"
#include "qgrow/subsystem_code.hpp"

namespace qgrow::testutil {

// Random CSS stabilizer-state block: start from single-qubit X/Z generators,
// scramble with CNOTs (which preserve pure-type generators), and flip some
// signs. Always yields `legs` independent commuting pure-type generators.
inline LegoBlock random_css_block(std::mt19937& rng, std::size_t legs) {
    LegoBlock b(legs);
    for (std::size_t i = 0; i < legs; ++i) {
        BitVector s(legs);
        s.set(i, true);
        b.gens.push_back(rng() % 2 ? x_word(s) : z_word(s));
    }
    std::size_t n_gates = 2 * legs + rng() % (2 * legs + 1);
    for (std::size_t g = 0; g < n_gates; ++g) {
        std::size_t c = rng() % legs, t = rng() % legs;
        if (c == t) continue;
        for (PauliWord& p : b.gens) {
            if (p.x.get(c)) p.x.flip(t);
            if (p.z.get(t)) p.z.flip(c);
        }
    }
    for (PauliWord& p : b.gens)
        if (rng() % 2) p.sign = -p.sign;
    return b;
}

inline CssSubsystemCode make_code(std::size_t n, std::size_t k,
                                  const std::vector<std::string>& gauge_x,
                                  const std::vector<std::string>& gauge_z,
                                  const std::vector<std::string>& bare_x,
                                  const std::vector<std::string>& bare_z) {
    CssSubsystemCode c(n);
    c.k = k;
    for (const auto& s : gauge_x) c.gauge_x.append_row(BitVector::from_string(s));
    for (const auto& s : gauge_z) c.gauge_z.append_row(BitVector::from_string(s));
    for (const auto& s : bare_x) c.bare_x.append_row(BitVector::from_string(s));
    for (const auto& s : bare_z) c.bare_z.append_row(BitVector::from_string(s));
    return c;
}

// [[4,2,2]] seed: gauge <XXXX, ZZZZ>, logicals (XXII, ZIZI) and (XIXI, ZZII).
inline CssSubsystemCode seed422_fixture() {
    return make_code(4, 2, {"1111"}, {"1111"}, {"1100", "1010"}, {"1010", "1100"});
}

// 2x2 Bacon-Shor on grid [[0,1],[2,3]]: XX on rows, ZZ on columns.
inline CssSubsystemCode bs2x2_fixture() {
    return make_code(4, 1, {"1100", "0011"}, {"1010", "0101"}, {"0101"}, {"1100"});
}

// 3x3 Bacon-Shor on grid rows (0,1,2),(3,4,5),(6,7,8).
inline CssSubsystemCode bs3x3_fixture() {
    return make_code(9, 1,
                     {"110000000", "011000000", "000110000", "000011000", "000000110",
                      "000000011"},
                     {"100100000", "000100100", "010010000", "000010010", "001001000",
                      "000001001"},
                     {"001001001"}, {"111000000"});
}

// Distance-3 rotated surface code grown from spiders: seed the [[4,1,2]]
// encoder (a 3-leg X spider fanning into two 3-leg Z spiders), concatenate
// the Z then the X bare support, and split the overweight X check with one
// 4-valent X spider. Qubit labels follow the growth order, not the grid.
inline CssSubsystemCode grown_surface3() {
    ConjoinNetwork net;
    net.blocks = {spider(3, PauliType::X), spider(3, PauliType::Z), spider(3, PauliType::Z)};
    net.contractions = {{{0, 1}, {1, 0}}, {{0, 2}, {2, 0}}};
    net.open_legs = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {0, 0}};
    CssSubsystemCode code = code_from_choi_block(contract_network(net), 1);
    code = concatenate_support(code, 0, PauliType::Z);
    code = concatenate_support(code, 0, PauliType::X);
    code = contraction_xn(code, 6, 7);
    code.metadata.erase(growdetail::kSectionKey);
    code.metadata.erase(growdetail::kTypeKey);
    code.metadata.erase(growdetail::kLogicalKey);
    return code;
}

// Grid relabeling that takes grown_surface3's growth-order labels to the
// row-major rotated_surface(3) layout.
inline std::vector<std::size_t> grown_surface3_to_grid() {
    return {4, 5, 7, 8, 1, 2, 3, 6, 0};
}

// Random valid subsystem code: random commuting (h_x, h_z), then a standard
// logical basis; the first k pairs become bare logicals and the rest are
// demoted to gauge-qubit operators, so the result is valid by construction.
inline CssSubsystemCode random_subsystem_code(std::mt19937& rng, std::size_t max_n,
                                              std::size_t max_k) {
    for (;;) {
        std::size_t n = 3 + rng() % (max_n - 2);
        BinaryMatrix hz(n);
        std::size_t z_rows = 1 + rng() % (n - 1);
        for (std::size_t r = 0; r < z_rows; ++r) {
            BitVector v(n);
            for (std::size_t q = 0; q < n; ++q)
                if (rng() % 2) v.set(q, true);
            if (!v.is_zero()) hz.append_row(v);
        }
        BinaryMatrix basis = nullspace(hz);
        BinaryMatrix hx(n);
        std::size_t x_rows = 1 + rng() % (n - 1);
        for (std::size_t r = 0; r < x_rows && basis.row_count() > 0; ++r) {
            BitVector v(n);
            for (const BitVector& b : basis.rows)
                if (rng() % 2) v ^= b;
            if (!v.is_zero()) hx.append_row(v);
        }
        if (hx.row_count() == 0 || hz.row_count() == 0) continue;
        std::size_t k_avail = n - rank(hx) - rank(hz);
        if (k_avail == 0) continue;
        auto [lx, lz] = cssdetail::standard_logicals(hx, hz);
        std::size_t k = 1 + rng() % std::min(max_k, k_avail);
        CssSubsystemCode code(n);
        code.k = k;
        code.gauge_x = hx;
        code.gauge_z = hz;
        for (std::size_t j = k; j < k_avail; ++j) {
            code.gauge_x.append_row(lx.rows[j]);
            code.gauge_z.append_row(lz.rows[j]);
        }
        for (std::size_t j = 0; j < k; ++j) {
            code.bare_x.append_row(lx.rows[j]);
            code.bare_z.append_row(lz.rows[j]);
        }
        if (validate(code).ok()) return code;
    }
}

}  // namespace qgrow::testutil
