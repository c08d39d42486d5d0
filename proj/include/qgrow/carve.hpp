#pragma once

#include <algorithm>

#include "qgrow/choi.hpp"
#include "qgrow/network.hpp"

namespace qgrow {

namespace carvedetail {

// Greedy matroid basis of `space` drawn from `candidates` in order (callers
// sort local checks first), topped up from the space's own rref rows so the
// result always spans the full space.
inline BinaryMatrix pick_basis(const RrefResult& space,
                               std::vector<BitVector> candidates) {
    BinaryMatrix chosen(space.mat.cols);
    BinaryMatrix acc(space.mat.cols);
    for (const auto& row : space.mat.rows) candidates.push_back(row);
    for (const BitVector& cand : candidates) {
        if (chosen.row_count() == space.mat.row_count()) break;
        if (cand.is_zero() || !in_rowspace(cand, space)) continue;
        BinaryMatrix trial = acc;
        trial.append_row(cand);
        if (rank(trial) == acc.row_count()) continue;  // dependent on picks so far
        acc.append_row(cand);
        chosen.append_row(cand);
    }
    return chosen;
}

}  // namespace carvedetail

// Carve a weight-2m X check out of a covering X check: each of the m qubit
// pairs ((j+t, i), (j+t, i+1)) passes through a 4-valent X spider, and the m
// column-i mid legs merge through one Z spider of degree 2m, which re-supplies
// the weight-2 Z checks on the in-window column edges. Qubit numbering is
// row-major with `cols` columns per row. The contraction fixes the resulting
// group; the returned check basis prefers the local candidates (the carved
// window, parent checks and their window remainders, column edges, pairwise
// merges of touched Z checks).
inline CssSubsystemCode carve_x_stabilizer(const CssSubsystemCode& code, std::size_t i,
                                           std::size_t j, std::size_t m, std::size_t cols) {
    if (m == 0) throw std::invalid_argument("carve_x_stabilizer: m must be positive");
    if (cols < 2 || i + 1 >= cols)
        throw std::invalid_argument("carve_x_stabilizer: column pair out of range");
    auto qubit = [&](std::size_t r, std::size_t c) { return r * cols + c; };
    if (qubit(j + m - 1, i + 1) >= code.n)
        throw std::invalid_argument("carve_x_stabilizer: window exceeds the code");

    BitVector window(code.n);
    for (std::size_t t = 0; t < m; ++t) {
        window.set(qubit(j + t, i), true);
        window.set(qubit(j + t, i + 1), true);
    }
    bool covered = false;
    for (const auto& row : code.gauge_x.rows)
        if ((row & window) == window) {
            covered = true;
            break;
        }
    if (!covered)
        throw std::invalid_argument("carve_x_stabilizer: no X check covers the window");

    ConjoinNetwork net;
    net.blocks.push_back(choi_block(code));
    for (std::size_t t = 0; t < m; ++t) net.blocks.push_back(spider(4, PauliType::X));
    net.blocks.push_back(spider(2 * m, PauliType::Z));
    const std::size_t zsp = m + 1;
    for (std::size_t t = 0; t < m; ++t) {
        net.contractions.push_back({{0, qubit(j + t, i)}, {1 + t, 0}});
        net.contractions.push_back({{0, qubit(j + t, i + 1)}, {1 + t, 1}});
        net.contractions.push_back({{1 + t, 2}, {zsp, t}});
    }
    net.open_legs.resize(code.n + code.k);
    for (std::size_t q = 0; q < code.n; ++q) net.open_legs[q] = {0, q};
    for (std::size_t t = 0; t < m; ++t) {
        net.open_legs[qubit(j + t, i)] = {zsp, m + t};
        net.open_legs[qubit(j + t, i + 1)] = {1 + t, 3};
    }
    for (std::size_t l = 0; l < code.k; ++l) net.open_legs[code.n + l] = {0, code.n + l};

    CssSubsystemCode carved = code_from_choi_block(contract_network(net), code.k);
    carved.metadata = code.metadata;

    // Re-present both check matrices with local candidates first.
    auto by_weight = [](std::vector<BitVector>& rows) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const BitVector& a, const BitVector& b) {
                             return a.weight() < b.weight();
                         });
    };
    std::vector<BitVector> xcand;
    xcand.push_back(window);
    for (const auto& row : code.gauge_x.rows) {
        xcand.push_back(row);
        BitVector rest = row ^ (row & window);
        if (rest.any() && rest != row) xcand.push_back(rest);
    }
    by_weight(xcand);
    carved.gauge_x = carvedetail::pick_basis(rref(carved.gauge_x), std::move(xcand));

    std::vector<BitVector> zcand;
    std::vector<BitVector> touched;
    for (const auto& row : code.gauge_z.rows) {
        zcand.push_back(row);
        if ((row & window).any()) touched.push_back(row);
    }
    for (std::size_t t = 0; t + 1 < m; ++t) {
        BitVector edge(code.n);
        edge.set(qubit(j + t, i), true);
        edge.set(qubit(j + t + 1, i), true);
        zcand.push_back(std::move(edge));
    }
    for (std::size_t a = 0; a < touched.size(); ++a)
        for (std::size_t b = a + 1; b < touched.size(); ++b)
            zcand.push_back(touched[a] ^ touched[b]);
    by_weight(zcand);
    carved.gauge_z = carvedetail::pick_basis(rref(carved.gauge_z), std::move(zcand));

    return carved;
}

// Pass qubits a and b of a subspace code through one 4-valent X spider
// (in-pair legs 0,1; out-pair legs 2,3). On the stabilizer group this adds
// the check XX(a,b), keeps X checks otherwise intact, and restricts the Z
// group to combinations with even support on {a,b} — so a Z pair with odd
// overlaps merges across the spider. The returned basis presents this the
// sparse way: X checks containing both qubits are split against the new
// XX(a,b), and Z checks with odd overlap appear pairwise merged.
inline CssSubsystemCode contraction_xn(const CssSubsystemCode& code, std::size_t a,
                                       std::size_t b) {
    if (a == b || a >= code.n || b >= code.n)
        throw std::invalid_argument("contraction_xn: bad qubit pair");

    ConjoinNetwork net;
    net.blocks.push_back(choi_block(code));
    net.blocks.push_back(spider(4, PauliType::X));
    net.contractions.push_back({{0, a}, {1, 0}});
    net.contractions.push_back({{0, b}, {1, 1}});
    net.open_legs.resize(code.n + code.k);
    for (std::size_t q = 0; q < code.n; ++q) net.open_legs[q] = {0, q};
    net.open_legs[a] = {1, 2};
    net.open_legs[b] = {1, 3};
    for (std::size_t l = 0; l < code.k; ++l) net.open_legs[code.n + l] = {0, code.n + l};

    CssSubsystemCode out = code_from_choi_block(contract_network(net), code.k);
    out.metadata = code.metadata;

    BitVector pair(code.n);
    pair.set(a, true);
    pair.set(b, true);
    auto by_weight = [](std::vector<BitVector>& rows) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const BitVector& x, const BitVector& y) {
                             return x.weight() < y.weight();
                         });
    };

    std::vector<BitVector> xcand;
    xcand.push_back(pair);
    for (const auto& row : code.gauge_x.rows)
        xcand.push_back(row.get(a) && row.get(b) ? row ^ pair : row);
    by_weight(xcand);
    out.gauge_x = carvedetail::pick_basis(rref(out.gauge_x), std::move(xcand));

    std::vector<BitVector> zcand;
    std::vector<BitVector> odd;
    for (const auto& row : code.gauge_z.rows) {
        zcand.push_back(row);
        if (row.get(a) != row.get(b)) odd.push_back(row);
    }
    for (std::size_t s = 0; s < odd.size(); ++s)
        for (std::size_t t = s + 1; t < odd.size(); ++t) zcand.push_back(odd[s] ^ odd[t]);
    by_weight(zcand);
    out.gauge_z = carvedetail::pick_basis(rref(out.gauge_z), std::move(zcand));

    return out;
}

}  // namespace qgrow
