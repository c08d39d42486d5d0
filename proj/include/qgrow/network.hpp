#pragma once

#include "qgrow/lego.hpp"

namespace qgrow {

struct LegRef {
    std::size_t block = 0;
    std::size_t leg = 0;
    bool operator==(const LegRef&) const = default;
};

struct Contraction {
    LegRef a, b;
};

// A collection of blocks plus the leg pairs to glue. open_legs optionally
// fixes the output leg order; when empty, the uncontracted legs keep their
// natural (block, leg) order.
struct ConjoinNetwork {
    std::vector<LegoBlock> blocks;
    std::vector<Contraction> contractions;
    std::vector<LegRef> open_legs;
};

// Folds tensor products and self-traces over the network in listed order.
// Throws NullContraction if any gluing annihilates the tensor, and
// std::invalid_argument on malformed networks (reused or out-of-range legs,
// or an open_legs list that does not cover exactly the uncontracted legs).
inline LegoBlock contract_network(const ConjoinNetwork& net) {
    std::vector<std::size_t> offset(net.blocks.size() + 1, 0);
    for (std::size_t i = 0; i < net.blocks.size(); ++i)
        offset[i + 1] = offset[i] + net.blocks[i].legs;
    const std::size_t total = offset.back();

    auto global = [&](const LegRef& r) {
        if (r.block >= net.blocks.size() || r.leg >= net.blocks[r.block].legs)
            throw std::invalid_argument("contract_network: leg reference out of range");
        return offset[r.block] + r.leg;
    };

    LegoBlock cur;
    for (const LegoBlock& b : net.blocks) cur = tensor_product(cur, b);

    // position[g] = current index of global leg g, or npos once consumed.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> position(total);
    for (std::size_t g = 0; g < total; ++g) position[g] = g;

    for (const Contraction& c : net.contractions) {
        std::size_t ga = global(c.a), gb = global(c.b);
        std::size_t pa = position[ga], pb = position[gb];
        if (pa == npos || pb == npos || ga == gb)
            throw std::invalid_argument("contract_network: leg contracted twice");
        cur = self_trace(cur, pa, pb);
        position[ga] = position[gb] = npos;
        for (std::size_t g = 0; g < total; ++g) {
            if (position[g] == npos) continue;
            std::size_t shift = (position[g] > pa) + (position[g] > pb);
            position[g] -= shift;
        }
    }

    if (net.open_legs.empty()) return cur;

    std::vector<std::size_t> order;
    std::vector<bool> used(cur.legs, false);
    for (const LegRef& r : net.open_legs) {
        std::size_t p = position[global(r)];
        if (p == npos || used[p])
            throw std::invalid_argument("contract_network: open_legs references a consumed leg");
        used[p] = true;
        order.push_back(p);
    }
    if (order.size() != cur.legs)
        throw std::invalid_argument("contract_network: open_legs must cover all remaining legs");
    return permute_legs(cur, order);
}

}  // namespace qgrow
