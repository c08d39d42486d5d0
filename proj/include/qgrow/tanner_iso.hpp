#pragma once

#include <algorithm>
#include <map>

#include "qgrow/subsystem_code.hpp"

namespace qgrow {

namespace isodetail {

struct ColoredGraph {
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::size_t> color;  // 0 = data, 1 = X check, 2 = Z check initially
};

inline ColoredGraph colored_tanner(const CssSubsystemCode& code) {
    ColoredGraph g;
    const std::size_t rx = code.gauge_x.row_count(), rz = code.gauge_z.row_count();
    g.adj.resize(code.n + rx + rz);
    g.color.assign(code.n + rx + rz, 0);
    for (std::size_t i = 0; i < rx; ++i) {
        g.color[code.n + i] = 1;
        for (std::size_t q : code.gauge_x.rows[i].support()) {
            g.adj[code.n + i].push_back(q);
            g.adj[q].push_back(code.n + i);
        }
    }
    for (std::size_t i = 0; i < rz; ++i) {
        g.color[code.n + rx + i] = 2;
        for (std::size_t q : code.gauge_z.rows[i].support()) {
            g.adj[code.n + rx + i].push_back(q);
            g.adj[q].push_back(code.n + rx + i);
        }
    }
    return g;
}

// Joint color refinement: both graphs share one signature dictionary so equal
// structures land on equal colors. Returns false early if the color multisets
// ever diverge.
inline bool refine_together(ColoredGraph& a, ColoredGraph& b) {
    for (;;) {
        using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
        std::map<Sig, std::size_t> dict;
        auto signatures = [&](const ColoredGraph& g) {
            std::vector<Sig> sigs(g.adj.size());
            for (std::size_t v = 0; v < g.adj.size(); ++v) {
                std::vector<std::size_t> nb;
                for (std::size_t u : g.adj[v]) nb.push_back(g.color[u]);
                std::sort(nb.begin(), nb.end());
                sigs[v] = {g.color[v], std::move(nb)};
            }
            return sigs;
        };
        std::vector<Sig> sa = signatures(a), sb = signatures(b);
        auto recolor = [&](ColoredGraph& g, std::vector<Sig>& sigs) {
            for (std::size_t v = 0; v < g.adj.size(); ++v) {
                auto [it, _] = dict.try_emplace(sigs[v], dict.size());
                g.color[v] = it->second;
            }
        };
        std::vector<std::size_t> old_a = a.color;
        recolor(a, sa);
        recolor(b, sb);

        std::vector<std::size_t> ha = a.color, hb = b.color;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
        if (a.color == old_a || dict.size() == a.adj.size()) return true;  // stable or discrete
    }
}

inline bool extend(const ColoredGraph& a, const ColoredGraph& b,
                   const std::vector<std::size_t>& order, std::size_t depth,
                   std::vector<std::size_t>& map_ab, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    std::size_t u = order[depth];
    for (std::size_t v = 0; v < b.adj.size(); ++v) {
        if (used[v] || b.color[v] != a.color[u] || b.adj[v].size() != a.adj[u].size()) continue;
        bool ok = true;
        for (std::size_t w : a.adj[u]) {
            if (map_ab[w] == static_cast<std::size_t>(-1)) continue;
            if (std::find(b.adj[v].begin(), b.adj[v].end(), map_ab[w]) == b.adj[v].end()) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map_ab[u] = v;
        used[v] = true;
        if (extend(a, b, order, depth + 1, map_ab, used)) return true;
        map_ab[u] = static_cast<std::size_t>(-1);
        used[v] = false;
    }
    return false;
}

}  // namespace isodetail

// Exact isomorphism of check structures: data/X-check/Z-check colored Tanner
// graphs related by a color-preserving graph isomorphism.
inline bool tanner_isomorphic(const CssSubsystemCode& a, const CssSubsystemCode& b) {
    if (a.n != b.n || a.gauge_x.row_count() != b.gauge_x.row_count() ||
        a.gauge_z.row_count() != b.gauge_z.row_count())
        return false;
    isodetail::ColoredGraph ga = isodetail::colored_tanner(a);
    isodetail::ColoredGraph gb = isodetail::colored_tanner(b);
    if (!isodetail::refine_together(ga, gb)) return false;

    // Most-constrained-first: rarer colors and higher degrees early; tie-break
    // toward nodes adjacent to already-placed ones via a greedy BFS-ish order.
    std::vector<std::size_t> class_size(ga.adj.size(), 0);
    std::vector<std::size_t> tmp = ga.color;
    for (std::size_t c : tmp) ++class_size[c];
    std::vector<std::size_t> order(ga.adj.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto kx = std::make_tuple(class_size[ga.color[x]], ga.adj.size() - ga.adj[x].size(), x);
        auto ky = std::make_tuple(class_size[ga.color[y]], ga.adj.size() - ga.adj[y].size(), y);
        return kx < ky;
    });
    // Re-order so each node (after the first) touches the mapped prefix when
    // possible: keeps the adjacency pruning active throughout the search.
    std::vector<std::size_t> connected_order;
    std::vector<bool> placed(ga.adj.size(), false);
    std::vector<std::size_t> pending = order;
    while (!pending.empty()) {
        std::size_t pick = pending.size();
        for (std::size_t i = 0; i < pending.size(); ++i) {
            std::size_t v = pending[i];
            if (connected_order.empty()) {
                pick = i;
                break;
            }
            bool touches = false;
            for (std::size_t w : ga.adj[v])
                if (placed[w]) {
                    touches = true;
                    break;
                }
            if (touches) {
                pick = i;
                break;
            }
        }
        if (pick == pending.size()) pick = 0;
        std::size_t v = pending[pick];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        connected_order.push_back(v);
        placed[v] = true;
    }

    std::vector<std::size_t> map_ab(ga.adj.size(), static_cast<std::size_t>(-1));
    std::vector<bool> used(gb.adj.size(), false);
    return isodetail::extend(ga, gb, connected_order, 0, map_ab, used);
}

}  // namespace qgrow
