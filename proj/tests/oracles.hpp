#pragma once

// Brute-force reference implementations. They share nothing with the library
// solvers beyond the Hypergraph container and are only fit for tiny inputs.

#include <kdefect/hypergraph.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using kdefect::Edge;
using kdefect::Hypergraph;

// Stability via distance on the n-cycle.
inline bool cyclic_stable(int x, int y, int n, int s)
{
    int d = std::abs(x - y);
    return std::min(d, n - d) >= s;
}

inline bool monochromatic(const Edge & e, const std::vector<int> & color)
{
    return std::all_of(e.begin(), e.end(), [&] (int v) { return color[v] == color[e[0]]; });
}

// Tries every map [n] -> [r] over the vertices in `keep` (1-based flags).
inline bool colorable_on(const Hypergraph & h, const std::vector<bool> & keep, int r, bool equitable)
{
    std::vector<int> vs;
    for (int v = 1 ; v <= h.order() ; ++v)
        if (keep[v])
            vs.push_back(v);
    std::vector<const Edge *> live;
    for (const auto & e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&] (int v) { return keep[v]; }))
            live.push_back(&e);

    std::vector<int> color(h.order() + 1, 0);
    std::function<bool(std::size_t)> go = [&] (std::size_t i) {
        if (i == vs.size()) {
            if (equitable) {
                std::vector<int> size(r, 0);
                for (int v : vs)
                    ++size[color[v]];
                auto [lo, hi] = std::minmax_element(size.begin(), size.end());
                if (*hi - *lo > 1)
                    return false;
            }
            return std::none_of(live.begin(), live.end(), [&] (const Edge * e) { return monochromatic(*e, color); });
        }
        for (int c = 0 ; c < r ; ++c) {
            color[vs[i]] = c;
            if (go(i + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

inline bool colorable(const Hypergraph & h, int r, bool equitable = false)
{
    return colorable_on(h, std::vector<bool>(h.order() + 1, true), r, equitable);
}

// 0 for no vertices, nullopt when a singleton edge makes it infeasible.
inline std::optional<int> chromatic(const Hypergraph & h)
{
    if (h.has_singleton_edge())
        return std::nullopt;
    if (h.order() == 0)
        return 0;
    int t = 1;
    while (! colorable(h, t))
        ++t;
    return t;
}

inline int defect(const Hypergraph & h, int r, bool equitable = false)
{
    int n = h.order();
    int best = n;
    for (unsigned mask = 0 ; mask < (1u << n) ; ++mask) {
        int removed = __builtin_popcount(mask);
        if (removed >= best)
            continue;
        std::vector<bool> keep(n + 1, true);
        for (int v = 1 ; v <= n ; ++v)
            if (mask >> (v - 1) & 1)
                keep[v] = false;
        if (colorable_on(h, keep, r, equitable))
            best = removed;
    }
    return best;
}

inline bool pairwise_disjoint(const std::vector<const Edge *> & es)
{
    for (std::size_t i = 0 ; i < es.size() ; ++i)
        for (std::size_t j = i + 1 ; j < es.size() ; ++j)
            for (int v : *es[i])
                if (std::find(es[j]->begin(), es[j]->end(), v) != es[j]->end())
                    return false;
    return true;
}

// Largest pairwise-disjoint subfamily, over all edge subsets.
inline int matching(const std::vector<Edge> & edges)
{
    int m = static_cast<int>(edges.size());
    int best = 0;
    for (unsigned mask = 0 ; mask < (1u << m) ; ++mask) {
        std::vector<const Edge *> pick;
        for (int i = 0 ; i < m ; ++i)
            if (mask >> i & 1)
                pick.push_back(&edges[i]);
        if (static_cast<int>(pick.size()) > best && pairwise_disjoint(pick))
            best = static_cast<int>(pick.size());
    }
    return best;
}

inline int independence(const Hypergraph & g)
{
    int n = g.order();
    int best = 0;
    for (unsigned mask = 0 ; mask < (1u << n) ; ++mask) {
        bool ok = std::none_of(g.edges().begin(), g.edges().end(), [&] (const Edge & e) {
            return std::all_of(e.begin(), e.end(), [&] (int v) { return mask >> (v - 1) & 1; });
        });
        if (ok)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Kneser chromatic number by enumerating set partitions of E(H)
// (restricted growth strings).
inline int kneser_chi(const Hypergraph & h, int r)
{
    const auto & edges = h.edges();
    int m = static_cast<int>(edges.size());
    if (m == 0)
        return 0;
    int best = m;
    std::vector<int> block(m, 0);
    std::function<void(int, int)> go = [&] (int i, int used) {
        if (used >= best)
            return;
        if (i == m) {
            for (int b = 0 ; b < used ; ++b) {
                std::vector<Edge> cls;
                for (int j = 0 ; j < m ; ++j)
                    if (block[j] == b)
                        cls.push_back(edges[j]);
                if (matching(cls) >= r)
                    return;
            }
            best = used;
            return;
        }
        for (int b = 0 ; b <= used ; ++b) {
            block[i] = b;
            go(i + 1, std::max(used, b + 1));
        }
    };
    go(0, 0);
    return best;
}

// Plain DPLL with unit propagation; returns a model indexed by variable.
inline std::optional<std::vector<bool>> dpll(int num_vars, const std::vector<std::vector<int>> & clauses)
{
    std::vector<int> value(num_vars + 1, 0);  // 0 unknown, 1 true, -1 false
    auto lit_value = [&] (int lit) { int v = value[std::abs(lit)]; return lit > 0 ? v : -v; };

    std::function<bool()> solve = [&] () -> bool {
        std::vector<int> trail;
        auto undo = [&] { for (int v : trail) value[v] = 0; };
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto & clause : clauses) {
                int unknown = 0, last = 0;
                bool sat = false;
                for (int lit : clause) {
                    int lv = lit_value(lit);
                    if (lv > 0) { sat = true; break; }
                    if (lv == 0) { ++unknown; last = lit; }
                }
                if (sat)
                    continue;
                if (unknown == 0) {
                    undo();
                    return false;
                }
                if (unknown == 1) {
                    value[std::abs(last)] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        int pick = 0;
        for (int v = 1 ; v <= num_vars && ! pick ; ++v)
            if (value[v] == 0)
                pick = v;
        if (! pick)
            return true;
        for (int choice : {1, -1}) {
            value[pick] = choice;
            if (solve())
                return true;
        }
        value[pick] = 0;
        undo();
        return false;
    };

    if (! solve())
        return std::nullopt;
    std::vector<bool> model(num_vars + 1, false);
    for (int v = 1 ; v <= num_vars ; ++v)
        model[v] = value[v] > 0;
    return model;
}

} // namespace oracle
