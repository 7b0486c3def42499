#include <kdefect/solvers.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

namespace kdefect {

RemovalCapExceeded::RemovalCapExceeded(int lower_bound) :
    CapExceeded("removal cap exceeded: colorability defect is at least " + std::to_string(lower_bound)),
    _lower_bound(lower_bound)
{
}

namespace
{
    using Mask = std::uint64_t;

    constexpr Mask bit(int v) { return Mask{1} << v; }

    // bits strictly above position v
    constexpr Mask above(int v) { return ~((Mask{2} << v) - 1); }

    void require_solver_size(const Hypergraph & h)
    {
        if (h.order() > max_solver_vertices)
            throw InvalidArgument("exact solvers support at most " + std::to_string(max_solver_vertices)
                    + " vertices, got " + std::to_string(h.order()));
    }

    Mask to_mask(const Edge & e)
    {
        Mask m = 0;
        for (Vertex v : e)
            m |= bit(v - 1);
        return m;
    }

    std::vector<Mask> edge_masks(const Hypergraph & h)
    {
        require_solver_size(h);
        std::vector<Mask> out;
        out.reserve(h.size());
        for (const auto & e : h.edges())
            out.push_back(to_mask(e));
        return out;
    }

    Edge to_edge(Mask m)
    {
        Edge e;
        while (m) {
            e.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
        return e;
    }

    /// Maximum set packing by branching on the lowest vertex still covered by a
    /// candidate edge: either one of its edges is taken or the vertex stays free.
    class MatchingSearch
    {
    public:
        MatchingSearch(const std::vector<Mask> & edges, int target, const Deadline & deadline) :
            _edges(edges),
            _target(target),
            _deadline(deadline)
        {
        }

        int run()
        {
            std::vector<int> candidates(_edges.size());
            std::iota(candidates.begin(), candidates.end(), 0);
            std::vector<int> chosen;
            expand(candidates, chosen);
            return static_cast<int>(_best.size());
        }

        const std::vector<int> & best() const { return _best; }

    private:
        bool done() const { return _target >= 0 && static_cast<int>(_best.size()) >= _target; }

        void expand(const std::vector<int> & candidates, std::vector<int> & chosen)
        {
            _deadline.poll(_polls);

            if (chosen.size() > _best.size())
                _best = chosen;
            if (done() || candidates.empty())
                return;

            Mask covered = 0;
            int smallest = max_solver_vertices;
            for (int i : candidates) {
                covered |= _edges[i];
                smallest = std::min(smallest, std::popcount(_edges[i]));
            }
            std::size_t bound = chosen.size()
                + std::min(candidates.size(), static_cast<std::size_t>(std::popcount(covered) / smallest));
            if (bound <= _best.size())
                return;

            Mask v = covered & -covered;
            std::vector<int> without_v;
            for (int i : candidates) {
                if (! (_edges[i] & v)) {
                    without_v.push_back(i);
                    continue;
                }
                std::vector<int> next;
                for (int j : candidates)
                    if (! (_edges[j] & _edges[i]))
                        next.push_back(j);
                chosen.push_back(i);
                expand(next, chosen);
                chosen.pop_back();
                if (done())
                    return;
            }

            expand(without_v, chosen);
        }

        const std::vector<Mask> & _edges;
        int _target;
        const Deadline & _deadline;
        std::vector<int> _best;
        std::uint64_t _polls = 0;
    };

    bool has_matching_of_size(const std::vector<Mask> & edges, int k, const Deadline & deadline)
    {
        if (k <= 0)
            return true;
        if (static_cast<int>(edges.size()) < k)
            return false;
        MatchingSearch search(edges, k, deadline);
        return search.run() >= k;
    }

    /// Backtracking over vertices 0..n-1 in order. Colors are opened in order of
    /// first use; an edge is rejected once its last vertex would complete a
    /// monochromatic edge, and forward checking forbids that color in advance
    /// when a single vertex of an edge is left uncolored.
    class ColoringSearch
    {
    public:
        ColoringSearch(int n, const std::vector<Mask> & edges, int r, bool equitable, const Deadline & deadline) :
            _n(n),
            _r(r),
            _equitable(equitable),
            _deadline(deadline),
            _ending_at(n),
            _through(n),
            _color(n, -1),
            _classes(r, 0),
            _sizes(r, 0)
        {
            for (Mask e : edges) {
                int top = 63 - std::countl_zero(e);
                _ending_at[top].push_back(e);
                for (Mask rest = e & ~bit(top) ; rest ; rest &= rest - 1)
                    _through[std::countr_zero(rest)].push_back(e);
            }
            _all_colors = r >= 64 ? ~Mask{0} : bit(r) - 1;
            _quota = n / r;
            _large = n % r;
        }

        std::optional<std::vector<int>> run()
        {
            std::vector<Mask> forbidden(_n, 0);
            if (expand(0, forbidden))
                return _color;
            return std::nullopt;
        }

    private:
        bool fits_equitably(int c) const
        {
            int cap = _large > 0 ? _quota + 1 : _quota;
            if (_sizes[c] + 1 > cap)
                return false;
            if (_large > 0 && _sizes[c] == _quota && _at_large == _large)
                return false;
            return true;
        }

        bool deficit_ok(int placed) const
        {
            int deficit = 0;
            for (int c = 0 ; c < _r ; ++c)
                deficit += std::max(0, _quota - _sizes[c]);
            return deficit <= _n - placed;
        }

        bool expand(int v, const std::vector<Mask> & forbidden)
        {
            _deadline.poll(_polls);
            if (v == _n)
                return true;

            int limit = std::min(_opened + 1, _r);
            for (int c = 0 ; c < limit ; ++c) {
                if (forbidden[v] & bit(c))
                    continue;
                if (_equitable && ! fits_equitably(c))
                    continue;

                Mask with_v = _classes[c] | bit(v);
                bool bad = std::any_of(_ending_at[v].begin(), _ending_at[v].end(),
                        [&] (Mask e) { return (e & ~with_v) == 0; });
                if (bad)
                    continue;

                assign(v, c);
                if (! _equitable || deficit_ok(v + 1)) {
                    std::vector<Mask> next = forbidden;
                    bool wiped = false;
                    for (Mask e : _through[v]) {
                        Mask open = e & above(v);
                        if (std::popcount(open) != 1 || ((e & ~open) & ~_classes[c]))
                            continue;
                        int u = std::countr_zero(open);
                        next[u] |= bit(c);
                        if ((next[u] & _all_colors) == _all_colors) {
                            wiped = true;
                            break;
                        }
                    }
                    if (! wiped && expand(v + 1, next))
                        return true;
                }
                unassign(v, c);
            }
            return false;
        }

        void assign(int v, int c)
        {
            _color[v] = c;
            _classes[c] |= bit(v);
            if (_large > 0 && _sizes[c] == _quota)
                ++_at_large;
            ++_sizes[c];
            _opened_stack.push_back(_opened);
            _opened = std::max(_opened, c + 1);
        }

        void unassign(int v, int c)
        {
            _color[v] = -1;
            _classes[c] &= ~bit(v);
            --_sizes[c];
            if (_large > 0 && _sizes[c] == _quota)
                --_at_large;
            _opened = _opened_stack.back();
            _opened_stack.pop_back();
        }

        int _n, _r;
        bool _equitable;
        const Deadline & _deadline;
        std::vector<std::vector<Mask>> _ending_at, _through;
        std::vector<int> _color;
        std::vector<Mask> _classes;
        std::vector<int> _sizes;
        std::vector<int> _opened_stack;
        int _opened = 0;
        Mask _all_colors = 0;
        int _quota = 0, _large = 0, _at_large = 0;
        std::uint64_t _polls = 0;
    };

    /// Colors of vertices 0..n-1 in [0,r), or nothing if no (equitable) proper r-coloring exists.
    std::optional<std::vector<int>> color_masks(
            int n, const std::vector<Mask> & edges, int r, bool equitable, const Deadline & deadline)
    {
        if (r < 1)
            throw InvalidArgument("number of parts r must be at least 1");
        if (std::any_of(edges.begin(), edges.end(), [] (Mask e) { return std::popcount(e) == 1; }))
            return std::nullopt;

        if (r >= n) {
            std::vector<int> own(n);
            std::iota(own.begin(), own.end(), 0);
            return own;
        }

        ColoringSearch search(n, edges, r, equitable, deadline);
        return search.run();
    }

    DefectCertificate certificate_from_colors(
            const std::vector<int> & colors, const std::vector<Vertex> & labels,
            std::vector<Vertex> removed, int r, bool equitable)
    {
        DefectCertificate cert;
        cert.removed = std::move(removed);
        cert.parts.resize(r);
        cert.equitable = equitable;
        for (std::size_t i = 0 ; i < colors.size() ; ++i)
            cert.parts[colors[i]].push_back(labels[i]);
        return cert;
    }

    int ceil_div(int a, int b) { return (a + b - 1) / b; }
}

MatchingResult matching_number(const Hypergraph & h, const Deadline & deadline)
{
    auto edges = edge_masks(h);
    MatchingSearch search(edges, -1, deadline);
    MatchingResult result;
    result.size = search.run();
    for (int i : search.best())
        result.witness.push_back(h.edges()[i]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

std::optional<DefectCertificate> is_r_colorable(const Hypergraph & h, int r, bool equitable, const Deadline & deadline)
{
    auto edges = edge_masks(h);
    auto colors = color_masks(h.order(), edges, r, equitable, deadline);
    if (! colors)
        return std::nullopt;

    std::vector<Vertex> labels(h.order());
    std::iota(labels.begin(), labels.end(), 1);
    return certificate_from_colors(*colors, labels, {}, r, equitable);
}

ChromaticResult chromatic_number(const Hypergraph & h, const Deadline & deadline)
{
    auto edges = edge_masks(h);
    ChromaticResult result;
    if (h.has_singleton_edge()) {
        result.feasible = false;
        return result;
    }
    if (h.order() == 0)
        return result;

    for (int r = 1 ; r <= h.order() ; ++r) {
        auto colors = color_masks(h.order(), edges, r, false, deadline);
        if (colors) {
            result.value = r;
            for (int & c : *colors)
                ++c;
            result.coloring = Coloring(std::move(*colors));
            return result;
        }
    }
    throw Error("chromatic number search exhausted without a coloring");
}

IndependenceResult independence_number(const Hypergraph & g, const Deadline & deadline)
{
    if (! g.is_graph())
        throw InvalidArgument("independence number needs a graph (all edges of size 2)");
    require_solver_size(g);

    int n = g.order();
    std::vector<Mask> neighbours(n, 0);
    for (const auto & e : g.edges()) {
        neighbours[e[0] - 1] |= bit(e[1] - 1);
        neighbours[e[1] - 1] |= bit(e[0] - 1);
    }

    Mask best = 0;
    std::uint64_t polls = 0;
    auto expand = [&] (auto & self, Mask candidates, Mask current) -> void {
        deadline.poll(polls);
        if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best))
            return;
        if (! candidates) {
            best = current;
            return;
        }
        int v = std::countr_zero(candidates);
        self(self, candidates & ~bit(v) & ~neighbours[v], current | bit(v));
        self(self, candidates & ~bit(v), current);
    };
    Mask everything = n == 64 ? ~Mask{0} : bit(n) - 1;
    expand(expand, everything, 0);

    return {std::popcount(best), to_edge(best)};
}

DefectResult colorability_defect(
        const Hypergraph & h, int r, bool equitable, std::optional<int> max_removal, const Deadline & deadline)
{
    if (r < 1)
        throw InvalidArgument("number of parts r must be at least 1");
    auto edges = edge_masks(h);
    int n = h.order();
    int cap = std::min(max_removal.value_or(n), n);

    Mask forced = 0;
    for (Mask e : edges)
        if (std::popcount(e) == 1)
            forced |= e;
    int forced_count = std::popcount(forced);
    if (forced_count > cap)
        throw RemovalCapExceeded(forced_count);

    std::vector<int> free_vertices;
    for (int v = 0 ; v < n ; ++v)
        if (! (forced & bit(v)))
            free_vertices.push_back(v);

    // Keyed on the relabeled induced edge set: [kept size, sorted edge masks...].
    std::map<std::vector<Mask>, std::optional<std::vector<int>>> memo;

    for (int d = forced_count ; d <= cap ; ++d) {
        int k = d - forced_count;
        int m = static_cast<int>(free_vertices.size());
        if (k > m)
            break;

        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            deadline.check();

            Mask removed = forced;
            for (int i : pick)
                removed |= bit(free_vertices[i]);

            std::vector<int> relabel(n, -1);
            std::vector<Vertex> labels;
            for (int v = 0 ; v < n ; ++v)
                if (! (removed & bit(v))) {
                    relabel[v] = static_cast<int>(labels.size());
                    labels.push_back(v + 1);
                }

            std::vector<Mask> key{static_cast<Mask>(labels.size())};
            for (Mask e : edges) {
                if (e & removed)
                    continue;
                Mask mapped = 0;
                for (Mask rest = e ; rest ; rest &= rest - 1)
                    mapped |= bit(relabel[std::countr_zero(rest)]);
                key.push_back(mapped);
            }
            std::sort(key.begin() + 1, key.end());

            auto it = memo.find(key);
            if (it == memo.end()) {
                std::vector<Mask> induced(key.begin() + 1, key.end());
                auto colors = color_masks(static_cast<int>(labels.size()), induced, r, equitable, deadline);
                it = memo.emplace(std::move(key), std::move(colors)).first;
            }

            if (it->second) {
                std::vector<Vertex> removed_list = to_edge(removed);
                return {d, certificate_from_colors(*it->second, labels, std::move(removed_list), r, equitable)};
            }

            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1 ; j < k ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    throw RemovalCapExceeded(cap + 1);
}

KneserColoring make_kneser_coloring(int r, std::vector<std::vector<Edge>> classes)
{
    KneserColoring coloring;
    coloring.r = r;
    for (auto & members : classes) {
        std::sort(members.begin(), members.end());
        int n = 0;
        for (const auto & e : members)
            n = std::max(n, e.back());
        auto nu = matching_number(Hypergraph(n, members));
        coloring.classes.push_back({std::move(members), std::move(nu.witness)});
    }
    return coloring;
}

namespace
{
    class KneserSearch
    {
    public:
        KneserSearch(const std::vector<Mask> & edges, const std::vector<int> & order, int r, const Deadline & deadline) :
            _edges(edges),
            _order(order),
            _r(r),
            _deadline(deadline)
        {
        }

        bool compatible(int e, const std::vector<int> & members) const
        {
            std::vector<Mask> disjoint;
            for (int f : members)
                if (! (_edges[f] & _edges[e]))
                    disjoint.push_back(_edges[f]);
            return ! has_matching_of_size(disjoint, _r - 1, _deadline);
        }

        std::vector<std::vector<int>> first_fit() const
        {
            std::vector<std::vector<int>> classes;
            for (int e : _order) {
                auto it = std::find_if(classes.begin(), classes.end(),
                        [&] (const std::vector<int> & c) { return compatible(e, c); });
                if (it == classes.end())
                    classes.push_back({e});
                else
                    it->push_back(e);
            }
            return classes;
        }

        std::optional<std::vector<std::vector<int>>> with_classes(int t)
        {
            _classes.clear();
            _t = t;
            if (expand(0))
                return _classes;
            return std::nullopt;
        }

    private:
        bool expand(std::size_t i)
        {
            _deadline.poll(_polls);
            if (i == _order.size())
                return true;

            int e = _order[i];
            int opened = static_cast<int>(_classes.size());
            for (int c = 0 ; c < std::min(opened + 1, _t) ; ++c) {
                if (c < opened) {
                    if (! compatible(e, _classes[c]))
                        continue;
                    _classes[c].push_back(e);
                    if (expand(i + 1))
                        return true;
                    _classes[c].pop_back();
                }
                else {
                    _classes.push_back({e});
                    if (expand(i + 1))
                        return true;
                    _classes.pop_back();
                }
            }
            return false;
        }

        const std::vector<Mask> & _edges;
        const std::vector<int> & _order;
        int _r;
        const Deadline & _deadline;
        std::vector<std::vector<int>> _classes;
        int _t = 0;
        std::uint64_t _polls = 0;
    };
}

KneserResult kneser_chromatic_number(const Hypergraph & h, int r, const Deadline & deadline)
{
    if (r < 2)
        throw InvalidArgument("Kneser arity r must be at least 2");
    auto edges = edge_masks(h);
    KneserResult result;
    result.coloring.r = r;
    if (edges.empty())
        return result;

    auto nu = matching_number(h, deadline);
    if (nu.size <= r - 1) {
        result.value = 1;
        result.coloring.classes.push_back({h.edges(), nu.witness});
        return result;
    }

    // Most constrained edges (most disjoint partners) first; ties keep canonical order.
    int m = static_cast<int>(edges.size());
    std::vector<int> partners(m, 0);
    for (int i = 0 ; i < m ; ++i)
        for (int j = 0 ; j < m ; ++j)
            if (i != j && ! (edges[i] & edges[j]))
                ++partners[i];
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return partners[a] > partners[b]; });

    KneserSearch search(edges, order, r, deadline);
    auto best = search.first_fit();
    int lower = std::max(2, ceil_div(nu.size, r - 1));
    for (int t = lower ; t < static_cast<int>(best.size()) ; ++t)
        if (auto found = search.with_classes(t)) {
            best = std::move(*found);
            break;
        }

    std::vector<std::vector<Edge>> classes;
    for (const auto & members : best) {
        std::vector<Edge> cls;
        for (int i : members)
            cls.push_back(h.edges()[i]);
        classes.push_back(std::move(cls));
    }
    result.value = static_cast<int>(classes.size());
    result.coloring = make_kneser_coloring(r, std::move(classes));
    return result;
}

} // namespace kdefect
