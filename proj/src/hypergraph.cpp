#include <kdefect/hypergraph.hpp>
#include <kdefect/constructions.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace kdefect {

ParseError::ParseError(const std::string & msg, int line) :
    Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
    _line(line)
{
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) :
    _n(n),
    _edges(std::move(edges))
{
    if (n < 0)
        throw InvalidArgument("ground set size must be nonnegative");

    for (auto & e : _edges) {
        if (e.empty())
            throw InvalidArgument("empty hyperedge");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidArgument("hyperedge with repeated vertex");
        if (e.front() < 1 || e.back() > n)
            throw InvalidArgument("hyperedge vertex outside [1," + std::to_string(n) + "]");
    }

    std::sort(_edges.begin(), _edges.end());
    _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());
}

bool Hypergraph::contains(const Edge & e) const
{
    return std::binary_search(_edges.begin(), _edges.end(), e);
}

bool Hypergraph::is_graph() const
{
    return std::all_of(_edges.begin(), _edges.end(), [] (const Edge & e) { return e.size() == 2; });
}

bool Hypergraph::has_singleton_edge() const
{
    return std::any_of(_edges.begin(), _edges.end(), [] (const Edge & e) { return e.size() == 1; });
}

StabilityKind StabilityKind::stable(int s)
{
    if (s < 1)
        throw InvalidArgument("stability gap s must be at least 1");
    return {Mode::Stable, s};
}

StabilityKind StabilityKind::almost_stable(int s)
{
    if (s < 1)
        throw InvalidArgument("stability gap s must be at least 1");
    return {Mode::AlmostStable, s};
}

Coloring::Coloring(std::vector<int> colors) :
    _colors(std::move(colors))
{
    std::set<int> used;
    for (int c : _colors) {
        if (c < 1)
            throw InvalidArgument("color indices start at 1");
        used.insert(c);
    }
    _t = used.empty() ? 0 : *used.rbegin();
    if (static_cast<int>(used.size()) != _t)
        throw InvalidArgument("coloring skips a color index");
}

std::string to_string(Verdict v)
{
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::Timeout: return "timeout";
    }
    return "unknown";
}

bool is_stable_pair(Vertex x, Vertex y, int n, int s)
{
    if (x == y)
        throw InvalidArgument("stability of a pair needs two distinct vertices");
    if (x < 1 || y < 1 || x > n || y > n)
        throw InvalidArgument("vertex outside [1,n]");
    int d = std::abs(x - y);
    return s <= d && d <= n - s;
}

bool is_stable_set(const Edge & e, int n, StabilityKind kind)
{
    for (Vertex v : e)
        if (v < 1 || v > n)
            throw InvalidArgument("vertex outside [1,n]");

    for (std::size_t i = 0 ; i < e.size() ; ++i)
        for (std::size_t j = i + 1 ; j < e.size() ; ++j) {
            if (kind.mode == StabilityKind::Mode::Stable) {
                if (! is_stable_pair(e[i], e[j], n, kind.s))
                    return false;
            }
            else if (std::abs(e[i] - e[j]) < kind.s)
                return false;
        }

    return true;
}

Hypergraph stable_subhypergraph(const Hypergraph & h, StabilityKind kind)
{
    std::vector<Edge> kept;
    for (const auto & e : h.edges())
        if (is_stable_set(e, h.order(), kind))
            kept.push_back(e);
    return Hypergraph(h.order(), std::move(kept));
}

bool edges_disjoint(const Edge & a, const Edge & b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

namespace
{
    void extend_disjoint_families(
            const std::vector<Edge> & edges,
            int r,
            std::size_t next,
            std::vector<int> & chosen,
            std::vector<Edge> & out)
    {
        if (static_cast<int>(chosen.size()) == r) {
            Edge e;
            for (int i : chosen)
                e.push_back(i + 1);
            out.push_back(std::move(e));
            return;
        }

        for (std::size_t i = next ; i < edges.size() ; ++i) {
            bool ok = std::all_of(chosen.begin(), chosen.end(),
                    [&] (int j) { return edges_disjoint(edges[i], edges[j]); });
            if (! ok)
                continue;
            chosen.push_back(static_cast<int>(i));
            extend_disjoint_families(edges, r, i + 1, chosen, out);
            chosen.pop_back();
        }
    }
}

Hypergraph kneser_hypergraph(const Hypergraph & h, int r, std::size_t cap)
{
    if (r < 2)
        throw InvalidArgument("Kneser arity r must be at least 2");
    if (h.size() > cap)
        throw CapExceeded("hypergraph has " + std::to_string(h.size()) + " edges, too large for explicit "
                "Kneser construction (cap " + std::to_string(cap) + ")");

    std::vector<Edge> out;
    std::vector<int> chosen;
    extend_disjoint_families(h.edges(), r, 0, chosen, out);
    return Hypergraph(static_cast<int>(h.size()), std::move(out));
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph & h, const std::vector<Vertex> & removed)
{
    std::vector<bool> gone(h.order() + 1, false);
    for (Vertex v : removed) {
        if (v < 1 || v > h.order())
            throw InvalidArgument("removed vertex outside [1,n]");
        gone[v] = true;
    }

    InducedSubhypergraph result;
    std::vector<Vertex> relabel(h.order() + 1, 0);
    for (Vertex v = 1 ; v <= h.order() ; ++v)
        if (! gone[v]) {
            result.original.push_back(v);
            relabel[v] = static_cast<Vertex>(result.original.size());
        }

    std::vector<Edge> kept;
    for (const auto & e : h.edges()) {
        if (std::any_of(e.begin(), e.end(), [&] (Vertex v) { return gone[v]; }))
            continue;
        Edge mapped;
        for (Vertex v : e)
            mapped.push_back(relabel[v]);
        kept.push_back(std::move(mapped));
    }

    result.graph = Hypergraph(static_cast<int>(result.original.size()), std::move(kept));
    return result;
}

Hypergraph augment_with_fns(const Hypergraph & h, int s)
{
    if (s < 1)
        throw InvalidArgument("stability gap s must be at least 1");
    for (const auto & e : h.edges()) {
        if (e.size() < 2)
            throw InvalidArgument("input has a singleton edge");
        if (is_stable_set(e, h.order(), StabilityKind::stable(s)))
            throw InvalidArgument("input has an s-stable edge");
    }

    auto edges = h.edges();
    if (h.order() >= 2) {
        auto pairs = f_n_s(h.order(), s);
        edges.insert(edges.end(), pairs.edges().begin(), pairs.edges().end());
    }
    return Hypergraph(h.order(), std::move(edges));
}

} // namespace kdefect
