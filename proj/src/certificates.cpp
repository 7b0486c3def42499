#include <kdefect/certificates.hpp>

#include <algorithm>
#include <set>

namespace kdefect {

namespace
{
    bool fail(std::string * why, std::string message)
    {
        if (why)
            *why = std::move(message);
        return false;
    }

    std::string show(const Edge & e)
    {
        std::string s = "{";
        for (std::size_t i = 0 ; i < e.size() ; ++i)
            s += (i ? "," : "") + std::to_string(e[i]);
        return s + "}";
    }

    bool extend(const std::vector<Edge> & edges, int k, std::size_t next, std::vector<const Edge *> & chosen)
    {
        if (static_cast<int>(chosen.size()) == k)
            return true;
        for (std::size_t i = next ; i < edges.size() ; ++i) {
            bool ok = std::all_of(chosen.begin(), chosen.end(),
                    [&] (const Edge * f) { return edges_disjoint(edges[i], *f); });
            if (! ok)
                continue;
            chosen.push_back(&edges[i]);
            if (extend(edges, k, i + 1, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }
}

bool has_disjoint_family(const std::vector<Edge> & edges, int k)
{
    std::vector<const Edge *> chosen;
    return extend(edges, k, 0, chosen);
}

bool is_proper_vertex_coloring(const Hypergraph & h, const Coloring & c, std::string * why)
{
    if (static_cast<int>(c.domain_size()) != h.order())
        return fail(why, "coloring domain size differs from the vertex count");
    for (const auto & e : h.edges()) {
        int first = c.color_of(e.front() - 1);
        bool mono = std::all_of(e.begin(), e.end(), [&] (Vertex v) { return c.color_of(v - 1) == first; });
        if (mono)
            return fail(why, "edge " + show(e) + " is monochromatic");
    }
    return true;
}

bool validate_defect_certificate(const Hypergraph & h, int r, const DefectCertificate & cert, std::string * why)
{
    if (static_cast<int>(cert.parts.size()) != r)
        return fail(why, "expected " + std::to_string(r) + " parts, got " + std::to_string(cert.parts.size()));

    int n = h.order();
    std::vector<int> owner(n + 1, -2);
    auto claim = [&] (Vertex v, int who) {
        if (v < 1 || v > n)
            return fail(why, "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
        if (owner[v] != -2)
            return fail(why, "vertex " + std::to_string(v) + " appears twice");
        owner[v] = who;
        return true;
    };

    for (Vertex v : cert.removed)
        if (! claim(v, -1))
            return false;
    for (int p = 0 ; p < r ; ++p)
        for (Vertex v : cert.parts[p])
            if (! claim(v, p))
                return false;
    for (Vertex v = 1 ; v <= n ; ++v)
        if (owner[v] == -2)
            return fail(why, "vertex " + std::to_string(v) + " is neither removed nor in a part");

    for (const auto & e : h.edges()) {
        int first = owner[e.front()];
        if (first < 0)
            continue;
        if (std::all_of(e.begin(), e.end(), [&] (Vertex v) { return owner[v] == first; }))
            return fail(why, "edge " + show(e) + " lies inside part " + std::to_string(first + 1));
    }

    if (cert.equitable && r > 0) {
        auto [lo, hi] = std::minmax_element(cert.parts.begin(), cert.parts.end(),
                [] (const auto & a, const auto & b) { return a.size() < b.size(); });
        if (hi->size() - lo->size() > 1)
            return fail(why, "part sizes differ by more than one");
    }
    return true;
}

bool validate_kneser_coloring(const Hypergraph & h, int r, const KneserColoring & coloring, std::string * why)
{
    if (coloring.r != r)
        return fail(why, "coloring was built for a different arity");

    std::multiset<Edge> seen;
    for (const auto & cls : coloring.classes) {
        if (cls.edges.empty())
            return fail(why, "empty color class");
        for (const auto & e : cls.edges) {
            if (! h.contains(e))
                return fail(why, "class edge " + show(e) + " is not an edge of the hypergraph");
            seen.insert(e);
        }
    }
    if (seen.size() != h.size() || std::set<Edge>(seen.begin(), seen.end()).size() != h.size())
        return fail(why, "classes do not partition the edge set");

    for (const auto & cls : coloring.classes) {
        if (has_disjoint_family(cls.edges, r))
            return fail(why, "a class contains " + std::to_string(r) + " pairwise disjoint edges");

        for (const auto & w : cls.witness)
            if (std::find(cls.edges.begin(), cls.edges.end(), w) == cls.edges.end())
                return fail(why, "witness edge " + show(w) + " is not in its class");
        if (! has_disjoint_family(cls.witness, static_cast<int>(cls.witness.size())))
            return fail(why, "witness edges are not pairwise disjoint");
        if (static_cast<int>(cls.witness.size()) > r - 1)
            return fail(why, "witness larger than r-1");
        if (has_disjoint_family(cls.edges, static_cast<int>(cls.witness.size()) + 1))
            return fail(why, "witness is not a maximum disjoint subfamily");
    }
    return true;
}

} // namespace kdefect
