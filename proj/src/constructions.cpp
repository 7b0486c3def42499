#include <kdefect/constructions.hpp>
#include <kdefect/certificates.hpp>

#include <algorithm>

namespace kdefect {

namespace
{
    void require(bool ok, const std::string & what)
    {
        if (! ok)
            throw InvalidArgument(what);
    }

    void subsets(const std::vector<Vertex> & pool, int k, std::size_t next, Edge & current, std::vector<Edge> & out)
    {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = next ; i < pool.size() ; ++i) {
            current.push_back(pool[i]);
            subsets(pool, k, i + 1, current, out);
            current.pop_back();
        }
    }

    std::vector<Edge> k_subsets(const std::vector<Vertex> & pool, int k)
    {
        std::vector<Edge> out;
        Edge current;
        subsets(pool, k, 0, current, out);
        return out;
    }
}

Hypergraph f_n_s(int n, int s)
{
    require(n >= 2, "F_n^s needs n >= 2");
    require(s >= 1, "F_n^s needs s >= 1");
    std::vector<Edge> edges;
    for (Vertex x = 1 ; x <= n ; ++x)
        for (Vertex y = x + 1 ; y <= n ; ++y)
            if (! is_stable_pair(x, y, n, s))
                edges.push_back({x, y});
    return Hypergraph(n, std::move(edges));
}

int fns_chromatic_formula(int n, int s)
{
    if (s < 2 || n < 2 * s)
        throw InvalidArgument("formula out of scope: needs s >= 2 and n >= 2s");
    int a = n / s;
    return (n + a - 1) / a;
}

Coloring block_coloring(int n, int s)
{
    int colors = fns_chromatic_formula(n, s);
    int a = n / s;
    int short_len = n / a;
    int long_blocks = n - a * short_len;
    int short_blocks = a * short_len + a - n;

    std::vector<int> sequence;
    sequence.reserve(n);
    for (int b = 0 ; b < long_blocks ; ++b)
        for (int c = 1 ; c <= colors ; ++c)
            sequence.push_back(c);
    for (int b = 0 ; b < short_blocks ; ++b)
        for (int c = 1 ; c <= short_len ; ++c)
            sequence.push_back(c);

    if (static_cast<int>(sequence.size()) != n)
        throw Error("block coloring: arrangement length " + std::to_string(sequence.size()) + " != n");
    Coloring coloring(std::move(sequence));
    std::string why;
    if (coloring.colors_used() != colors || ! is_proper_vertex_coloring(f_n_s(n, s), coloring, &why))
        throw Error("block coloring is not a proper " + std::to_string(colors) + "-coloring: " + why);
    return coloring;
}

DefectCertificate residue_defect_witness(int n, int s, int r)
{
    require(s >= 2 && r >= s, "residue witness needs r >= s >= 2");
    require(n >= s, "residue witness needs n >= s");

    DefectCertificate cert;
    for (Vertex v = n - s + 2 ; v <= n ; ++v)
        cert.removed.push_back(v);
    cert.parts.resize(r);
    for (Vertex v = 1 ; v <= n - s + 1 ; ++v)
        cert.parts[(v - 1) % s].push_back(v);

    std::string why;
    if (! validate_defect_certificate(f_n_s(n, s), r, cert, &why))
        throw Error("residue witness failed validation: " + why);
    return cert;
}

Hypergraph complete_uniform(int n, int r)
{
    require(r >= 1, "complete uniform hypergraph needs r >= 1");
    require(r <= n, "complete uniform hypergraph needs r <= n");
    std::vector<Vertex> pool(n);
    for (int i = 0 ; i < n ; ++i)
        pool[i] = i + 1;
    return Hypergraph(n, k_subsets(pool, r));
}

DirectRsInstance directrs_graph(int s)
{
    require(s >= 4, "direct-rs construction needs s >= 4");
    DirectRsInstance inst;
    inst.n = 3 * s - 1;
    inst.graph = f_n_s(inst.n, s);
    int span = (s - 3 + 1) / 2;
    for (int r = s + 1 ; r <= s + span ; ++r)
        inst.r_range.push_back(r);
    return inst;
}

Hypergraph freers1_graph(int s, int l)
{
    require(s >= 2 && l >= 2, "freers1 construction needs s >= 2 and l >= 2");
    return f_n_s(s * (l + 1) + 1, s);
}

Hypergraph jafari_counterexample(int r, int s, int l)
{
    require(r >= 2 && s >= 2, "jafari counterexample needs r >= 2 and s >= 2");
    require(l >= 1, "jafari counterexample needs l >= 1");
    int step = l * s;
    int n = step * (r * s - 1);

    std::vector<Vertex> multiples;
    for (int i = 1 ; i <= r * s - 1 ; ++i)
        multiples.push_back(i * step);

    auto edges = k_subsets(multiples, s);
    auto pairs = f_n_s(n, s);
    edges.insert(edges.end(), pairs.edges().begin(), pairs.edges().end());
    return Hypergraph(n, std::move(edges));
}

Hypergraph frick_gap_graph(int r, int l)
{
    require(r >= 2 && l >= 1, "frick gap graph needs r >= 2 and l >= 1");
    int step = l * r;
    int n = step * (2 * r - 1);

    std::vector<Vertex> multiples;
    for (int i = 1 ; i <= 2 * r - 1 ; ++i)
        multiples.push_back(i * step);

    auto edges = k_subsets(multiples, 2);
    auto pairs = f_n_s(n, r);
    edges.insert(edges.end(), pairs.edges().begin(), pairs.edges().end());
    return Hypergraph(n, std::move(edges));
}

KneserColoring extend_coloring_to_almost_stable(const Hypergraph & g, int r, int s, const KneserColoring & base)
{
    require(r >= s, "coloring extension needs r >= s");
    auto stable = stable_subhypergraph(g, StabilityKind::stable(s));
    auto almost = stable_subhypergraph(g, StabilityKind::almost_stable(s));

    std::string why;
    if (! validate_kneser_coloring(stable, r, base, &why))
        throw InvalidArgument("base coloring is not a valid Kneser coloring of the stable part: " + why);

    std::vector<Edge> fresh;
    for (const auto & e : almost.edges())
        if (! stable.contains(e))
            fresh.push_back(e);

    KneserColoring extended = base;
    if (! fresh.empty()) {
        auto extra = make_kneser_coloring(r, {std::move(fresh)});
        extended.classes.push_back(std::move(extra.classes.front()));
    }

    if (! validate_kneser_coloring(almost, r, extended, &why))
        throw Error("extended coloring failed validation: " + why);
    return extended;
}

int FamilyParams::get(const std::string & key) const
{
    auto it = values.find(key);
    if (it == values.end())
        throw InvalidArgument("family " + family_name(family) + " needs parameter '" + key + "'");
    return it->second;
}

Family parse_family(const std::string & raw)
{
    std::string name = raw;
    std::replace(name.begin(), name.end(), '_', '-');
    if (name == "fns") return Family::Fns;
    if (name == "complete-uniform" || name == "complete") return Family::CompleteUniform;
    if (name == "trivial") return Family::Trivial;
    if (name == "direct-rs" || name == "directrs") return Family::DirectRS;
    if (name == "freers1") return Family::Freers1;
    if (name == "jafari-ce") return Family::JafariCE;
    if (name == "frick-gap") return Family::FrickGap;
    throw InvalidArgument("unknown family '" + raw + "'");
}

std::string family_name(Family f)
{
    switch (f) {
        case Family::Fns: return "fns";
        case Family::CompleteUniform: return "complete-uniform";
        case Family::Trivial: return "trivial";
        case Family::DirectRS: return "direct-rs";
        case Family::Freers1: return "freers1";
        case Family::JafariCE: return "jafari-ce";
        case Family::FrickGap: return "frick-gap";
    }
    return "unknown";
}

Hypergraph generate(const FamilyParams & p)
{
    switch (p.family) {
        case Family::Fns:
            return f_n_s(p.get("n"), p.get("s"));
        case Family::CompleteUniform:
            return complete_uniform(p.get("n"), p.get("r"));
        case Family::Trivial: {
            int r = p.get("r"), s = p.get("s");
            require(r >= 2 && s >= 2, "trivial example needs r, s >= 2");
            return complete_uniform(r * s - 1, r);
        }
        case Family::DirectRS:
            return directrs_graph(p.get("s")).graph;
        case Family::Freers1:
            return freers1_graph(p.get("s"), p.get("l"));
        case Family::JafariCE:
            return jafari_counterexample(p.get("r"), p.get("s"), p.get("l"));
        case Family::FrickGap:
            return frick_gap_graph(p.get("r"), p.get("l"));
    }
    throw InvalidArgument("unknown family");
}

} // namespace kdefect
