#include <kdefect/verify.hpp>

#include <kdefect/certificates.hpp>
#include <kdefect/constructions.hpp>
#include <kdefect/sampling.hpp>
#include <kdefect/solvers.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace kdefect {

namespace
{
    int ceil_div(int a, int b) { return (a + b - 1) / b; }

    std::string dump(const Json & j) { return j.dump(); }

    Json hypergraph_certificate(const Hypergraph & g)
    {
        Json plain = to_json(g);
        plain.erase("schema");
        Json j{{"kind", "hypergraph"}};
        j.update(plain);
        return j;
    }

    /// Runs `body`; a Timeout turns the report into a Timeout verdict.
    Report guarded(Report report, const std::function<void(Report &)> & body)
    {
        try {
            body(report);
        }
        catch (const Timeout &) {
            report.verdict = Verdict::Timeout;
            report.notes.push_back("time limit exceeded before both sides were computed");
        }
        return report;
    }

    void settle(Report & rep, int lhs, int rhs, const Hypergraph & g)
    {
        rep.computed["lhs"] = lhs;
        rep.computed["rhs"] = rhs;
        rep.verdict = lhs >= rhs ? Verdict::Holds : Verdict::Violated;
        if (rep.verdict == Verdict::Violated)
            rep.certificates.push_back(dump(hypergraph_certificate(g)));
    }
}

Report check_frick(const Hypergraph & g, int r, const Deadline & deadline)
{
    if (r < 2)
        throw InvalidArgument("frick check needs r >= 2");

    Report rep;
    rep.subject_id = "frick";
    rep.parameters = {{"n", g.order()}, {"r", r}};
    if (r < 3 || g.order() < 3)
        rep.notes.push_back("extra-hypothesis: the conjecture is stated for n, r >= 3");

    return guarded(std::move(rep), [&] (Report & rep) {
        auto stable = stable_subhypergraph(g, StabilityKind::stable(r));
        auto kneser = kneser_chromatic_number(stable, r, deadline);
        auto cd = colorability_defect(g, r, false, std::nullopt, deadline);

        rep.computed["stable_edges"] = static_cast<std::int64_t>(stable.size());
        rep.computed["kneser_chi"] = kneser.value;
        rep.computed["cd"] = cd.value;
        rep.certificates.push_back(dump(to_json(kneser.coloring)));
        rep.certificates.push_back(dump(to_json(cd.certificate)));
        settle(rep, kneser.value, ceil_div(cd.value, r - 1), g);
    });
}

Report check_jafari(const Hypergraph & g, int r, int s, const Deadline & deadline)
{
    if (r < 2 || s < 1)
        throw InvalidArgument("jafari check needs r >= 2 and s >= 1");

    Report rep;
    rep.subject_id = "jafari";
    rep.parameters = {{"n", g.order()}, {"r", r}, {"s", s}};
    if (s < r)
        rep.notes.push_back("extra-hypothesis: the conjecture is stated for s >= r");

    return guarded(std::move(rep), [&] (Report & rep) {
        auto stable = stable_subhypergraph(g, StabilityKind::stable(s));
        auto kneser = kneser_chromatic_number(stable, r, deadline);
        auto cd = colorability_defect(g, s, false, std::nullopt, deadline);
        auto ecd = colorability_defect(g, s, true, std::nullopt, deadline);
        if (ecd.value < cd.value)
            throw Error("equitable defect below plain defect; solver inconsistency");

        rep.computed["stable_edges"] = static_cast<std::int64_t>(stable.size());
        rep.computed["kneser_chi"] = kneser.value;
        rep.computed["cd"] = cd.value;
        rep.computed["ecd"] = ecd.value;
        rep.certificates.push_back(dump(to_json(kneser.coloring)));
        rep.certificates.push_back(dump(to_json(ecd.certificate)));
        settle(rep, kneser.value, ceil_div(ecd.value, r - 1), g);
    });
}

Report check_almost(const Hypergraph & g, int r, int s, const Deadline & deadline)
{
    if (r < 2 || s < 1)
        throw InvalidArgument("almost-stable check needs r >= 2 and s >= 1");

    Report rep;
    rep.subject_id = "almost";
    rep.parameters = {{"n", g.order()}, {"r", r}, {"s", s}};
    if (r < s || s < 2)
        rep.notes.push_back("extra-hypothesis: the conjecture is stated for r >= s >= 2");

    return guarded(std::move(rep), [&] (Report & rep) {
        auto stable = stable_subhypergraph(g, StabilityKind::stable(s));
        auto almost = stable_subhypergraph(g, StabilityKind::almost_stable(s));
        auto kneser = kneser_chromatic_number(almost, r, deadline);
        auto stable_kneser = kneser_chromatic_number(stable, r, deadline);
        auto cd = colorability_defect(g, r, false, std::nullopt, deadline);
        int rhs = ceil_div(cd.value, r - 1);

        rep.computed["stable_edges"] = static_cast<std::int64_t>(stable.size());
        rep.computed["almost_edges"] = static_cast<std::int64_t>(almost.size());
        rep.computed["stable_kneser_chi"] = stable_kneser.value;
        rep.computed["kneser_chi"] = kneser.value;
        rep.computed["cd"] = cd.value;
        rep.certificates.push_back(dump(to_json(kneser.coloring)));
        rep.certificates.push_back(dump(to_json(cd.certificate)));

        if (kneser.value < rhs) {
            // A violation here would refute an open conjecture: confirm the
            // left side on the explicit Kneser hypergraph before reporting.
            if (almost.size() <= default_kneser_cap) {
                auto oracle = chromatic_number(kneser_hypergraph(almost, r), deadline);
                rep.computed["oracle_kneser_chi"] = oracle.value;
                if (oracle.value != kneser.value)
                    throw Error("Kneser chromatic number disagrees with the explicit oracle");
            }
            else
                rep.notes.push_back("explicit Kneser oracle skipped: almost-stable part too large");
        }
        settle(rep, kneser.value, rhs, g);
    });
}

Conjecture parse_conjecture(const std::string & name)
{
    if (name == "frick") return Conjecture::Frick;
    if (name == "jafari") return Conjecture::Jafari;
    if (name == "almost") return Conjecture::Almost;
    throw InvalidArgument("unknown conjecture '" + name + "' (expected frick, jafari or almost)");
}

std::string conjecture_name(Conjecture c)
{
    switch (c) {
        case Conjecture::Frick: return "frick";
        case Conjecture::Jafari: return "jafari";
        case Conjecture::Almost: return "almost";
    }
    return "unknown";
}

Report check_conjecture(Conjecture c, const Hypergraph & g, int r, int s, const Deadline & deadline)
{
    switch (c) {
        case Conjecture::Frick: return check_frick(g, r, deadline);
        case Conjecture::Jafari: return check_jafari(g, r, s, deadline);
        case Conjecture::Almost: return check_almost(g, r, s, deadline);
    }
    throw InvalidArgument("unknown conjecture");
}

// ---------------------------------------------------------------------------
// theorem registry

namespace
{
    class Params
    {
    public:
        Params(std::string id, const TheoremParams & given, std::set<std::string> allowed) :
            _id(std::move(id)),
            _given(given)
        {
            for (const auto & [k, _] : given)
                if (! allowed.count(k))
                    throw InvalidArgument(_id + ": unexpected parameter '" + k + "'");
        }

        int need(const std::string & key) const
        {
            auto it = _given.find(key);
            if (it == _given.end())
                throw InvalidArgument(_id + ": missing parameter '" + key + "'");
            return static_cast<int>(it->second);
        }

        std::int64_t get(const std::string & key, std::int64_t fallback) const
        {
            auto it = _given.find(key);
            return it == _given.end() ? fallback : it->second;
        }

        bool has(const std::string & key) const { return _given.count(key) > 0; }

        void hypothesis(bool ok, const std::string & what) const
        {
            if (! ok)
                throw InvalidArgument(_id + ": parameters outside the hypothesis (" + what + ")");
        }

    private:
        std::string _id;
        const TheoremParams & _given;
    };

    struct Claims
    {
        Report & report;
        bool all = true;

        void expect(bool ok, const std::string & what)
        {
            if (! ok) {
                all = false;
                report.notes.push_back("claim failed: " + what);
            }
        }

        void finish()
        {
            report.verdict = all ? Verdict::Holds : Verdict::Violated;
            if (! all && report.certificates.empty())
                report.certificates.push_back(dump(Json{{"kind", "failed-claims"}, {"notes", report.notes}}));
        }
    };

    void guard_size(int n)
    {
        if (n > max_solver_vertices)
            throw InvalidArgument("instance on " + std::to_string(n) + " vertices exceeds the solver limit");
    }

    Report trivial_example(const Params & p, Report rep, const Deadline & d)
    {
        int r = p.need("r"), s = p.need("s");
        p.hypothesis(r >= 2 && s >= 2, "r, s >= 2");
        int n = r * s - 1;
        guard_size(n);

        auto g = complete_uniform(n, r);
        auto stable = stable_subhypergraph(g, StabilityKind::stable(s));
        auto kneser = kneser_chromatic_number(stable, r, d);
        auto cd = colorability_defect(g, s, false, std::nullopt, d);
        auto ecd = colorability_defect(g, s, true, std::nullopt, d);
        int rhs = ceil_div(ecd.value, r - 1);

        rep.computed = {{"n", n}, {"stable_edges", static_cast<std::int64_t>(stable.size())},
            {"kneser_chi", kneser.value}, {"cd", cd.value}, {"ecd", ecd.value}, {"rhs", rhs}};
        rep.certificates.push_back(dump(to_json(ecd.certificate)));

        Claims c{rep};
        c.expect(stable.empty(), "s-stable part is empty");
        c.expect(kneser.value == 0, "Kneser chromatic number is 0");
        c.expect(cd.value == s - 1 && ecd.value == s - 1, "cd^s = ecd^s = s-1");
        c.expect(rhs == ceil_div(s - 1, r - 1) && rhs >= 1, "ceil(ecd^s/(r-1)) = ceil((s-1)/(r-1)) >= 1");
        c.finish();
        return rep;
    }

    Report r_ge_s_nonexistence(const Params & p, Report rep, const Deadline & d)
    {
        int n = p.need("n"), r = p.need("r"), s = p.need("s");
        p.hypothesis(s >= 2 && r >= s, "r >= s >= 2");
        p.hypothesis(n >= 2, "n >= 2");
        guard_size(n);

        auto g = f_n_s(n, s);
        Claims c{rep};
        if (n >= s) {
            auto witness = residue_defect_witness(n, s, r);
            rep.certificates.push_back(dump(to_json(witness)));
            rep.computed["witness_removed"] = static_cast<std::int64_t>(witness.removed.size());
        }
        else
            rep.notes.push_back("n < s: no residue witness, F_n^s is complete on fewer than s vertices");

        auto stable = stable_subhypergraph(g, StabilityKind::stable(s));
        auto cd = colorability_defect(g, r, false, std::nullopt, d);
        int rhs = ceil_div(cd.value, r - 1);
        rep.computed["stable_edges"] = static_cast<std::int64_t>(stable.size());
        rep.computed["cd"] = cd.value;
        rep.computed["rhs"] = rhs;
        c.expect(stable.empty(), "F_n^s has no s-stable edge");
        c.expect(cd.value <= s - 1, "cd^r(F_n^s) <= s-1");
        c.expect(rhs <= 1, "ceil(cd^r/(r-1)) <= 1");
        c.finish();
        return rep;
    }

    Report direct_rs(const Params & p, Report rep, const Deadline & d)
    {
        int s = p.need("s");
        p.hypothesis(s >= 4, "s >= 4");
        auto inst = directrs_graph(s);
        guard_size(inst.n);

        std::vector<int> arities = inst.r_range;
        if (p.has("r")) {
            int r = p.need("r");
            p.hypothesis(std::find(arities.begin(), arities.end(), r) != arities.end(),
                    "r in {s+1, ..., s+ceil((s-3)/2)}");
            arities = {r};
        }

        rep.computed["n"] = inst.n;
        Claims c{rep};
        for (int r : arities) {
            auto stable = stable_subhypergraph(inst.graph, StabilityKind::stable(s));
            auto kneser = kneser_chromatic_number(stable, r, d);
            auto cd = colorability_defect(inst.graph, r, false, std::nullopt, d);
            int rhs = ceil_div(cd.value, r - 1);
            std::string tag = arities.size() == 1 ? "" : "_r" + std::to_string(r);
            if (arities.size() == 1)
                rep.computed["r"] = r;
            rep.computed["kneser_chi" + tag] = kneser.value;
            rep.computed["cd" + tag] = cd.value;
            rep.computed["rhs" + tag] = rhs;
            rep.certificates.push_back(dump(to_json(cd.certificate)));
            c.expect(inst.n >= 2 * r + 1, "n >= 2r+1 at r=" + std::to_string(r));
            c.expect(kneser.value == 0, "Kneser chromatic number 0 at r=" + std::to_string(r));
            c.expect(rhs == 1, "ceil(cd^r/(r-1)) = 1 at r=" + std::to_string(r));
        }
        c.finish();
        return rep;
    }

    Report inverse_rs(const Params & p, Report rep, const Deadline & d)
    {
        int s = p.need("s");
        p.hypothesis(s >= 4, "s >= 4");
        int span = (s - 2) / 2;
        int in_range_hi = s + span;
        int r_lo = s + 1;
        int r_hi = static_cast<int>(p.get("r_max", (3 * s - 3 + 1) / 2 + 1));
        if (p.has("r")) {
            r_lo = r_hi = p.need("r");
            p.hypothesis(r_lo >= s + 1, "r >= s+1");
        }
        guard_size(s * (s - 1) - 1);

        int instances = 0, hits = 0, outside = 0;
        Json found = Json::array();
        for (int r = r_lo ; r <= r_hi ; ++r)
            for (int n = std::max(4, 2 * r) ; n < s * (s - 1) ; ++n) {
                ++instances;
                auto g = f_n_s(n, s);
                auto cd = colorability_defect(g, r, false, std::nullopt, d);
                if (ceil_div(cd.value, r - 1) >= 1) {
                    ++hits;
                    found.push_back(Json{{"n", n}, {"r", r}, {"cd", cd.value}});
                    if (r > in_range_hi)
                        ++outside;
                }
            }

        rep.computed = {{"instances", instances}, {"hits", hits}, {"out_of_range_hits", outside},
            {"r_range_hi", in_range_hi}};
        rep.certificates.push_back(dump(Json{{"kind", "inverse-rs-hits"}, {"hits", found}}));
        Claims c{rep};
        c.expect(outside == 0, "every hit has r <= s+ceil((s-3)/2)");
        c.finish();
        return rep;
    }

    Report freers1(const Params & p, Report rep, const Deadline & d)
    {
        int r = p.need("r"), s = p.need("s"), l = p.need("l");
        p.hypothesis(r >= 2 && s >= 2 && l >= 2, "r, s, l >= 2");
        int n = s * (l + 1) + 1;
        guard_size(n);

        auto g = freers1_graph(s, l);
        auto stable = stable_subhypergraph(g, StabilityKind::stable(s));
        auto kneser = kneser_chromatic_number(stable, r, d);
        auto cd = colorability_defect(g, s, false, std::nullopt, d);
        int rhs = ceil_div(cd.value, r - 1);
        rep.computed = {{"n", n}, {"kneser_chi", kneser.value}, {"cd", cd.value}, {"rhs", rhs},
            {"chi_formula", fns_chromatic_formula(n, s)}};
        rep.certificates.push_back(dump(to_json(cd.certificate)));

        Claims c{rep};
        c.expect(n > l, "n > l");
        c.expect(kneser.value == 0, "Kneser chromatic number 0");
        c.expect(rhs >= 1, "ceil(cd^s/(r-1)) >= 1");
        c.finish();
        return rep;
    }

    Report jafari_ce(const Params & p, Report rep, const Deadline & d)
    {
        int r = p.need("r"), s = p.need("s"), l = p.need("l");
        p.hypothesis(r >= 2 && s >= 2 && l >= 1, "r, s >= 2 and l >= 1");
        if (l < 2)
            rep.notes.push_back("outside the stated theorem hypothesis: l = 1");
        int n = l * s * (r * s - 1);
        guard_size(n);

        auto f = jafari_counterexample(r, s, l);
        auto stable = stable_subhypergraph(f, StabilityKind::stable(s));
        auto kneser = kneser_chromatic_number(stable, r, d);
        auto cd = colorability_defect(f, s, false, std::nullopt, d);
        int rhs = ceil_div(cd.value, r - 1);

        std::vector<Vertex> multiples;
        for (int i = 1 ; i <= r * s - 1 ; ++i)
            multiples.push_back(i * l * s);
        bool stable_is_a_subsets = std::all_of(stable.edges().begin(), stable.edges().end(),
                [&] (const Edge & e) {
                    return static_cast<int>(e.size()) == s && std::all_of(e.begin(), e.end(), [&] (Vertex v) {
                        return std::binary_search(multiples.begin(), multiples.end(), v); });
                });

        rep.computed = {{"n", n}, {"stable_edges", static_cast<std::int64_t>(stable.size())},
            {"kneser_chi", kneser.value}, {"cd", cd.value}, {"rhs", rhs}};
        rep.certificates.push_back(dump(to_json(kneser.coloring)));
        rep.certificates.push_back(dump(to_json(cd.certificate)));

        Claims c{rep};
        c.expect(n > l, "n > l");
        c.expect(! stable.empty() && stable_is_a_subsets, "s-stable part is the s-subsets of A");
        c.expect(kneser.value == 1, "Kneser chromatic number 1");
        c.expect(cd.value >= r, "cd^s >= r");
        c.expect(rhs >= 2, "ceil(cd^s/(r-1)) >= 2");
        c.finish();
        return rep;
    }

    Report frick_gap(const Params & p, Report rep, const Deadline & d)
    {
        int r = p.need("r"), l = p.need("l");
        p.hypothesis(r >= 2 && l >= 1, "r >= 2 and l >= 1");
        int n = l * r * (2 * r - 1);
        guard_size(n);

        auto f = frick_gap_graph(r, l);
        auto stable = stable_subhypergraph(f, StabilityKind::stable(r));
        auto kneser = kneser_chromatic_number(stable, r, d);
        auto cd = colorability_defect(f, r, false, std::nullopt, d);
        int rhs = ceil_div(cd.value, r - 1);

        std::vector<Edge> clique;
        for (int a = 1 ; a <= 2 * r - 1 ; ++a)
            for (int b = a + 1 ; b <= 2 * r - 1 ; ++b)
                clique.push_back({a * l * r, b * l * r});

        rep.computed = {{"n", n}, {"stable_edges", static_cast<std::int64_t>(stable.size())},
            {"kneser_chi", kneser.value}, {"cd", cd.value}, {"rhs", rhs}};
        rep.certificates.push_back(dump(to_json(kneser.coloring)));
        rep.certificates.push_back(dump(to_json(cd.certificate)));

        Claims c{rep};
        c.expect(std::all_of(clique.begin(), clique.end(), [&] (const Edge & e) { return f.contains(e); }),
                "clique on the multiples of lr");
        c.expect(stable.edges() == Hypergraph(n, clique).edges(), "r-stable part is exactly that clique");
        c.expect(kneser.value == 1, "Kneser chromatic number 1");
        c.expect(cd.value >= r, "cd^r >= r");
        c.expect(rhs >= 2, "ceil(cd^r/(r-1)) >= 2");
        c.finish();
        return rep;
    }

    Report restriction_lemma(const Params & p, Report rep, const Deadline & d)
    {
        int n = p.need("n"), s = p.need("s"), r = p.need("r");
        p.hypothesis(n >= 2 && s >= 1 && r >= 2, "n >= 2, s >= 1, r >= 2");
        guard_size(n);
        int samples = static_cast<int>(p.get("samples", 50));
        Rng rng(static_cast<std::uint64_t>(p.get("seed", 1)));
        int max_edges = static_cast<int>(p.get("max_edges", 8));
        int max_edge_size = static_cast<int>(p.get("max_edge_size", 3));

        auto fns = f_n_s(n, s);
        int reference = colorability_defect(fns, r, false, std::nullopt, d).value;
        int mismatches = 0;
        Claims c{rep};
        for (int i = 0 ; i < samples ; ++i) {
            auto h = random_hypergraph(rng, n, max_edges, max_edge_size,
                    [&] (const Edge & e) { return ! is_stable_set(e, n, StabilityKind::stable(s)); });
            auto augmented = augment_with_fns(h, s);
            int value = colorability_defect(augmented, r, false, std::nullopt, d).value;
            if (value != reference || ! stable_subhypergraph(augmented, StabilityKind::stable(s)).empty()) {
                ++mismatches;
                rep.certificates.push_back(dump(hypergraph_certificate(h)));
            }
        }
        rep.computed = {{"cd_fns", reference}, {"samples", samples}, {"mismatches", mismatches}};
        c.expect(mismatches == 0, "cd^r(H + F_n^s) = cd^r(F_n^s) for every sample");
        c.finish();
        return rep;
    }

    Report chi_fns(const Params & p, Report rep, const Deadline & d)
    {
        int n = p.need("n"), s = p.need("s");
        p.hypothesis(s >= 2 && n >= 2 * s, "s >= 2 and n >= 2s");
        guard_size(n);
        auto g = f_n_s(n, s);
        auto chi = chromatic_number(g, d);
        int formula = fns_chromatic_formula(n, s);
        auto blocks = block_coloring(n, s);
        rep.computed = {{"solver", chi.value}, {"formula", formula}, {"block_colors", blocks.colors_used()}};
        rep.certificates.push_back(dump(to_json(blocks)));

        Claims c{rep};
        c.expect(chi.value == formula, "solver chromatic number equals ceil(n/floor(n/s))");
        c.expect(blocks.colors_used() == formula && is_proper_vertex_coloring(g, blocks),
                "block coloring is proper with the formula's color count");
        c.finish();
        return rep;
    }

    Report alpha_fns(const Params & p, Report rep, const Deadline & d)
    {
        int n = p.need("n"), s = p.need("s");
        p.hypothesis(s >= 2 && n >= 2 * s, "s >= 2 and n >= 2s");
        guard_size(n);
        auto g = f_n_s(n, s);
        auto alpha = independence_number(g, d);
        int a = n / s;

        Edge multiples;
        for (int i = 1 ; i <= a ; ++i)
            multiples.push_back(i * s);
        bool independent = std::none_of(g.edges().begin(), g.edges().end(), [&] (const Edge & e) {
            return std::binary_search(multiples.begin(), multiples.end(), e[0])
                && std::binary_search(multiples.begin(), multiples.end(), e[1]);
        });

        rep.computed = {{"solver", alpha.size}, {"formula", a}};
        rep.certificates.push_back(dump(Json{{"kind", "independent-set"}, {"vertices", alpha.witness}}));
        Claims c{rep};
        c.expect(alpha.size == a, "independence number equals floor(n/s)");
        c.expect(independent, "{s, 2s, ..., as} is independent");
        c.finish();
        return rep;
    }

    Report gap_le_1(const Params & p, Report rep, const Deadline & d)
    {
        int r = p.need("r"), s = p.need("s");
        p.hypothesis(r >= 2 && s >= 1 && r >= s, "r >= s and r >= 2");
        int n_max = static_cast<int>(p.get("n", 7));
        int n_min = static_cast<int>(p.get("n_min", 3));
        p.hypothesis(n_min >= 1 && n_min <= n_max, "1 <= n_min <= n");
        guard_size(n_max);
        int samples = static_cast<int>(p.get("samples", 100));
        Rng rng(static_cast<std::uint64_t>(p.get("seed", 1)));
        int max_edges = static_cast<int>(p.get("max_edges", 8));
        int max_edge_size = static_cast<int>(p.get("max_edge_size", 3));

        int gap_zero = 0, gap_one = 0, bad = 0;
        for (int i = 0 ; i < samples ; ++i) {
            int n = rng.uniform(n_min, n_max);
            auto g = random_hypergraph(rng, n, max_edges, max_edge_size);
            auto stable = kneser_chromatic_number(stable_subhypergraph(g, StabilityKind::stable(s)), r, d);
            auto almost = kneser_chromatic_number(stable_subhypergraph(g, StabilityKind::almost_stable(s)), r, d);
            int gap = almost.value - stable.value;
            bool ok = gap == 0 || gap == 1;
            try {
                auto extended = extend_coloring_to_almost_stable(g, r, s, stable.coloring);
                ok = ok && extended.classes_used() <= stable.value + 1;
            }
            catch (const Error &) {
                ok = false;
            }
            (gap == 0 ? gap_zero : gap == 1 ? gap_one : bad) += 1;
            if (! ok) {
                ++bad;
                rep.certificates.push_back(dump(hypergraph_certificate(g)));
            }
        }
        rep.computed = {{"samples", samples}, {"gap_0", gap_zero}, {"gap_1", gap_one}, {"failures", bad}};
        Claims c{rep};
        c.expect(bad == 0, "almost-stable Kneser chromatic number exceeds the stable one by at most 1");
        c.finish();
        return rep;
    }

    Report finiteness(const Params & p, Report rep, const Deadline & d)
    {
        int n = p.need("n"), r = p.need("r"), s = p.need("s");
        p.hypothesis(s >= 2 && r >= s + 1, "s >= 2 and r >= s+1");
        p.hypothesis(n >= s * (s - 1) && n >= 2 * s, "n >= max(s(s-1), 2s)");
        guard_size(n);
        auto g = f_n_s(n, s);
        auto cd = colorability_defect(g, r, false, std::nullopt, d);
        int formula = fns_chromatic_formula(n, s);
        rep.computed = {{"cd", cd.value}, {"chi_formula", formula}};
        rep.certificates.push_back(dump(to_json(cd.certificate)));
        Claims c{rep};
        c.expect(formula <= s + 1, "chi(F_n^s) <= s+1");
        c.expect(cd.value == 0, "cd^r(F_n^s) = 0");
        c.finish();
        return rep;
    }

    using TheoremFn = Report (*)(const Params &, Report, const Deadline &);

    struct Entry
    {
        const char * id;
        TheoremFn run;
        std::set<std::string> keys;
    };

    const std::vector<Entry> & registry()
    {
        static const std::vector<Entry> entries{
            {"trivial-example", trivial_example, {"r", "s"}},
            {"r-ge-s-nonexistence", r_ge_s_nonexistence, {"n", "r", "s"}},
            {"direct-rs", direct_rs, {"s", "r"}},
            {"inverse-rs", inverse_rs, {"s", "r", "r_max"}},
            {"freers1", freers1, {"r", "s", "l"}},
            {"jafari-ce", jafari_ce, {"r", "s", "l"}},
            {"frick-gap", frick_gap, {"r", "l"}},
            {"restriction-lemma", restriction_lemma, {"n", "s", "r", "samples", "seed", "max_edges", "max_edge_size"}},
            {"chi-fns", chi_fns, {"n", "s"}},
            {"alpha-fns", alpha_fns, {"n", "s"}},
            {"gap-le-1", gap_le_1, {"r", "s", "n", "n_min", "samples", "seed", "max_edges", "max_edge_size"}},
            {"finiteness", finiteness, {"n", "r", "s"}},
        };
        return entries;
    }
}

std::vector<std::string> theorem_ids()
{
    std::vector<std::string> ids;
    for (const auto & e : registry())
        ids.push_back(e.id);
    return ids;
}

Report verify_theorem(const std::string & id, const TheoremParams & params, const Deadline & deadline)
{
    auto it = std::find_if(registry().begin(), registry().end(), [&] (const Entry & e) { return id == e.id; });
    if (it == registry().end())
        throw InvalidArgument("unknown theorem id '" + id + "'");

    Params p(id, params, it->keys);
    Report rep;
    rep.subject_id = "theorem:" + id;
    rep.parameters = std::map<std::string, std::int64_t>(params.begin(), params.end());
    try {
        return it->run(p, rep, deadline);
    }
    catch (const Timeout &) {
        rep.verdict = Verdict::Timeout;
        rep.notes.push_back("time limit exceeded");
        return rep;
    }
}

// ---------------------------------------------------------------------------
// scanning

int ScanResult::violated() const
{
    return static_cast<int>(std::count_if(reports.begin(), reports.end(),
                [] (const Report & r) { return r.verdict == Verdict::Violated; }));
}

int ScanResult::timeouts() const
{
    return static_cast<int>(std::count_if(reports.begin(), reports.end(),
                [] (const Report & r) { return r.verdict == Verdict::Timeout; }));
}

namespace
{
    IntRange parse_range(const Json & j, const std::string & key)
    {
        if (j.is_number_integer())
            return {j.get<int>(), j.get<int>()};
        if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
            return {j[0].get<int>(), j[1].get<int>()};
        throw InvalidArgument("scan field '" + key + "' must be an integer or [lo, hi]");
    }

    ScanMode parse_mode(const std::string & name)
    {
        if (name == "exhaustive-fns") return ScanMode::ExhaustiveFns;
        if (name == "paper-families") return ScanMode::PaperFamilies;
        if (name == "random") return ScanMode::RandomHypergraphs;
        throw InvalidArgument("unknown scan mode '" + name + "' (expected exhaustive-fns, paper-families or random)");
    }

    struct Instance
    {
        std::string label;
        Hypergraph graph;
        int r = 2;
        int s = 2;
        std::map<std::string, std::int64_t> extra;
    };

    std::string label(const std::string & family, std::initializer_list<std::pair<const char *, std::int64_t>> kv)
    {
        std::string out = family + "(";
        bool first = true;
        for (const auto & [k, v] : kv) {
            out += (first ? "" : ",") + std::string(k) + "=" + std::to_string(v);
            first = false;
        }
        return out + ")";
    }

    std::vector<std::pair<int, int>> arities(const ScanSpec & spec)
    {
        std::vector<std::pair<int, int>> out;
        for (int r = std::max(2, spec.r.lo) ; r <= spec.r.hi ; ++r) {
            if (spec.conjecture == Conjecture::Frick) {
                out.emplace_back(r, r);
                continue;
            }
            for (int s = std::max(1, spec.s.lo) ; s <= spec.s.hi ; ++s)
                out.emplace_back(r, s);
        }
        return out;
    }

    std::vector<Instance> instances(const ScanSpec & spec)
    {
        std::vector<Instance> out;
        switch (spec.mode) {
            case ScanMode::ExhaustiveFns:
                if (spec.n.hi > spec.max_n)
                    throw InvalidArgument("exhaustive scan limited to n <= " + std::to_string(spec.max_n));
                for (int n = std::max(2, spec.n.lo) ; n <= spec.n.hi ; ++n)
                    for (auto [r, s] : arities(spec))
                        out.push_back({label("fns", {{"n", n}, {"s", s}}), f_n_s(n, s), r, s, {}});
                break;

            case ScanMode::PaperFamilies:
                for (auto [r, s] : arities(spec))
                    for (int l = std::max(1, spec.l.lo) ; l <= spec.l.hi ; ++l) {
                        if (spec.conjecture == Conjecture::Frick)
                            out.push_back({label("frick-gap", {{"r", r}, {"l", l}}), frick_gap_graph(r, l), r, r, {{"l", l}}});
                        else if (s >= 2)
                            out.push_back({label("jafari-ce", {{"r", r}, {"s", s}, {"l", l}}),
                                    jafari_counterexample(r, s, l), r, s, {{"l", l}}});
                    }
                break;

            case ScanMode::RandomHypergraphs: {
                if (spec.n.hi > spec.max_n)
                    throw InvalidArgument("random scan limited to n <= " + std::to_string(spec.max_n));
                Rng rng(spec.seed);
                for (auto [r, s] : arities(spec))
                    for (int i = 0 ; i < spec.samples ; ++i) {
                        int n = rng.uniform(std::max(1, spec.n.lo), spec.n.hi);
                        auto g = random_hypergraph(rng, n, spec.max_edges, spec.max_edge_size);
                        out.push_back({label("random", {{"seed", static_cast<std::int64_t>(spec.seed)}, {"i", i}, {"n", n}}),
                                std::move(g), r, s, {{"sample", i}}});
                    }
                break;
            }
        }

        for (const auto & inst : out)
            if (inst.graph.order() > max_solver_vertices)
                throw InvalidArgument(inst.label + " has more than " + std::to_string(max_solver_vertices) + " vertices");
        return out;
    }
}

ScanSpec parse_scan_spec(const Json & j)
{
    if (! j.is_object())
        throw InvalidArgument("scan spec must be a JSON object");
    ScanSpec spec;
    for (const auto & [key, value] : j.items()) {
        if (key == "schema")
            continue;
        else if (key == "conjecture")
            spec.conjecture = parse_conjecture(value.get<std::string>());
        else if (key == "mode")
            spec.mode = parse_mode(value.get<std::string>());
        else if (key == "n")
            spec.n = parse_range(value, key);
        else if (key == "r")
            spec.r = parse_range(value, key);
        else if (key == "s")
            spec.s = parse_range(value, key);
        else if (key == "l")
            spec.l = parse_range(value, key);
        else if (key == "samples")
            spec.samples = value.get<int>();
        else if (key == "seed")
            spec.seed = value.get<std::uint64_t>();
        else if (key == "max_edges")
            spec.max_edges = value.get<int>();
        else if (key == "max_edge_size")
            spec.max_edge_size = value.get<int>();
        else if (key == "max_n")
            spec.max_n = value.get<int>();
        else if (key == "time_limit_ms")
            spec.time_limit_ms = value.get<std::int64_t>();
        else if (key == "jobs")
            spec.jobs = value.get<int>();
        else
            throw InvalidArgument("unknown scan field '" + key + "'");
    }

    for (auto * range : {&spec.n, &spec.r, &spec.s, &spec.l})
        if (range->lo > range->hi)
            throw InvalidArgument("scan range is empty");
    if (spec.samples < 0 || spec.max_edges < 0)
        throw InvalidArgument("sample counts must be nonnegative");
    return spec;
}

ScanResult scan(const ScanSpec & spec)
{
    auto work = instances(spec);
    ScanResult result;
    result.reports.resize(work.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= work.size())
                return;
            try {
                const auto & inst = work[i];
                auto rep = check_conjecture(spec.conjecture, inst.graph, inst.r, inst.s,
                        Deadline::from_ms(spec.time_limit_ms));
                rep.subject_id = conjecture_name(spec.conjecture) + " " + inst.label;
                for (const auto & [k, v] : inst.extra)
                    rep.parameters[k] = v;
                result.reports[i] = std::move(rep);
            }
            catch (...) {
                std::lock_guard<std::mutex> lock(failure_lock);
                if (! failure)
                    failure = std::current_exception();
            }
        }
    };

    int jobs = spec.jobs > 0 ? spec.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, work.size())));
    std::vector<std::thread> pool;
    for (int j = 1 ; j < jobs ; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();

    if (failure)
        std::rethrow_exception(failure);
    return result;
}

std::string write_json_lines(const ScanResult & result)
{
    Json violations = Json::array();
    for (const auto & r : result.reports)
        if (r.verdict == Verdict::Violated)
            violations.push_back(r.subject_id);

    std::string out = Json{{"schema", schema_version}, {"kind", "scan-summary"},
        {"violations", std::move(violations)},
        {"total", result.reports.size()}, {"violated", result.violated()}, {"timeouts", result.timeouts()}}.dump();
    out += '\n';
    for (const auto & r : result.reports)
        out += write_json_line(r) + '\n';
    return out;
}

std::string write_table(const ScanResult & result)
{
    std::ostringstream out;
    out << result.reports.size() << " instances, " << result.violated() << " violated, "
        << result.timeouts() << " timeouts\n";
    for (const auto & r : result.reports)
        if (r.verdict == Verdict::Violated)
            out << "  VIOLATED " << r.subject_id << '\n';

    std::size_t width = 8;
    for (const auto & r : result.reports)
        width = std::max(width, r.subject_id.size());
    auto cell = [] (const std::map<std::string, std::int64_t> & m, const char * key) {
        auto it = m.find(key);
        return it == m.end() ? std::string("-") : std::to_string(it->second);
    };
    out << std::string(width - 7, ' ') << "subject  verdict    lhs  rhs\n";
    for (const auto & r : result.reports) {
        std::string verdict = to_string(r.verdict);
        out << std::string(width - r.subject_id.size(), ' ') << r.subject_id << "  " << verdict
            << std::string(9 - std::min<std::size_t>(9, verdict.size()), ' ')
            << " " << cell(r.computed, "lhs") << "    " << cell(r.computed, "rhs") << '\n';
    }
    return out.str();
}

} // namespace kdefect
