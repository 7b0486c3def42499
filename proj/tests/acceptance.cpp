// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <kdefect/certificates.hpp>
#include <kdefect/constructions.hpp>
#include <kdefect/io.hpp>
#include <kdefect/sampling.hpp>
#include <kdefect/solvers.hpp>
#include <kdefect/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace kdefect;

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Collects the first few mismatches for the report line.
class Log
{
public:
    void fail(const std::string & what)
    {
        if (_count++ < 3)
            _text += (_text.empty() ? "" : "; ") + what;
    }

    bool ok() const { return _count == 0; }

    std::string summary() const
    {
        if (_count <= 3)
            return _text;
        return _text + "; +" + std::to_string(_count - 3) + " more";
    }

    std::string info;

private:
    int _count = 0;
    std::string _text;
};

std::string at(std::initializer_list<std::pair<const char *, int>> kv)
{
    std::string out = "(";
    bool first = true;
    for (auto [k, v] : kv) {
        out += (first ? "" : ",") + std::string(k) + "=" + std::to_string(v);
        first = false;
    }
    return out + ")";
}

void chi_formula(Log & log)
{
    int cases = 0;
    for (int s = 2 ; s <= 5 ; ++s)
        for (int n = 2 * s ; n <= 14 ; ++n) {
            ++cases;
            auto g = f_n_s(n, s);
            int chi = chromatic_number(g).value;
            int alpha = independence_number(g).size;
            if (chi != ceil_div(n, n / s))
                log.fail("chi" + at({{"n", n}, {"s", s}}) + "=" + std::to_string(chi));
            if (alpha != n / s)
                log.fail("alpha" + at({{"n", n}, {"s", s}}) + "=" + std::to_string(alpha));
        }
    log.info = std::to_string(cases) + " (n,s) pairs";
}

void block_colorings(Log & log)
{
    int cases = 0;
    for (int s = 2 ; s <= 6 ; ++s)
        for (int n = 2 * s ; n <= 30 ; ++n) {
            ++cases;
            auto c = block_coloring(n, s);
            std::string why;
            if (! is_proper_vertex_coloring(f_n_s(n, s), c, &why))
                log.fail(at({{"n", n}, {"s", s}}) + ": " + why);
            if (c.colors_used() != ceil_div(n, n / s))
                log.fail(at({{"n", n}, {"s", s}}) + " uses " + std::to_string(c.colors_used()) + " colors");
        }
    log.info = std::to_string(cases) + " (n,s) pairs";
}

void frick_replays(Log & log)
{
    auto a = check_frick(complete_uniform(8, 3), 3);
    if (a.verdict != Verdict::Violated || a.computed["lhs"] != 0 || a.computed["rhs"] != 1)
        log.fail("complete_uniform(8,3): " + to_string(a.verdict) + " lhs=" + std::to_string(a.computed["lhs"])
                + " rhs=" + std::to_string(a.computed["rhs"]));

    auto b = check_frick(frick_gap_graph(3, 1), 3);
    if (b.verdict != Verdict::Violated || b.computed["lhs"] != 1 || b.computed["rhs"] < 2)
        log.fail("frick_gap_graph(3,1): " + to_string(b.verdict) + " lhs=" + std::to_string(b.computed["lhs"])
                + " rhs=" + std::to_string(b.computed["rhs"]));
    log.info = "cd^3(n=15)=" + std::to_string(b.computed["cd"]);
}

void jafari_replays(Log & log)
{
    auto a = check_jafari(jafari_counterexample(2, 2, 1), 2, 2);
    if (a.verdict != Verdict::Violated || a.computed["lhs"] != 1 || a.computed["rhs"] != 2
            || a.computed["cd"] != 2 || a.computed["ecd"] != 2)
        log.fail("jafari_counterexample(2,2,1): lhs=" + std::to_string(a.computed["lhs"]) + " rhs="
                + std::to_string(a.computed["rhs"]) + " cd=" + std::to_string(a.computed["cd"]) + " ecd="
                + std::to_string(a.computed["ecd"]));

    auto b = check_jafari(complete_uniform(5, 2), 2, 3);
    if (b.verdict != Verdict::Violated || b.computed["lhs"] != 0 || b.computed["rhs"] < 1)
        log.fail("complete_uniform(5,2): lhs=" + std::to_string(b.computed["lhs"]) + " rhs="
                + std::to_string(b.computed["rhs"]));
}

void r_ge_s(Log & log)
{
    int cases = 0;
    for (int s = 2 ; s <= 5 ; ++s)
        for (int r = s ; r <= 5 ; ++r)
            for (int n = std::max(2, s) ; n <= 14 ; ++n) {
                ++cases;
                auto g = f_n_s(n, s);
                std::string why;
                if (! validate_defect_certificate(g, r, residue_defect_witness(n, s, r), &why))
                    log.fail("witness" + at({{"n", n}, {"s", s}, {"r", r}}) + ": " + why);
                int cd = colorability_defect(g, r, false).value;
                if (cd > s - 1 || ceil_div(cd, r - 1) > 1)
                    log.fail("cd" + at({{"n", n}, {"s", s}, {"r", r}}) + "=" + std::to_string(cd));
            }
    log.info = std::to_string(cases) + " (n,r,s) triples";
}

void direct_rs(Log & log)
{
    auto rep = verify_theorem("direct-rs", {{"s", 4}});
    if (rep.verdict != Verdict::Holds || rep.computed["kneser_chi"] != 0 || rep.computed["rhs"] != 1
            || rep.computed["n"] != 11 || rep.computed["r"] != 5)
        log.fail(write_json_line(rep));
    log.info = "cd^5(F_11^4)=" + std::to_string(rep.computed["cd"]);
}

void restriction(Log & log)
{
    int checked = 0;
    for (int n = 6 ; n <= 8 ; ++n)
        for (int s = 2 ; s <= 3 ; ++s) {
            auto fns = f_n_s(n, s);
            int reference[4] = {0, 0, colorability_defect(fns, 2, false).value, colorability_defect(fns, 3, false).value};
            Rng rng(1000 + 10 * n + s);
            for (int i = 0 ; i < 50 ; ++i) {
                auto h = random_hypergraph(rng, n, 8, 4,
                        [&] (const Edge & e) { return ! is_stable_set(e, n, StabilityKind::stable(s)); });
                if (! stable_subhypergraph(h, StabilityKind::stable(s)).empty())
                    log.fail("sample has an s-stable edge");
                auto aug = augment_with_fns(h, s);
                for (int r = 2 ; r <= 3 ; ++r) {
                    ++checked;
                    int value = colorability_defect(aug, r, false).value;
                    if (value != reference[r])
                        log.fail(at({{"n", n}, {"s", s}, {"r", r}, {"i", i}}) + ": " + std::to_string(value)
                                + " vs " + std::to_string(reference[r]));
                }
            }
        }
    log.info = std::to_string(checked) + " comparisons";
}

void gap_le_1(Log & log)
{
    int gaps[2] = {0, 0};
    for (auto [r, s] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
        Rng rng(2000 + 10 * r + s);
        for (int i = 0 ; i < 100 ; ++i) {
            auto g = random_hypergraph(rng, rng.uniform(2, 7), 8, 4);
            auto stable_part = stable_subhypergraph(g, StabilityKind::stable(s));
            auto almost_part = stable_subhypergraph(g, StabilityKind::almost_stable(s));
            auto stable = kneser_chromatic_number(stable_part, r);
            auto almost = kneser_chromatic_number(almost_part, r);
            int gap = almost.value - stable.value;
            if (gap != 0 && gap != 1)
                log.fail(at({{"r", r}, {"s", s}, {"i", i}}) + " gap " + std::to_string(gap));
            else
                ++gaps[gap];
            auto ext = extend_coloring_to_almost_stable(g, r, s, stable.coloring);
            std::string why;
            if (! validate_kneser_coloring(almost_part, r, ext, &why))
                log.fail(at({{"r", r}, {"s", s}, {"i", i}}) + " extension: " + why);
            if (ext.classes_used() > stable.value + 1)
                log.fail(at({{"r", r}, {"s", s}, {"i", i}}) + " extension uses too many classes");
        }
    }
    log.info = "gap 0: " + std::to_string(gaps[0]) + ", gap 1: " + std::to_string(gaps[1]);
}

void cross_validation(Log & log)
{
    Rng rng(3000);
    int bound_checks = 0;
    for (int i = 0 ; i < 200 ; ++i) {
        auto h = random_hypergraph(rng, rng.uniform(2, 6), 8, 4);
        for (int r = 2 ; r <= 3 ; ++r) {
            int direct = kneser_chromatic_number(h, r).value;
            int explicit_chi = chromatic_number(kneser_hypergraph(h, r)).value;
            if (direct != explicit_chi)
                log.fail("instance " + std::to_string(i) + " r=" + std::to_string(r) + ": " + std::to_string(direct)
                        + " vs explicit " + std::to_string(explicit_chi));
            int cd = colorability_defect(h, r, false).value;
            int ecd = colorability_defect(h, r, true).value;
            if (ecd < cd)
                log.fail("instance " + std::to_string(i) + " ecd < cd");
            if (! h.has_singleton_edge()) {
                ++bound_checks;
                if (direct < ceil_div(ecd, r - 1))
                    log.fail("instance " + std::to_string(i) + " lower bound fails at r=" + std::to_string(r));
            }
        }
    }
    log.info = "200 instances, " + std::to_string(bound_checks) + " bound checks";
}

void determinism(Log & log)
{
    std::vector<ScanSpec> specs;
    for (auto c : {Conjecture::Frick, Conjecture::Jafari, Conjecture::Almost}) {
        ScanSpec random;
        random.conjecture = c;
        random.mode = ScanMode::RandomHypergraphs;
        random.n = {3, 7};
        random.samples = 40;
        random.seed = 7;
        specs.push_back(random);

        ScanSpec exhaustive;
        exhaustive.conjecture = c;
        exhaustive.n = {4, 10};
        specs.push_back(exhaustive);

        ScanSpec families;
        families.conjecture = c;
        families.mode = ScanMode::PaperFamilies;
        families.r = {2, 3};
        families.s = {2, 2};
        families.l = {1, 2};
        specs.push_back(families);
    }
    std::size_t bytes = 0;
    for (auto spec : specs) {
        spec.jobs = 1;
        auto first = write_json_lines(scan(spec));
        auto second = write_json_lines(scan(spec));
        spec.jobs = 3;
        auto threaded = write_json_lines(scan(spec));
        if (first != second || first != threaded)
            log.fail("scan output differs for conjecture " + conjecture_name(spec.conjecture));
        bytes += first.size();
    }
    log.info = std::to_string(specs.size()) + " scans, " + std::to_string(bytes) + " bytes compared";
}

struct Criterion
{
    int id;
    const char * title;
    double budget_seconds;
    std::function<void(Log &)> run;
};

}

int main()
{
    const std::vector<Criterion> criteria{
        {1, "chromatic and independence numbers of F_n^s match the formula", 120, chi_formula},
        {2, "block coloring is proper with the formula's color count", 10, block_colorings},
        {3, "Frick violation replays", 300, frick_replays},
        {4, "Jafari violation replays", 60, jafari_replays},
        {5, "r >= s: residue witness and cd^r(F_n^s) <= s-1", 300, r_ge_s},
        {6, "direct-rs theorem at s=4", 60, direct_rs},
        {7, "restriction lemma on seeded random hypergraphs", 300, restriction},
        {8, "almost-stable minus stable Kneser chromatic number is 0 or 1", 300, gap_le_1},
        {9, "solver cross-validation and the equitable-defect lower bound", 600, cross_validation},
        {10, "scan output is byte-identical across reruns", 120, determinism},
    };

    int failed = 0;
    for (const auto & c : criteria) {
        Log log;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(log);
        }
        catch (const std::exception & e) {
            log.fail(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds)
            log.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");

        bool pass = log.ok();
        failed += pass ? 0 : 1;
        std::printf("%s criterion %d: %s [%.2f s]%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                log.info.empty() ? "" : " -- ", log.info.c_str());
        if (! pass)
            std::printf("     %s\n", log.summary().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
