#include <doctest.h>

#include <kdefect/certificates.hpp>
#include <kdefect/constructions.hpp>
#include <kdefect/io.hpp>
#include <kdefect/sampling.hpp>
#include <kdefect/solvers.hpp>
#include <kdefect/verify.hpp>

using namespace kdefect;

namespace {

std::int64_t lhs(const Report & r) { return r.computed.at("lhs"); }
std::int64_t rhs(const Report & r) { return r.computed.at("rhs"); }

bool has_note(const Report & r, const std::string & fragment)
{
    for (const auto & n : r.notes)
        if (n.find(fragment) != std::string::npos)
            return true;
    return false;
}

// Re-validates every certificate attached to a conjecture report.
void revalidate(const Report & rep, const Hypergraph & g, int r, const Hypergraph & part, int parts)
{
    bool saw_defect = false, saw_kneser = false, saw_graph = false;
    for (const auto & text : rep.certificates) {
        auto j = Json::parse(text);
        if (j["kind"] == "defect") {
            DefectCertificate c{j["removed"].get<std::vector<Vertex>>(),
                j["parts"].get<std::vector<std::vector<Vertex>>>(), j["equitable"].get<bool>()};
            CHECK(validate_defect_certificate(g, parts, c));
            saw_defect = true;
        }
        else if (j["kind"] == "kneser-coloring") {
            KneserColoring k;
            k.r = j["r"].get<int>();
            for (const auto & cls : j["classes"])
                k.classes.push_back({cls["edges"].get<std::vector<Edge>>(), cls["witness"].get<std::vector<Edge>>()});
            CHECK(validate_kneser_coloring(part, r, k));
            saw_kneser = true;
        }
        else if (j["kind"] == "hypergraph") {
            j.erase("kind");
            CHECK(parse_hypergraph_json(j.dump()) == g);
            saw_graph = true;
        }
    }
    CHECK(saw_defect);
    CHECK(saw_kneser);
    CHECK(saw_graph == (rep.verdict == Verdict::Violated));
}

TheoremParams params(std::initializer_list<std::pair<const std::string, std::int64_t>> kv)
{
    return TheoremParams(kv);
}

}

TEST_SUITE("verify") {

TEST_CASE("frick checker examples")
{
    auto k83 = complete_uniform(8, 3);
    auto a = check_frick(k83, 3);
    CHECK(a.verdict == Verdict::Violated);
    CHECK(lhs(a) == 0);
    CHECK(rhs(a) == 1);
    revalidate(a, k83, 3, stable_subhypergraph(k83, StabilityKind::stable(3)), 3);

    auto gap = frick_gap_graph(3, 1);
    auto b = check_frick(gap, 3);
    CHECK(b.verdict == Verdict::Violated);
    CHECK(lhs(b) == 1);
    CHECK(rhs(b) >= 2);
    revalidate(b, gap, 3, stable_subhypergraph(gap, StabilityKind::stable(3)), 3);

    auto c = check_frick(Hypergraph(6, {}), 3);
    CHECK(c.verdict == Verdict::Holds);
    CHECK(lhs(c) == 0);
    CHECK(rhs(c) == 0);
    CHECK_FALSE(has_note(c, "extra-hypothesis"));

    CHECK(has_note(check_frick(Hypergraph(6, {}), 2), "extra-hypothesis"));
    CHECK_THROWS_AS(check_frick(Hypergraph(6, {}), 1), InvalidArgument);
}

TEST_CASE("jafari checker examples")
{
    auto jce = jafari_counterexample(2, 2, 1);
    auto a = check_jafari(jce, 2, 2);
    CHECK(a.verdict == Verdict::Violated);
    CHECK(lhs(a) == 1);
    CHECK(rhs(a) == 2);
    CHECK(a.computed.at("cd") == 2);
    CHECK(a.computed.at("ecd") == 2);
    revalidate(a, jce, 2, stable_subhypergraph(jce, StabilityKind::stable(2)), 2);

    auto k52 = complete_uniform(5, 2);
    auto b = check_jafari(k52, 2, 3);
    CHECK(b.verdict == Verdict::Violated);
    CHECK(lhs(b) == 0);
    CHECK(rhs(b) >= 1);
    CHECK_FALSE(has_note(b, "extra-hypothesis"));

    for (auto [r, s] : {std::pair{2, 2}, {3, 3}, {2, 5}}) {
        auto c = check_jafari(Hypergraph(7, {}), r, s);
        CHECK(c.verdict == Verdict::Holds);
        CHECK(lhs(c) == 0);
        CHECK(rhs(c) == 0);
    }
    CHECK(has_note(check_jafari(Hypergraph(7, {}), 3, 2), "extra-hypothesis"));
}

TEST_CASE("almost-stable checker examples")
{
    auto a = check_almost(f_n_s(7, 2), 2, 2);
    CHECK(a.verdict == Verdict::Holds);

    auto k83 = complete_uniform(8, 3);
    auto b = check_almost(k83, 3, 3);
    CHECK(b.verdict == Verdict::Holds);
    CHECK(lhs(b) >= 1);
    CHECK(b.computed.at("almost_edges") > 0);
    revalidate(b, k83, 3, stable_subhypergraph(k83, StabilityKind::almost_stable(3)), 3);

    auto c = check_almost(Hypergraph(5, {}), 3, 2);
    CHECK(c.verdict == Verdict::Holds);
    CHECK(lhs(c) == 0);
    CHECK(rhs(c) == 0);
    CHECK(has_note(check_almost(Hypergraph(5, {}), 2, 3), "extra-hypothesis"));
}

TEST_CASE("jafari rhs dominates frick rhs at s = r")
{
    Rng rng(99);
    for (int i = 0 ; i < 40 ; ++i) {
        auto g = random_hypergraph(rng, rng.uniform(2, 7), 6, 3);
        for (int r = 2 ; r <= 3 ; ++r) {
            auto f = check_frick(g, r);
            auto j = check_jafari(g, r, r);
            CHECK(lhs(f) == lhs(j));
            CHECK(rhs(j) >= rhs(f));
            if (j.computed.at("ecd") == f.computed.at("cd"))
                CHECK(f.verdict == j.verdict);
        }
    }
}

TEST_CASE("conjecture dispatch")
{
    CHECK(parse_conjecture("almost") == Conjecture::Almost);
    CHECK(conjecture_name(Conjecture::Jafari) == "jafari");
    CHECK_THROWS_AS(parse_conjecture("lovasz"), InvalidArgument);
    auto rep = check_conjecture(Conjecture::Frick, complete_uniform(8, 3), 3, 99);
    CHECK(rep.subject_id == "frick");
    CHECK(rep.verdict == Verdict::Violated);
}

TEST_CASE("expired deadline becomes a Timeout verdict")
{
    auto expired = Deadline::after(std::chrono::milliseconds(0));
    auto rep = check_frick(f_n_s(40, 7), 6, expired);
    CHECK(rep.verdict == Verdict::Timeout);
}

TEST_CASE("theorem registry")
{
    auto ids = theorem_ids();
    CHECK(ids == std::vector<std::string>{"trivial-example", "r-ge-s-nonexistence", "direct-rs", "inverse-rs",
            "freers1", "jafari-ce", "frick-gap", "restriction-lemma", "chi-fns", "alpha-fns", "gap-le-1",
            "finiteness"});
    CHECK_THROWS_AS(verify_theorem("nope", {}), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem("chi-fns", params({{"n", 11}})), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem("chi-fns", params({{"n", 11}, {"s", 3}, {"x", 1}})), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem("chi-fns", params({{"n", 5}, {"s", 3}})), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem("r-ge-s-nonexistence", params({{"n", 10}, {"r", 2}, {"s", 3}})), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem("finiteness", params({{"n", 5}, {"r", 4}, {"s", 3}})), InvalidArgument);
}

TEST_CASE("theorem examples")
{
    auto direct = verify_theorem("direct-rs", params({{"s", 4}}));
    CHECK(direct.verdict == Verdict::Holds);
    CHECK(direct.subject_id == "theorem:direct-rs");
    CHECK(direct.computed.at("r") == 5);
    CHECK(direct.computed.at("n") == 11);
    CHECK(direct.computed.at("kneser_chi") == 0);
    CHECK(direct.computed.at("cd") >= 1);
    CHECK(direct.computed.at("cd") <= 3);
    CHECK(direct.computed.at("rhs") == 1);

    auto chi = verify_theorem("chi-fns", params({{"n", 11}, {"s", 3}}));
    CHECK(chi.verdict == Verdict::Holds);
    CHECK(chi.computed.at("solver") == 4);
    CHECK(chi.computed.at("formula") == 4);

    auto nonexist = verify_theorem("r-ge-s-nonexistence", params({{"n", 10}, {"r", 4}, {"s", 3}}));
    CHECK(nonexist.verdict == Verdict::Holds);
    CHECK(nonexist.computed.at("cd") <= 2);
    CHECK(nonexist.computed.at("rhs") <= 1);
}

TEST_CASE("every registered theorem holds on small parameters")
{
    const std::vector<std::pair<std::string, TheoremParams>> cases{
        {"trivial-example", params({{"r", 3}, {"s", 3}})},
        {"trivial-example", params({{"r", 2}, {"s", 4}})},
        {"r-ge-s-nonexistence", params({{"n", 9}, {"r", 3}, {"s", 2}})},
        {"direct-rs", params({{"s", 5}})},
        {"direct-rs", params({{"s", 7}})},
        {"inverse-rs", params({{"s", 4}})},
        {"freers1", params({{"r", 2}, {"s", 2}, {"l", 2}})},
        {"freers1", params({{"r", 3}, {"s", 3}, {"l", 2}})},
        {"jafari-ce", params({{"r", 2}, {"s", 2}, {"l", 2}})},
        {"jafari-ce", params({{"r", 3}, {"s", 2}, {"l", 1}})},
        {"frick-gap", params({{"r", 3}, {"l", 1}})},
        {"frick-gap", params({{"r", 2}, {"l", 2}})},
        {"restriction-lemma", params({{"n", 7}, {"s", 2}, {"r", 2}, {"samples", 20}})},
        {"chi-fns", params({{"n", 13}, {"s", 4}})},
        {"alpha-fns", params({{"n", 13}, {"s", 4}})},
        {"gap-le-1", params({{"r", 3}, {"s", 2}, {"samples", 30}})},
        {"finiteness", params({{"n", 12}, {"r", 5}, {"s", 4}})},
    };
    for (const auto & [id, p] : cases) {
        CAPTURE(id);
        auto rep = verify_theorem(id, p);
        CHECK(rep.verdict == Verdict::Holds);
        for (const auto & note : rep.notes)
            CHECK(note.find("claim failed") == std::string::npos);
    }
}

TEST_CASE("jafari-ce with l = 1 is flagged")
{
    auto rep = verify_theorem("jafari-ce", params({{"r", 2}, {"s", 2}, {"l", 1}}));
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(has_note(rep, "outside the stated theorem hypothesis"));
    CHECK(rep.computed.at("kneser_chi") == 1);
    CHECK(rep.computed.at("cd") >= 2);
}

TEST_CASE("inverse-rs finds hits only inside the range")
{
    auto rep = verify_theorem("inverse-rs", params({{"s", 5}}));
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.computed.at("out_of_range_hits") == 0);
    CHECK(rep.computed.at("hits") >= 1);
}

TEST_CASE("scan spec parsing")
{
    auto spec = parse_scan_spec(Json::parse(
            R"({"conjecture": "jafari", "mode": "paper-families", "r": 2, "s": [2, 3], "l": [1, 2], "seed": 5})"));
    CHECK(spec.conjecture == Conjecture::Jafari);
    CHECK(spec.mode == ScanMode::PaperFamilies);
    CHECK(spec.r.lo == 2);
    CHECK(spec.r.hi == 2);
    CHECK(spec.s.hi == 3);
    CHECK(spec.seed == 5);
    CHECK_THROWS_AS(parse_scan_spec(Json::parse(R"({"mode": "grid"})")), InvalidArgument);
    CHECK_THROWS_AS(parse_scan_spec(Json::parse(R"({"n": [5, 4]})")), InvalidArgument);
    CHECK_THROWS_AS(parse_scan_spec(Json::parse(R"({"bogus": 1})")), InvalidArgument);
    CHECK_THROWS_AS(parse_scan_spec(Json::parse(R"({"n": "5"})")), InvalidArgument);
}

TEST_CASE("exhaustive frick scan flags exactly the positive defects")
{
    ScanSpec spec;
    spec.conjecture = Conjecture::Frick;
    spec.mode = ScanMode::ExhaustiveFns;
    spec.n = {4, 12};
    spec.r = {3, 4};
    auto result = scan(spec);
    CHECK(result.reports.size() == 18);
    for (const auto & rep : result.reports) {
        CAPTURE(rep.subject_id);
        CHECK(rep.computed.at("stable_edges") == 0);
        CHECK(lhs(rep) == 0);
        CHECK((rep.verdict == Verdict::Violated) == (rep.computed.at("cd") > 0));
    }
    CHECK(result.violated() == 12);
}

TEST_CASE("jafari counterexample family scan")
{
    ScanSpec spec;
    spec.conjecture = Conjecture::Jafari;
    spec.mode = ScanMode::PaperFamilies;
    spec.r = {2, 2};
    spec.s = {2, 2};
    spec.l = {1, 2};
    auto result = scan(spec);
    CHECK(result.reports.size() == 2);
    CHECK(result.violated() == 2);
}

TEST_CASE("random almost-stable scan")
{
    ScanSpec spec;
    spec.conjecture = Conjecture::Almost;
    spec.mode = ScanMode::RandomHypergraphs;
    spec.n = {2, 7};
    spec.r = {2, 2};
    spec.s = {2, 2};
    spec.samples = 100;
    spec.seed = 7;
    auto result = scan(spec);
    CHECK(result.reports.size() == 100);
    CHECK(result.violated() == 0);
    CHECK(result.timeouts() == 0);
}

TEST_CASE("scan output is deterministic and independent of the worker count")
{
    ScanSpec spec;
    spec.conjecture = Conjecture::Jafari;
    spec.mode = ScanMode::RandomHypergraphs;
    spec.n = {3, 7};
    spec.r = {2, 3};
    spec.s = {2, 3};
    spec.samples = 15;
    spec.seed = 3;
    spec.jobs = 1;
    auto one = write_json_lines(scan(spec));
    spec.jobs = 4;
    auto four = write_json_lines(scan(spec));
    CHECK(one == four);
    CHECK(one == write_json_lines(scan(spec)));
    spec.seed = 4;
    CHECK(one != write_json_lines(scan(spec)));
}

TEST_CASE("scan summary line comes first")
{
    ScanSpec spec;
    spec.conjecture = Conjecture::Frick;
    spec.n = {6, 7};
    spec.r = {3, 3};
    auto text = write_json_lines(scan(spec));
    auto first = Json::parse(text.substr(0, text.find('\n')));
    CHECK(first["schema"] == 1);
    CHECK(first["kind"] == "scan-summary");
    CHECK(first["total"] == 2);
    CHECK(first["violated"] == 1);
    CHECK(first["violations"] == Json::array({"frick fns(n=7,s=3)"}));
    CHECK(write_table(scan(spec)).find("VIOLATED frick fns(n=7,s=3)") != std::string::npos);
}

TEST_CASE("scan limits")
{
    ScanSpec spec;
    spec.n = {4, 20};
    CHECK_THROWS_AS(scan(spec), InvalidArgument);
    spec.max_n = 20;
    spec.n = {19, 20};
    spec.r = {3, 3};
    CHECK_NOTHROW(scan(spec));

    ScanSpec big;
    big.mode = ScanMode::PaperFamilies;
    big.conjecture = Conjecture::Jafari;
    big.r = {3, 3};
    big.s = {3, 3};
    big.l = {3, 3};
    CHECK_THROWS_AS(scan(big), InvalidArgument);
}

}
