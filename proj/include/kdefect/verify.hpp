#pragma once

#include <kdefect/deadline.hpp>
#include <kdefect/hypergraph.hpp>
#include <kdefect/io.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kdefect {

// Conjecture checkers. Each computes both sides exactly:
//   frick:  chi(KG^r(G_{r-stable}))           >= ceil(cd^r(G) / (r-1))
//   jafari: chi(KG^r(G_{s-stable}))           >= ceil(ecd^s(G) / (r-1))
//   almost: chi(KG^r(G_{almost s-stable}))    >= ceil(cd^r(G) / (r-1))
// and reports lhs/rhs under "computed". Parameters outside the range a
// conjecture is stated for are accepted and flagged with an
// "extra-hypothesis" note.

Report check_frick(const Hypergraph & g, int r, const Deadline & deadline = {});
Report check_jafari(const Hypergraph & g, int r, int s, const Deadline & deadline = {});
Report check_almost(const Hypergraph & g, int r, int s, const Deadline & deadline = {});

enum class Conjecture { Frick, Jafari, Almost };

Conjecture parse_conjecture(const std::string & name);
std::string conjecture_name(Conjecture c);

Report check_conjecture(Conjecture c, const Hypergraph & g, int r, int s, const Deadline & deadline = {});

using TheoremParams = std::map<std::string, std::int64_t>;

/// Registered ids, in registry order.
std::vector<std::string> theorem_ids();

/// Replays one registered result. Unknown ids and parameters outside the
/// result's hypothesis raise InvalidArgument.
Report verify_theorem(const std::string & id, const TheoremParams & params, const Deadline & deadline = {});

enum class ScanMode { ExhaustiveFns, PaperFamilies, RandomHypergraphs };

struct IntRange
{
    int lo = 0;
    int hi = 0;
};

struct ScanSpec
{
    Conjecture conjecture = Conjecture::Frick;
    ScanMode mode = ScanMode::ExhaustiveFns;
    IntRange n{4, 10};
    IntRange r{2, 3};
    IntRange s{2, 3};
    IntRange l{1, 1};
    int samples = 100;
    std::uint64_t seed = 1;
    int max_edges = 8;
    int max_edge_size = 3;
    int max_n = 14;
    std::int64_t time_limit_ms = 60000;
    /// worker threads; 0 means hardware concurrency
    int jobs = 0;
};

struct ScanResult
{
    std::vector<Report> reports;

    int violated() const;
    int timeouts() const;
};

ScanSpec parse_scan_spec(const Json & j);
ScanResult scan(const ScanSpec & spec);

/// Summary line first (counts plus the violated subjects), then one line per report.
std::string write_json_lines(const ScanResult & result);
std::string write_table(const ScanResult & result);

} // namespace kdefect
