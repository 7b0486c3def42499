#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdefect {

using Vertex = int;
using Edge = std::vector<Vertex>;

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string & msg, int line);
    int line() const noexcept { return _line; }

private:
    int _line;
};

class CapExceeded : public Error
{
public:
    using Error::Error;
};

class Timeout : public Error
{
public:
    Timeout() : Error("time limit exceeded") {}
};

/// Hypergraph over the ground set {1,...,n}.
///
/// Edges are nonempty, strictly increasing vertex lists; the edge list is kept
/// sorted lexicographically and free of duplicates, so two hypergraphs with the
/// same edge set compare equal structurally.
class Hypergraph
{
public:
    Hypergraph() = default;

    /// Validates and canonicalizes. Unsorted vertex lists are sorted; an edge
    /// with a repeated or out-of-range vertex, or an empty edge, is rejected.
    Hypergraph(int n, std::vector<Edge> edges);

    int order() const noexcept { return _n; }
    std::size_t size() const noexcept { return _edges.size(); }
    const std::vector<Edge> & edges() const noexcept { return _edges; }
    bool empty() const noexcept { return _edges.empty(); }

    bool contains(const Edge & e) const;
    bool is_graph() const;
    bool has_singleton_edge() const;

    friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

private:
    int _n = 0;
    std::vector<Edge> _edges;
};

struct StabilityKind
{
    enum class Mode { Stable, AlmostStable };
    Mode mode = Mode::Stable;
    int s = 1;

    static StabilityKind stable(int s);
    static StabilityKind almost_stable(int s);
};

/// Vertex coloring with colors 1..t, every color used.
class Coloring
{
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    std::size_t domain_size() const noexcept { return _colors.size(); }
    int colors_used() const noexcept { return _t; }
    int color_of(std::size_t index) const { return _colors.at(index); }
    const std::vector<int> & colors() const noexcept { return _colors; }

private:
    std::vector<int> _colors;
    int _t = 0;
};

enum class Verdict { Holds, Violated, Infeasible, Timeout };

std::string to_string(Verdict v);

struct Report
{
    std::string subject_id;
    std::map<std::string, std::int64_t> parameters;
    std::map<std::string, std::int64_t> computed;
    std::vector<std::string> certificates;
    std::vector<std::string> notes;
    Verdict verdict = Verdict::Holds;
};

// Stability predicates. Vertices are 1-indexed.
bool is_stable_pair(Vertex x, Vertex y, int n, int s);
bool is_stable_set(const Edge & e, int n, StabilityKind kind);

Hypergraph stable_subhypergraph(const Hypergraph & h, StabilityKind kind);

inline constexpr std::size_t default_kneser_cap = 20;

/// Explicit KG^r(H): vertex i is the i-th edge of H (canonical order, 1-indexed);
/// hyperedges are the r-sets of pairwise disjoint edges.
Hypergraph kneser_hypergraph(const Hypergraph & h, int r, std::size_t cap = default_kneser_cap);

struct InducedSubhypergraph
{
    Hypergraph graph;
    /// new vertex i (1-indexed) corresponds to original vertex original[i-1]
    std::vector<Vertex> original;
};

InducedSubhypergraph induced_subhypergraph(const Hypergraph & h, const std::vector<Vertex> & removed);

Hypergraph augment_with_fns(const Hypergraph & h, int s);

bool edges_disjoint(const Edge & a, const Edge & b);

} // namespace kdefect
