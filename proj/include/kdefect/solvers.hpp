#pragma once

#include <kdefect/deadline.hpp>
#include <kdefect/hypergraph.hpp>

#include <optional>
#include <vector>

namespace kdefect {

/// Removed vertex set plus an r-part partition of the rest; no hyperedge inside
/// the kept vertices lies within a single part.
struct DefectCertificate
{
    std::vector<Vertex> removed;
    std::vector<std::vector<Vertex>> parts;
    bool equitable = false;

    friend bool operator==(const DefectCertificate &, const DefectCertificate &) = default;
};

struct KneserClass
{
    std::vector<Edge> edges;
    /// a maximum pairwise-disjoint subfamily of `edges`
    std::vector<Edge> witness;
};

/// Partition of E(H) into classes, none containing r pairwise disjoint edges.
struct KneserColoring
{
    int r = 2;
    std::vector<KneserClass> classes;

    int classes_used() const { return static_cast<int>(classes.size()); }
};

struct MatchingResult
{
    int size = 0;
    std::vector<Edge> witness;
};

struct IndependenceResult
{
    int size = 0;
    std::vector<Vertex> witness;
};

struct ChromaticResult
{
    /// false iff the hypergraph has a singleton edge
    bool feasible = true;
    int value = 0;
    Coloring coloring;
};

struct DefectResult
{
    int value = 0;
    DefectCertificate certificate;
};

struct KneserResult
{
    int value = 0;
    KneserColoring coloring;
};

/// Thrown by colorability_defect when no removal set within the cap works.
/// Every removal size up to the cap has been refuted, so the defect is at
/// least `lower_bound`.
class RemovalCapExceeded : public CapExceeded
{
public:
    explicit RemovalCapExceeded(int lower_bound);
    int lower_bound() const noexcept { return _lower_bound; }

private:
    int _lower_bound;
};

// The solvers use 64-bit vertex masks; hypergraphs on more than 64 vertices are
// rejected with InvalidArgument.
inline constexpr int max_solver_vertices = 64;

MatchingResult matching_number(const Hypergraph & h, const Deadline & deadline = {});

std::optional<DefectCertificate> is_r_colorable(
        const Hypergraph & h, int r, bool equitable, const Deadline & deadline = {});

ChromaticResult chromatic_number(const Hypergraph & h, const Deadline & deadline = {});

IndependenceResult independence_number(const Hypergraph & g, const Deadline & deadline = {});

/// cd^r (or ecd^r when `equitable`). Removal sets are tried by size, then in
/// lexicographic order, so the returned certificate is deterministic.
DefectResult colorability_defect(
        const Hypergraph & h, int r, bool equitable,
        std::optional<int> max_removal = std::nullopt, const Deadline & deadline = {});

/// chi(KG^r(H)) computed on E(H) directly. Conventions: no edges gives 0, a
/// nonempty edge set without r pairwise disjoint edges gives 1.
KneserResult kneser_chromatic_number(const Hypergraph & h, int r, const Deadline & deadline = {});

/// Attaches a maximum-matching witness to each class of a raw edge partition.
KneserColoring make_kneser_coloring(int r, std::vector<std::vector<Edge>> classes);

} // namespace kdefect
