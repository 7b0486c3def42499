#pragma once

#include <kdefect/hypergraph.hpp>
#include <kdefect/solvers.hpp>

#include <string>
#include <vector>

namespace kdefect {

// Independent checkers. They work on plain edge lists and share no code with
// the solvers, so a returned witness is re-validated from scratch.

/// True iff some k edges of `edges` are pairwise disjoint (k = 0 is trivially true).
bool has_disjoint_family(const std::vector<Edge> & edges, int k);

bool is_proper_vertex_coloring(const Hypergraph & h, const Coloring & c, std::string * why = nullptr);

bool validate_defect_certificate(
        const Hypergraph & h, int r, const DefectCertificate & cert, std::string * why = nullptr);

bool validate_kneser_coloring(
        const Hypergraph & h, int r, const KneserColoring & coloring, std::string * why = nullptr);

} // namespace kdefect
