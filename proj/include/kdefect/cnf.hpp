#pragma once

#include <kdefect/hypergraph.hpp>
#include <kdefect/io.hpp>

#include <string>
#include <vector>

namespace kdefect {

/// What a CNF export encodes.
///   colorable: H has a (equitable) proper r-coloring
///   kneser:    E(H) splits into at most t classes, none with r pairwise disjoint edges
struct CnfTask
{
    enum class Kind { Colorable, Kneser };

    Kind kind = Kind::Colorable;
    int r = 2;
    int t = 1;
    bool equitable = false;
};

CnfTask parse_cnf_task(const Json & j);
Json to_json(const CnfTask & task);

struct CnfFormula
{
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    /// companion map: task, hypergraph and the meaning of each primary variable
    Json map;
};

CnfFormula encode(const Hypergraph & h, const CnfTask & task);
std::string write_dimacs(const CnfFormula & f);

/// Literals of a solver model. Accepts "v ..." lines or bare integers; "c"
/// lines are skipped and an "s UNSATISFIABLE" / "UNSAT" line sets `unsat`.
struct Model
{
    bool unsat = false;
    std::vector<int> literals;
};

Model parse_model(const std::string & text);

struct ModelCheck
{
    bool valid = false;
    std::string detail;
    /// decoded coloring or Kneser coloring when the model is valid
    Json certificate;
};

/// Decodes `model` through the map and validates the result with the
/// independent certificate checkers.
ModelCheck check_model(const Json & map, const Model & model);

} // namespace kdefect
