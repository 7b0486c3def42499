#pragma once

#include <kdefect/hypergraph.hpp>
#include <kdefect/solvers.hpp>

#include <map>
#include <string>
#include <vector>

namespace kdefect {

/// Graph on [n] whose edges are the pairs that are not s-stable.
Hypergraph f_n_s(int n, int s);

/// ceil(n / floor(n/s)), valid for s >= 2 and n >= 2s.
int fns_chromatic_formula(int n, int s);

/// Proper ceil(n/a)-coloring of F_n^s (a = floor(n/s)) built from repeated
/// color blocks: the long block uses all colors, the short one the first
/// floor(n/a). Long blocks come first.
Coloring block_coloring(int n, int s);

/// cd^r(F_n^s) <= s-1 witness: drop the top s-1 vertices, color the rest by
/// residue mod s (part i holds the vertices congruent to i+1), pad to r parts.
DefectCertificate residue_defect_witness(int n, int s, int r);

/// All r-subsets of [n].
Hypergraph complete_uniform(int n, int r);

struct DirectRsInstance
{
    Hypergraph graph;
    int n = 0;
    std::vector<int> r_range;
};

/// F_{3s-1}^s together with the arities s+1 .. s+ceil((s-3)/2).
DirectRsInstance directrs_graph(int s);

/// F_n^s with n = s(l+1)+1.
Hypergraph freers1_graph(int s, int l);

/// On [ls(rs-1)]: every s-subset of A = {ls, 2ls, ..., (rs-1)ls} plus every
/// non-s-stable pair. l = 1 is accepted although it lies outside the range the
/// construction is usually stated for.
Hypergraph jafari_counterexample(int r, int s, int l);

/// On [lr(2r-1)]: the non-r-stable pairs plus a clique on the 2r-1 multiples of lr.
Hypergraph frick_gap_graph(int r, int l);

/// Extends a Kneser coloring of the s-stable part of g to the almost-s-stable
/// part by putting every new edge in one fresh class (requires r >= s).
KneserColoring extend_coloring_to_almost_stable(const Hypergraph & g, int r, int s, const KneserColoring & base);

enum class Family { Fns, CompleteUniform, Trivial, DirectRS, Freers1, JafariCE, FrickGap };

struct FamilyParams
{
    Family family = Family::Fns;
    std::map<std::string, int> values;

    int get(const std::string & key) const;
};

Family parse_family(const std::string & name);
std::string family_name(Family f);

/// Validates the family's parameter ranges and builds the hypergraph.
Hypergraph generate(const FamilyParams & params);

} // namespace kdefect
