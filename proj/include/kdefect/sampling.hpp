#pragma once

#include <kdefect/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <random>

namespace kdefect {

/// mt19937_64 plus a rejection-sampled bounded draw, so sequences are identical
/// on every standard library (std::uniform_int_distribution is not).
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    /// uniform in [lo, hi]
    int uniform(int lo, int hi);

private:
    std::mt19937_64 _engine;
};

/// Random hypergraph on [n]: up to `max_edges` distinct edges (at least one
/// requested), each of uniform size in [2, min(max_edge_size, n)] with uniform
/// vertices. Edges rejected by `accept` are redrawn, with a bounded number of
/// attempts, so the result may have fewer edges than requested.
Hypergraph random_hypergraph(Rng & rng, int n, int max_edges, int max_edge_size,
        const std::function<bool(const Edge &)> & accept = {});

} // namespace kdefect
