#include <kdefect/sampling.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace kdefect {

int Rng::uniform(int lo, int hi)
{
    if (hi < lo)
        throw InvalidArgument("empty sampling range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do
        x = _engine();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
}

Hypergraph random_hypergraph(Rng & rng, int n, int max_edges, int max_edge_size,
        const std::function<bool(const Edge &)> & accept)
{
    int largest = std::min(max_edge_size, n);
    if (largest < 2 || max_edges < 1)
        return Hypergraph(std::max(n, 0), {});

    int wanted = rng.uniform(1, max_edges);
    std::set<Edge> edges;
    std::vector<Vertex> pool(n);
    for (int attempt = 0 ; attempt < 20 * wanted && static_cast<int>(edges.size()) < wanted ; ++attempt) {
        int k = rng.uniform(2, largest);
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0 ; i < k ; ++i)
            std::swap(pool[i], pool[rng.uniform(i, n - 1)]);
        Edge e(pool.begin(), pool.begin() + k);
        std::sort(e.begin(), e.end());
        if (accept && ! accept(e))
            continue;
        edges.insert(std::move(e));
    }
    return Hypergraph(n, {edges.begin(), edges.end()});
}

} // namespace kdefect
