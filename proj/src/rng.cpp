#include "ft/rng.hpp"

#include <stdexcept>

namespace ft {

Graph random_graph(int vertices, int edges, std::uint64_t seed) {
    std::vector<std::pair<VertexId, VertexId>> pool;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) pool.push_back({i, j});
    if (edges > static_cast<int>(pool.size()))
        throw std::invalid_argument("random_graph: too many edges requested");
    SplitMix64 rng(seed);
    for (int k = 0; k < edges; ++k) {
        size_t pick = k + rng.below(pool.size() - k);
        std::swap(pool[k], pool[pick]);
    }
    pool.resize(edges);
    std::vector<VertexId> vs(vertices);
    for (int i = 0; i < vertices; ++i) vs[i] = i;
    return Graph(vs, pool);
}

std::map<VertexId, double> random_injective_function(const Graph& g, std::uint64_t seed) {
    std::vector<VertexId> vs = g.vertices();
    SplitMix64 rng(seed);
    for (size_t k = 0; k + 1 < vs.size(); ++k) {
        size_t pick = k + rng.below(vs.size() - k);
        std::swap(vs[k], vs[pick]);
    }
    std::map<VertexId, double> f;
    for (size_t i = 0; i < vs.size(); ++i) f[vs[i]] = static_cast<double>(i + 1);
    return f;
}

} // namespace ft
