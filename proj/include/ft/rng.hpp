#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ft/graph.hpp"

namespace ft {

/// SplitMix64 stream; the documented generator behind every seeded
/// experiment, so runs reproduce bit-for-bit across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Erdos-Renyi style seeded random graph with a fixed edge count: a
/// partial Fisher-Yates over all vertex pairs.
Graph random_graph(int vertices, int edges, std::uint64_t seed);

/// A random locally injective vertex function (a random permutation of
/// 1..|V|, hence injective).
std::map<VertexId, double> random_injective_function(const Graph& g, std::uint64_t seed);

} // namespace ft
