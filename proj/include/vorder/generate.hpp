// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>

namespace vorder {

struct WeightRange {
    Weight lo = 1;
    Weight hi = 1;
};

struct RandomGraphSpec {
    std::size_t n = 0;
    double p = 0.5;
    WeightRange weights{};
    std::uint64_t seed = 0;
    bool undirected = false;
};

/**
 * Erdős–Rényi style instance. Directed: every ordered pair (u,v), u != v,
 * independently with probability p. Undirected: every unordered pair.
 *
 * Only the raw std::mt19937_64 stream is used (no std distributions), so the
 * output is identical across standard library implementations.
 */
inline Digraph gen_random(const RandomGraphSpec &spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    if (spec.weights.lo < 0 || spec.weights.hi < spec.weights.lo)
        throw std::invalid_argument("weight range must satisfy 0 <= lo <= hi");

    std::mt19937_64 rng(spec.seed);
    const auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const auto span = static_cast<std::uint64_t>(spec.weights.hi - spec.weights.lo) + 1;
    const bool weighted = spec.weights.lo != 1 || spec.weights.hi != 1;

    std::vector<Arc> arcs;
    for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = 0; v < spec.n; ++v) {
            if (u == v || (spec.undirected && v < u)) continue;
            const bool take = uniform01() < spec.p;
            const Weight w = spec.weights.lo + static_cast<Weight>(rng() % span);
            if (take) arcs.push_back(Arc{u, v, w});
        }
    }
    return spec.undirected ? Digraph::undirected(spec.n, arcs, weighted)
                           : Digraph::directed(spec.n, std::move(arcs), weighted);
}

inline Digraph gen_random(std::size_t n, double p, WeightRange weights, std::uint64_t seed) {
    return gen_random(RandomGraphSpec{n, p, weights, seed, false});
}

}  // namespace vorder
