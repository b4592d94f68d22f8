// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/vorder.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace vorder::test {

/// Unweighted digraph from 1-based arc pairs.
inline Digraph digraph1(std::size_t n, std::initializer_list<std::pair<int, int>> arcs) {
    std::vector<Arc> list;
    for (auto [u, v] : arcs) list.push_back(Arc{Vertex(u - 1), Vertex(v - 1)});
    return Digraph::directed(n, list);
}

inline Digraph undirected1(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Arc> list;
    for (auto [u, v] : edges) list.push_back(Arc{Vertex(u - 1), Vertex(v - 1)});
    return Digraph::undirected(n, list);
}

/// Six vertices, two backward arcs under the identity order.
inline Digraph crossing_example() { return digraph1(6, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 6}, {6, 3}, {5, 2}}); }

/// Triangle 1-2-3 with a path 1-4-5-6 feeding back into 3.
inline Digraph triangle_with_tail() { return digraph1(6, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 6}, {6, 3}}); }

/// Two directed triangles joined by one-way arcs plus two back arcs.
inline Digraph two_triangles() {
    return digraph1(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {6, 2}, {6, 3}, {1, 4}, {1, 5},
                        {1, 6}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

inline Digraph cycle3() { return digraph1(3, {{1, 2}, {2, 3}, {3, 1}}); }

inline Digraph path(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back(Arc{v, v + 1});
    return Digraph::directed(n, arcs);
}

inline Digraph bidirected_complete(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) arcs.push_back(Arc{u, v});
    return Digraph::directed(n, arcs);
}

/// Seeded random digraph; weights in [1, wmax] (unweighted when wmax = 1).
inline Digraph random_digraph(std::size_t n, double p, Weight wmax, std::uint64_t seed) {
    return gen_random(RandomGraphSpec{n, p, WeightRange{1, wmax}, seed, false});
}

inline Digraph random_undirected(std::size_t n, double p, Weight wmax, std::uint64_t seed) {
    return gen_random(RandomGraphSpec{n, p, WeightRange{1, wmax}, seed, true});
}

inline std::vector<Vertex> seq1(std::initializer_list<int> vertices) {
    std::vector<Vertex> out;
    for (int v : vertices) out.push_back(Vertex(v - 1));
    return out;
}

}  // namespace vorder::test
