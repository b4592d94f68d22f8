// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>
#include <vorder/report.hpp>
#include <vorder/subset.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

// Directed minimum (k, n-k)-cut: a set L with |L| = k minimising the weight
// of arcs from V \ L into L.
//
// The exact solver fixes a tripartition V1, V2, V3, and for every split
// k = k1 + k2 + k3 builds a tripartite auxiliary graph with one node per
// k_i-subset of V_i. Node payload delta(A) is the weight of arcs inside V_i
// entering A; the edge between A (in V_i) and B (in V_j) carries
//
//     w(V_i \ A -> B) + w(V_j \ B -> A) + (delta(A) + delta(B)) / 2
//
// so a triangle (A1, A2, A3) weighs exactly the cut of L = A1 u A2 u A3.
// Stored weights are doubled to stay integral.

namespace vorder {

struct CutSolution {
    Subset side = 0;  ///< L
    std::size_t k = 0;
    Weight value = 0;

    std::vector<Vertex> vertices() const { return members(side); }
};

/// w(V \ L -> L).
inline Weight cut_value(const Digraph &g, Subset side) {
    Weight total = 0;
    for (Vertex v : members(side))
        for (const Arc &a : g.in_arcs(v))
            if (!contains(side, a.from)) total += a.weight;
    return total;
}

/// Sizes ceil(n/3), ceil((n - ceil(n/3)) / 2), remainder; consecutive
/// vertex indices.
inline std::array<Subset, 3> equitable_tripartition(std::size_t n) {
    const std::size_t s1 = (n + 2) / 3;
    const std::size_t s2 = (n - s1 + 1) / 2;
    const Subset all = full_set(n);
    const Subset p1 = full_set(s1);
    const Subset p2 = full_set(s1 + s2) & ~p1;
    return {p1, p2, all & ~(p1 | p2)};
}

/// Tripartite auxiliary graph for one split (k1, k2, k3).
struct AuxGraph {
    std::array<Subset, 3> parts{};
    std::array<std::size_t, 3> part_k{};
    /// Nodes per group: the k_i-subsets of parts[i], lexicographic order.
    std::array<std::vector<Subset>, 3> nodes;
    std::array<std::vector<Weight>, 3> delta;
    /// Doubled edge weights, row-major, for group pairs (0,1), (0,2), (1,2).
    std::array<std::vector<Weight>, 3> edges;

    std::size_t group_size(std::size_t i) const { return nodes[i].size(); }

    static constexpr std::size_t pair_index(std::size_t i, std::size_t j) { return i + j - 1; }

    /// Doubled weight of the edge between node a of group i and node b of
    /// group j (i < j).
    Weight edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
        return edges[pair_index(i, j)][a * nodes[j].size() + b];
    }

    Subset side_of(const std::array<std::size_t, 3> &triple) const {
        return nodes[0][triple[0]] | nodes[1][triple[1]] | nodes[2][triple[2]];
    }
};

inline AuxGraph build_aux_graph(const Digraph &g, const std::array<Subset, 3> &parts,
                                const std::array<std::size_t, 3> &part_k) {
    AuxGraph h;
    h.parts = parts;
    h.part_k = part_k;
    // w(X -> B) summed over heads in B
    const auto weight_into = [&g](Subset from, Subset into) {
        Weight total = 0;
        for (Vertex v : members(into))
            for (const Arc &a : g.in_arcs(v))
                if (contains(from, a.from)) total += a.weight;
        return total;
    };
    for (std::size_t i = 0; i < 3; ++i) {
        if (part_k[i] > cardinality(parts[i])) throw std::invalid_argument("part size exceeds part");
        h.nodes[i] = subsets_lex(parts[i], part_k[i]);
        for (Subset a : h.nodes[i]) h.delta[i].push_back(weight_into(parts[i] & ~a, a));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            auto &out = h.edges[AuxGraph::pair_index(i, j)];
            out.reserve(h.nodes[i].size() * h.nodes[j].size());
            for (std::size_t a = 0; a < h.nodes[i].size(); ++a) {
                const Subset sa = h.nodes[i][a];
                for (std::size_t b = 0; b < h.nodes[j].size(); ++b) {
                    const Subset sb = h.nodes[j][b];
                    const Weight cross = weight_into(parts[i] & ~sa, sb) + weight_into(parts[j] & ~sb, sa);
                    out.push_back(2 * cross + h.delta[i][a] + h.delta[j][b]);
                }
            }
        }
    }
    return h;
}

template <class W>
struct Triangle {
    std::array<std::size_t, 3> nodes{};
    W weight{};
    std::uint64_t examined = 0;
};

/// Minimum-weight triangle of a tripartite graph given by its three
/// row-major edge matrices; the lexicographically least triple wins ties.
/// Edge weights must be non-negative.
template <class W>
Triangle<W> min_weight_triangle(std::array<std::size_t, 3> sizes, std::span<const W> w01, std::span<const W> w02,
                                std::span<const W> w12) {
    if (sizes[0] == 0 || sizes[1] == 0 || sizes[2] == 0)
        throw std::logic_error("auxiliary graph has an empty group");
    Triangle<W> best;
    bool found = false;
    for (std::size_t a = 0; a < sizes[0]; ++a) {
        for (std::size_t b = 0; b < sizes[1]; ++b) {
            const W ab = w01[a * sizes[1] + b];
            if (found && !(ab < best.weight)) continue;
            const W *row_a = &w02[a * sizes[2]];
            const W *row_b = &w12[b * sizes[2]];
            for (std::size_t c = 0; c < sizes[2]; ++c) {
                ++best.examined;
                const W total = ab + row_a[c] + row_b[c];
                if (!found || total < best.weight) {
                    best.nodes = {a, b, c};
                    best.weight = total;
                    found = true;
                }
            }
        }
    }
    return best;
}

inline Triangle<Weight> min_weight_triangle(const AuxGraph &h) {
    return min_weight_triangle<Weight>({h.group_size(0), h.group_size(1), h.group_size(2)}, h.edges[0], h.edges[1],
                                       h.edges[2]);
}

namespace detail {

inline void check_cut_args(const Digraph &g, std::size_t k) {
    if (g.size() > kMaxUniverse) throw size_limit_error("(k, n-k)-cut supports at most 32 vertices");
    if (k > g.size()) throw std::out_of_range("k must lie in [0, n]");
}

/// Runs `solve_cell` for every feasible (k1, k2, k3) and keeps the best
/// (value, lexicographic L).
template <class Cell>
CutSolution best_over_splits(const Digraph &g, std::size_t k, SolveStats *stats, Cell &&solve_cell) {
    check_cut_args(g, k);
    const auto parts = equitable_tripartition(g.size());
    const std::size_t s1 = cardinality(parts[0]), s2 = cardinality(parts[1]), s3 = cardinality(parts[2]);
    CutSolution best;
    bool found = false;
    for (std::size_t k1 = 0; k1 <= std::min(k, s1); ++k1) {
        for (std::size_t k2 = 0; k2 <= std::min(k - k1, s2); ++k2) {
            const std::size_t k3 = k - k1 - k2;
            if (k3 > s3) continue;
            const AuxGraph h = build_aux_graph(g, parts, {k1, k2, k3});
            if (stats) stats->aux_nodes += h.group_size(0) + h.group_size(1) + h.group_size(2);
            const Subset side = solve_cell(h);
            const Weight value = cut_value(g, side);
            if (!found || value < best.value || (value == best.value && lex_less(side, best.side))) {
                best = CutSolution{side, k, value};
                found = true;
            }
        }
    }
    if (stats) ++stats->cut_calls;
    return best;
}

}  // namespace detail

/// Exact directed minimum (k, n-k)-cut; lexicographically least optimal L.
inline CutSolution dkmc_exact(const Digraph &g, std::size_t k, SolveStats *stats = nullptr) {
    return detail::best_over_splits(g, k, stats, [&](const AuxGraph &h) {
        const auto tri = min_weight_triangle(h);
        if (stats) stats->triangles += tri.examined;
        const Subset side = h.side_of(tri.nodes);
        if (tri.weight != 2 * cut_value(g, side))
            throw std::logic_error("auxiliary triangle weight does not match its cut");
        return side;
    });
}

/// Smallest power of base >= w (0 stays 0).
inline double round_up_to_power(Weight w, double base) {
    if (w == 0) return 0.0;
    const double log_base = std::log1p(base - 1.0);
    const double target = static_cast<double>(w);
    double e = std::ceil(std::log(target) / log_base);
    double r = std::exp(e * log_base);
    while (r < target) r = std::exp(++e * log_base);
    return r;
}

/**
 * (1+eps)-approximate (k, n-k)-cut. Every nonzero auxiliary edge weight is
 * rounded up to a power of (1 + eps/3); the minimum rounded triangle is
 * within a factor (1 + eps/3) of the optimum, and the returned value is the
 * true weight of the chosen L.
 */
inline CutSolution dkmc_weighted_approx(const Digraph &g, std::size_t k, double eps, SolveStats *stats = nullptr) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const double base = 1.0 + eps / 3.0;
    return detail::best_over_splits(g, k, stats, [&](const AuxGraph &h) {
        std::array<std::vector<double>, 3> rounded;
        for (std::size_t p = 0; p < 3; ++p) {
            rounded[p].reserve(h.edges[p].size());
            for (Weight w : h.edges[p]) rounded[p].push_back(round_up_to_power(w, base));
        }
        const auto tri = min_weight_triangle<double>({h.group_size(0), h.group_size(1), h.group_size(2)},
                                                     rounded[0], rounded[1], rounded[2]);
        if (stats) stats->triangles += tri.examined;
        return h.side_of(tri.nodes);
    });
}

/// Exhaustive reference: every k-subset, lexicographically least optimum.
inline CutSolution dkmc_oracle(const Digraph &g, std::size_t k) {
    detail::check_cut_args(g, k);
    constexpr std::uint64_t kMaxSubsets = 20'000'000;
    if (binomial(g.size(), k) > kMaxSubsets) throw size_limit_error("too many subsets for the cut oracle");
    CutSolution best;
    bool found = false;
    for (Subset side : subsets_lex(full_set(g.size()), k)) {
        const Weight value = cut_value(g, side);
        if (!found || value < best.value) {
            best = CutSolution{side, k, value};
            found = true;
        }
    }
    return best;
}

}  // namespace vorder
