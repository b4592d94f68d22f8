// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>
#include <vorder/limits.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace vorder {

struct OracleResult {
    Objective objective = Objective::fas;
    Weight opt = 0;
    /// Lexicographically least optimal vertex sequence.
    Ordering ordering;
    std::uint64_t optimal_count = 0;
};

/// Exhaustive optimum over all n! orderings, using the plain evaluators.
inline OracleResult perm_opt(const Digraph &g, Objective objective) {
    const std::size_t n = g.size();
    if (n > limits().max_oracle_n)
        throw size_limit_error("permutation oracle limited to n <= " + std::to_string(limits().max_oracle_n) +
                               " (got " + std::to_string(n) + ")");
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    OracleResult result;
    result.objective = objective;
    bool first = true;
    do {
        const Ordering pi = Ordering::from_sequence(seq);
        const Weight value = evaluate(objective, g, pi);
        if (first || value < result.opt) {
            result.opt = value;
            result.ordering = pi;
            result.optimal_count = 1;
            first = false;
        } else if (value == result.opt) {
            ++result.optimal_count;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return result;
}

}  // namespace vorder
