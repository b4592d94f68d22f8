// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace vorder {

/// Work counters. All are deterministic for fixed inputs.
struct SolveStats {
    std::uint64_t table_entries = 0;    ///< subset-table cells filled
    std::uint64_t triangles = 0;        ///< auxiliary-graph triangles examined
    std::uint64_t aux_nodes = 0;        ///< auxiliary-graph nodes built
    std::uint64_t recursive_calls = 0;  ///< boosting-scheme invocations
    std::uint64_t cut_calls = 0;        ///< (k, n-k)-cut solves

    SolveStats &operator+=(const SolveStats &o) {
        table_entries += o.table_entries;
        triangles += o.triangles;
        aux_nodes += o.aux_nodes;
        recursive_calls += o.recursive_calls;
        cut_calls += o.cut_calls;
        return *this;
    }
};

struct SolveReport {
    Objective objective = Objective::fas;
    Weight value = 0;
    Ordering ordering;
    std::optional<Weight> lower_bound;
    SolveStats stats;
};

}  // namespace vorder
