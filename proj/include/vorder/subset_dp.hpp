// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>
#include <vorder/limits.hpp>
#include <vorder/report.hpp>
#include <vorder/subset.hpp>

#include <limits>
#include <stdexcept>
#include <vector>

// Held-Karp style dynamic programs over prefix sets S (the vertices placed at
// positions 1..|S|):
//
//   fas:       f(S) = min_v f(S-v) + w(v -> S-v)          (v placed last)
//   ola:       f(S) = min_v f(S-v) + crossing(S)
//   cutwidth:  f(S) = max(min_v f(S-v), crossing(S))
//   dpw:       f(S) = max(min_v f(S-v), boundary(S))
//
// crossing(S) = w(V-S -> S), the cut paid at position |S|;
// boundary(S) = |{x in S : x has an in-neighbour outside S}|.
// Both are taken with respect to the graph the table is built on, so a
// capped table on G gives prefix values inside the whole of G.

namespace vorder {

namespace detail {

/// w(v -> S) or w(S -> v) in O(1) via two half-universe lookup tables.
class SubsetWeights {
public:
    SubsetWeights(const Digraph &g, bool outgoing) : n_(g.size()) {
        low_bits_ = (n_ + 1) / 2;
        const std::size_t high_bits = n_ - low_bits_;
        low_size_ = std::size_t{1} << low_bits_;
        high_size_ = std::size_t{1} << high_bits;
        low_.assign(n_ * low_size_, 0);
        high_.assign(n_ * high_size_, 0);
        std::vector<Weight> row(n_);
        for (Vertex v = 0; v < n_; ++v) {
            std::fill(row.begin(), row.end(), 0);
            for (const Arc &a : outgoing ? g.out_arcs(v) : g.in_arcs(v)) row[outgoing ? a.to : a.from] = a.weight;
            Weight *lo = &low_[v * low_size_];
            for (std::size_t m = 1; m < low_size_; ++m)
                lo[m] = lo[m & (m - 1)] + row[std::countr_zero(m)];
            Weight *hi = &high_[v * high_size_];
            for (std::size_t m = 1; m < high_size_; ++m)
                hi[m] = hi[m & (m - 1)] + row[low_bits_ + std::countr_zero(m)];
        }
    }

    Weight operator()(Vertex v, Subset s) const noexcept {
        const std::size_t lo = s & (low_size_ - 1);
        const std::size_t hi = low_bits_ >= 32 ? 0 : (s >> low_bits_);
        return low_[v * low_size_ + lo] + high_[v * high_size_ + hi];
    }

private:
    std::size_t n_;
    std::size_t low_bits_ = 0;
    std::size_t low_size_ = 1;
    std::size_t high_size_ = 1;
    std::vector<Weight> low_;
    std::vector<Weight> high_;
};

inline SubsetTable build_table(const Digraph &g, Objective objective, std::size_t size_cap) {
    const std::size_t n = g.size();
    if (n > kMaxUniverse) throw size_limit_error("subset tables support at most 32 vertices");
    if (size_cap > n) throw std::invalid_argument("size cap exceeds vertex count");

    SubsetTable table(objective, n, size_cap);
    const SubsetIndexer &index = table.indexer();
    const SubsetWeights out_w(g, true), in_w(g, false);

    // crossing(S) or boundary(S), same indexing as the table
    std::vector<Weight> aux(objective == Objective::fas ? 0 : index.slots(), 0);
    std::vector<Subset> in_mask(n, 0);
    for (const Arc &a : g.arcs()) in_mask[a.to] |= singleton(a.from);

    table.set(0, 0, SubsetTable::none);
    for (std::size_t k = 1; k <= size_cap; ++k) {
        for_each_subset_of_size(n, k, [&](Subset s) {
            const auto low = static_cast<Vertex>(std::countr_zero(s));
            const Subset rest = s & (s - 1);

            Weight local = 0;
            if (objective == Objective::ola || objective == Objective::cutwidth) {
                local = aux[index.index(rest)] - out_w(low, rest) + g.in_weight(low) - in_w(low, rest);
                aux[index.index(s)] = local;
            } else if (objective == Objective::dpw) {
                const Subset outside = ~s & full_set(n);
                local = aux[index.index(rest)] + ((in_mask[low] & outside) ? 1 : 0);
                for (const Arc &a : g.out_arcs(low))
                    if (contains(rest, a.to) && (in_mask[a.to] & outside) == 0) --local;
                aux[index.index(s)] = local;
            }

            Weight best = std::numeric_limits<Weight>::max();
            Vertex best_v = SubsetTable::none;
            for (Subset t = s; t; t &= t - 1) {
                const auto v = static_cast<Vertex>(std::countr_zero(t));
                const Subset without = s & ~singleton(v);
                Weight candidate = table.value(without);
                if (objective == Objective::fas) candidate += out_w(v, without);
                if (candidate < best) {
                    best = candidate;
                    best_v = v;
                }
            }

            Weight value = best;
            if (objective == Objective::ola) value = best + local;
            if (objective == Objective::cutwidth || objective == Objective::dpw) value = std::max(best, local);
            table.set(s, value, best_v);
        });
    }
    return table;
}

}  // namespace detail

/// value(S) = minimum weighted feedback arc set of G[S], |S| <= size_cap.
inline SubsetTable fas_table(const Digraph &g, std::size_t size_cap) {
    return detail::build_table(g, Objective::fas, size_cap);
}

inline SubsetTable ola_table(const Digraph &g, std::size_t size_cap) {
    return detail::build_table(g, Objective::ola, size_cap);
}

inline SubsetTable cutwidth_table(const Digraph &g, std::size_t size_cap) {
    return detail::build_table(g, Objective::cutwidth, size_cap);
}

/// Best max-prefix-boundary for each S placed as a prefix of the whole of G.
/// Arc weights are ignored.
inline SubsetTable dpw_prefix_table(const Digraph &g, std::size_t size_cap) {
    return detail::build_table(g, Objective::dpw, size_cap);
}

/// Exact optimum via the full table and last-vertex reconstruction.
inline SolveReport solve_exact(Objective objective, const Digraph &g) {
    if (g.size() > limits().max_exact_n)
        throw size_limit_error("exact solver limited to n <= " + std::to_string(limits().max_exact_n) +
                               " (got " + std::to_string(g.size()) + ")");
    const auto table = detail::build_table(g, objective, g.size());
    const Subset all = full_set(g.size());

    SolveReport report;
    report.objective = objective;
    report.value = table.value(all);
    report.ordering = Ordering::from_sequence(table.prefix_sequence(all));
    report.lower_bound = report.value;
    report.stats.table_entries = table.entries();
    if (evaluate(objective, g, report.ordering) != report.value)
        throw std::logic_error("subset DP reconstruction does not reproduce its value");
    return report;
}

inline SolveReport fas_exact(const Digraph &g) { return solve_exact(Objective::fas, g); }
inline SolveReport ola_exact(const Digraph &g) { return solve_exact(Objective::ola, g); }
inline SolveReport cutwidth_exact(const Digraph &g) { return solve_exact(Objective::cutwidth, g); }
inline SolveReport dpw_exact(const Digraph &g) { return solve_exact(Objective::dpw, g); }

}  // namespace vorder
