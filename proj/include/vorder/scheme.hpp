// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/balanced.hpp>
#include <vorder/equations.hpp>
#include <vorder/limits.hpp>
#include <vorder/subset_dp.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

// Self-improving FAS scheme. Level 1 is the balanced-cut approximation
// (factor 2 unweighted, 3 weighted). Level k+1 enumerates every prefix set
// V' of size round(alpha_k n), with alpha_k from the boosting ladder, and
// takes the best of
//
//     opt(G[V']) + w(V \ V' -> V') + solution(G[V \ V'])
//
// where the remainder is solved exactly for the V' with the lightest
// incoming weight and by level k for every other V'. One capped FAS table
// provides opt(G[V']) for all V' at once.
//
// If the lightest prefix cut is at most opt/(k+1) the exact split already
// meets the target; otherwise the first |V'| vertices of an optimal
// topological order leave a remainder of optimum at most k/(k+1) opt, whose
// level-k error is opt/(k+1). Hence 1 + 1/k (unweighted) and 1 + 2/k
// (weighted) for every prefix size.

namespace vorder {

struct SchemeOptions {
    double base_delta = kDefaultBaseDelta;
    /// Replaces the ladder's alpha at every level when set.
    std::optional<double> prefix_fraction;
    /// Overrides limits().scheme_budget when set.
    std::optional<std::size_t> budget;
};

/// k = ceil(1/eps) unweighted, ceil(2/eps) weighted.
inline std::size_t scheme_level(double eps, bool weighted) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const double target = (weighted ? 2.0 : 1.0) / eps;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(target - 1e-9)));
}

inline double scheme_factor(std::size_t level, bool weighted) {
    return 1.0 + (weighted ? 2.0 : 1.0) / static_cast<double>(level);
}

namespace detail {

inline ApproxReport scheme_level_solve(const Digraph &g, std::size_t level, bool weighted,
                                       const std::vector<BoostParams> &ladder, const SchemeOptions &options) {
    if (level == 1) {
        ApproxReport base = fas_balanced_approx(g, weighted ? CutMode::rounded(1.0) : CutMode::exact());
        ++base.solve.stats.recursive_calls;
        if (!base.exact_fallback) base.factor = scheme_factor(1, weighted);
        return base;
    }

    const std::size_t n = g.size();
    const double alpha = options.prefix_fraction.value_or(ladder[level - 2].alpha);
    const std::size_t prefix = round_half_up(alpha * static_cast<double>(n));
    if (n <= 2 || prefix == 0 || prefix >= n) {
        ApproxReport exact = exact_fallback(Objective::fas, g);
        ++exact.solve.stats.recursive_calls;
        exact.trace.push_back(TraceEntry{level, n, prefix, 0});
        return exact;
    }

    ApproxReport report;
    SolveStats &stats = report.solve.stats;
    ++stats.recursive_calls;
    const SubsetTable table = fas_table(g, prefix);
    stats.table_entries += table.entries();

    std::vector<Subset> prefixes;
    for_each_subset_of_size(n, prefix, [&](Subset s) { prefixes.push_back(s); });
    std::sort(prefixes.begin(), prefixes.end(), lex_less);

    Subset lightest = 0;
    Weight lightest_cut = 0;
    std::vector<Weight> incoming(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        incoming[i] = cut_value(g, prefixes[i]);
        if (i == 0 || incoming[i] < lightest_cut) {
            lightest = prefixes[i];
            lightest_cut = incoming[i];
        }
    }

    Weight best_value = 0;
    Subset best_prefix = 0;
    std::vector<Vertex> best_seq;
    Weight exact_split_bound = 0;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        const Subset s = prefixes[i];
        const auto rest = induced(g, members(full_set(n) & ~s));
        SolveReport rest_solution;
        if (s == lightest) {
            rest_solution = solve_exact(Objective::fas, rest.graph);
            exact_split_bound = table.value(s) + rest_solution.value;
        } else {
            rest_solution = scheme_level_solve(rest.graph, level - 1, weighted, ladder, options).solve;
        }
        stats += rest_solution.stats;
        const Weight candidate = table.value(s) + incoming[i] + rest_solution.value;
        if (best_seq.empty() || candidate < best_value) {
            best_value = candidate;
            best_prefix = s;
            best_seq = table.prefix_sequence(s);
            for (Vertex v : rest_solution.ordering.sequence()) best_seq.push_back(rest.to_original[v]);
        }
    }

    finish(report, Objective::fas, g, Ordering::from_sequence(best_seq));
    if (report.solve.value != best_value)
        throw std::logic_error("scheme candidate value does not match its ordering");
    // opt(G[V*]) + opt(G[V \ V*]) never exceeds opt(G)
    report.solve.lower_bound = exact_split_bound;
    report.factor = scheme_factor(level, weighted);
    report.cuts.push_back(CutSolution{best_prefix, prefix, cut_value(g, best_prefix)});
    report.trace.push_back(TraceEntry{level, n, prefix, prefixes.size()});
    return report;
}

}  // namespace detail

/// Runs level `level` of the scheme directly.
inline ApproxReport fas_scheme_level(const Digraph &g, std::size_t level, bool weighted,
                                     const SchemeOptions &options = {}) {
    if (level == 0) throw std::invalid_argument("scheme level starts at 1");
    const std::size_t budget = options.budget.value_or(limits().scheme_budget);
    if (level * g.size() > budget)
        throw size_limit_error("scheme level " + std::to_string(level) + " on n = " + std::to_string(g.size()) +
                               " exceeds the level * n budget of " + std::to_string(budget));
    if (g.size() > kMaxUniverse) throw size_limit_error("scheme supports at most 32 vertices");
    const auto ladder = boost_ladder(level, options.base_delta);
    return detail::scheme_level_solve(g, level, weighted, ladder, options);
}

/// (1+eps)-approximate feedback arc set: target level ceil(1/eps), or
/// ceil(2/eps) for weighted inputs.
inline ApproxReport fas_scheme(const Digraph &g, double eps, bool weighted = false,
                               const SchemeOptions &options = {}) {
    return fas_scheme_level(g, scheme_level(eps, weighted), weighted, options);
}

}  // namespace vorder
