// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/equations.hpp>
#include <vorder/graph.hpp>
#include <vorder/kcut.hpp>
#include <vorder/report.hpp>
#include <vorder/subset.hpp>
#include <vorder/subset_dp.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

// Balanced-cut approximations: split V by a (near-)minimum (k, n-k)-cut,
// solve both sides exactly, place the cut's receiving side first. The cut
// weight certifies a lower bound on the optimum and bounds what the
// concatenation loses.

namespace vorder {

/// Exact (k, n-k)-cut, or the rounded (1+eps)-approximate one.
struct CutMode {
    std::optional<double> eps;

    static CutMode exact() { return {}; }
    static CutMode rounded(double eps) {
        if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
        return CutMode{eps};
    }
    bool is_exact() const { return !eps.has_value(); }
};

struct TraceEntry {
    std::size_t level = 0;
    std::size_t n = 0;
    std::size_t prefix = 0;      ///< |L| or |V'|
    std::size_t candidates = 0;  ///< cuts or prefix sets examined
};

struct ApproxReport {
    SolveReport solve;
    /// Guaranteed ratio, derived from the integer sizes actually used.
    double factor = 1.0;
    bool exact_fallback = false;
    std::vector<CutSolution> cuts;
    std::vector<TraceEntry> trace;
};

namespace detail {

inline std::size_t round_half_up(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

/// Smallest integer >= value / divisor, with a relative slack so that float
/// error can only weaken the bound.
inline Weight scaled_lower_bound(long double value, long double divisor) {
    const long double x = value / divisor;
    return std::max<Weight>(0, static_cast<Weight>(std::ceil(x * (1.0L - 1e-12L))));
}

inline ApproxReport exact_fallback(Objective objective, const Digraph &g) {
    ApproxReport report;
    report.solve = solve_exact(objective, g);
    report.factor = 1.0;
    report.exact_fallback = true;
    return report;
}

struct Halves {
    InducedGraph left;
    InducedGraph right;
    SolveReport left_solution;
    SolveReport right_solution;
};

inline Halves solve_halves(Objective objective, const Digraph &g, Subset left_side) {
    const Subset right_side = full_set(g.size()) & ~left_side;
    Halves h;
    h.left = induced(g, members(left_side));
    h.right = induced(g, members(right_side));
    h.left_solution = solve_exact(objective, h.left.graph);
    h.right_solution = solve_exact(objective, h.right.graph);
    return h;
}

inline CutSolution solve_cut(const Digraph &g, std::size_t k, const CutMode &mode, SolveStats &stats) {
    return mode.eps ? dkmc_weighted_approx(g, k, *mode.eps, &stats) : dkmc_exact(g, k, &stats);
}

inline void finish(ApproxReport &report, Objective objective, const Digraph &g, Ordering ordering) {
    report.solve.objective = objective;
    report.solve.value = evaluate(objective, g, ordering);
    report.solve.ordering = std::move(ordering);
}

/// Split at k = floor(n/2), exact halves, L before R.
inline ApproxReport halving_approx(Objective objective, const Digraph &g, const CutMode &mode) {
    if (g.size() <= 2) return exact_fallback(objective, g);
    ApproxReport report;
    SolveStats &stats = report.solve.stats;
    const std::size_t k = g.size() / 2;
    const CutSolution cut = solve_cut(g, k, mode, stats);
    Halves halves = solve_halves(objective, g, cut.side);
    stats += halves.left_solution.stats;
    stats += halves.right_solution.stats;

    finish(report, objective, g,
           concatenate(g.size(), {{&halves.left, &halves.left_solution.ordering},
                                  {&halves.right, &halves.right_solution.ordering}}));

    const Weight cut_bound = mode.eps ? scaled_lower_bound(cut.value, 1.0L + *mode.eps) : cut.value;
    const Weight halves_bound = objective == Objective::fas
                                    ? halves.left_solution.value + halves.right_solution.value
                                    : std::max(halves.left_solution.value, halves.right_solution.value);
    report.solve.lower_bound = std::max(cut_bound, halves_bound);
    report.factor = 2.0 + mode.eps.value_or(0.0);
    report.cuts.push_back(cut);
    report.trace.push_back(TraceEntry{1, g.size(), k, 1});
    return report;
}

}  // namespace detail

/// Feedback arc set: factor 2 with the exact cut, 2 + eps with the rounded
/// cut (3 for eps = 1).
inline ApproxReport fas_balanced_approx(const Digraph &g, const CutMode &mode = CutMode::exact()) {
    return detail::halving_approx(Objective::fas, g, mode);
}

/// Directed cutwidth: factor 2, or 2 + eps with the rounded cut.
inline ApproxReport cutwidth_balanced_approx(const Digraph &g, const CutMode &mode = CutMode::exact()) {
    return detail::halving_approx(Objective::cutwidth, g, mode);
}

namespace detail {

struct KRange {
    std::size_t lo = 1;
    std::size_t hi = 0;
    bool empty() const { return lo > hi; }
};

inline std::size_t ceil_tol(double x) { return static_cast<std::size_t>(std::max(0.0, std::ceil(x - 1e-9))); }
inline std::size_t floor_tol(double x) { return static_cast<std::size_t>(std::max(0.0, std::floor(x + 1e-9))); }

inline CutSolution best_cut_in_range(const Digraph &g, KRange range, const CutMode &mode, ApproxReport &report) {
    CutSolution best;
    bool found = false;
    for (std::size_t k = range.lo; k <= range.hi; ++k) {
        const CutSolution cut = solve_cut(g, k, mode, report.solve.stats);
        if (!found || cut.value < best.value) {
            best = cut;
            found = true;
        }
    }
    return best;
}

inline void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
}

}  // namespace detail

/**
 * Directed OLA. Tries every k in [ceil(an/2), floor(n - an/2)] (weighted:
 * [ceil(an/4), floor((1 - a/4) n)] with eps = a/2 cuts), keeps the lightest
 * cut, and solves both sides exactly. Each cut arc stretches at most n - 1,
 * and the lightest cut is at most opt / (number of k tried), giving
 * 1 + 1/(1-a) up to rounding of the range ends.
 */
inline ApproxReport ola_directed_approx(const Digraph &g, double alpha, bool weighted = false) {
    detail::check_alpha(alpha);
    const std::size_t n = g.size();
    if (n <= 2) return detail::exact_fallback(Objective::ola, g);

    const double nd = static_cast<double>(n);
    detail::KRange range;
    range.lo = std::max<std::size_t>(1, detail::ceil_tol(weighted ? alpha * nd / 4.0 : alpha * nd / 2.0));
    range.hi = std::min(n - 1, detail::floor_tol(weighted ? (1.0 - alpha / 4.0) * nd : nd - alpha * nd / 2.0));
    if (range.empty()) return detail::exact_fallback(Objective::ola, g);

    ApproxReport report;
    const CutMode mode = weighted ? CutMode::rounded(alpha / 2.0) : CutMode::exact();
    const CutSolution cut = detail::best_cut_in_range(g, range, mode, report);
    auto halves = detail::solve_halves(Objective::ola, g, cut.side);
    report.solve.stats += halves.left_solution.stats;
    report.solve.stats += halves.right_solution.stats;
    detail::finish(report, Objective::ola, g,
                   concatenate(n, {{&halves.left, &halves.left_solution.ordering},
                                   {&halves.right, &halves.right_solution.ordering}}));

    const std::size_t positions = range.hi - range.lo + 1;
    const long double slack = weighted ? 1.0L + alpha / 2.0L : 1.0L;
    report.factor = 1.0 + static_cast<double>(slack * (nd - 1.0) / static_cast<long double>(positions));
    report.solve.lower_bound = std::max(halves.left_solution.value + halves.right_solution.value,
                                        detail::scaled_lower_bound(static_cast<long double>(cut.value) * positions, slack));
    report.cuts.push_back(cut);
    report.trace.push_back(TraceEntry{1, n, cut.k, positions});
    return report;
}

/// Per-side orientation for undirected OLA. Lengths are measured with the
/// far endpoint pinned at the boundary position i = |L|: a left vertex at
/// local position p contributes i - p (reversed: p - 1), a right vertex at
/// local position q contributes q (reversed: |R| + 1 - q); all weighted.
struct OrientationChoice {
    bool reverse_left = false;
    bool reverse_right = false;
    Weight left_forward = 0;
    Weight left_reversed = 0;
    Weight right_forward = 0;
    Weight right_reversed = 0;
};

inline OrientationChoice choose_orientations(const Digraph &g, std::span<const Vertex> left_seq,
                                             std::span<const Vertex> right_seq) {
    constexpr std::size_t absent = 0;
    std::vector<std::size_t> left_pos(g.size(), absent), right_pos(g.size(), absent);
    for (std::size_t p = 0; p < left_seq.size(); ++p) left_pos[left_seq[p]] = p + 1;
    for (std::size_t q = 0; q < right_seq.size(); ++q) right_pos[right_seq[q]] = q + 1;
    const auto i = static_cast<Weight>(left_seq.size());
    const auto r = static_cast<Weight>(right_seq.size());

    OrientationChoice c;
    for (const Arc &a : g.arcs()) {
        if (left_pos[a.from] == absent || right_pos[a.to] == absent) continue;
        const auto p = static_cast<Weight>(left_pos[a.from]);
        const auto q = static_cast<Weight>(right_pos[a.to]);
        c.left_forward += a.weight * (i - p);
        c.left_reversed += a.weight * (p - 1);
        c.right_forward += a.weight * q;
        c.right_reversed += a.weight * (r + 1 - q);
    }
    c.reverse_left = c.left_reversed < c.left_forward;
    c.reverse_right = c.right_reversed < c.right_forward;
    return c;
}

/**
 * Undirected OLA with the reversal trick. k ranges over
 * [ceil(an/2), floor(n/2)] (weighted: lower end ceil(an/4), eps = a/2);
 * by symmetry of undirected cuts that covers positions lo..n-lo. Picking the
 * cheaper orientation per side keeps the average crossing-edge length at
 * most n/2, giving 1 + 1/(2(1-a)) up to rounding of the range ends.
 */
inline ApproxReport ola_undirected_approx(const Digraph &g, double alpha, bool weighted = false) {
    detail::check_alpha(alpha);
    if (!g.is_undirected()) throw std::invalid_argument("undirected OLA needs an undirected graph");
    const std::size_t n = g.size();
    if (n <= 2) return detail::exact_fallback(Objective::ola, g);

    const double nd = static_cast<double>(n);
    detail::KRange range;
    range.lo = std::max<std::size_t>(1, detail::ceil_tol(weighted ? alpha * nd / 4.0 : alpha * nd / 2.0));
    range.hi = n / 2;
    if (range.empty()) return detail::exact_fallback(Objective::ola, g);

    ApproxReport report;
    const CutMode mode = weighted ? CutMode::rounded(alpha / 2.0) : CutMode::exact();
    const CutSolution cut = detail::best_cut_in_range(g, range, mode, report);
    auto halves = detail::solve_halves(Objective::ola, g, cut.side);
    report.solve.stats += halves.left_solution.stats;
    report.solve.stats += halves.right_solution.stats;

    std::vector<Vertex> left_seq, right_seq;
    for (Vertex v : halves.left_solution.ordering.sequence()) left_seq.push_back(halves.left.to_original[v]);
    for (Vertex v : halves.right_solution.ordering.sequence()) right_seq.push_back(halves.right.to_original[v]);
    const OrientationChoice choice = choose_orientations(g, left_seq, right_seq);
    if (choice.reverse_left) std::reverse(left_seq.begin(), left_seq.end());
    if (choice.reverse_right) std::reverse(right_seq.begin(), right_seq.end());
    std::vector<Vertex> seq = left_seq;
    seq.insert(seq.end(), right_seq.begin(), right_seq.end());
    detail::finish(report, Objective::ola, g, Ordering::from_sequence(seq));

    const std::size_t positions = n - 2 * range.lo + 1;
    const long double slack = weighted ? 1.0L + alpha / 2.0L : 1.0L;
    report.factor = 1.0 + static_cast<double>(slack * nd / (2.0L * static_cast<long double>(positions)));
    report.solve.lower_bound = std::max(halves.left_solution.value + halves.right_solution.value,
                                        detail::scaled_lower_bound(static_cast<long double>(cut.value) * positions, slack));
    report.cuts.push_back(cut);
    report.trace.push_back(TraceEntry{1, n, cut.k, range.hi - range.lo + 1});
    return report;
}

/**
 * Directed pathwidth 2-approximation. Picks the prefix set V' of size
 * round(a n), a = solve_pw_alpha(), whose best ordering keeps the fewest
 * prefix vertices with in-neighbours further right (measured in the whole
 * graph), then appends an exact ordering of G[V \ V']. Each part
 * contributes at most opt to any position's count. Arc weights are ignored.
 */
inline ApproxReport dpw_2approx(const Digraph &g) {
    const std::size_t n = g.size();
    if (n <= 2) return detail::exact_fallback(Objective::dpw, g);
    const std::size_t prefix = detail::round_half_up(solve_pw_alpha() * static_cast<double>(n));
    if (prefix == 0 || prefix >= n) return detail::exact_fallback(Objective::dpw, g);

    ApproxReport report;
    const SubsetTable table = dpw_prefix_table(g, prefix);
    report.solve.stats.table_entries += table.entries();

    Subset best = 0;
    bool found = false;
    std::size_t candidates = 0;
    for_each_subset_of_size(n, prefix, [&](Subset s) {
        ++candidates;
        if (!found || table.value(s) < table.value(best) ||
            (table.value(s) == table.value(best) && lex_less(s, best))) {
            best = s;
            found = true;
        }
    });

    const auto rest = induced(g, members(full_set(n) & ~best));
    const SolveReport rest_solution = dpw_exact(rest.graph);
    report.solve.stats += rest_solution.stats;

    std::vector<Vertex> seq = table.prefix_sequence(best);
    for (Vertex v : rest_solution.ordering.sequence()) seq.push_back(rest.to_original[v]);
    detail::finish(report, Objective::dpw, g, Ordering::from_sequence(seq));
    report.solve.lower_bound = std::max(table.value(best), rest_solution.value);
    report.factor = 2.0;
    report.trace.push_back(TraceEntry{1, n, prefix, candidates});
    return report;
}

}  // namespace vorder
