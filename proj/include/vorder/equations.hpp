// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vorder {

/// (g log2 g - (g-1) log2 (g-1)) / (g-1) for g >= 2; equals 2 at g = 2 and
/// decreases towards 0.
inline double gamma_lhs(double gamma) {
    if (gamma < 2.0) throw std::domain_error("gamma_lhs is defined for gamma >= 2");
    // log2(g) / (g-1) - log2(1 - 1/g), free of cancellation for large g
    return std::log2(gamma) / (gamma - 1.0) - std::log1p(-1.0 / gamma) / std::log(2.0);
}

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Bracketing interval after every bisection step, for inspection.
using BisectionTrace = std::vector<std::pair<double, double>>;

namespace detail {

/// Bisection for a decreasing f on [lo, hi] with f(lo) >= 0 >= f(hi).
/// `to_x` maps the bisection variable to the reported root.
template <class F, class Map>
RootResult bisect_decreasing(F &&f, double lo, double hi, double tolerance, BisectionTrace *trace, Map &&to_x) {
    RootResult result;
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double value = f(mid);
        result.root = to_x(mid);
        result.residual = std::abs(value);
        result.iterations = it + 1;
        if (value > 0.0) lo = mid;
        else hi = mid;
        if (trace) trace->emplace_back(to_x(lo), to_x(hi));
        if (result.residual <= tolerance || !(lo < mid || mid < hi)) break;
    }
    return result;
}

template <class F>
RootResult bisect_decreasing(F &&f, double lo, double hi, double tolerance, BisectionTrace *trace) {
    return bisect_decreasing(f, lo, hi, tolerance, trace, [](double x) { return x; });
}

}  // namespace detail

/// Root of gamma_lhs(g) = rhs on [2, 2^1000], bisecting on log2(g). The
/// residual tolerance is relative to rhs. rhs >= 2 gives the boundary root 2.
inline RootResult solve_gamma_rhs(double rhs, BisectionTrace *trace = nullptr) {
    if (!(rhs > 0.0)) throw std::domain_error("gamma equation needs a positive right-hand side");
    if (rhs >= 2.0) return RootResult{2.0, std::abs(gamma_lhs(2.0) - rhs), 0};
    constexpr double max_log = 1000.0;
    if (gamma_lhs(std::exp2(max_log)) > rhs) throw std::domain_error("gamma equation root exceeds 2^1000");
    return detail::bisect_decreasing([rhs](double t) { return gamma_lhs(std::exp2(t)) - rhs; }, 1.0, max_log,
                                     1e-12 * std::min(rhs, 1.0), trace, [](double t) { return std::exp2(t); });
}

/// gamma for running-time margin delta in (0,1): rhs = 1 - log2(2 - delta).
inline double solve_gamma(double delta, BisectionTrace *trace = nullptr) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("delta must lie in (0,1)");
    return solve_gamma_rhs(-std::log1p(-delta / 2.0) / std::log(2.0), trace).root;
}

/// Parameters of one rung of the FAS boosting ladder.
struct BoostParams {
    std::size_t level = 1;
    double delta = 0.0;
    double gamma = 2.0;
    double alpha = 0.5;
};

inline constexpr double kDefaultBaseDelta = 0.25;

/// Rungs 1..levels. delta_1 = base_delta; delta_{k+1} is the midpoint of
/// (0, 2 - 2^(1 - alpha_k)).
inline std::vector<BoostParams> boost_ladder(std::size_t levels, double base_delta = kDefaultBaseDelta) {
    std::vector<BoostParams> ladder;
    double delta = base_delta;
    for (std::size_t k = 1; k <= levels; ++k) {
        BoostParams p;
        p.level = k;
        p.delta = delta;
        p.gamma = solve_gamma(delta);
        p.alpha = 1.0 / p.gamma;
        ladder.push_back(p);
        // midpoint of (0, 2 - 2^(1 - alpha)), i.e. 1 - 2^-alpha
        delta = -std::expm1(-p.alpha * std::log(2.0));
    }
    return ladder;
}

/// Residual of (1-a) ln(base) = a ln(1/a) + (1-a) ln(1/(1-a)).
inline double pw_alpha_residual(double alpha, double base = 1.89) {
    return (1.0 - alpha) * std::log(base) - (alpha * std::log(1.0 / alpha) + (1.0 - alpha) * std::log(1.0 / (1.0 - alpha)));
}

/// Prefix fraction balancing the prefix enumeration against the exact
/// solve of the remainder (about 0.204 for base 1.89).
inline RootResult solve_pw_alpha_root(double base = 1.89, BisectionTrace *trace = nullptr) {
    return detail::bisect_decreasing([base](double a) { return pw_alpha_residual(a, base); }, 1e-12, 0.5, 1e-12,
                                     trace);
}

inline double solve_pw_alpha() { return solve_pw_alpha_root().root; }

}  // namespace vorder
