// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/vorder.hpp>

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vorder::cli {

/// Bad flag combination; maps to exit code 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_number(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
}

struct SolverConfig {
    Objective objective = Objective::fas;
    std::string mode = "exact";
    std::optional<double> eps;
    std::optional<double> alpha;
    bool weighted = false;

    /// Mode plus parameters, e.g. "scheme(eps=0.5,weighted)".
    std::string label() const {
        std::vector<std::string> params;
        if (eps) params.push_back("eps=" + format_number(*eps));
        if (alpha) params.push_back("alpha=" + format_number(*alpha));
        if (weighted) params.push_back("weighted");
        if (params.empty()) return mode;
        std::string out = mode + "(";
        for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + params[i];
        return out + ")";
    }
};

/// Rejects flag combinations that do not select a solver.
inline void validate(const SolverConfig &c) {
    const auto fail = [](const std::string &why) { throw usage_error(why); };
    const bool exact = c.mode == "exact";
    if (c.mode != "exact" && c.mode != "2approx" && c.mode != "3approx" && c.mode != "scheme")
        fail("unknown mode '" + c.mode + "' (expected exact, 2approx, 3approx or scheme)");
    if (exact && (c.eps || c.alpha || c.weighted)) fail("--eps, --alpha and --weighted need an approximate mode");
    if (c.alpha && c.objective != Objective::ola) fail("--alpha is only valid for --obj ola");
    if (c.eps && !(*c.eps > 0.0)) fail("--eps must be positive");
    if (c.alpha && !(*c.alpha > 0.0 && *c.alpha < 1.0)) fail("--alpha must lie in (0,1)");
    if (exact) return;

    switch (c.objective) {
        case Objective::fas:
            if (c.mode == "2approx" && (c.eps || c.weighted))
                fail("fas 2approx uses the exact cut; use --mode 3approx for the rounded cut");
            if (c.mode == "3approx" && (c.eps || c.weighted)) fail("fas 3approx takes no --eps or --weighted");
            if (c.mode == "scheme" && !c.eps) fail("fas scheme needs --eps");
            break;
        case Objective::cutwidth:
            if (c.mode != "2approx") fail("cutwidth supports exact and 2approx");
            if (c.weighted && !c.eps) fail("weighted cutwidth needs --eps for the rounded cut");
            break;
        case Objective::ola:
            if (c.mode != "scheme") fail("ola supports exact and scheme (with --alpha)");
            if (!c.alpha) fail("ola scheme needs --alpha");
            if (c.eps) fail("ola scheme derives its cut precision from --alpha; drop --eps");
            break;
        case Objective::dpw:
            if (c.weighted) fail("weighted directed pathwidth is not supported");
            if (c.mode != "2approx") fail("dpw supports exact and 2approx");
            if (c.eps) fail("dpw 2approx takes no --eps");
            break;
    }
}

struct RunRecord {
    std::string instance;
    Objective objective = Objective::fas;
    std::string mode;
    std::size_t n = 0;
    std::size_t m = 0;
    Weight value = 0;
    std::optional<Weight> lower_bound;
    std::optional<Weight> opt;
    double factor = 1.0;
    Ordering ordering;
    SolveStats stats;
    double millis = 0.0;

    /// value / opt; nullopt for the exact-zero case (opt = value = 0).
    std::optional<double> ratio() const {
        if (!opt || (*opt == 0 && value == 0)) return std::nullopt;
        if (*opt == 0) return std::numeric_limits<double>::infinity();
        return static_cast<double>(value) / static_cast<double>(*opt);
    }

    std::string ratio_text() const {
        if (!opt) return "";
        const auto r = ratio();
        if (!r) return "exact-zero";
        return std::isinf(*r) ? "inf" : format_number(*r);
    }

    bool violates(double bound) const {
        if (!opt) return false;
        if (value < *opt) return true;
        const auto r = ratio();
        return r && *r > bound + 1e-12;
    }
};

inline RunRecord run_solver(const Digraph &g, const SolverConfig &c, const std::string &instance) {
    validate(c);
    RunRecord rec;
    rec.instance = instance;
    rec.objective = c.objective;
    rec.mode = c.label();
    rec.n = g.size();
    rec.m = g.edges().size();

    const auto start = std::chrono::steady_clock::now();
    ApproxReport report;
    if (c.mode == "exact") {
        report.solve = solve_exact(c.objective, g);
    } else {
        switch (c.objective) {
            case Objective::fas:
                if (c.mode == "2approx") report = fas_balanced_approx(g, CutMode::exact());
                else if (c.mode == "3approx") report = fas_balanced_approx(g, CutMode::rounded(1.0));
                else report = fas_scheme(g, *c.eps, c.weighted);
                break;
            case Objective::cutwidth:
                report = cutwidth_balanced_approx(g, c.eps ? CutMode::rounded(*c.eps) : CutMode::exact());
                break;
            case Objective::ola:
                report = g.is_undirected() ? ola_undirected_approx(g, *c.alpha, c.weighted)
                                           : ola_directed_approx(g, *c.alpha, c.weighted);
                break;
            case Objective::dpw: report = dpw_2approx(g); break;
        }
    }
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    rec.value = report.solve.value;
    rec.lower_bound = report.solve.lower_bound;
    rec.factor = report.factor;
    rec.ordering = report.solve.ordering;
    rec.stats = report.solve.stats;
    if (evaluate(c.objective, g, rec.ordering) != rec.value)
        throw std::logic_error("solver reported a value its ordering does not achieve");
    return rec;
}

inline nlohmann::ordered_json stats_json(const SolveStats &s) {
    nlohmann::ordered_json j;
    j["table_entries"] = s.table_entries;
    j["triangles"] = s.triangles;
    j["aux_nodes"] = s.aux_nodes;
    j["recursive_calls"] = s.recursive_calls;
    j["cut_calls"] = s.cut_calls;
    return j;
}

inline nlohmann::ordered_json to_json(const RunRecord &r, bool timing) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["objective"] = std::string(to_string(r.objective));
    j["mode"] = r.mode;
    j["value"] = r.value;
    j["lower_bound"] = r.lower_bound ? nlohmann::ordered_json(*r.lower_bound) : nlohmann::ordered_json(nullptr);
    j["opt"] = r.opt ? nlohmann::ordered_json(*r.opt) : nlohmann::ordered_json(nullptr);
    if (!r.opt) j["ratio"] = nullptr;
    else if (const auto q = r.ratio(); q && !std::isinf(*q)) j["ratio"] = *q;
    else j["ratio"] = r.ratio_text();
    auto positions = nlohmann::ordered_json::array();
    for (std::size_t p : r.ordering.positions()) positions.push_back(p);
    j["ordering"] = positions;
    auto stats = stats_json(r.stats);
    stats["guaranteed_factor"] = r.factor;
    j["stats"] = stats;
    j["millis"] = timing ? r.millis : 0.0;
    return j;
}

inline std::string csv_header() {
    return "instance,objective,mode,n,m,value,lower_bound,opt,ratio,factor,status,"
           "table_entries,triangles,aux_nodes,recursive_calls,cut_calls,millis\n";
}

inline std::string csv_escape(const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

inline std::string csv_row(const RunRecord &r, const std::string &status, bool timing) {
    std::ostringstream out;
    out << csv_escape(r.instance) << ',' << to_string(r.objective) << ',' << csv_escape(r.mode) << ',' << r.n << ','
        << r.m << ',' << r.value << ',' << (r.lower_bound ? std::to_string(*r.lower_bound) : "") << ','
        << (r.opt ? std::to_string(*r.opt) : "") << ',' << r.ratio_text() << ',' << format_number(r.factor) << ','
        << status << ',' << r.stats.table_entries << ',' << r.stats.triangles << ',' << r.stats.aux_nodes << ','
        << r.stats.recursive_calls << ',' << r.stats.cut_calls << ','
        << (timing ? format_number(std::round(r.millis * 1000.0) / 1000.0) : "0") << '\n';
    return out.str();
}

}  // namespace vorder::cli
