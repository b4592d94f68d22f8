// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace vorder;
using namespace vorder::test;
namespace fs = std::filesystem;

namespace {

using i128 = __int128;

/// Collects failures for one criterion; keeps the first few messages.
class Check {
public:
    void require(bool ok, const std::string &what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (messages_.size() < 5) messages_.push_back(what);
    }
    std::size_t checks() const { return checks_; }
    std::size_t failures() const { return failures_; }
    const std::vector<std::string> &messages() const { return messages_; }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> messages_;
};

const double kPs[] = {0.2, 0.5, 0.8};
const Objective kObjectives[] = {Objective::fas, Objective::cutwidth, Objective::ola, Objective::dpw};

std::string label(std::uint64_t seed, std::size_t n) {
    return "seed " + std::to_string(seed) + " n " + std::to_string(n);
}

void exact_dp(Check &c, std::string &detail) {
    std::size_t instances = 0;
    for (std::uint64_t seed = 0; seed < 240; ++seed) {
        const std::size_t n = 4 + seed % 5;
        const double p = kPs[(seed / 5) % 3];
        const Digraph g = random_digraph(n, p, seed % 2 ? 1000 : 1, seed);
        ++instances;
        for (auto obj : kObjectives) {
            const auto exact = solve_exact(obj, g);
            const auto oracle = perm_opt(g, obj);
            const std::string where = label(seed, n) + " " + std::string(to_string(obj));
            c.require(exact.value == oracle.opt, where + ": dp " + std::to_string(exact.value) + " vs oracle " +
                                                     std::to_string(oracle.opt));
            c.require(evaluate(obj, g, exact.ordering) == exact.value, where + ": ordering does not re-evaluate");
        }
    }
    detail = std::to_string(instances) + " instances";
}

void dkmc(Check &c, std::string &detail) {
    std::size_t pairs = 0;
    for (std::uint64_t seed = 0; seed < 44; ++seed) {
        const std::size_t n = 5 + seed % 11;
        const Digraph g = random_digraph(n, kPs[seed % 3], 1'000'000, 10'000 + seed);
        for (std::size_t k = 0; k <= n; ++k) {
            ++pairs;
            const auto exact = dkmc_exact(g, k);
            const auto oracle = dkmc_oracle(g, k);
            const std::string where = label(seed, n) + " k " + std::to_string(k);
            c.require(exact.value == oracle.value, where + ": value mismatch");
            c.require(cut_value(g, exact.side) == exact.value && cardinality(exact.side) == k,
                      where + ": witness does not certify the value");
        }
    }
    detail = std::to_string(pairs) + " (G,k) pairs";
}

void rounding(Check &c, std::string &detail) {
    std::size_t pairs = 0;
    // eps = num / den
    const std::pair<i128, i128> eps_values[] = {{1, 10}, {1, 2}, {1, 1}};
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        const std::size_t n = 5 + seed % 8;
        const Digraph heavy = random_digraph(n, kPs[seed % 3], 1'000'000'000, 20'000 + seed);
        const Digraph light = random_digraph(n, kPs[(seed + 1) % 3], 1000, 30'000 + seed);
        for (std::size_t k = 0; k <= n; ++k) {
            ++pairs;
            const Weight opt = dkmc_oracle(heavy, k).value;
            for (auto [num, den] : eps_values) {
                const auto cut = dkmc_weighted_approx(heavy, k, double(num) / double(den));
                const std::string where = label(seed, n) + " k " + std::to_string(k) + " eps " +
                                          std::to_string(int(num)) + "/" + std::to_string(int(den));
                c.require(cut_value(heavy, cut.side) == cut.value, where + ": witness mismatch");
                c.require(cut.value >= opt, where + ": below optimum");
                c.require(i128(cut.value) * den <= i128(opt) * (den + num), where + ": above (1+eps) opt");
            }
            const Weight light_opt = dkmc_oracle(light, k).value;
            c.require(dkmc_weighted_approx(light, k, 1e-9).value == light_opt,
                      label(seed, n) + " k " + std::to_string(k) + ": eps 1e-9 not exact");
        }
    }
    detail = std::to_string(pairs) + " (G,k) pairs x 4 eps";
}

struct RatioStats {
    double worst = 0.0;
    std::size_t runs = 0;
};

void certify(Check &c, std::map<std::string, RatioStats> &ratios, const std::string &name, const std::string &where,
             const Digraph &g, Objective obj, const ApproxReport &r, Weight opt, i128 num, i128 den) {
    auto &stat = ratios[name];
    ++stat.runs;
    if (opt > 0) stat.worst = std::max(stat.worst, double(r.solve.value) / double(opt));
    c.require(evaluate(obj, g, r.solve.ordering) == r.solve.value, where + " " + name + ": ordering mismatch");
    c.require(r.solve.value >= opt, where + " " + name + ": below optimum");
    c.require(i128(r.solve.value) * den <= num * i128(opt),
              where + " " + name + ": value " + std::to_string(r.solve.value) + " opt " + std::to_string(opt));
    c.require(!r.solve.lower_bound || *r.solve.lower_bound <= opt, where + " " + name + ": lower bound above opt");
}

void ratios(Check &c, std::string &detail) {
    std::map<std::string, RatioStats> stats;
    const SchemeOptions recursive{.prefix_fraction = 1.0 / 3.0, .budget = {}};
    std::size_t instances = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 5 + seed % 5;
        const double p = kPs[(seed / 5) % 3];
        const Digraph g = random_digraph(n, p, 1, 40'000 + seed);
        const Digraph w = random_digraph(n, p, 1000, 50'000 + seed);
        const Digraph u = random_undirected(n, p, 1, 60'000 + seed);
        instances += 3;
        const std::string where = label(seed, n);

        const Weight fas = perm_opt(g, Objective::fas).opt;
        const Weight cw = perm_opt(g, Objective::cutwidth).opt;
        const Weight ola = perm_opt(g, Objective::ola).opt;
        const Weight dpw = perm_opt(g, Objective::dpw).opt;
        const Weight wfas = perm_opt(w, Objective::fas).opt;
        const Weight wcw = perm_opt(w, Objective::cutwidth).opt;
        const Weight uola = perm_opt(u, Objective::ola).opt;

        certify(c, stats, "fas 2approx", where, g, Objective::fas, fas_balanced_approx(g), fas, 2, 1);
        certify(c, stats, "fas 3approx weighted", where, w, Objective::fas,
                fas_balanced_approx(w, CutMode::rounded(1.0)), wfas, 3, 1);
        certify(c, stats, "fas scheme eps=1/2", where, g, Objective::fas, fas_scheme(g, 0.5), fas, 3, 2);
        certify(c, stats, "fas scheme eps=1/3", where, g, Objective::fas, fas_scheme(g, 1.0 / 3.0), fas, 4, 3);
        certify(c, stats, "fas scheme eps=1/2 prefix n/3", where, g, Objective::fas,
                fas_scheme(g, 0.5, false, recursive), fas, 3, 2);
        certify(c, stats, "fas scheme eps=1/3 prefix n/3", where, g, Objective::fas,
                fas_scheme(g, 1.0 / 3.0, false, recursive), fas, 4, 3);
        certify(c, stats, "cutwidth 2approx", where, g, Objective::cutwidth, cutwidth_balanced_approx(g), cw, 2, 1);
        certify(c, stats, "cutwidth weighted eps=1/2", where, w, Objective::cutwidth,
                cutwidth_balanced_approx(w, CutMode::rounded(0.5)), wcw, 5, 2);
        certify(c, stats, "ola directed alpha=1/2", where, g, Objective::ola, ola_directed_approx(g, 0.5), ola, 3, 1);
        certify(c, stats, "ola undirected alpha=1/2", where, u, Objective::ola, ola_undirected_approx(u, 0.5), uola,
                2, 1);
        certify(c, stats, "dpw 2approx", where, g, Objective::dpw, dpw_2approx(g), dpw, 2, 1);
    }
    std::ostringstream out;
    out << instances << " instances; worst ratios:";
    for (const auto &[name, s] : stats) out << " [" << name << " " << s.worst << "]";
    detail = out.str();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void anchors(Check &c, std::string &detail) {
    const Digraph g = crossing_example();
    const auto pi = Ordering::identity(6);
    c.require(cut_at(g, pi, 1).weight == 0 && cut_at(g, pi, 1).arcs.empty(), "first cut is not empty");
    c.require(cut_at(g, pi, 3).weight == 2 && cut_at(g, pi, 3).arcs.size() == 2, "third cut is not the two back arcs");
    for (const Arc &a : cut_at(g, pi, 3).arcs)
        c.require(pi.position(a.from) - pi.position(a.to) == 3, "back arc stretch is not 3");
    c.require(ola_of(g, pi) == 6, "identity arrangement cost is not 3 + 3");

    const Digraph t = triangle_with_tail();
    c.require(perm_opt(t, Objective::fas).opt == 1, "triangle-with-tail FAS optimum is not 1");
    c.require(fas_exact(t).value == 1, "triangle-with-tail exact FAS is not 1");
    c.require(fas_balanced_approx(t).solve.value <= 2, "triangle-with-tail balanced FAS above 2");
    c.require(dkmc_exact(t, 3).value == 1, "triangle-with-tail 3-cut is not 1");

    c.require(near(gamma_lhs(2.0), 2.0, 2 * std::numeric_limits<double>::epsilon()), "gamma LHS(2) != 2");
    double worst_residual = 0.0;
    for (double delta : {0.01, 0.1, 0.25, 0.5, 0.9}) {
        const double rhs = -std::log1p(-delta / 2.0) / std::log(2.0);
        const RootResult r = solve_gamma_rhs(rhs);
        const double residual = std::abs(gamma_lhs(r.root) - rhs);
        worst_residual = std::max(worst_residual, residual);
        c.require(residual <= 1e-9, "gamma residual above 1e-9 for delta " + std::to_string(delta));
    }
    const double alpha = solve_pw_alpha();
    c.require(near(alpha, 0.204, 0.001), "pathwidth alpha " + std::to_string(alpha) + " not 0.204 +- 0.001");
    const double lhs = (1.0 - alpha) * std::log2(1.89), rhs = std::log2(1.66) + 0.005;
    c.require(lhs <= rhs, "pathwidth exponent check failed");

    std::ostringstream out;
    out << "alpha " << alpha << ", (1-alpha) log2 1.89 = " << lhs << " <= " << rhs << ", max gamma residual "
        << worst_residual;
    detail = out.str();
}

std::string run_cli(const std::string &args, int &code) {
    const std::string cmd = std::string(VORDER_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void invariants(Check &c, std::string &detail) {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 2 + seed % 11;
        const Digraph g = random_digraph(n, kPs[seed % 3], seed % 2 ? 1000 : 1, 70'000 + seed);
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), Vertex{0});
        std::shuffle(seq.begin(), seq.end(), rng);
        const auto pi = Ordering::from_sequence(seq);
        c.require(backward_weight(g, pi) + backward_weight(g, reverse(pi)) == g.total_weight(),
                  label(seed, n) + ": backward + reversed backward != total");
        Weight stretch = 0;
        for (const Arc &a : g.arcs())
            if (pi.position(a.from) > pi.position(a.to))
                stretch += a.weight * Weight(pi.position(a.from) - pi.position(a.to));
        c.require(ola_of(g, pi) == stretch, label(seed, n) + ": arrangement cost != stretch sum");
    }

    std::size_t triangles = 0;
    for (std::size_t n = 0; n <= 9; ++n) {
        const Digraph g = random_digraph(n, 0.5, 1000, 80'000 + n);
        const auto parts = equitable_tripartition(n);
        for (std::size_t k1 = 0; k1 <= cardinality(parts[0]); ++k1)
            for (std::size_t k2 = 0; k2 <= cardinality(parts[1]); ++k2)
                for (std::size_t k3 = 0; k3 <= cardinality(parts[2]); ++k3) {
                    const AuxGraph h = build_aux_graph(g, parts, {k1, k2, k3});
                    std::set<Subset> sides;
                    for (std::size_t a = 0; a < h.group_size(0); ++a)
                        for (std::size_t b = 0; b < h.group_size(1); ++b)
                            for (std::size_t d = 0; d < h.group_size(2); ++d) {
                                ++triangles;
                                const Subset side = h.side_of({a, b, d});
                                sides.insert(side);
                                const Weight weight = h.edge(0, a, 1, b) + h.edge(0, a, 2, d) + h.edge(1, b, 2, d);
                                c.require(weight == 2 * cut_value(g, side),
                                          "n " + std::to_string(n) + ": triangle weight != 2 cut");
                            }
                    const auto expected = binomial(cardinality(parts[0]), k1) * binomial(cardinality(parts[1]), k2) *
                                          binomial(cardinality(parts[2]), k3);
                    c.require(sides.size() == expected, "n " + std::to_string(n) + ": triangle map not injective");
                }
    }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 4 + seed % 7;
        const Digraph g = random_digraph(n, kPs[seed % 3], seed % 2 ? 100 : 1, 90'000 + seed);
        const auto table = fas_table(g, n);
        for (Subset s = 0; s <= full_set(n); ++s)
            for (Vertex v : members(s))
                c.require(table.value(s & ~singleton(v)) <= table.value(s), label(seed, n) + ": table not monotone");
    }

    const fs::path dir = fs::temp_directory_path() / ("vorder_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    int code = 0;
    for (int seed = 0; seed < 16; ++seed) {
        run_cli("gen --n " + std::to_string(5 + seed % 5) + " --p 0.5 --wmin 1 --wmax " + (seed % 2 ? "9" : "1") +
                    " --seed " + std::to_string(seed) + " --out " + (dir / ("i" + std::to_string(seed) + ".g")).string(),
                code);
        c.require(code == 0, "cli gen failed");
    }
    const std::string bench = "bench " + dir.string() + " --obj fas --mode exact 2approx 3approx --no-timing";
    const std::string serial = run_cli(bench + " --jobs 1", code);
    c.require(code == 0 && std::count(serial.begin(), serial.end(), '\n') == 1 + 16 * 3, "cli bench failed");
    c.require(run_cli(bench + " --jobs 1", code) == serial, "cli bench not repeatable");
    c.require(run_cli(bench + " --jobs 4", code) == serial, "cli bench differs between serial and parallel");
    const std::string verify = "verify " + dir.string() + " --obj cutwidth --mode 2approx --no-timing";
    const std::string v1 = run_cli(verify + " --jobs 1", code);
    c.require(code == 0, "cli verify reported a violation");
    c.require(run_cli(verify + " --jobs 3", code) == v1, "cli verify differs between serial and parallel");
    const std::string solve = "solve " + (dir / "i3.g").string() + " --obj ola --mode exact --oracle --no-timing";
    c.require(run_cli(solve, code) == run_cli(solve, code), "cli solve not repeatable");
    fs::remove_all(dir);

    detail = std::to_string(triangles) + " auxiliary triangles, 300 orderings, 20 tables, cli bench/verify/solve";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        std::function<void(Check &, std::string &)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "exact subset DPs equal permutation oracle", exact_dp},
        {2, "exact (k,n-k)-cut equals subset enumeration", dkmc},
        {3, "rounded (k,n-k)-cut within (1+eps)", rounding},
        {4, "approximation ratio certificates", ratios},
        {5, "numeric anchors", anchors},
        {6, "structural invariants and deterministic cli", invariants},
    };
    int failed = 0;
    for (const auto &crit : criteria) {
        Check check;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.run(check, detail);
        } catch (const std::exception &e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = check.failures() == 0;
        failed += !pass;
        std::printf("criterion %d %s: %s (%zu checks, %zu failures, %.1f s; %s)\n", crit.id, crit.name,
                    pass ? "PASS" : "FAIL", check.checks(), check.failures(), secs, detail.c_str());
        for (const auto &m : check.messages()) std::printf("    %s\n", m.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
