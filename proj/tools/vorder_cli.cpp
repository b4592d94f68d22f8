// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#include "run_record.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using namespace vorder;
using namespace vorder::cli;

namespace {

enum ExitCode : int { ok = 0, violation = 1, usage = 2, parse = 3, size_guard = 4 };

/// A parse_error tagged with the file it came from.
class file_parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Digraph load_graph(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read instance '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_graph(text.str());
    } catch (const parse_error &e) {
        throw file_parse_error(path.string() + ": " + e.what());
    } catch (const std::overflow_error &e) {
        throw file_parse_error(path.string() + ": " + e.what());
    }
}

std::string instance_id(const fs::path &path) { return path.stem().string(); }

std::vector<fs::path> corpus_files(const std::vector<std::string> &dirs) {
    std::vector<fs::path> files;
    for (const auto &dir : dirs) {
        if (!fs::is_directory(dir)) throw usage_error("'" + dir + "' is not a directory");
        for (const auto &entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".g") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const fs::path &a, const fs::path &b) {
        return std::pair(instance_id(a), a.string()) < std::pair(instance_id(b), b.string());
    });
    return files;
}

/// Runs `task(i)` for i in [0, count) on `jobs` threads; rethrows the
/// exception of the lowest failing index.
template <class Task>
void parallel_for(std::size_t count, std::size_t jobs, Task task) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto &th : pool) th.join();
    for (const auto &e : errors)
        if (e) std::rethrow_exception(e);
}

void add_solver_options(CLI::App &cmd, SolverConfig &config, std::string &objective, bool &scheme) {
    cmd.add_option("--obj", objective, "fas | cutwidth | ola | dpw")->required();
    cmd.add_option("--mode", config.mode, "exact | 2approx | 3approx | scheme")->capture_default_str();
    cmd.add_flag("--scheme", scheme, "same as --mode scheme (also accepted after --mode approx)");
    cmd.add_option("--eps", config.eps, "approximation slack for scheme / rounded cuts");
    cmd.add_option("--alpha", config.alpha, "balance parameter for the ola scheme");
    cmd.add_flag("--weighted", config.weighted, "use the weighted variant of the algorithm");
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const fs::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
    std::ofstream out(target, std::ios::binary);
    if (!out || !(out << text)) throw usage_error("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Vertex-ordering solvers: feedback arc set, cutwidth, linear arrangement, pathwidth"};
    app.require_subcommand(1);

    SolverConfig config;
    std::string objective;
    bool no_timing = false;
    std::size_t jobs = 1;
    std::string out_path;
    bool scheme_flag = false;

    auto *solve = app.add_subcommand("solve", "solve one instance and print a JSON report");
    std::string instance;
    bool with_oracle = false;
    solve->add_option("instance", instance, "instance file")->required();
    add_solver_options(*solve, config, objective, scheme_flag);
    solve->add_flag("--oracle", with_oracle, "also compute the optimum by enumeration");
    solve->add_flag("--no-timing", no_timing, "report millis as 0");

    auto *gen = app.add_subcommand("gen", "generate a random instance");
    RandomGraphSpec spec;
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--p", spec.p, "arc probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--wmin", spec.weights.lo, "minimum weight")->capture_default_str();
    gen->add_option("--wmax", spec.weights.hi, "maximum weight")->capture_default_str();
    gen->add_option("--seed", spec.seed, "random seed")->capture_default_str();
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_flag("--undirected", spec.undirected, "generate an undirected graph");

    auto *verify = app.add_subcommand("verify", "compare a solver with the enumeration oracle over corpora");
    std::vector<std::string> dirs;
    std::optional<double> factor;
    verify->add_option("dirs", dirs, "corpus directories")->required();
    add_solver_options(*verify, config, objective, scheme_flag);
    verify->add_option("--factor", factor, "ratio bound (default: the solver's guarantee)");
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify->add_option("--out", out_path, "CSV output file (default stdout)");
    verify->add_flag("--no-timing", no_timing, "report millis as 0");

    auto *bench = app.add_subcommand("bench", "run several modes over a corpus and tabulate");
    std::string bench_dir;
    std::vector<std::string> modes;
    bench->add_option("dir", bench_dir, "corpus directory")->required();
    bench->add_option("--obj", objective, "fas | cutwidth | ola | dpw")->required();
    bench->add_option("--mode", modes, "modes to run, e.g. exact 2approx")->required();
    bench->add_option("--eps", config.eps, "approximation slack");
    bench->add_option("--alpha", config.alpha, "balance parameter for ola");
    bench->add_flag("--weighted", config.weighted, "weighted variants");
    bench->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    bench->add_option("--out", out_path, "CSV output file (default stdout)");
    bench->add_flag("--no-timing", no_timing, "report millis as 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    try {
        static_cast<void>(limits());
        if (!objective.empty()) {
            const auto parsed = parse_objective(objective);
            if (!parsed) throw usage_error("unknown objective '" + objective + "'");
            config.objective = *parsed;
        }
        if (scheme_flag) {
            if (config.mode != "exact" && config.mode != "approx" && config.mode != "scheme")
                throw usage_error("--scheme conflicts with --mode " + config.mode);
            config.mode = "scheme";
        } else if (config.mode == "approx") {
            throw usage_error("--mode approx needs --scheme; use 2approx, 3approx or scheme");
        }

        if (*solve) {
            validate(config);
            const Digraph g = load_graph(instance);
            RunRecord rec = run_solver(g, config, instance_id(instance));
            if (with_oracle) rec.opt = perm_opt(g, config.objective).opt;
            std::cout << to_json(rec, !no_timing).dump(2) << '\n';
            return ok;
        }

        if (*gen) {
            if (spec.weights.lo < 0 || spec.weights.hi < spec.weights.lo)
                throw usage_error("need 0 <= --wmin <= --wmax");
            write_output(out_path, serialize(gen_random(spec)));
            return ok;
        }

        if (*verify) {
            validate(config);
            const auto files = corpus_files(dirs);
            std::vector<RunRecord> records(files.size());
            parallel_for(files.size(), jobs, [&](std::size_t i) {
                const Digraph g = load_graph(files[i]);
                if (g.size() > limits().max_oracle_n)
                    throw size_limit_error(files[i].string() + ": n = " + std::to_string(g.size()) +
                                           " exceeds the oracle limit of " + std::to_string(limits().max_oracle_n));
                records[i] = run_solver(g, config, instance_id(files[i]));
                records[i].opt = perm_opt(g, config.objective).opt;
            });
            std::string csv = csv_header();
            std::size_t violations = 0;
            double worst = 1.0;
            for (const auto &rec : records) {
                const bool bad = rec.violates(factor.value_or(rec.factor));
                violations += bad;
                if (const auto r = rec.ratio()) worst = std::max(worst, *r);
                csv += csv_row(rec, bad ? "violation" : "ok", !no_timing);
            }
            write_output(out_path, csv);
            std::cerr << "verified " << records.size() << " instances, max ratio " << format_number(worst) << ", "
                      << violations << " violation(s)\n";
            return violations ? violation : ok;
        }

        if (*bench) {
            std::vector<SolverConfig> configs;
            for (const auto &mode : modes) {
                SolverConfig c = config;
                c.mode = mode;
                if (mode == "exact") c.eps.reset(), c.alpha.reset(), c.weighted = false;
                if (mode == "2approx" && c.objective == Objective::fas) c.eps.reset(), c.weighted = false;
                if (mode == "3approx") c.eps.reset(), c.weighted = false;
                validate(c);
                configs.push_back(c);
            }
            const auto files = corpus_files({bench_dir});
            std::vector<Digraph> graphs;
            for (const auto &f : files) graphs.push_back(load_graph(f));
            std::vector<RunRecord> records(files.size() * configs.size());
            parallel_for(records.size(), jobs, [&](std::size_t i) {
                const std::size_t fi = i / configs.size();
                records[i] = run_solver(graphs[fi], configs[i % configs.size()], instance_id(files[fi]));
            });
            std::string csv = csv_header();
            for (const auto &rec : records) csv += csv_row(rec, "-", !no_timing);
            write_output(out_path, csv);
            return ok;
        }
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const file_parse_error &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse;
    } catch (const size_limit_error &e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return size_guard;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return violation;
    }
    return usage;
}
