// Copyright 2026 The qrac-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qrac: exact evaluation, advantage scans, classical optimality search and
// Monte Carlo simulation of random access codes.
//
// Exit status: 0 success, 1 failed verification, 2 invalid arguments,
// 3 infeasible oracle size.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qrac/qrac.hpp"
#include "qrac/report_io.hpp"
#include "qrac/verify.hpp"

namespace {

using namespace qrac;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string task = "restricted";
    std::size_t d = 2;
    std::size_t dprime = 0; // 0: same as d
    std::string variant = "canonical";
    std::size_t n = 2;
    std::size_t dmin = 2;
    std::size_t dmax = 50;
    std::size_t enumerate_up_to = 32;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string output;
    std::string evaluate;
    std::string strategy;
    std::string export_path;
    bool symmetry = false;
    std::uint64_t max_tuples = OracleBudget{}.max_tuples;
    unsigned threads = 0;
    bool full_verify = false;
};

std::filesystem::path resolve_output(const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char *dir = std::getenv("QRAC_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void emit(const Options &opt, const std::string &text) {
    if (opt.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    const auto path = resolve_output(opt.output);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw UsageError("cannot write output file " + path.string());
    }
}

GatingVariant parse_variant(const std::string &v) {
    return v == "literal" ? GatingVariant::LiteralBothOrNothing
                          : GatingVariant::IndependentGating;
}

ProtocolSpec quantum_spec(const Options &opt) {
    if (opt.task == "full") {
        if (opt.dprime != 0 && opt.dprime != opt.d) {
            throw UsageError("--dprime must equal --d for the full protocol");
        }
        return ProtocolSpec::full(opt.d);
    }
    return {opt.d, opt.dprime == 0 ? opt.d : opt.dprime, parse_variant(opt.variant)};
}

std::pair<ClassicalTask, DeterministicStrategy> load_strategy(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read strategy file " + path);
    }
    return read_strategy(in);
}

std::string report_text(const std::string &title, const SuccessReport &r) {
    std::ostringstream out;
    out << title << '\n'
        << "average: " << format_probability(r.average) << '\n'
        << "worst_case: " << format_probability(r.worst_case) << '\n'
        << "worst_pair: " << format_probability(r.worst_pair) << '\n';
    return out.str();
}

int cmd_exact(const Options &opt) {
    if (opt.task == "classical") {
        const ClassicalTask task(opt.n, opt.d);
        const auto strategy = majority_identity_strategy(task);
        const auto rep = evaluate_strategy(task, strategy);
        const auto correct = success_count(task, strategy);
        if (opt.format == "json") {
            emit(opt, dump(classical_exact_json(task, rep, correct)));
        } else {
            std::string text = report_text("protocol: classical majority-identity n=" +
                                               std::to_string(task.n()) +
                                               " d=" + std::to_string(task.d()),
                                           rep);
            if (task.n() == 2 || task.n() == 3) {
                text += "closed_form: " +
                        format_probability(closed_form_classical(task.n(), task.d())) + '\n';
            }
            emit(opt, text);
        }
        return kExitOk;
    }
    const auto spec = quantum_spec(opt);
    const auto rep = exact_success(spec);
    if (opt.format == "json") {
        emit(opt, dump(quantum_exact_json(spec, rep)));
    } else {
        std::ostringstream title;
        title << "protocol: " << (spec.r() == 0 ? "full" : "restricted") << " d=" << spec.d()
              << " dprime=" << spec.d_prime() << " r=" << spec.r()
              << " variant=" << (opt.variant == "literal" ? "literal" : "canonical");
        emit(opt, report_text(title.str(), rep) + "closed_form: " +
                      format_probability(closed_form_restricted(spec.d(), spec.r())) + '\n');
    }
    return kExitOk;
}

int cmd_scan(const Options &opt) {
    const auto rows = scan(opt.dmin, opt.dmax, ScanOptions{opt.enumerate_up_to});
    if (opt.format == "json") {
        emit(opt, dump(scan_json(rows)));
    } else {
        emit(opt, scan_csv(rows));
    }
    return kExitOk;
}

int cmd_oracle(const Options &opt) {
    if (!opt.evaluate.empty()) {
        const auto [task, strategy] = load_strategy(opt.evaluate);
        const auto rep = evaluate_strategy(task, strategy);
        if (opt.format == "json") {
            emit(opt, dump(classical_exact_json(task, rep, success_count(task, strategy))));
        } else {
            emit(opt, report_text("strategy: " + opt.evaluate + " n=" + std::to_string(task.n()) +
                                      " d=" + std::to_string(task.d()),
                                  rep));
        }
        return kExitOk;
    }
    const ClassicalTask task(opt.n, opt.d);
    const auto res = optimal_classical_bruteforce(
        task, OracleBudget{opt.max_tuples, opt.symmetry, opt.threads});
    if (!opt.export_path.empty()) {
        std::ofstream out(resolve_output(opt.export_path), std::ios::binary | std::ios::trunc);
        if (!out || !(out << strategy_to_string(task, res.witness)) || !out.flush()) {
            throw UsageError("cannot write strategy file " + opt.export_path);
        }
    }
    if (opt.format == "json") {
        emit(opt, dump(oracle_json(task, res)));
    } else {
        std::ostringstream out;
        out << "task: n=" << task.n() << " d=" << task.d() << '\n'
            << "optimum: " << format_probability(res.optimum) << " (" << res.correct << "/"
            << res.total << ")\n"
            << "strategies_examined: " << res.strategies_examined << '\n'
            << "witness:\n"
            << strategy_to_string(task, res.witness);
        emit(opt, out.str());
    }
    return kExitOk;
}

int cmd_simulate(const Options &opt) {
    const TrialConfig config{opt.trials, opt.seed};
    Estimate est;
    double exact = 0.0;
    Json params;
    std::string protocol;
    if (opt.task == "classical") {
        auto [task, strategy] = opt.strategy.empty()
                                    ? std::pair{ClassicalTask(opt.n, opt.d),
                                                majority_identity_strategy(ClassicalTask(opt.n, opt.d))}
                                    : load_strategy(opt.strategy);
        est = simulate(task, strategy, config);
        exact = evaluate_strategy(task, strategy).average;
        protocol = "classical";
        params["n"] = task.n();
        params["d"] = task.d();
        params["strategy"] = opt.strategy.empty() ? "majority-identity" : opt.strategy;
    } else {
        const auto spec = quantum_spec(opt);
        est = simulate(spec, config);
        exact = exact_success(spec).average;
        protocol = spec.r() == 0 ? "full" : "restricted";
        params["d"] = spec.d();
        params["dprime"] = spec.d_prime();
        params["variant"] = opt.variant == "literal" ? "literal" : "canonical";
    }
    if (opt.format == "json") {
        emit(opt, dump(estimate_json(protocol, params, config, est, exact)));
    } else {
        std::ostringstream out;
        out << "protocol: " << protocol << '\n'
            << "trials: " << est.trials << " seed: " << config.seed << '\n'
            << "mean: " << format_probability(est.mean) << '\n'
            << "stderr: " << format_probability(est.std_error) << '\n'
            << "exact: " << format_probability(exact) << '\n';
        emit(opt, out.str());
    }
    return kExitOk;
}

int cmd_verify(const Options &opt) {
    VerifyOptions vopt;
    vopt.include_slow = opt.full_verify;
    const auto checks = run_verification(vopt);
    bool ok = true;
    if (opt.format == "json") {
        Json j;
        j["provenance"] = provenance("verify", Json{{"full", opt.full_verify}}, {}, {});
        Json arr = Json::array();
        for (const auto &c : checks) {
            arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            ok = ok && c.passed;
        }
        j["checks"] = std::move(arr);
        j["passed"] = ok;
        emit(opt, dump(j));
    } else {
        std::ostringstream out;
        for (const auto &c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.detail << "]\n";
            ok = ok && c.passed;
        }
        out << (ok ? "all checks passed\n" : "verification FAILED\n");
        emit(opt, out.str());
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Random access code simulator and verifier"};
    app.set_version_flag("--version", std::string(qrac::kVersion));
    app.require_subcommand(1);
    Options opt;

    const auto quantum_flags = [&opt](CLI::App *sub, const std::string &default_task) {
        opt.task = default_task;
        sub->add_option("--task", opt.task, "Protocol family")
            ->check(CLI::IsMember({"full", "restricted", "classical"}));
        sub->add_option("--d", opt.d, "Alphabet size d")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
        sub->add_option("--dprime", opt.dprime, "Quantum dimension d' (default d)")
            ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
        sub->add_option("--variant", opt.variant, "Gating rule of the restricted encoding")
            ->check(CLI::IsMember({"canonical", "literal"}));
        sub->add_option("--n", opt.n, "String length (classical task)")
            ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    };
    const auto output_flags = [&opt](CLI::App *sub, std::vector<std::string> formats) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--output", opt.output,
                        "Output file (relative paths resolve under $QRAC_OUTPUT_DIR)");
    };

    auto *exact = app.add_subcommand("exact", "Exact success probabilities by enumeration");
    quantum_flags(exact, "restricted");
    output_flags(exact, {"text", "json"});

    auto *scan_cmd = app.add_subcommand("scan", "Advantage table over a range of d");
    scan_cmd->add_option("--dmin", opt.dmin)->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    scan_cmd->add_option("--dmax", opt.dmax)->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    scan_cmd->add_option("--enumerate-up-to", opt.enumerate_up_to,
                         "Cross-check rows with d up to this bound by enumeration");
    output_flags(scan_cmd, {"csv", "json"});

    auto *oracle = app.add_subcommand("oracle", "Exhaustive optimum over classical strategies");
    oracle->add_option("--n", opt.n)->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    oracle->add_option("--d", opt.d)->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    oracle->add_flag("--symmetry", opt.symmetry,
                     "Enumerate the first decoder up to message relabeling");
    oracle->add_option("--max-tuples", opt.max_tuples, "Decoder-tuple budget");
    oracle->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    oracle->add_option("--evaluate", opt.evaluate, "Evaluate a strategy table instead of searching");
    oracle->add_option("--export", opt.export_path, "Write the witness strategy table here");
    output_flags(oracle, {"text", "json"});

    auto *sim = app.add_subcommand("simulate", "Seeded Monte Carlo estimate");
    quantum_flags(sim, "restricted");
    sim->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    sim->add_option("--seed", opt.seed);
    sim->add_option("--strategy", opt.strategy, "Strategy table for --task classical");
    output_flags(sim, {"text", "json"});

    auto *verify = app.add_subcommand("verify", "Cross-check closed forms against enumeration");
    verify->add_flag("--full", opt.full_verify, "Include the slow (n=2, d=5) exhaustive search");
    output_flags(verify, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (exact->parsed()) {
            return cmd_exact(opt);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(opt);
        }
        if (oracle->parsed()) {
            return cmd_oracle(opt);
        }
        if (sim->parsed()) {
            return cmd_simulate(opt);
        }
        return cmd_verify(opt);
    } catch (const qrac::InfeasibleSize &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
