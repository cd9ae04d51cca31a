// Copyright 2026 The pcest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcest/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "pcest/analysis.h"
#include "pcest/csv.h"
#include "pcest/sweep.h"

namespace pcest {

namespace {

struct CommonOptions {
    std::uint64_t seed = 20020131;
    std::string out = "-";
    std::int64_t trials = 100000;
    int threads = 0;
    bool clip = false;
    std::string config;
};

struct GainOptions {
    std::vector<double> fidelities{1.0, 0.9, 0.83};
    double p_min = 0.0;
    double p_max = 1.0 / 3.0;
    int steps = 100;
    std::int64_t resources = 6;
};

struct ResourceOptions {
    double f_min = 0.5;
    double f_max = 1.0;
    int f_steps = 50;
    double p_min = 0.0;
    double p_max = 1.0 / 3.0;
    int steps = 100;
    double target_error = 1.0;
};

struct BellDiagOptions {
    double alpha1 = 0.7;
    double step = 0.005;
    double shots = 1.0;
};

struct SimulateOptions {
    std::string scheme = "werner";
    std::vector<std::int64_t> shots{50};
    std::vector<double> fidelities{0.9};
    std::vector<double> p{0.1, 0.2, 0.3};
    std::vector<double> alpha;
    int d = 2;
    std::size_t oracle_cap = kDefaultEnumerationCap;
};

void add_common(CLI::App *sub, CommonOptions &opt, bool with_trials) {
    sub->add_option("--seed", opt.seed, "Master seed for random streams")->capture_default_str();
    sub->add_option("--out", opt.out, "Output path, '-' for stdout")->capture_default_str();
    if (with_trials) {
        sub->add_option("--trials", opt.trials, "Monte Carlo trials per cell")
            ->capture_default_str()
            ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
    }
    sub->add_option("--threads", opt.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--clip", opt.clip, "Clip estimates to [0,1] (excluded from oracle comparisons)");
    sub->add_option("--config", opt.config, "key=value file; command-line flags take precedence");
}

// Appends `--key value` for every config entry whose flag is not already on
// the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    std::string path;
    if (it != args.end() && std::next(it) != args.end()) {
        path = *std::next(it);
    } else {
        for (const auto &a : args) {
            if (a.rfind("--config=", 0) == 0) {
                path = a.substr(9);
            }
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream in(path);
    if (!in) {
        throw CLI::ValidationError("--config", "cannot read " + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            continue;
        }
        std::string flag = "--" + key;
        bool present = std::any_of(args.begin(), args.end(), [&](const std::string &a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (present) {
            continue;
        }
        if (value == "true" && (key == "clip")) {
            args.push_back(flag);
        } else if (!(key == "clip" && value == "false")) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

class Output {
   public:
    Output(const std::string &path, std::ostream &fallback) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) {
            throw CLI::ValidationError("--out", "cannot open " + path + " for writing");
        }
        stream_ = file_.get();
    }
    std::ostream &stream() {
        return *stream_;
    }

   private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *stream_ = nullptr;
};

std::string fixed4(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << x;
    return s.str();
}

int cmd_gain(const CommonOptions &common, const GainOptions &opt, std::ostream &out) {
    auto ps = linspace(opt.p_min, opt.p_max, opt.steps);
    auto cells = gain_sweep(opt.fidelities, ps, opt.resources, Execution::Parallel);
    Output sink(common.out, out);
    CsvWriter csv(sink.stream(), {"F", "p", "gain"});
    for (const auto &c : cells) {
        csv.row({format_double(c.fidelity), format_double(c.p), format_double(c.gain)});
    }
    return kExitOk;
}

int cmd_resources(const CommonOptions &common, const ResourceOptions &opt, std::ostream &out) {
    auto fs = linspace(opt.f_min, opt.f_max, opt.f_steps);
    auto ps = linspace(opt.p_min, opt.p_max, opt.steps);
    auto cells = resource_sweep(fs, ps, opt.target_error, Execution::Parallel);
    Output sink(common.out, out);
    CsvWriter csv(sink.stream(), {"F", "p", "delta_R"});
    for (const auto &c : cells) {
        csv.row({format_double(c.fidelity), format_double(c.p), format_double(c.delta_R)});
    }
    return kExitOk;
}

int cmd_thresholds(const CommonOptions &common, double tolerance, std::ostream &out) {
    FminResult fmin = find_fmin(tolerance);
    Output sink(common.out, out);
    auto &s = sink.stream();
    s << "separability_bound = " << fixed4(0.5) << '\n';
    s << "chsh_bound = " << fixed4(chsh_fidelity_threshold()) << '\n';
    s << "f_min = " << fixed4(fmin.f_min) << '\n';
    s << "f_min_argmin_p = " << fixed4(fmin.argmin[0]) << ',' << fixed4(fmin.argmin[1]) << ','
      << fixed4(fmin.argmin[2]) << '\n';
    return kExitOk;
}

int cmd_belldiag(const CommonOptions &common, const BellDiagOptions &opt, std::ostream &out, std::ostream &err) {
    auto cells = belldiag_sweep(opt.alpha1, opt.step, opt.shots, Execution::Parallel);
    Output sink(common.out, out);
    CsvWriter csv(sink.stream(), {"alpha1", "alpha2", "alpha3", "alpha4", "mean_error"});
    std::size_t singular = 0;
    for (const auto &c : cells) {
        if (std::isnan(c.mean_error)) {
            ++singular;
        }
        csv.row({format_double(c.alpha[0]), format_double(c.alpha[1]), format_double(c.alpha[2]),
                 format_double(c.alpha[3]), format_double(c.mean_error)});
    }
    if (const BellDiagCell *best = belldiag_argmin(cells)) {
        err << "argmin alpha = (" << format_double(best->alpha[0]) << ", " << format_double(best->alpha[1]) << ", "
            << format_double(best->alpha[2]) << ", " << format_double(best->alpha[3])
            << "), mean_error = " << format_double(best->mean_error) << '\n';
    }
    err << "singular cells: " << singular << " of " << cells.size() << '\n';
    return kExitOk;
}

struct SimulationCell {
    std::int64_t shots;
    double parameter;
};

int cmd_simulate(const CommonOptions &common, const SimulateOptions &opt, std::ostream &out) {
    const std::string &scheme = opt.scheme;
    std::vector<SimulationCell> cells;
    std::vector<double> parameters = opt.fidelities;
    if (scheme == "separable") {
        parameters = {std::nan("")};
    } else if (scheme == "belldiag") {
        if (opt.alpha.size() != 4) {
            throw CLI::ValidationError("--alpha", "belldiag needs four coefficients");
        }
        parameters = {opt.alpha[0]};
    }
    for (double f : parameters) {
        for (auto n : opt.shots) {
            if (n < 1) {
                throw CLI::ValidationError("--N", "shot counts must be positive");
            }
            cells.push_back({n, f});
        }
    }

    // Qubit channel for werner/separable/belldiag and d = 2; otherwise d^2 - 1 components.
    std::optional<PauliParams> qubit;
    std::optional<GenPauliParams> gen;
    if (scheme == "ddim" && opt.d != 2) {
        std::size_t k = static_cast<std::size_t>(opt.d) * opt.d;
        if (opt.p.size() != k - 1) {
            throw CLI::ValidationError("--p", "ddim with d=" + std::to_string(opt.d) + " needs d^2-1 values");
        }
        std::vector<double> probs(k);
        double rest = 1.0;
        for (std::size_t e = 1; e < k; ++e) {
            probs[e] = opt.p[e - 1];
            rest -= opt.p[e - 1];
        }
        probs[0] = rest;
        gen.emplace(opt.d, std::move(probs));
    } else {
        if (opt.p.size() != 3) {
            throw CLI::ValidationError("--p", "qubit channels need three values p1,p2,p3");
        }
        qubit.emplace(std::array<double, 3>{opt.p[0], opt.p[1], opt.p[2]});
        if (scheme == "ddim") {
            gen = GenPauliParams::from_qubit(*qubit);
        }
    }

    // Rows are computed before the output is opened so a failing cell leaves no partial file.
    std::vector<std::vector<std::string>> rows;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [n, param] = cells[c];
        const SeedSpec seed{common.seed, static_cast<std::uint64_t>(c)};
        std::vector<double> shown_p = qubit ? std::vector<double>(qubit->p().begin(), qubit->p().end())
                                            : std::vector<double>(opt.p.begin(), opt.p.begin() + 3);
        ErrorReport report;
        if (scheme == "separable") {
            report.scheme = Scheme::Separable;
            report.closed_form = fbar(static_cast<double>(n), *qubit);
            report.monte_carlo = fbar_mc(n, *qubit, common.trials, seed, common.clip);
            if (!common.clip && std::pow(static_cast<double>(n + 1), 3) <= static_cast<double>(opt.oracle_cap)) {
                report.oracle = fbar_oracle(n, *qubit);
            }
        } else {
            Estimator estimator;
            std::optional<BellProbs> probs;
            std::vector<double> truth;
            if (scheme == "werner") {
                report.scheme = Scheme::Werner;
                report.closed_form = gbar_werner(static_cast<double>(n), param, *qubit);
                probs = bell_probs_closed(param, *qubit);
                estimator = [f = param](const OutcomeCounts &k) { return estimate_werner(k, f); };
                truth.assign(qubit->p().begin(), qubit->p().end());
            } else if (scheme == "belldiag") {
                BellDiagonal alpha({opt.alpha[0], opt.alpha[1], opt.alpha[2], opt.alpha[3]});
                report.scheme = Scheme::BellDiagonal;
                report.closed_form = gbar_belldiag(static_cast<double>(n), alpha, *qubit);
                probs = bell_probs_belldiag(alpha, *qubit);
                estimator = [alpha](const OutcomeCounts &k) { return estimate_belldiag(k, alpha); };
                truth.assign(qubit->p().begin(), qubit->p().end());
            } else if (scheme == "ddim") {
                report.scheme = Scheme::Ddim;
                report.closed_form = gbar_ddim(static_cast<double>(n), gen->d(), param, *gen);
                probs = gen_bell_probs_closed(gen->d(), param, *gen);
                estimator = DdimEstimator(gen->d(), param);
                truth = gen->nontrivial();
            } else {
                throw CLI::ValidationError("--scheme", "unknown scheme " + scheme);
            }
            Estimator run = estimator;
            if (common.clip) {
                run = [estimator](const OutcomeCounts &k) { return estimator(k).clip(); };
            }
            report.monte_carlo = gbar_mc(n, *probs, run, truth, common.trials, seed);
            if (!common.clip &&
                binomial_coefficient(n + static_cast<std::int64_t>(probs->size()) - 1,
                                     static_cast<std::int64_t>(probs->size()) - 1) <=
                    static_cast<double>(opt.oracle_cap)) {
                report.oracle = gbar_oracle(n, *probs, estimator, truth, opt.oracle_cap);
            }
        }
        rows.push_back({scheme_name(report.scheme), std::to_string(n), std::isnan(param) ? "" : format_double(param),
                 format_double(shown_p[0]), format_double(shown_p[1]), format_double(shown_p[2]),
                 format_double(report.closed_form), format_double(report.monte_carlo->mean),
                 format_double(report.monte_carlo->standard_error),
                 report.oracle ? format_double(*report.oracle) : ""});
    }
    Output sink(common.out, out);
    CsvWriter csv(sink.stream(),
                  {"scheme", "N", "F_or_lambda", "p1", "p2", "p3", "closed_form", "mc_mean", "mc_stderr", "oracle"});
    for (const auto &r : rows) {
        csv.row(r);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pauli channel estimation with noisy entangled probes"};
    app.name("pcest");
    app.require_subcommand(1);

    CommonOptions common;
    GainOptions gain_opt;
    ResourceOptions res_opt;
    BellDiagOptions bd_opt;
    SimulateOptions sim_opt;
    SimulateOptions ddim_opt;
    ddim_opt.scheme = "ddim";
    double tolerance = 1e-4;

    auto *gain_cmd = app.add_subcommand("gain", "Error gain f(R/3) - g_F(R/2) for symmetric channels");
    add_common(gain_cmd, common, false);
    gain_cmd->add_option("--F", gain_opt.fidelities, "Werner fidelities")->delimiter(',')->capture_default_str();
    gain_cmd->add_option("--p-min", gain_opt.p_min)->capture_default_str();
    gain_cmd->add_option("--p-max", gain_opt.p_max)->capture_default_str();
    gain_cmd->add_option("--steps", gain_opt.steps, "Grid intervals in p")->check(CLI::PositiveNumber);
    gain_cmd->add_option("--R", gain_opt.resources, "Total qubit resources (multiple of 6)")->capture_default_str();

    auto *res_cmd = app.add_subcommand("resources", "Resource difference R_f - R_g over (F, p)");
    add_common(res_cmd, common, false);
    res_cmd->add_option("--F-min", res_opt.f_min)->capture_default_str();
    res_cmd->add_option("--F-max", res_opt.f_max)->capture_default_str();
    res_cmd->add_option("--F-steps", res_opt.f_steps)->check(CLI::PositiveNumber);
    res_cmd->add_option("--p-min", res_opt.p_min)->capture_default_str();
    res_cmd->add_option("--p-max", res_opt.p_max)->capture_default_str();
    res_cmd->add_option("--steps", res_opt.steps, "Grid intervals in p")->check(CLI::PositiveNumber);
    res_cmd->add_option("--target-error", res_opt.target_error)->capture_default_str();

    auto *thr_cmd = app.add_subcommand("thresholds", "Separability, CHSH and resource fidelity thresholds");
    add_common(thr_cmd, common, false);
    thr_cmd->add_option("--tolerance", tolerance, "Bisection tolerance on F")->capture_default_str();

    auto *bd_cmd = app.add_subcommand("belldiag", "Channel-averaged error of Bell-diagonal probes");
    add_common(bd_cmd, common, false);
    bd_cmd->add_option("--alpha1", bd_opt.alpha1, "Fixed singlet weight")->capture_default_str();
    bd_cmd->add_option("--step", bd_opt.step, "Grid step in alpha2 and alpha3")->capture_default_str();
    bd_cmd->add_option("--N", bd_opt.shots, "Number of probe pairs")->capture_default_str();

    auto add_simulate = [&](CLI::App *cmd, SimulateOptions &opt, bool scheme_flag) {
        add_common(cmd, common, true);
        if (scheme_flag) {
            cmd->add_option("--scheme", opt.scheme)
                ->check(CLI::IsMember({"werner", "separable", "belldiag", "ddim"}))
                ->capture_default_str();
        }
        cmd->add_option("--N", opt.shots, "Shots (pairs, or per-setting shots for separable)")->delimiter(',');
        cmd->add_option("--F,--lambda", opt.fidelities, "Werner fidelity or isotropic lambda")->delimiter(',');
        cmd->add_option("--p", opt.p, "Channel error probabilities")->delimiter(',');
        cmd->add_option("--alpha", opt.alpha, "Bell-diagonal coefficients (psi-, psi+, phi-, phi+)")
            ->delimiter(',');
        cmd->add_option("--d", opt.d, "Local dimension for ddim")->check(CLI::Range(2, 8));
        cmd->add_option("--oracle-cap", opt.oracle_cap, "Largest outcome enumeration for the oracle column");
    };
    auto *sim_cmd = app.add_subcommand("simulate", "Closed form vs Monte Carlo vs exact oracle");
    add_simulate(sim_cmd, sim_opt, true);
    auto *ddim_cmd = app.add_subcommand("ddim", "simulate with scheme=ddim");
    add_simulate(ddim_cmd, ddim_opt, false);

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }

    set_worker_count(common.threads);
    CLI::App *chosen = app.get_subcommands().front();
    bool scalar = chosen == sim_cmd || chosen == ddim_cmd || chosen == thr_cmd;
    try {
        if (chosen == gain_cmd) {
            return cmd_gain(common, gain_opt, out);
        }
        if (chosen == res_cmd) {
            return cmd_resources(common, res_opt, out);
        }
        if (chosen == thr_cmd) {
            return cmd_thresholds(common, tolerance, out);
        }
        if (chosen == bd_cmd) {
            return cmd_belldiag(common, bd_opt, out, err);
        }
        return cmd_simulate(common, chosen == ddim_cmd ? ddim_opt : sim_opt, out);
    } catch (const NonIdentifiable &e) {
        err << "error: " << e.what() << '\n';
        return scalar ? kExitNonIdentifiable : kExitInvalidArguments;
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }
}

}  // namespace pcest
