// Copyright 2026 The randdual Authors
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

#include "randdual/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "randdual/channels.hpp"
#include "randdual/dual.hpp"
#include "randdual/errors.hpp"
#include "randdual/io.hpp"
#include "randdual/moments.hpp"
#include "randdual/spinchain.hpp"

namespace randdual {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Ties a CLI option to a config-file key. Explicit flags win over the file.
struct Binding {
    std::string key;
    CLI::Option* opt;
    std::function<void(const json&)> load;
    std::function<json()> dump;
};

class Params {
   public:
    explicit Params(CLI::App* app) : app_(app) {}

    template <class T>
    CLI::Option* option(const std::string& flags, const std::string& key, T& var, const std::string& help) {
        CLI::Option* opt = app_->add_option(flags, var, help)->capture_default_str();
        bind(key, opt, var);
        return opt;
    }

    CLI::Option* flag(const std::string& flags, const std::string& key, bool& var, const std::string& help) {
        CLI::Option* opt = app_->add_flag(flags, var, help);
        bind(key, opt, var);
        return opt;
    }

    void load_config(const json& cfg) {
        if (!cfg.is_object()) throw ConfigError("config file must hold a JSON object");
        for (const auto& [key, value] : cfg.items()) {
            auto it = std::find_if(bindings_.begin(), bindings_.end(),
                                   [&](const Binding& b) { return b.key == key; });
            if (it == bindings_.end()) {
                throw ConfigError("unknown config field \"" + key + "\" for " + app_->get_name());
            }
            if (it->opt->count() == 0) it->load(value);
        }
    }

    [[nodiscard]] json resolved() const {
        json out = json::object();
        for (const auto& b : bindings_) out[b.key] = b.dump();
        return out;
    }

   private:
    template <class T>
    void bind(const std::string& key, CLI::Option* opt, T& var) {
        bindings_.push_back({key, opt,
                             [&var, key](const json& j) {
                                 try {
                                     var = j.get<T>();
                                 } catch (const json::exception& e) {
                                     throw ConfigError("config field \"" + key + "\": " + e.what());
                                 }
                             },
                             [&var] { return json(var); }});
    }

    CLI::App* app_;
    std::vector<Binding> bindings_;
};

struct Common {
    std::uint64_t seed = 0;
    std::string output_dir = ".";
    std::string config_path;
    bool force = false;
};

struct Outputs {
    std::vector<std::pair<std::string, std::string>> files;  // name, content

    void add(std::string name, std::string content) { files.emplace_back(std::move(name), std::move(content)); }
};

void add_common(CLI::App* sub, Params& p, Common& c, bool seeded) {
    if (seeded) p.option("--seed", "seed", c.seed, "Master seed");
    sub->add_option("--output-dir", c.output_dir, "Directory for output files")->capture_default_str();
    sub->add_option("--config", c.config_path, "JSON config; explicit flags take precedence");
    sub->add_flag("--force", c.force, "Lift the resource caps");
}

void apply_config(Params& p, const Common& c) {
    if (!c.config_path.empty()) p.load_config(read_json_file(c.config_path));
}

ComplexMatrix load_observable(const std::string& spec, const char* what) {
    if (spec.empty()) throw ConfigError(std::string("missing observable ") + what);
    const auto first = spec.find_first_not_of(" \t\n");
    json j;
    if (first != std::string::npos && spec[first] == '[') {
        try {
            j = json::parse(spec);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("observable ") + what + ": " + e.what());
        }
    } else {
        j = read_json_file(spec);
    }
    ComplexMatrix m = matrix_from_json(j);
    require_hermitian(m, what);
    return m;
}

QuantumChannel load_channel(const std::string& path, Check check, json& config) {
    if (path.empty()) throw ConfigError("missing --channel");
    const std::string text = read_text_file(path);
    config["channel_sha256"] = sha256_hex(text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return channel_from_json(j, check);
}

void check_unitary_cap(Index d_u, const Common& c) {
    if (d_u > kCliMaxUnitaryDim && !c.force) {
        const double mib = std::pow(static_cast<double>(d_u), 2.0) * 16.0 / (1024.0 * 1024.0);
        throw ResourceError("dilation dimension " + std::to_string(d_u) + " exceeds " +
                            std::to_string(kCliMaxUnitaryDim) + " (one dense unitary needs ~" +
                            std::to_string(static_cast<long>(std::ceil(mib))) + " MiB); pass --force");
    }
}

void check_spin_cap(int n, const Common& c) {
    if (n > kCliMaxSpins && !c.force) {
        const double mib = std::pow(2.0, 2.0 * n) * 16.0 / (1024.0 * 1024.0);
        throw ResourceError("n = " + std::to_string(n) + " exceeds " + std::to_string(kCliMaxSpins) +
                            " spins (one dense propagator needs ~" +
                            std::to_string(static_cast<long>(std::ceil(mib))) + " MiB); pass --force");
    }
}

std::string num(double v) { return format_number(v); }

std::string distance_csv(const std::vector<ScalingRow>& rows) {
    CsvTable t({"N", "trial", "hs_distance", "trace_distance", "bound"});
    for (const auto& r : rows) {
        t.add_row({std::to_string(r.n), std::to_string(r.trial), num(r.hs_distance), num(r.trace_distance),
                   num(r.bound)});
    }
    return t.to_string();
}

json report_json(const EstimatorReport& r) {
    json out;
    out["estimate"] = number_or_null(r.estimate);
    out["sigma"] = number_or_null(r.empirical_sigma);
    out["sigma_n"] = number_or_null(r.sigma_n);
    out["confidence_radius"] = number_or_null(r.confidence_radius());
    out["sigma_bound"] = r.analytic_sigma_bound ? number_or_null(*r.analytic_sigma_bound) : json(nullptr);
    return out;
}

// ---------------------------------------------------------------- inspect

struct InspectCmd {
    Common common;
    std::string channel;

    void setup(CLI::App* sub, Params& p) {
        p.option("channel,--channel", "channel", channel, "Channel spec JSON file");
        add_common(sub, p, common, false);
    }

    int run(json& config, Outputs& outputs, std::ostream& out, std::ostream& err) {
        const QuantumChannel ch = load_channel(channel, Check::skip, config);
        check_unitary_cap(ch.d_a() * ch.d_b(), common);
        const ChannelDiagnostics diag = validate(ch);
        const ChoiMatrix choi = choi_matrix(ch);
        const RealVector eig = hermitian_eigenvalues(0.5 * (choi.matrix + choi.matrix.adjoint()));

        json report;
        report["kind"] = std::string(to_string(ch.kind()));
        report["d_a"] = ch.d_a();
        report["d_b"] = ch.d_b();
        report["kraus_rank"] = diag.kraus_rank;
        report["trace_preservation_residual"] = diag.trace_preservation_residual;
        report["choi_min_eigenvalue"] = diag.choi_min_eigenvalue;
        report["choi_trace_residual"] = diag.choi_trace_residual;
        report["unitarity_residual"] =
            diag.unitarity_residual ? json(*diag.unitarity_residual) : json(nullptr);
        json spectrum = json::array();
        for (Index k = eig.size() - 1; k >= 0; --k) spectrum.push_back(eig(k));
        report["choi_spectrum"] = spectrum;
        report["ok"] = diag.ok();
        outputs.add("inspect.json", report.dump(2) + "\n");

        out << "kind: " << to_string(ch.kind()) << "  d_a: " << ch.d_a() << "  d_b: " << ch.d_b() << "\n";
        out << "kraus rank: " << diag.kraus_rank << "\n";
        out << "trace-preservation residual: " << num(diag.trace_preservation_residual) << "\n";
        out << "choi min eigenvalue: " << num(diag.choi_min_eigenvalue) << "\n";
        out << "choi trace residual: " << num(diag.choi_trace_residual) << "\n";
        if (diag.unitarity_residual) out << "unitarity residual: " << num(*diag.unitarity_residual) << "\n";
        out << "choi spectrum:";
        for (const auto& v : spectrum) out << " " << num(v.get<double>());
        out << "\n";
        if (!diag.ok()) {
            err << "channel is not CPTP within " << num(kChannelTol) << "\n";
            return kExitValidation;
        }
        return kExitOk;
    }
};

// ---------------------------------------------------------------- estimate

struct EstimateCmd {
    Common common;
    std::string channel;
    std::string observable_a;
    std::string observable_b;
    std::int64_t n_samples = 1000;

    void setup(CLI::App* sub, Params& p) {
        p.option("--channel", "channel", channel, "Channel spec JSON file");
        p.option("--observable-a", "observable_a", observable_a, "Input observable: JSON matrix or file");
        p.option("--observable-b", "observable_b", observable_b, "Output observable: JSON matrix or file");
        p.option("--n-samples", "n_samples", n_samples, "Number of dual states N");
        add_common(sub, p, common, true);
    }

    int run(json& config, Outputs& outputs, std::ostream& out, std::ostream&) {
        if (n_samples < 2) throw ConfigError("--n-samples must be >= 2");
        const QuantumChannel ch = load_channel(channel, Check::enforce, config);
        const ComplexMatrix a = load_observable(observable_a, "A");
        const ComplexMatrix b = load_observable(observable_b, "B");
        if (a.rows() != ch.d_a() || b.rows() != ch.d_b()) {
            throw ConfigError("observable dimensions do not match the channel");
        }
        check_unitary_cap(dilation_dimension(ch), common);
        const bool induced = ch.kind() == ChannelKind::unitary_induced;
        const DualStateEnsemble ens = induced ? sample_dual_ensemble(ch, n_samples, common.seed)
                                              : general_dual_ensemble(ch, n_samples, common.seed);
        const EstimatorReport report = estimate_observable(ch, ens, a, b);
        const double exact = (apply(ch, a) * b).trace().real();

        json j = report_json(report);
        j["exact"] = exact;
        j["n_samples"] = n_samples;
        j["ensemble"] = induced ? "unitary_induced" : "general_postselected";
        outputs.add("estimate.json", j.dump(2) + "\n");
        out << "estimate " << num(report.estimate) << " +- " << num(report.confidence_radius()) << " (exact "
            << num(exact) << ")\n";
        return kExitOk;
    }
};

// ---------------------------------------------------------------- dual-distance

struct DistanceCmd {
    Common common;
    std::string channel;
    std::vector<std::int64_t> n_values{10, 50, 100, 500};
    std::int64_t trials = 20;

    void setup(CLI::App* sub, Params& p) {
        p.option("--channel", "channel", channel, "Channel spec JSON file");
        p.option("--n-values", "N_values", n_values, "Comma-separated ensemble sizes")->delimiter(',');
        p.option("--trials", "trials", trials, "Trials per ensemble size");
        add_common(sub, p, common, true);
    }

    int run(json& config, Outputs& outputs, std::ostream& out, std::ostream&) {
        if (trials < 1) throw ConfigError("--trials must be >= 1");
        if (n_values.empty() || *std::min_element(n_values.begin(), n_values.end()) < 1) {
            throw ConfigError("--n-values must be positive");
        }
        const QuantumChannel ch = load_channel(channel, Check::enforce, config);
        check_unitary_cap(dilation_dimension(ch), common);
        const ComplexMatrix exact = dual_from_choi(choi_matrix(ch));
        const auto rows = distance_sweep(ch, exact, n_values, trials, common.seed);
        outputs.add("dual_distance.csv", distance_csv(rows));
        for (const auto& s : summarize_scaling(rows)) {
            out << "N=" << s.n << " mean hs " << num(s.mean_hs) << " (1/sqrt(N) = "
                << num(1.0 / std::sqrt(static_cast<double>(s.n))) << ")\n";
        }
        return kExitOk;
    }
};

// ---------------------------------------------------------------- otoc

struct OtocCmd {
    Common common;
    std::string channel;
    std::string observable_a;
    std::string observable_b;
    std::int64_t pairs = 10000;
    bool all_pairs = false;

    void setup(CLI::App* sub, Params& p) {
        p.option("--channel", "channel", channel, "Unitary-induced channel spec JSON file");
        p.option("--observable-a", "observable_a", observable_a, "Input observable: JSON matrix or file");
        p.option("--observable-b", "observable_b", observable_b,
                 "Computational-basis rank-1 projector on the output: JSON matrix or file");
        p.option("--pairs", "pairs", pairs, "Number of disjoint sample pairs (2 * pairs dual states)");
        p.flag("--all-pairs", "all_pairs", all_pairs, "Average over every pair of the 2 * pairs states");
        add_common(sub, p, common, true);
    }

    int run(json& config, Outputs& outputs, std::ostream& out, std::ostream&) {
        if (pairs < 1) throw ConfigError("--pairs must be >= 1");
        const QuantumChannel ch = load_channel(channel, Check::enforce, config);
        check_unitary_cap(dilation_dimension(ch), common);
        const OtocSpec spec(ch, load_observable(observable_a, "A"), load_observable(observable_b, "B"), true);
        const DualStateEnsemble ens = sample_dual_ensemble(ch, 2 * pairs, common.seed);
        const EstimatorReport report =
            otoc_estimate(spec, ens, all_pairs ? PairingStrategy::all_pairs : PairingStrategy::disjoint);
        const double exact = otoc_exact(spec);

        json j;
        j["estimate"] = number_or_null(report.estimate);
        j["exact"] = exact;
        j["sigma"] = number_or_null(report.empirical_sigma);
        j["sigma_n"] = number_or_null(report.sigma_n);
        j["pairs"] = report.n;
        j["strategy"] = all_pairs ? "all_pairs" : "disjoint";
        outputs.add("otoc.json", j.dump(2) + "\n");
        out << "otoc estimate " << num(report.estimate) << " (exact " << num(exact) << ", pairs " << report.n
            << ")\n";
        return kExitOk;
    }
};

// ---------------------------------------------------------------- thermalize

struct ThermalizeCmd {
    Common common;
    int n = 8;
    double g = 1.05;
    double h = 0.5;
    std::string pol = "z";
    std::string observable = "auto";
    std::vector<double> times;
    double t_max = 10.0;
    double dt = 0.25;
    std::int64_t n_samples = 200;

    void setup(CLI::App* sub, Params& p) {
        p.option("--n", "n", n, "Number of spins");
        p.option("--g", "g", g, "Transverse field");
        p.option("--h", "h", h, "Longitudinal field");
        p.option("--pol", "polarization", pol, "Initial polarization: z or y");
        p.option("--observable", "observable", observable, "First-spin observable: z, y or auto (= pol)");
        p.option("--times", "times", times, "Comma-separated time grid (overrides --t-max/--dt)")
            ->delimiter(',');
        p.option("--t-max", "t_max", t_max, "Last time of the default grid");
        p.option("--dt", "dt", dt, "Step of the default grid");
        p.option("--n-samples", "n_samples", n_samples, "Dual states per time point");
        add_common(sub, p, common, true);
    }

    static Polarization parse_pol(const std::string& s) {
        if (s == "z" || s == "Z") return Polarization::z;
        if (s == "y" || s == "Y") return Polarization::y;
        throw ConfigError("polarization must be z or y, got \"" + s + "\"");
    }

    void resolve() {
        if (observable == "auto") observable = pol;
        if (times.empty()) {
            if (!(dt > 0.0) || !(t_max >= 0.0)) throw ConfigError("--dt must be > 0 and --t-max >= 0");
            const auto steps = static_cast<std::int64_t>(std::floor(t_max / dt + 1e-9));
            for (std::int64_t k = 0; k <= steps; ++k) times.push_back(dt * static_cast<double>(k));
        }
    }

    int run(json&, Outputs& outputs, std::ostream& out, std::ostream&) {
        check_spin_cap(n, common);
        ThermalizationRun run;
        run.config = {n, g, h};
        run.polarization = parse_pol(pol);
        run.observable =
            parse_pol(observable) == Polarization::z ? SpinObservable::sigma_z : SpinObservable::sigma_y;
        run.times = times;
        run.n_samples = n_samples;
        run.seed = common.seed;
        run.max_spins = std::max(n, kCliMaxSpins);
        const auto rows = thermalization_experiment(run);

        CsvTable t({"time", "exact", "estimate", "sigma", "sigma_n", "bound", "sigma_bound"});
        std::size_t covered = 0;
        for (const auto& r : rows) {
            t.add_row({num(r.time), num(r.exact), num(r.estimate), num(r.sigma), num(r.sigma_n), num(r.bound),
                       num(r.sigma_bound)});
            if (std::abs(r.estimate - r.exact) <= r.bound) ++covered;
        }
        outputs.add("thermalize.csv", t.to_string());
        out << "time points within 3 sigma_N: " << covered << "/" << rows.size() << "\n";
        return kExitOk;
    }
};

// ---------------------------------------------------------------- scaling

struct ScalingCmd {
    Common common;
    int n = 6;
    int n_a = 0;  // 0 selects n
    int n_b = 1;
    double g = 1.05;
    double h = 0.5;
    double t = 4.0;
    std::vector<std::int64_t> n_values{10, 50, 100, 500};
    std::int64_t trials = 20;

    void setup(CLI::App* sub, Params& p) {
        p.option("--n", "n", n, "Number of spins");
        p.option("--na", "n_a", n_a, "Input spins (first n_a; 0 selects n)");
        p.option("--nb", "n_b", n_b, "Output spins (first n_b)");
        p.option("--g", "g", g, "Transverse field");
        p.option("--h", "h", h, "Longitudinal field");
        p.option("--t", "t", t, "Evolution time");
        p.option("--n-values", "N_values", n_values, "Comma-separated ensemble sizes")->delimiter(',');
        p.option("--trials", "trials", trials, "Trials per ensemble size");
        add_common(sub, p, common, true);
    }

    void resolve() {
        if (n_a == 0) n_a = n;
    }

    int run(json&, Outputs& outputs, std::ostream& out, std::ostream&) {
        check_spin_cap(n, common);
        ScalingConfig cfg;
        cfg.config = {n, g, h};
        cfg.n_a = n_a;
        cfg.n_b = n_b;
        cfg.t = t;
        cfg.n_values = n_values;
        cfg.trials = trials;
        cfg.seed = common.seed;
        cfg.max_spins = std::max(n, kCliMaxSpins);
        const auto rows = distance_scaling_experiment(cfg);
        outputs.add("scaling.csv", distance_csv(rows));

        const auto summary = summarize_scaling(rows);
        CsvTable t({"N", "mean_hs", "mean_hs_squared", "mean_trace", "bound"});
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto& s : summary) {
            const double bound = 1.0 / std::sqrt(static_cast<double>(s.n));
            t.add_row({std::to_string(s.n), num(s.mean_hs), num(s.mean_hs_squared), num(s.mean_trace), num(bound)});
            xs.push_back(static_cast<double>(s.n));
            ys.push_back(s.mean_hs);
        }
        outputs.add("scaling_summary.csv", t.to_string());
        if (xs.size() >= 2) out << "log-log slope of mean hs distance: " << num(loglog_slope(xs, ys)) << "\n";
        return kExitOk;
    }
};

int write_outputs(const std::string& command, const Common& common, json config, const Outputs& outputs,
                  double seconds, bool seeded) {
    const fs::path dir(common.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
    RunManifest manifest;
    manifest.command = command;
    manifest.config = std::move(config);
    manifest.seed = seeded ? common.seed : 0;
    manifest.wall_clock_seconds = seconds;
    for (const auto& [name, content] : outputs.files) {
        write_text_file(dir / name, content);
        manifest.output_digests[name] = sha256_hex(content);
    }
    write_text_file(dir / (command + ".manifest.json"), manifest.to_json().dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Randomized channel-state duality toolkit", "randdual"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", std::string(kLibraryVersion));
    app.require_subcommand(1);

    InspectCmd inspect;
    EstimateCmd estimate;
    DistanceCmd distance;
    OtocCmd otoc;
    ThermalizeCmd thermalize;
    ScalingCmd scaling;

    auto* s_inspect = app.add_subcommand("inspect", "CPTP residuals, Kraus rank and Choi spectrum of a channel");
    s_inspect->alias("channel-inspect");
    auto* s_estimate = app.add_subcommand("estimate", "Estimate tr[X(A) B] from randomized dual states");
    auto* s_distance = app.add_subcommand("dual-distance", "Distance of the rank-N estimator to the exact dual");
    auto* s_otoc = app.add_subcommand("otoc", "Pair estimator of the infinite-temperature OTOC");
    auto* s_therm = app.add_subcommand("thermalize", "Single-spin relaxation on the Ising chain");
    auto* s_scaling = app.add_subcommand("scaling", "Estimator distance scaling on the Ising chain");

    Params p_inspect(s_inspect);
    Params p_estimate(s_estimate);
    Params p_distance(s_distance);
    Params p_otoc(s_otoc);
    Params p_therm(s_therm);
    Params p_scaling(s_scaling);
    inspect.setup(s_inspect, p_inspect);
    estimate.setup(s_estimate, p_estimate);
    distance.setup(s_distance, p_distance);
    otoc.setup(s_otoc, p_otoc);
    thermalize.setup(s_therm, p_therm);
    scaling.setup(s_scaling, p_scaling);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        auto finish = [&](const std::string& name, const Common& c, Params& p, json config, const Outputs& o,
                          int status, bool seeded) {
            json resolved = p.resolved();
            for (const auto& [k, v] : config.items()) resolved[k] = v;
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            write_outputs(name, c, std::move(resolved), o, secs, seeded);
            return status;
        };
        json extra = json::object();
        Outputs outputs;
        if (s_inspect->parsed()) {
            apply_config(p_inspect, inspect.common);
            const int status = inspect.run(extra, outputs, out, err);
            return finish("inspect", inspect.common, p_inspect, extra, outputs, status, false);
        }
        if (s_estimate->parsed()) {
            apply_config(p_estimate, estimate.common);
            const int status = estimate.run(extra, outputs, out, err);
            return finish("estimate", estimate.common, p_estimate, extra, outputs, status, true);
        }
        if (s_distance->parsed()) {
            apply_config(p_distance, distance.common);
            const int status = distance.run(extra, outputs, out, err);
            return finish("dual-distance", distance.common, p_distance, extra, outputs, status, true);
        }
        if (s_otoc->parsed()) {
            apply_config(p_otoc, otoc.common);
            const int status = otoc.run(extra, outputs, out, err);
            return finish("otoc", otoc.common, p_otoc, extra, outputs, status, true);
        }
        if (s_therm->parsed()) {
            apply_config(p_therm, thermalize.common);
            thermalize.resolve();
            const int status = thermalize.run(extra, outputs, out, err);
            return finish("thermalize", thermalize.common, p_therm, extra, outputs, status, true);
        }
        if (s_scaling->parsed()) {
            apply_config(p_scaling, scaling.common);
            scaling.resolve();
            const int status = scaling.run(extra, outputs, out, err);
            return finish("scaling", scaling.common, p_scaling, extra, outputs, status, true);
        }
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ValidationError& e) {
        err << "validation failure: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace randdual
