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

#include "randdual/spinchain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "randdual/dual.hpp"
#include "randdual/errors.hpp"
#include "randdual/parallel.hpp"
#include "randdual/random.hpp"

namespace randdual {

namespace {

Index qubit_dim(int spins) { return Index{1} << spins; }

void check_spin_budget(int n, int max_spins) {
    if (n > max_spins) {
        const double bytes = std::pow(2.0, 2.0 * n) * 16.0;
        throw ResourceError("spin chain with n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(max_spins) + " spins (one dense propagator needs ~" +
                            std::to_string(bytes / (1024.0 * 1024.0)) + " MiB)");
    }
}

}  // namespace

void IsingConfig::validate() const {
    if (n < 2) throw ConfigError("Ising chain needs n >= 2 spins");
    if (g == 0.0 && h == 0.0) throw ConfigError("Ising chain needs g and h not both zero");
}

std::string_view to_string(Polarization p) { return p == Polarization::z ? "z" : "y"; }

std::string_view to_string(SpinObservable o) {
    return o == SpinObservable::sigma_z ? "sigma_z" : "sigma_y";
}

ComplexMatrix ising_hamiltonian(const IsingConfig& cfg, int max_spins) {
    cfg.validate();
    check_spin_budget(cfg.n, max_spins);
    const Index dim = qubit_dim(cfg.n);
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    // Site i (0-based) is bit (n - 1 - i): site 0 is the slowest index.
    auto spin = [&](Index state, int site) {
        return ((state >> (cfg.n - 1 - site)) & 1) ? -1.0 : 1.0;
    };
    for (Index s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int i = 0; i + 1 < cfg.n; ++i) diag -= spin(s, i) * spin(s, i + 1);
        for (int i = 0; i < cfg.n; ++i) diag -= cfg.h * spin(s, i);
        h(s, s) = diag;
        for (int i = 0; i < cfg.n; ++i) h(s ^ (Index{1} << (cfg.n - 1 - i)), s) -= cfg.g;
    }
    return h;
}

ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t) { return herm_expm(h, t); }

StateVector polarized_state(int n, Polarization p) {
    if (n < 1) throw std::invalid_argument("polarized_state: n must be >= 1");
    StateVector site(2);
    if (p == Polarization::z) {
        site << 1.0, 0.0;
    } else {
        site << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
    }
    StateVector out = site;
    for (int i = 1; i < n; ++i) out = kron(out, site);
    return out;
}

ComplexMatrix first_spin_observable(SpinObservable o) {
    return o == SpinObservable::sigma_z ? pauli_z() : pauli_y();
}

std::vector<double> default_time_grid() {
    std::vector<double> t;
    for (int k = 0; k <= 40; ++k) t.push_back(0.25 * k);
    return t;
}

void ThermalizationRun::validate() const {
    config.validate();
    if (times.empty()) throw ConfigError("thermalization run needs at least one time point");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!(times[k] >= 0.0) || !std::isfinite(times[k])) {
            throw ConfigError("times must be finite and nonnegative");
        }
        if (k > 0 && !(times[k] > times[k - 1])) throw ConfigError("times must be strictly increasing");
    }
    if (n_samples < 2) throw ConfigError("thermalization run needs N >= 2 samples");
}

std::vector<ThermalizationRow> thermalization_experiment(const ThermalizationRun& run) {
    run.validate();
    const ComplexMatrix h = ising_hamiltonian(run.config, run.max_spins);
    const HermitianPropagator prop(h);
    const StateVector psi0 = polarized_state(run.config.n, run.polarization);
    const ComplexMatrix a = psi0 * psi0.adjoint();
    const ComplexMatrix b = first_spin_observable(run.observable);
    const Index d_c = qubit_dim(run.config.n - 1);
    const ComplexMatrix b_lifted = kron(b, identity(d_c));

    std::vector<ThermalizationRow> rows;
    rows.reserve(run.times.size());
    for (std::size_t j = 0; j < run.times.size(); ++j) {
        const double t = run.times[j];
        const StateVector evolved = prop.apply(t, psi0);
        ThermalizationRow row;
        row.time = t;
        row.exact = evolved.dot(b_lifted * evolved).real();

        const QuantumChannel ch = QuantumChannel::unitary_induced(prop.at(t), 2);
        const DualStateEnsemble ens = sample_dual_ensemble(ch, run.n_samples, derive_seed(run.seed, j));
        const EstimatorReport report = estimate_observable(ch, ens, a, b);
        row.estimate = report.estimate;
        row.sigma = report.empirical_sigma;
        row.sigma_n = report.sigma_n;
        row.bound = report.confidence_radius();
        row.sigma_bound = report.analytic_sigma_bound.value_or(0.0);
        rows.push_back(row);
    }
    return rows;
}

void ScalingConfig::validate() const {
    config.validate();
    if (n_a < 1 || n_a > config.n) throw ConfigError("n_a must lie in [1, n]");
    if (n_b < 1 || n_b > config.n) throw ConfigError("n_b must lie in [1, n]");
    if (!std::isfinite(t)) throw ConfigError("evolution time must be finite");
    if (n_values.empty()) throw ConfigError("scaling sweep needs at least one N value");
    for (auto v : n_values) {
        if (v < 1) throw ConfigError("N values must be >= 1");
    }
    if (trials < 1) throw ConfigError("trials must be >= 1");
}

QuantumChannel spin_chain_channel(const ScalingConfig& cfg) {
    cfg.validate();
    const ComplexMatrix u = evolve_unitary(ising_hamiltonian(cfg.config, cfg.max_spins), cfg.t);
    const Index d_b = qubit_dim(cfg.n_b);
    if (cfg.n_a == cfg.config.n) return QuantumChannel::unitary_induced(u, d_b);
    return QuantumChannel::dilated(u, qubit_dim(cfg.n_a), d_b);
}

ComplexMatrix spin_chain_exact_dual(const QuantumChannel& ch) { return dual_from_choi(choi_matrix(ch)); }

std::vector<ScalingRow> distance_sweep(const QuantumChannel& ch, const ComplexMatrix& exact,
                                       const std::vector<std::int64_t>& n_values, std::int64_t trials,
                                       std::uint64_t seed) {
    if (n_values.empty() || trials < 1) throw std::invalid_argument("distance_sweep: empty sweep");
    const bool induced = ch.kind() == ChannelKind::unitary_induced;
    const QuantumChannel source = induced || ch.kind() == ChannelKind::dilated ? ch : stinespring_dilate(ch);

    const auto per_value = static_cast<std::size_t>(trials);
    std::vector<ScalingRow> rows(n_values.size() * per_value);
    parallel_for(rows.size(), [&](std::size_t task) {
        const std::size_t i = task / per_value;
        const std::size_t j = task % per_value;
        const Index n = n_values[i];
        const std::uint64_t s = derive_seed(seed, task);
        const DualStateEnsemble ens =
            induced ? sample_dual_ensemble(source, n, s) : general_dual_ensemble(source, n, s);
        const DistanceReport d = distance_report(ens, exact);
        rows[task] = {n, static_cast<std::int64_t>(j), d.hs, d.trace, d.bound};
    });
    return rows;
}

std::vector<ScalingRow> distance_scaling_experiment(const ScalingConfig& cfg) {
    const QuantumChannel ch = spin_chain_channel(cfg);
    return distance_sweep(ch, spin_chain_exact_dual(ch), cfg.n_values, cfg.trials, cfg.seed);
}

std::vector<ScalingSummary> summarize_scaling(const std::vector<ScalingRow>& rows) {
    std::vector<ScalingSummary> out;
    std::vector<std::int64_t> counts;
    for (const auto& r : rows) {
        std::size_t k = 0;
        while (k < out.size() && out[k].n != r.n) ++k;
        if (k == out.size()) {
            out.push_back({r.n, 0.0, 0.0, 0.0});
            counts.push_back(0);
        }
        out[k].mean_hs += r.hs_distance;
        out[k].mean_hs_squared += r.hs_distance * r.hs_distance;
        out[k].mean_trace += r.trace_distance;
        ++counts[k];
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        const auto c = static_cast<double>(counts[k]);
        out[k].mean_hs /= c;
        out[k].mean_hs_squared /= c;
        out[k].mean_trace /= c;
    }
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("loglog_slope: need at least two matching points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] > 0.0) || !(y[k] > 0.0)) throw std::invalid_argument("loglog_slope: values must be positive");
        mx += std::log(x[k]);
        my += std::log(y[k]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = std::log(x[k]) - mx;
        sxy += dx * (std::log(y[k]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("loglog_slope: x values are all equal");
    return sxy / sxx;
}

}  // namespace randdual
