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

// Experiments on the open-boundary Ising chain with transverse and
// longitudinal fields,
//
//     H = - sum_{i=1}^{n-1} Z_i Z_{i+1} - g sum_i X_i - h sum_i Z_i,
//
// with site 1 as the slowest-varying qubit index.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "randdual/channels.hpp"
#include "randdual/linalg.hpp"

namespace randdual {

inline constexpr int kDefaultMaxSpins = 12;

struct IsingConfig {
    int n = 8;
    double g = 1.05;
    double h = 0.5;

    /// Throws ConfigError for n < 2 or g == h == 0.
    void validate() const;
};

enum class Polarization { z, y };
enum class SpinObservable { sigma_z, sigma_y };

std::string_view to_string(Polarization p);
std::string_view to_string(SpinObservable o);

/// Throws ResourceError when cfg.n exceeds max_spins.
ComplexMatrix ising_hamiltonian(const IsingConfig& cfg, int max_spins = kDefaultMaxSpins);

ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t);

/// |up_z>^n = |0...0> or |up_y>^n with |up_y> = (|0> + i|1>)/sqrt(2).
StateVector polarized_state(int n, Polarization p);

/// Pauli operator on the first spin as a 2x2 matrix.
ComplexMatrix first_spin_observable(SpinObservable o);

/// Default grid 0, 0.25, ..., 10.
std::vector<double> default_time_grid();

struct ThermalizationRun {
    IsingConfig config;
    Polarization polarization = Polarization::z;
    SpinObservable observable = SpinObservable::sigma_z;
    std::vector<double> times = default_time_grid();
    std::int64_t n_samples = 200;
    std::uint64_t seed = 0;
    int max_spins = kDefaultMaxSpins;

    /// Throws ConfigError on an invalid grid or sample count.
    void validate() const;
};

struct ThermalizationRow {
    double time = 0.0;
    double exact = 0.0;
    double estimate = 0.0;
    double sigma = 0.0;        // empirical per-sample standard deviation
    double sigma_n = 0.0;      // sigma / sqrt(N)
    double bound = 0.0;        // 3 * sigma_n
    double sigma_bound = 0.0;  // analytic per-sample sigma bound
};

/// Exact single-spin expectation vs the randomized dual-state estimate at
/// every time. Time point j draws its ensemble from derive_seed(seed, j).
std::vector<ThermalizationRow> thermalization_experiment(const ThermalizationRun& run);

struct ScalingConfig {
    IsingConfig config{6, 1.05, 0.5};
    int n_a = 6;  // input: first n_a spins; the rest start in |0>
    int n_b = 1;  // output: first n_b spins
    double t = 4.0;
    std::vector<std::int64_t> n_values{10, 50, 100, 500};
    std::int64_t trials = 20;
    std::uint64_t seed = 0;
    int max_spins = kDefaultMaxSpins;

    void validate() const;
};

struct ScalingRow {
    std::int64_t n = 0;
    std::int64_t trial = 0;
    double hs_distance = 0.0;
    double trace_distance = 0.0;
    double bound = 0.0;  // 1 / sqrt(N)
};

/// Channel of exp(-iHt) with input the first n_a spins (others fixed to |0>)
/// and output the first n_b spins; unitary-induced when n_a == n.
QuantumChannel spin_chain_channel(const ScalingConfig& cfg);

/// Exact dual state for the scaling channel via the transposed Choi matrix.
ComplexMatrix spin_chain_exact_dual(const QuantumChannel& ch);

/// Distance between the rank-N estimator of `ch` and `exact` for every
/// (N, trial). Trial j of the i-th value draws from derive_seed(seed, i *
/// trials + j). Kraus channels are dilated once up front.
std::vector<ScalingRow> distance_sweep(const QuantumChannel& ch, const ComplexMatrix& exact,
                                       const std::vector<std::int64_t>& n_values, std::int64_t trials,
                                       std::uint64_t seed);

/// distance_sweep over spin_chain_channel(cfg).
std::vector<ScalingRow> distance_scaling_experiment(const ScalingConfig& cfg);

struct ScalingSummary {
    std::int64_t n = 0;
    double mean_hs = 0.0;
    double mean_hs_squared = 0.0;
    double mean_trace = 0.0;
};

std::vector<ScalingSummary> summarize_scaling(const std::vector<ScalingRow>& rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace randdual
