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

// Randomized dual states of quantum channels.
//
// A unitary-induced channel X(rho) = tr_c[U rho U^dag] is represented by the
// pure states
//
//     |Psi> = (I_b' (x) U^dag) (|phi+>_{b'b} (x) |psi>_c),   |psi> Haar on H_c,
//
// whose first moment rho_X is an exact dual state:
//
//     tr[X(A) B] = d_a * tr[rho_X (B^t (x) A)].
//
// All dual states here use the layout (ancilla copy H_b', input H_a), so the
// observable B sits first and is transposed. The averaged rank-N estimator
// (1/N) sum_k |Psi_k><Psi_k| approaches rho_X with mean Hilbert-Schmidt error
// at most 1/sqrt(N).
//
// General channels are first dilated; projecting the ancilla of each sample
// onto its reference state and rescaling by 1/c0, c0 = sqrt(d_a / d_U), gives
// states |Phi> whose first moment is again an exact dual state. Those states
// are unnormalized; only their mean squared norm is one.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "randdual/channels.hpp"
#include "randdual/linalg.hpp"
#include "randdual/random.hpp"

namespace randdual {

enum class EnsembleKind { unitary_induced, general_postselected };

struct DualStateEnsemble {
    std::vector<StateVector> states;  // each of length d_b * d_a, layout (b', a)
    EnsembleKind kind = EnsembleKind::unitary_induced;
    std::uint64_t master_seed = 0;
    Index d_a = 0;
    Index d_b = 0;
    Index d_c = 0;  // environment dimension of the (dilated) unitary

    [[nodiscard]] Index size() const { return static_cast<Index>(states.size()); }
};

struct EstimatorReport {
    double estimate = 0.0;
    double empirical_sigma = 0.0;  // unbiased (N-1) sample standard deviation
    std::optional<double> analytic_sigma_bound;
    double sigma_n = 0.0;  // empirical_sigma / sqrt(N)
    Index n = 0;

    [[nodiscard]] double confidence_radius() const { return 3.0 * sigma_n; }
};

struct DistanceReport {
    double hs = 0.0;
    double trace = 0.0;
    double bound = 0.0;  // 1 / sqrt(N)
};

/// One randomized dual state of a unitary-induced channel.
StateVector sample_dual_state(const QuantumChannel& ch, SeedSpec seed);

/// N dual states of a unitary-induced channel; sample k uses {master_seed, k}.
DualStateEnsemble sample_dual_ensemble(const QuantumChannel& ch, Index n,
                                       std::uint64_t master_seed);

/// Closed-form first moment (1/d_c) (I (x) U^dag)(|phi+><phi+| (x) I_c)(I (x) U).
ComplexMatrix exact_dual_state(const QuantumChannel& ch);

/// Exact dual state of any channel: the transposed Choi matrix with its two
/// factors swapped into the (output copy, input) layout.
ComplexMatrix dual_from_choi(const ChoiMatrix& sigma);

/// (1/N) sum_k |Psi_k><Psi_k|, accumulated in sample order.
ComplexMatrix estimator(const DualStateEnsemble& ens);

/// d_a * tr[rho (B^t (x) A)]; rho has layout (d_b, d_a).
double duality_pairing(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b);

/// d_a * <Psi_k| (B^t (x) A) |Psi_k> for every sample, in order.
std::vector<double> per_sample_values(const DualStateEnsemble& ens, const ComplexMatrix& a,
                                      const ComplexMatrix& b);

EstimatorReport summarize_samples(const std::vector<double>& values);

EstimatorReport estimate_observable(const DualStateEnsemble& ens, const ComplexMatrix& a,
                                    const ComplexMatrix& b);
/// As above, with analytic_sigma_bound = sqrt(variance_bound(ch, a, b)) when
/// the channel is unitary-induced.
EstimatorReport estimate_observable(const QuantumChannel& ch, const DualStateEnsemble& ens,
                                    const ComplexMatrix& a, const ComplexMatrix& b);

/// E[X] = tr X / d with respect to the maximally mixed state.
Complex intrinsic_expectation(const ComplexMatrix& x);
/// Var[X] = tr(X X^dag) / d - |tr X|^2 / d^2.
double intrinsic_variance(const ComplexMatrix& x);

/// Upper bound on the variance of the d_a-scaled per-sample observable:
/// d_a^2 / (d_c + 1) * Var[U A U^dag (B (x) I_c)].
double variance_bound(const QuantumChannel& ch, const ComplexMatrix& a, const ComplexMatrix& b);

/// mu_1^2 with mu_1 = tr[X(A) B]; bounds the per-sample variance when A is a
/// rank-1 projector and B is positive semidefinite (both checked).
double rank1_variance_bound(const QuantumChannel& ch, const ComplexMatrix& a,
                            const ComplexMatrix& b);

/// Post-selected dual states of a Kraus or Dilated channel (Kraus channels
/// are dilated first). Unitary-induced channels are treated as dilations with
/// a trivial ancilla.
DualStateEnsemble general_dual_ensemble(const QuantumChannel& ch, Index n,
                                        std::uint64_t master_seed);

DistanceReport distance_report(const DualStateEnsemble& ens, const ComplexMatrix& exact);
DistanceReport distance_report(const ComplexMatrix& estimate, Index n, const ComplexMatrix& exact);

/// Mean squared HS error of the unitary-induced estimator: (1/N)(1 - 1/d_c).
double expected_squared_hs_error(Index n, Index d_c);

}  // namespace randdual
