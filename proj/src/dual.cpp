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

#include "randdual/dual.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "randdual/errors.hpp"
#include "randdual/parallel.hpp"

namespace randdual {

namespace {

// Dual state built from the adjoint of a unitary (or of the rows of it that
// survive post-selection): block i of the result is
// scale * adj.middleCols(i * d_c, d_c) * psi.
StateVector dual_from_adjoint(const ComplexMatrix& adj, Index d_b, Index d_c,
                              const StateVector& psi, double scale) {
    const Index rows = adj.rows();
    StateVector out(d_b * rows);
    for (Index i = 0; i < d_b; ++i) {
        out.segment(i * rows, rows).noalias() = adj.middleCols(i * d_c, d_c) * psi;
    }
    out *= scale;
    return out;
}

void require_observables(Index d_a, Index d_b, const ComplexMatrix& a, const ComplexMatrix& b,
                         const char* what) {
    if (a.rows() != d_a || a.cols() != d_a || b.rows() != d_b || b.cols() != d_b) {
        throw std::invalid_argument(std::string(what) + ": observable dimensions do not match (d_a=" +
                                    std::to_string(d_a) + ", d_b=" + std::to_string(d_b) + ")");
    }
}

// U A U^dag (B (x) I_c) on H_a.
ComplexMatrix heisenberg_product(const UnitaryInducedRep& u, const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    const ComplexMatrix evolved = u.unitary * a * u.unitary.adjoint();
    return evolved * kron(b, identity(u.d_c));
}

}  // namespace

StateVector sample_dual_state(const QuantumChannel& ch, SeedSpec seed) {
    const auto& u = ch.as_unitary_induced();
    const StateVector psi = haar_state(u.d_c, seed);
    return dual_from_adjoint(u.unitary.adjoint(), u.d_b, u.d_c, psi,
                             1.0 / std::sqrt(static_cast<double>(u.d_b)));
}

DualStateEnsemble sample_dual_ensemble(const QuantumChannel& ch, Index n,
                                       std::uint64_t master_seed) {
    const auto& u = ch.as_unitary_induced();
    if (n < 1) throw std::invalid_argument("sample_dual_ensemble: N must be >= 1");
    const ComplexMatrix adj = u.unitary.adjoint();
    const double scale = 1.0 / std::sqrt(static_cast<double>(u.d_b));

    DualStateEnsemble ens;
    ens.kind = EnsembleKind::unitary_induced;
    ens.master_seed = master_seed;
    ens.d_a = ch.d_a();
    ens.d_b = ch.d_b();
    ens.d_c = u.d_c;
    ens.states.resize(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
        const StateVector psi = haar_state(u.d_c, {master_seed, k});
        ens.states[k] = dual_from_adjoint(adj, u.d_b, u.d_c, psi, scale);
    });
    return ens;
}

ComplexMatrix exact_dual_state(const QuantumChannel& ch) {
    const auto& u = ch.as_unitary_induced();
    // Columns k: (I (x) U^dag)(|phi+> (x) |k>_c); rho = K K^dag / d_c.
    const ComplexMatrix adj = u.unitary.adjoint();
    const double scale = 1.0 / std::sqrt(static_cast<double>(u.d_b));
    ComplexMatrix cols(u.d_b * ch.d_a(), u.d_c);
    for (Index k = 0; k < u.d_c; ++k) {
        StateVector e = StateVector::Zero(u.d_c);
        e(k) = 1.0;
        cols.col(k) = dual_from_adjoint(adj, u.d_b, u.d_c, e, scale);
    }
    ComplexMatrix rho = cols * cols.adjoint() / static_cast<double>(u.d_c);
    return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix dual_from_choi(const ChoiMatrix& sigma) {
    return permute_subsystems(sigma.matrix.transpose(), {sigma.d_a, sigma.d_b}, {1, 0});
}

ComplexMatrix estimator(const DualStateEnsemble& ens) {
    if (ens.states.empty()) throw std::invalid_argument("estimator: empty ensemble");
    const Index dim = ens.states.front().size();
    ComplexMatrix stacked(dim, ens.size());
    for (Index k = 0; k < ens.size(); ++k) stacked.col(k) = ens.states[static_cast<std::size_t>(k)];
    ComplexMatrix rho = stacked * stacked.adjoint() / static_cast<double>(ens.size());
    return 0.5 * (rho + rho.adjoint());
}

double duality_pairing(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
    const Index d_a = a.rows();
    const Index d_b = b.rows();
    if (a.cols() != d_a || b.cols() != d_b || rho.rows() != d_a * d_b || rho.cols() != d_a * d_b) {
        throw std::invalid_argument("duality_pairing: dimension mismatch");
    }
    const ComplexMatrix op = kron(b.transpose(), a);
    return static_cast<double>(d_a) * rho.cwiseProduct(op.transpose()).sum().real();
}

std::vector<double> per_sample_values(const DualStateEnsemble& ens, const ComplexMatrix& a,
                                      const ComplexMatrix& b) {
    require_observables(ens.d_a, ens.d_b, a, b, "per_sample_values");
    std::vector<double> values(ens.states.size());
    const auto d_a = static_cast<double>(ens.d_a);
    parallel_for(ens.states.size(), [&](std::size_t k) {
        // Column j of `blocks` is the H_a component paired with ancilla |j>.
        const Eigen::Map<const ComplexMatrix> blocks(ens.states[k].data(), ens.d_a, ens.d_b);
        const ComplexMatrix gram = blocks.adjoint() * (a * blocks);
        // sum_ij (B^t)_{ij} <psi_i|A|psi_j> = tr(B gram)
        values[k] = d_a * (b * gram).trace().real();
    });
    return values;
}

EstimatorReport summarize_samples(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("summarize_samples: no samples");
    EstimatorReport report;
    report.n = static_cast<Index>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    report.estimate = sum / static_cast<double>(values.size());
    if (values.size() < 2) {
        report.empirical_sigma = std::numeric_limits<double>::quiet_NaN();
        report.sigma_n = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    double ss = 0.0;
    for (double v : values) ss += (v - report.estimate) * (v - report.estimate);
    report.empirical_sigma = std::sqrt(ss / static_cast<double>(values.size() - 1));
    report.sigma_n = report.empirical_sigma / std::sqrt(static_cast<double>(values.size()));
    return report;
}

EstimatorReport estimate_observable(const DualStateEnsemble& ens, const ComplexMatrix& a,
                                    const ComplexMatrix& b) {
    if (ens.states.empty()) throw std::invalid_argument("estimate_observable: empty ensemble");
    return summarize_samples(per_sample_values(ens, a, b));
}

EstimatorReport estimate_observable(const QuantumChannel& ch, const DualStateEnsemble& ens,
                                    const ComplexMatrix& a, const ComplexMatrix& b) {
    EstimatorReport report = estimate_observable(ens, a, b);
    if (ch.kind() == ChannelKind::unitary_induced) {
        report.analytic_sigma_bound = std::sqrt(variance_bound(ch, a, b));
    }
    return report;
}

Complex intrinsic_expectation(const ComplexMatrix& x) {
    if (x.rows() != x.cols() || x.rows() == 0) {
        throw std::invalid_argument("intrinsic_expectation: operator must be square and nonempty");
    }
    return x.trace() / static_cast<double>(x.rows());
}

double intrinsic_variance(const ComplexMatrix& x) {
    const Complex mean = intrinsic_expectation(x);
    const double second = x.squaredNorm() / static_cast<double>(x.rows());
    return std::max(0.0, second - std::norm(mean));
}

double variance_bound(const QuantumChannel& ch, const ComplexMatrix& a, const ComplexMatrix& b) {
    const auto& u = ch.as_unitary_induced();
    require_observables(ch.d_a(), ch.d_b(), a, b, "variance_bound");
    const auto d_a = static_cast<double>(ch.d_a());
    const double c = 1.0 / static_cast<double>(u.d_c + 1);
    return c * d_a * d_a * intrinsic_variance(heisenberg_product(u, a, b));
}

double rank1_variance_bound(const QuantumChannel& ch, const ComplexMatrix& a,
                            const ComplexMatrix& b) {
    require_observables(ch.d_a(), ch.d_b(), a, b, "rank1_variance_bound");
    (void)ch.as_unitary_induced();
    constexpr double tol = 1e-10;
    if ((a * a - a).cwiseAbs().maxCoeff() > tol || std::abs(a.trace() - Complex(1.0, 0.0)) > tol ||
        hermiticity_residual(a) > tol) {
        throw std::invalid_argument("rank1_variance_bound: A is not a rank-1 projector");
    }
    require_hermitian(b, "rank1_variance_bound (B)");
    if (hermitian_eigenvalues(b)(0) < -tol) {
        throw std::invalid_argument("rank1_variance_bound: B is not positive semidefinite");
    }
    const double mu1 = (apply(ch, a) * b).trace().real();
    return mu1 * mu1;
}

DualStateEnsemble general_dual_ensemble(const QuantumChannel& ch, Index n,
                                        std::uint64_t master_seed) {
    if (n < 1) throw std::invalid_argument("general_dual_ensemble: N must be >= 1");
    const QuantumChannel dilated =
        ch.kind() == ChannelKind::dilated ? ch : stinespring_dilate(ch);
    const auto& u = dilated.as_dilated();
    const Index d_u = u.unitary.rows();

    // Post-selecting the ancilla on |0> keeps only the rows x * d_anc of U^dag.
    ComplexMatrix adj(u.d_a, d_u);
    for (Index x = 0; x < u.d_a; ++x) adj.row(x) = u.unitary.col(x * u.d_anc).adjoint();
    const double c0 = std::sqrt(static_cast<double>(u.d_a) / static_cast<double>(d_u));
    const double scale = 1.0 / (c0 * std::sqrt(static_cast<double>(u.d_b)));

    DualStateEnsemble ens;
    ens.kind = EnsembleKind::general_postselected;
    ens.master_seed = master_seed;
    ens.d_a = u.d_a;
    ens.d_b = u.d_b;
    ens.d_c = u.d_c;
    ens.states.resize(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
        const StateVector psi = haar_state(u.d_c, {master_seed, k});
        ens.states[k] = dual_from_adjoint(adj, u.d_b, u.d_c, psi, scale);
    });
    return ens;
}

DistanceReport distance_report(const DualStateEnsemble& ens, const ComplexMatrix& exact) {
    return distance_report(estimator(ens), ens.size(), exact);
}

DistanceReport distance_report(const ComplexMatrix& estimate, Index n, const ComplexMatrix& exact) {
    if (n < 1) throw std::invalid_argument("distance_report: N must be >= 1");
    return {hs_distance(estimate, exact), trace_distance(estimate, exact),
            1.0 / std::sqrt(static_cast<double>(n))};
}

double expected_squared_hs_error(Index n, Index d_c) {
    if (n < 1 || d_c < 1) throw std::invalid_argument("expected_squared_hs_error: N, d_c must be >= 1");
    return (1.0 - 1.0 / static_cast<double>(d_c)) / static_cast<double>(n);
}

}  // namespace randdual
