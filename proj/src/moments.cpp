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

#include "randdual/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "randdual/parallel.hpp"

namespace randdual {

namespace {

constexpr double kProjectorTol = 1e-10;

bool is_diagonal_rank1_projector(const ComplexMatrix& b) {
    if ((b * b - b).cwiseAbs().maxCoeff() > kProjectorTol) return false;
    if (std::abs(b.trace() - Complex(1.0, 0.0)) > kProjectorTol) return false;
    for (Index r = 0; r < b.rows(); ++r) {
        for (Index c = 0; c < b.cols(); ++c) {
            if (r != c && std::abs(b(r, c)) > kProjectorTol) return false;
        }
    }
    return true;
}

}  // namespace

OtocSpec::OtocSpec(QuantumChannel channel, ComplexMatrix a, ComplexMatrix b, bool b_is_projector)
    : channel_(std::move(channel)), a_(std::move(a)), b_(std::move(b)), b_is_projector_(b_is_projector) {
    (void)channel_.as_unitary_induced();
    if (a_.rows() != channel_.d_a() || a_.cols() != channel_.d_a() || b_.rows() != channel_.d_b() ||
        b_.cols() != channel_.d_b()) {
        throw std::invalid_argument("OtocSpec: observable dimensions do not match the channel");
    }
    require_hermitian(a_, "OtocSpec (A)");
    require_hermitian(b_, "OtocSpec (B)");
    if (b_is_projector_ && !is_diagonal_rank1_projector(b_)) {
        throw std::invalid_argument("OtocSpec: B is flagged as a projector but is not a diagonal rank-1 projector");
    }
}

EstimatorReport otoc_estimate(const OtocSpec& spec, const DualStateEnsemble& ens,
                              PairingStrategy pairing) {
    if (!spec.b_is_projector()) {
        throw std::invalid_argument("otoc_estimate: B must be a computational-basis rank-1 projector");
    }
    if (ens.size() < 2) throw std::invalid_argument("otoc_estimate: need at least 2 samples");
    if (ens.d_a != spec.channel().d_a() || ens.d_b != spec.channel().d_b()) {
        throw std::invalid_argument("otoc_estimate: ensemble does not match the channel");
    }
    const Index d_a = ens.d_a;
    const Index d_b = ens.d_b;
    const double scale = static_cast<double>(d_a) * static_cast<double>(d_a);

    // (B^t (x) A)|Psi> in block form is A * blocks * B.
    std::vector<StateVector> applied(ens.states.size());
    parallel_for(ens.states.size(), [&](std::size_t k) {
        const Eigen::Map<const ComplexMatrix> blocks(ens.states[k].data(), d_a, d_b);
        const ComplexMatrix out = spec.a() * blocks * spec.b();
        applied[k] = Eigen::Map<const StateVector>(out.data(), d_a * d_b);
    });
    auto pair_value = [&](std::size_t k, std::size_t l) {
        return scale * std::norm(ens.states[k].dot(applied[l]));
    };

    if (pairing == PairingStrategy::disjoint) {
        std::vector<double> values(ens.states.size() / 2);
        for (std::size_t m = 0; m < values.size(); ++m) values[m] = pair_value(2 * m, 2 * m + 1);
        return summarize_samples(values);
    }

    const std::size_t n = ens.states.size();
    std::vector<double> row_sums(n, 0.0);
    parallel_for(n, [&](std::size_t k) {
        double s = 0.0;
        for (std::size_t l = k + 1; l < n; ++l) s += pair_value(k, l);
        row_sums[k] = s;
    });
    double total = 0.0;
    for (double s : row_sums) total += s;
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    EstimatorReport report;
    report.estimate = total / pairs;
    report.n = static_cast<Index>(pairs);
    report.empirical_sigma = std::numeric_limits<double>::quiet_NaN();
    report.sigma_n = std::numeric_limits<double>::quiet_NaN();
    return report;
}

double otoc_exact(const OtocSpec& spec) {
    const auto& u = spec.channel().as_unitary_induced();
    const ComplexMatrix evolved = u.unitary * spec.a() * u.unitary.adjoint();
    const ComplexMatrix x = evolved * kron(spec.b(), identity(u.d_c));
    if (spec.b_is_projector()) return (x * x).trace().real();
    const ComplexMatrix reduced = partial_trace(x, {u.d_b, u.d_c}, {1});
    return (reduced * reduced).trace().real();
}

}  // namespace randdual
