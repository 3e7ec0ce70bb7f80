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

// Test-only reference implementations. They deliberately avoid the library's
// RNG, tensor helpers and closed forms: every quantity is rebuilt from its
// definition with explicit loops or full-size matrices.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "randdual/channels.hpp"
#include "randdual/linalg.hpp"

namespace randdual::oracle {

using Rng = std::mt19937_64;

inline Complex gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    return {re, n(rng)};
}

inline ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (Index c = 0; c < cols; ++c) {
        for (Index r = 0; r < rows; ++r) m(r, c) = gaussian(rng);
    }
    return m;
}

inline ComplexMatrix random_hermitian(Index d, Rng& rng) {
    const ComplexMatrix g = ginibre(d, d, rng);
    return 0.5 * (g + g.adjoint());
}

/// Haar unitary by modified Gram-Schmidt on Ginibre columns.
inline ComplexMatrix random_unitary(Index d, Rng& rng) {
    ComplexMatrix q = ginibre(d, d, rng);
    for (Index j = 0; j < d; ++j) {
        for (Index k = 0; k < j; ++k) q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
        q.col(j) /= q.col(j).norm();
    }
    return q;
}

inline StateVector random_state(Index d, Rng& rng) {
    StateVector v = ginibre(d, 1, rng).col(0);
    return v / v.norm();
}

inline ComplexMatrix random_density(Index d, Rng& rng) {
    const ComplexMatrix g = ginibre(d, d, rng);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace();
}

inline ComplexMatrix kron_loop(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Partial trace by summing over every pair of multi-indices that agree on
/// the traced factors.
inline ComplexMatrix partial_trace_sum(const ComplexMatrix& m, const std::vector<Index>& dims,
                                       const std::vector<std::size_t>& keep) {
    const std::size_t n = dims.size();
    Index total = 1;
    for (Index d : dims) total *= d;
    std::vector<bool> kept(n, false);
    Index out_dim = 1;
    for (std::size_t k : keep) {
        kept[k] = true;
        out_dim *= dims[k];
    }
    auto digits = [&](Index flat) {
        std::vector<Index> dig(n);
        for (std::size_t k = n; k-- > 0;) {
            dig[k] = flat % dims[k];
            flat /= dims[k];
        }
        return dig;
    };
    auto reduced = [&](const std::vector<Index>& dig) {
        Index r = 0;
        for (std::size_t k : keep) r = r * dims[k] + dig[k];
        return r;
    };
    ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
    for (Index r = 0; r < total; ++r) {
        const auto dr = digits(r);
        for (Index c = 0; c < total; ++c) {
            const auto dc = digits(c);
            bool match = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (!kept[k] && dr[k] != dc[k]) match = false;
            }
            if (match) out(reduced(dr), reduced(dc)) += m(r, c);
        }
    }
    return out;
}

inline ComplexMatrix unit_matrix(Index d, Index r, Index c) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(r, c) = 1.0;
    return e;
}

/// sigma = (1/d_a) sum_xy |x><y| (x) X(|x><y|), built only from randdual::apply().
inline ComplexMatrix choi_by_apply(const QuantumChannel& ch) {
    const Index d_a = ch.d_a();
    const Index d_b = ch.d_b();
    ComplexMatrix sigma = ComplexMatrix::Zero(d_a * d_b, d_a * d_b);
    for (Index x = 0; x < d_a; ++x) {
        for (Index y = 0; y < d_a; ++y) {
            const ComplexMatrix out = randdual::apply(ch, unit_matrix(d_a, x, y));
            sigma.block(x * d_b, y * d_b, d_b, d_b) = out;
        }
    }
    return sigma / static_cast<double>(d_a);
}

/// Dual state (I_b' (x) U^dag)(|phi+>_{b'b} (x) |psi>_c) as one big
/// matrix-vector product on H_b' (x) H_b (x) H_c.
inline StateVector dual_state_by_definition(const ComplexMatrix& u, Index d_b, const StateVector& psi) {
    const Index d_c = psi.size();
    StateVector phi = StateVector::Zero(d_b * d_b);
    for (Index i = 0; i < d_b; ++i) phi(i * d_b + i) = 1.0 / std::sqrt(static_cast<double>(d_b));
    StateVector full(d_b * d_b * d_c);
    for (Index k = 0; k < phi.size(); ++k) full.segment(k * d_c, d_c) = phi(k) * psi;
    return kron_loop(ComplexMatrix::Identity(d_b, d_b), u.adjoint()) * full;
}

/// M with <Psi(psi)| (B^t (x) A) |Psi(psi)> = <psi| M |psi>, built column by
/// column from basis environment states.
inline ComplexMatrix environment_operator(const ComplexMatrix& u, Index d_b, const ComplexMatrix& a,
                                          const ComplexMatrix& b) {
    const Index d_c = u.rows() / d_b;
    const ComplexMatrix op = kron_loop(b.transpose(), a);
    std::vector<StateVector> cols;
    for (Index c = 0; c < d_c; ++c) {
        StateVector e = StateVector::Zero(d_c);
        e(c) = 1.0;
        cols.push_back(dual_state_by_definition(u, d_b, e));
    }
    ComplexMatrix m(d_c, d_c);
    for (Index r = 0; r < d_c; ++r)
        for (Index c = 0; c < d_c; ++c) m(r, c) = cols[r].dot(op * cols[c]);
    return m;
}

/// Exact variance of d_a <psi|M|psi> over Haar psi on C^{d_c} for Hermitian
/// M: d_a^2 [d_c tr M^2 - (tr M)^2] / (d_c^2 (d_c + 1)).
inline double exact_scaled_variance(const ComplexMatrix& u, Index d_b, const ComplexMatrix& a,
                                    const ComplexMatrix& b) {
    const ComplexMatrix m = environment_operator(u, d_b, a, b);
    const auto d_c = static_cast<double>(m.rows());
    const auto d_a = static_cast<double>(u.rows());
    const double tr = m.trace().real();
    const double tr2 = (m * m).trace().real();
    return d_a * d_a * (d_c * tr2 - tr * tr) / (d_c * d_c * (d_c + 1.0));
}

/// Sum_ij tr[X (|i><j| (x) I_c) X (|j><i| (x) I_c)] with X = U A U^dag (B (x) I_c).
inline double otoc_index_sum(const ComplexMatrix& u, Index d_b, const ComplexMatrix& a, const ComplexMatrix& b) {
    const Index d_c = u.rows() / d_b;
    const ComplexMatrix ic = ComplexMatrix::Identity(d_c, d_c);
    const ComplexMatrix x = u * a * u.adjoint() * kron_loop(b, ic);
    double total = 0.0;
    for (Index i = 0; i < d_b; ++i) {
        for (Index j = 0; j < d_b; ++j) {
            const ComplexMatrix p = kron_loop(unit_matrix(d_b, i, j), ic);
            const ComplexMatrix q = kron_loop(unit_matrix(d_b, j, i), ic);
            total += (x * p * x * q).trace().real();
        }
    }
    return total;
}

struct MeanAndError {
    double mean = 0.0;
    double stderr_ = 0.0;
};

inline MeanAndError mean_and_error(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    const double mean = s / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double var = ss / static_cast<double>(v.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(v.size()))};
}

/// Double-Haar average d_a^2 E |<Psi|(B^t (x) A)|Psi'>|^2 with both
/// environment states drawn from `rng`.
inline MeanAndError otoc_monte_carlo(const ComplexMatrix& u, Index d_b, const ComplexMatrix& a,
                                     const ComplexMatrix& b, int samples, Rng& rng) {
    const Index d_c = u.rows() / d_b;
    const auto d_a = static_cast<double>(u.rows());
    const ComplexMatrix op = kron_loop(b.transpose(), a);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        const StateVector p1 = dual_state_by_definition(u, d_b, random_state(d_c, rng));
        const StateVector p2 = dual_state_by_definition(u, d_b, random_state(d_c, rng));
        values.push_back(d_a * d_a * std::norm(p1.dot(op * p2)));
    }
    return mean_and_error(values);
}

}  // namespace randdual::oracle
