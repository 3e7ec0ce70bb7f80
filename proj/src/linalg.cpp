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

#include "randdual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace randdual {

namespace {

// Flat offsets (in the full layout) of every multi-index over the chosen
// factors, enumerated in row-major order over those factors.
std::vector<Index> factor_offsets(const SubsystemLayout& layout,
                                  std::span<const std::size_t> factors) {
    const auto strides = layout.strides();
    std::vector<Index> offsets{0};
    for (std::size_t f : factors) {
        std::vector<Index> next;
        next.reserve(offsets.size() * static_cast<std::size_t>(layout[f]));
        for (Index base : offsets) {
            for (Index digit = 0; digit < layout[f]; ++digit) {
                next.push_back(base + digit * strides[f]);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

void require_square_layout(const ComplexMatrix& m, const SubsystemLayout& layout,
                           const char* op) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(op) + ": matrix is not square");
    }
    if (layout.total_dim() != m.rows()) {
        throw std::invalid_argument(std::string(op) + ": layout dimension " +
                                    std::to_string(layout.total_dim()) +
                                    " does not match matrix dimension " +
                                    std::to_string(m.rows()));
    }
}

}  // namespace

SubsystemLayout::SubsystemLayout(std::initializer_list<Index> dims)
    : SubsystemLayout(std::vector<Index>(dims)) {}

SubsystemLayout::SubsystemLayout(std::vector<Index> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw std::invalid_argument("SubsystemLayout: no factors");
    }
    for (Index d : dims_) {
        if (d < 1) {
            throw std::invalid_argument("SubsystemLayout: factor dimension must be >= 1");
        }
    }
}

Index SubsystemLayout::total_dim() const {
    Index total = 1;
    for (Index d : dims_) total *= d;
    return total;
}

std::vector<Index> SubsystemLayout::strides() const {
    std::vector<Index> s(dims_.size(), 1);
    for (std::size_t k = dims_.size() - 1; k > 0; --k) {
        s[k - 1] = s[k] * dims_[k];
    }
    return s;
}

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
    StateVector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::span<const std::size_t> keep) {
    require_square_layout(m, layout, "partial_trace");
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
        kept.back() >= layout.size()) {
        throw std::invalid_argument("partial_trace: invalid keep set");
    }
    std::vector<std::size_t> traced;
    for (std::size_t f = 0; f < layout.size(); ++f) {
        if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);
    }

    const auto kept_off = factor_offsets(layout, kept);
    const auto traced_off = factor_offsets(layout, traced);
    const auto dk = static_cast<Index>(kept_off.size());

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Index r = 0; r < dk; ++r) {
        for (Index c = 0; c < dk; ++c) {
            Complex acc{0.0, 0.0};
            for (Index t : traced_off) {
                acc += m(kept_off[r] + t, kept_off[c] + t);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::initializer_list<std::size_t> keep) {
    return partial_trace(m, layout, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::span<const std::size_t> perm) {
    require_square_layout(m, layout, "permute_subsystems");
    std::vector<std::size_t> check(perm.begin(), perm.end());
    std::sort(check.begin(), check.end());
    for (std::size_t k = 0; k < check.size(); ++k) {
        if (check.size() != layout.size() || check[k] != k) {
            throw std::invalid_argument("permute_subsystems: not a permutation of the factors");
        }
    }
    const auto off = factor_offsets(layout, perm);
    const Index d = m.rows();
    ComplexMatrix out(d, d);
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
            out(r, c) = m(off[r], off[c]);
        }
    }
    return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::initializer_list<std::size_t> perm) {
    return permute_subsystems(m, layout, std::span<const std::size_t>(perm.begin(), perm.size()));
}

ComplexMatrix transpose(const ComplexMatrix& m) { return m.transpose(); }

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double hermiticity_residual(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_residual(m) <= tol; }

void require_hermitian(const ComplexMatrix& m, const char* what, double tol) {
    const double res = hermiticity_residual(m);
    if (!(res <= tol)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian (residual " +
                                    std::to_string(res) + ")");
    }
}

double unitarity_residual(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    return (u.adjoint() * u - identity(u.rows())).norm();
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
    require_hermitian(m, "hermitian_eig");
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    require_hermitian(m, "hermitian_eigenvalues");
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

RealVector singular_values(const ComplexMatrix& m) {
    return Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
}

Index numerical_rank(const ComplexMatrix& hermitian, double tol) {
    const RealVector ev = hermitian_eigenvalues(hermitian);
    return static_cast<Index>((ev.array() > tol).count());
}

double spectral_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return singular_values(m).maxCoeff();
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

double trace_norm(const ComplexMatrix& m) {
    // Hermitian input: singular values are |eigenvalues|.
    if (m.rows() == m.cols() && is_hermitian(m, 1e-13 * std::max(1.0, m.cwiseAbs().maxCoeff()))) {
        return hermitian_eigenvalues(0.5 * (m + m.adjoint())).cwiseAbs().sum();
    }
    return singular_values(m).sum();
}

double hs_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("hs_distance: dimension mismatch");
    }
    return hs_norm(rho - sigma);
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != rho.cols() || rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("trace_distance: requires square matrices of equal dimension");
    }
    return 0.5 * trace_norm(rho - sigma);
}

StateVector max_entangled_state(Index d) {
    if (d < 1) throw std::invalid_argument("max_entangled_state: d must be >= 1");
    StateVector v = StateVector::Zero(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index i = 0; i < d; ++i) v(i * d + i) = amp;
    return v;
}

ComplexMatrix herm_expm(const ComplexMatrix& h, double t) { return HermitianPropagator(h).at(t); }

HermitianPropagator::HermitianPropagator(const ComplexMatrix& h) : eig_(hermitian_eig(h)) {}

ComplexMatrix HermitianPropagator::at(double t) const {
    const Eigen::VectorXcd phases =
        (eig_.values.cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
    return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

StateVector HermitianPropagator::apply(double t, const StateVector& v) const {
    if (v.size() != dim()) throw std::invalid_argument("HermitianPropagator::apply: dimension mismatch");
    const Eigen::VectorXcd phases =
        (eig_.values.cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
    const StateVector coeffs = eig_.vectors.adjoint() * v;
    return eig_.vectors * phases.cwiseProduct(coeffs);
}

}  // namespace randdual
