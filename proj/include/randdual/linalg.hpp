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

// Dense complex linear algebra and the tensor-index convention shared by the
// whole library.
//
// Convention: in a tensor product the left (first) factor is the
// slowest-varying index. For a layout (d0, d1, ..., dk) the flat index of the
// multi-index (i0, i1, ..., ik) is ((i0 * d1 + i1) * d2 + ...) + ik.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace randdual {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-9;

/// Ordered subsystem dimensions, slowest-varying factor first.
class SubsystemLayout {
   public:
    SubsystemLayout(std::initializer_list<Index> dims);
    explicit SubsystemLayout(std::vector<Index> dims);

    [[nodiscard]] std::size_t size() const { return dims_.size(); }
    [[nodiscard]] Index operator[](std::size_t k) const { return dims_[k]; }
    [[nodiscard]] Index total_dim() const;
    [[nodiscard]] const std::vector<Index>& dims() const { return dims_; }

    /// Row-major strides: stride[k] = product of dims after k.
    [[nodiscard]] std::vector<Index> strides() const;

   private:
    std::vector<Index> dims_;
};

ComplexMatrix identity(Index d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(const StateVector& a, const StateVector& b);

/// Reduced operator on the factors listed in `keep`, in their original order.
/// Throws std::invalid_argument on dimension mismatch or an empty/invalid keep set.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::initializer_list<std::size_t> keep);

/// Reorders tensor factors: output factor k is input factor perm[k].
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::span<const std::size_t> perm);
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::initializer_list<std::size_t> perm);

/// Entrywise transpose in the computational basis (no conjugation).
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix dagger(const ComplexMatrix& m);

/// max |M - M^dagger| entrywise; infinity for non-square input.
double hermiticity_residual(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
/// Throws std::invalid_argument unless `m` is Hermitian within `tol`.
void require_hermitian(const ComplexMatrix& m, const char* what, double tol = kHermitianTol);

/// ||U^dagger U - I||_2 (Hilbert-Schmidt norm).
double unitarity_residual(const ComplexMatrix& u);

struct HermitianEigen {
    RealVector values;     // ascending
    ComplexMatrix vectors; // columns are eigenvectors; unitary
};

HermitianEigen hermitian_eig(const ComplexMatrix& m);
RealVector hermitian_eigenvalues(const ComplexMatrix& m);
RealVector singular_values(const ComplexMatrix& m);

/// Number of eigenvalues of a Hermitian matrix strictly above `tol`.
Index numerical_rank(const ComplexMatrix& hermitian, double tol);

double spectral_norm(const ComplexMatrix& m);
double hs_norm(const ComplexMatrix& m);
double trace_norm(const ComplexMatrix& m);
double hs_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// sum_i |ii> / sqrt(d) on the (d, d) layout.
StateVector max_entangled_state(Index d);

/// exp(-i H t) through the eigendecomposition of H.
ComplexMatrix herm_expm(const ComplexMatrix& h, double t);

/// Caches the eigendecomposition of H so that exp(-i H t) is cheap to
/// evaluate at many times.
class HermitianPropagator {
   public:
    explicit HermitianPropagator(const ComplexMatrix& h);

    [[nodiscard]] ComplexMatrix at(double t) const;
    /// exp(-i H t) |v> without forming the full propagator.
    [[nodiscard]] StateVector apply(double t, const StateVector& v) const;
    [[nodiscard]] const HermitianEigen& eigen() const { return eig_; }
    [[nodiscard]] Index dim() const { return eig_.values.size(); }

   private:
    HermitianEigen eig_;
};

}  // namespace randdual
