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

// Quantum channels: representations, CPTP checks, Choi matrices and
// Stinespring dilation.
//
// Layouts (left factor slowest):
//   UnitaryInduced  U acts on H_a = H_b (x) H_c; output keeps H_b.
//   Dilated         U maps H_a (x) H_anc -> H_b (x) H_c, ancilla reference
//                   state |0> is the first basis vector of H_anc.
//   ChoiMatrix      (input copy H_a, output H_b).

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "randdual/linalg.hpp"

namespace randdual {

inline constexpr double kChannelTol = 1e-9;

struct KrausRep {
    std::vector<ComplexMatrix> ops;  // each d_b x d_a
};

struct UnitaryInducedRep {
    ComplexMatrix unitary;  // d_a x d_a
    Index d_b = 0;
    Index d_c = 0;
};

struct DilatedRep {
    ComplexMatrix unitary;  // d_U x d_U
    Index d_a = 0;
    Index d_anc = 0;  // d_a * d_anc == d_U
    Index d_b = 0;
    Index d_c = 0;  // d_b * d_c == d_U
};

enum class ChannelKind { kraus, unitary_induced, dilated };

std::string_view to_string(ChannelKind kind);

/// Whether a factory enforces the CPTP/unitarity invariants. `skip` exists for
/// diagnostics on possibly-invalid input; such channels should go through
/// validate() before use.
enum class Check { enforce, skip };

class QuantumChannel {
   public:
    using Rep = std::variant<KrausRep, UnitaryInducedRep, DilatedRep>;

    static QuantumChannel kraus(std::vector<ComplexMatrix> ops, Check check = Check::enforce);
    static QuantumChannel unitary_induced(ComplexMatrix unitary, Index d_b,
                                          Check check = Check::enforce);
    static QuantumChannel dilated(ComplexMatrix unitary, Index d_a, Index d_b,
                                  Check check = Check::enforce);

    [[nodiscard]] ChannelKind kind() const;
    [[nodiscard]] Index d_a() const { return d_a_; }
    [[nodiscard]] Index d_b() const { return d_b_; }
    [[nodiscard]] const Rep& rep() const { return rep_; }

    /// Throws std::invalid_argument if the channel is not of the given kind.
    [[nodiscard]] const KrausRep& as_kraus() const;
    [[nodiscard]] const UnitaryInducedRep& as_unitary_induced() const;
    [[nodiscard]] const DilatedRep& as_dilated() const;

   private:
    QuantumChannel(Rep rep, Index d_a, Index d_b) : rep_(std::move(rep)), d_a_(d_a), d_b_(d_b) {}

    Rep rep_;
    Index d_a_;
    Index d_b_;
};

struct ChoiMatrix {
    ComplexMatrix matrix;  // (d_a * d_b) square, layout (input copy, output)
    Index d_a = 0;
    Index d_b = 0;
};

struct ChannelDiagnostics {
    double trace_preservation_residual = 0.0;  // ||sum_k M_k^dag M_k - I||_2
    double choi_min_eigenvalue = 0.0;
    double choi_trace_residual = 0.0;          // |tr sigma - 1|
    std::optional<double> unitarity_residual;  // UnitaryInduced / Dilated only
    Index kraus_rank = 0;

    [[nodiscard]] bool ok(double tol = kChannelTol) const;
};

struct ChoiDiagnostics {
    double min_eigenvalue = 0.0;
    double trace_residual = 0.0;
    double hermiticity_residual = 0.0;
    double marginal_residual = 0.0;  // ||tr_out sigma - I/d_a||_2

    [[nodiscard]] bool ok(double tol = kChannelTol) const;
};

ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho);

/// Kraus operators of any representation. For UnitaryInduced and Dilated
/// these are the environment-basis slices (I_b (x) <k|_c) U (I_a (x) |0>).
std::vector<ComplexMatrix> kraus_operators(const QuantumChannel& ch);

ChoiMatrix choi_matrix(const QuantumChannel& ch);

/// d_a * tr[sigma (A^t (x) B)]; equals tr[X(A) B] for the generating channel.
double choi_pairing(const ChoiMatrix& sigma, const ComplexMatrix& a, const ComplexMatrix& b);

/// Default eigenvalue cut for Choi spectra: 1e-10 * d_a on the d_a-scaled matrix.
double default_choi_tol(Index d_a);

/// Eigenpairs of d_a * sigma above `tol` become Kraus operators. A negative
/// `tol` selects default_choi_tol(d_a). Throws ValidationError when an
/// eigenvalue falls below -tol.
QuantumChannel kraus_from_choi(const ChoiMatrix& sigma, double tol = -1.0);

/// Number of eigenvalues of d_a * sigma above `tol` (negative: default).
Index kraus_rank(const QuantumChannel& ch, double tol = -1.0);

/// Dimension d_U of the unitary stinespring_dilate would build.
Index dilation_dimension(const QuantumChannel& ch);

/// Minimal Stinespring dilation of a Kraus channel. The isometry columns are
/// completed to a unitary with the trailing columns of its Householder QR
/// factor, rotated by a Haar unitary when `completion_seed` is given. Unitary
/// and already-dilated channels are returned as Dilated without new ancilla.

QuantumChannel stinespring_dilate(const QuantumChannel& ch,
                                  std::optional<std::uint64_t> completion_seed = std::nullopt);

ChannelDiagnostics validate(const QuantumChannel& ch);
ChoiDiagnostics validate(const ChoiMatrix& sigma);

}  // namespace randdual
