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

#include "randdual/channels.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "randdual/errors.hpp"

using namespace randdual;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

QuantumChannel identity_qubit() { return QuantumChannel::kraus({identity(2)}); }

QuantumChannel depolarizing(double p) {
    return QuantumChannel::kraus({std::sqrt(1 - 3 * p / 4) * identity(2), std::sqrt(p / 4) * pauli_x(),
                                  std::sqrt(p / 4) * pauli_y(), std::sqrt(p / 4) * pauli_z()});
}

QuantumChannel amplitude_damping(double gamma) {
    ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1 - gamma);
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return QuantumChannel::kraus({k0, k1});
}

// Random channel with `r` Kraus operators d_b x d_a from a Haar isometry.
QuantumChannel random_kraus(Index d_a, Index d_b, Index r, oracle::Rng& rng) {
    const ComplexMatrix u = oracle::random_unitary(d_b * r, rng);
    std::vector<ComplexMatrix> ops;
    for (Index k = 0; k < r; ++k) {
        ComplexMatrix m(d_b, d_a);
        for (Index b = 0; b < d_b; ++b)
            for (Index x = 0; x < d_a; ++x) m(b, x) = u(b * r + k, x);
        ops.push_back(m);
    }
    return QuantumChannel::kraus(ops);
}

}  // namespace

TEST(channels, construction_checks) {
    EXPECT_THROW(QuantumChannel::kraus({}), std::invalid_argument);
    EXPECT_THROW(QuantumChannel::kraus({identity(2), ComplexMatrix::Zero(3, 2)}), std::invalid_argument);
    EXPECT_THROW(QuantumChannel::kraus({1.01 * identity(2)}), ValidationError);
    EXPECT_NO_THROW(QuantumChannel::kraus({1.01 * identity(2)}, Check::skip));
    EXPECT_THROW(QuantumChannel::unitary_induced(2.0 * identity(4), 2), ValidationError);
    EXPECT_THROW(QuantumChannel::unitary_induced(identity(6), 4), std::invalid_argument);
    EXPECT_THROW(QuantumChannel::dilated(identity(6), 4, 2), std::invalid_argument);
    const auto ch = QuantumChannel::unitary_induced(identity(8), 2);
    EXPECT_EQ(ch.as_unitary_induced().d_c, 4);
    EXPECT_THROW((void)ch.as_kraus(), std::invalid_argument);
    EXPECT_EQ(to_string(ch.kind()), "unitary_induced");
}

TEST(channels, apply_examples) {
    oracle::Rng rng(1);
    const ComplexMatrix rho = oracle::random_density(2, rng);
    EXPECT_LT(max_abs(randdual::apply(identity_qubit(), rho) - rho), 1e-15);
    EXPECT_LT(max_abs(randdual::apply(depolarizing(1.0), rho) - identity(2) / 2.0), 1e-15);
    EXPECT_THROW(randdual::apply(identity_qubit(), identity(3)), std::invalid_argument);
}

TEST(channels, unitary_induced_matches_its_kraus_form) {
    oracle::Rng rng(2);
    const ComplexMatrix u = oracle::random_unitary(12, rng);
    const auto ch = QuantumChannel::unitary_induced(u, 3);
    // M_k = (I_b (x) <k|_c) U, written out with explicit index arithmetic.
    std::vector<ComplexMatrix> ops;
    for (Index k = 0; k < 4; ++k) {
        ComplexMatrix m(3, 12);
        for (Index b = 0; b < 3; ++b)
            for (Index x = 0; x < 12; ++x) m(b, x) = u(b * 4 + k, x);
        ops.push_back(m);
    }
    const auto kr = QuantumChannel::kraus(ops);
    for (int trial = 0; trial < 3; ++trial) {
        const ComplexMatrix rho = oracle::random_density(12, rng);
        EXPECT_LT(max_abs(randdual::apply(ch, rho) - randdual::apply(kr, rho)), 1e-12);
        EXPECT_NEAR(randdual::apply(ch, rho).trace().real(), 1.0, 1e-10);
    }
}

TEST(channels, representations_agree_on_operator_basis) {
    oracle::Rng rng(3);
    const ComplexMatrix u = oracle::random_unitary(8, rng);
    const auto ind = QuantumChannel::unitary_induced(u, 2);
    const auto kr = QuantumChannel::kraus(kraus_operators(ind));
    const auto dil = stinespring_dilate(kr);
    for (Index x = 0; x < 8; ++x) {
        for (Index y = 0; y < 8; ++y) {
            const ComplexMatrix e = oracle::unit_matrix(8, x, y);
            EXPECT_LT(max_abs(randdual::apply(ind, e) - randdual::apply(kr, e)), 1e-8);
            EXPECT_LT(max_abs(randdual::apply(ind, e) - randdual::apply(dil, e)), 1e-8);
        }
    }
}

TEST(channels, choi_examples) {
    const StateVector phi = max_entangled_state(2);
    const ChoiMatrix id = choi_matrix(identity_qubit());
    EXPECT_LT(max_abs(id.matrix - phi * phi.adjoint()), 1e-15);
    EXPECT_EQ(kraus_rank(identity_qubit()), 1);
    const ChoiMatrix dep = choi_matrix(depolarizing(1.0));
    EXPECT_LT(max_abs(dep.matrix - identity(4) / 4.0), 1e-15);
    EXPECT_EQ(kraus_rank(depolarizing(1.0)), 4);
}

TEST(channels, choi_matches_definition) {
    oracle::Rng rng(4);
    const QuantumChannel chans[] = {random_kraus(3, 2, 3, rng), random_kraus(2, 4, 2, rng),
                                    QuantumChannel::unitary_induced(oracle::random_unitary(8, rng), 4),
                                    stinespring_dilate(random_kraus(2, 3, 2, rng))};
    for (const auto& ch : chans) {
        const ChoiMatrix sigma = choi_matrix(ch);
        EXPECT_LT(max_abs(sigma.matrix - oracle::choi_by_apply(ch)), 1e-13);
        const ChoiDiagnostics diag = validate(sigma);
        EXPECT_TRUE(diag.ok()) << diag.min_eigenvalue << " " << diag.trace_residual;
    }
}

TEST(channels, choi_pairing) {
    const ChoiMatrix id = choi_matrix(identity_qubit());
    EXPECT_NEAR(choi_pairing(id, identity(2), identity(2)), 2.0, 1e-14);
    EXPECT_NEAR(choi_pairing(id, pauli_z(), pauli_z()), 2.0, 1e-14);
    oracle::Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto ch = QuantumChannel::unitary_induced(oracle::random_unitary(16, rng), 4);
        const ChoiMatrix sigma = choi_matrix(ch);
        const ComplexMatrix a = oracle::random_hermitian(16, rng);
        const ComplexMatrix b = oracle::random_hermitian(4, rng);
        EXPECT_NEAR(choi_pairing(sigma, a, b), (randdual::apply(ch, a) * b).trace().real(), 1e-9);
    }
    EXPECT_THROW(choi_pairing(id, identity(3), identity(2)), std::invalid_argument);
}

TEST(channels, kraus_from_choi) {
    const StateVector phi = max_entangled_state(2);
    const auto single = kraus_from_choi({phi * phi.adjoint(), 2, 2});
    ASSERT_EQ(single.as_kraus().ops.size(), 1u);
    const ComplexMatrix k = single.as_kraus().ops[0];
    // Unique up to a global phase.
    EXPECT_LT(max_abs(k * std::conj(k(0, 0)) / std::abs(k(0, 0)) - identity(2)), 1e-12);

    const auto dep = kraus_from_choi({identity(4) / 4.0, 2, 2});
    EXPECT_EQ(dep.as_kraus().ops.size(), 4u);
    oracle::Rng rng(6);
    const ComplexMatrix rho = oracle::random_density(2, rng);
    EXPECT_LT(max_abs(randdual::apply(dep, rho) - identity(2) / 2.0), 1e-12);
    for (const auto& m : dep.as_kraus().ops) {
        // Equal eigenvalues 1/4, so every operator carries weight d_a / 4.
        EXPECT_NEAR((m.adjoint() * m).trace().real(), 0.5, 1e-12);
    }
}

TEST(channels, kraus_choi_roundtrip) {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const auto ch = random_kraus(3, 4, 1 + trial, rng);
        const ChoiMatrix sigma = choi_matrix(ch);
        const auto back = kraus_from_choi(sigma);
        EXPECT_LT(max_abs(choi_matrix(back).matrix - sigma.matrix), 1e-9);
        EXPECT_EQ(static_cast<int>(back.as_kraus().ops.size()), 1 + trial);
        const ComplexMatrix rho = oracle::random_density(3, rng);
        EXPECT_LT(max_abs(randdual::apply(back, rho) - randdual::apply(ch, rho)), 1e-8);
    }
}

TEST(channels, kraus_from_choi_rejects_negative_spectrum) {
    ComplexMatrix m = identity(4) / 4.0;
    m(0, 3) = m(3, 0) = 0.5;
    EXPECT_THROW(kraus_from_choi({m, 2, 2}), ValidationError);
    const ChoiDiagnostics diag = validate(ChoiMatrix{m, 2, 2});
    EXPECT_LT(diag.min_eigenvalue, -0.2);
    EXPECT_FALSE(diag.ok());
}

TEST(channels, kraus_rank_bounded_by_environment) {
    oracle::Rng rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        const auto ch = QuantumChannel::unitary_induced(oracle::random_unitary(8, rng), 2);
        EXPECT_EQ(kraus_rank(ch), 4);
    }
    const auto u = QuantumChannel::unitary_induced(oracle::random_unitary(4, rng), 4);
    EXPECT_EQ(kraus_rank(u), 1);
}

TEST(channels, stinespring_dimensions_and_action) {
    oracle::Rng rng(9);
    const auto u = QuantumChannel::unitary_induced(oracle::random_unitary(4, rng), 4);
    const auto du = stinespring_dilate(u);
    EXPECT_EQ(du.as_dilated().d_anc, 1);
    EXPECT_EQ(du.as_dilated().unitary.rows(), 4);

    const auto dep = stinespring_dilate(depolarizing(0.75));
    EXPECT_EQ(dep.as_dilated().unitary.rows(), 8);
    EXPECT_EQ(dilation_dimension(depolarizing(0.75)), 8);
    const auto ad = stinespring_dilate(amplitude_damping(0.3));
    EXPECT_EQ(ad.as_dilated().unitary.rows(), 4);

    const auto odd = random_kraus(3, 2, 2, rng);
    const auto dodd = stinespring_dilate(odd);
    EXPECT_EQ(dodd.as_dilated().unitary.rows() % 3, 0);
    EXPECT_EQ(dodd.as_dilated().unitary.rows() % 2, 0);

    for (const auto& [k, d] : {std::pair{depolarizing(0.75), dep}, std::pair{amplitude_damping(0.3), ad},
                               std::pair{odd, dodd}}) {
        EXPECT_LT(unitarity_residual(d.as_dilated().unitary), 1e-10);
        for (int trial = 0; trial < 3; ++trial) {
            const ComplexMatrix rho = oracle::random_density(k.d_a(), rng);
            EXPECT_LT(max_abs(randdual::apply(d, rho) - randdual::apply(k, rho)), 1e-9);
        }
    }
}

TEST(channels, stinespring_completion_does_not_change_action) {
    oracle::Rng rng(10);
    const auto ch = random_kraus(2, 2, 3, rng);
    const auto plain = stinespring_dilate(ch);
    const auto rotated = stinespring_dilate(ch, 1234);
    EXPECT_GT(max_abs(plain.as_dilated().unitary - rotated.as_dilated().unitary), 1e-3);
    const ComplexMatrix rho = oracle::random_density(2, rng);
    EXPECT_LT(max_abs(randdual::apply(plain, rho) - randdual::apply(rotated, rho)), 1e-12);
    EXPECT_LT(max_abs(choi_matrix(rotated).matrix - choi_matrix(ch).matrix), 1e-12);
}

TEST(channels, validate_flags_violations) {
    const ChannelDiagnostics ok = validate(depolarizing(0.5));
    EXPECT_TRUE(ok.ok());
    EXPECT_LT(ok.trace_preservation_residual, 1e-9);
    EXPECT_EQ(ok.kraus_rank, 4);
    EXPECT_FALSE(ok.unitarity_residual.has_value());

    for (Index d : {2, 4}) {
        const auto scaled = QuantumChannel::kraus({1.01 * identity(d)}, Check::skip);
        const ChannelDiagnostics bad = validate(scaled);
        EXPECT_NEAR(bad.trace_preservation_residual, 0.0201 * std::sqrt(static_cast<double>(d)), 1e-12);
        EXPECT_FALSE(bad.ok());
    }
    const auto u = QuantumChannel::unitary_induced(identity(4), 2);
    EXPECT_NEAR(*validate(u).unitarity_residual, 0.0, 1e-15);
}
