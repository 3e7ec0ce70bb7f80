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

#include "randdual/random.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace randdual;

namespace {

// Entrywise Monte-Carlo mean and standard error of a matrix-valued sample.
struct MatrixStats {
    ComplexMatrix mean;
    ComplexMatrix sq_re;
    ComplexMatrix sq_im;
    int n = 0;

    explicit MatrixStats(Index d)
        : mean(ComplexMatrix::Zero(d, d)), sq_re(ComplexMatrix::Zero(d, d)), sq_im(ComplexMatrix::Zero(d, d)) {}

    void add(const ComplexMatrix& m) {
        mean += m;
        sq_re += m.real().cwiseAbs2().cast<Complex>();
        sq_im += m.imag().cwiseAbs2().cast<Complex>();
        ++n;
    }

    // Largest |mean - expected| over all entries, in standard errors.
    double max_sigma(const ComplexMatrix& expected) const {
        double worst = 0.0;
        const ComplexMatrix mu = mean / static_cast<double>(n);
        for (Index r = 0; r < mu.rows(); ++r) {
            for (Index c = 0; c < mu.cols(); ++c) {
                const double vr = sq_re(r, c).real() / n - mu(r, c).real() * mu(r, c).real();
                const double vi = sq_im(r, c).real() / n - mu(r, c).imag() * mu(r, c).imag();
                const double er = std::sqrt(std::max(vr, 1e-30) / n);
                const double ei = std::sqrt(std::max(vi, 1e-30) / n);
                worst = std::max(worst, std::abs(mu(r, c).real() - expected(r, c).real()) / er);
                worst = std::max(worst, std::abs(mu(r, c).imag() - expected(r, c).imag()) / ei);
            }
        }
        return worst;
    }
};

}  // namespace

TEST(random, philox_known_answers) {
    using B = PhiloxStream::Block;
    EXPECT_EQ(PhiloxStream::bijection(B{0, 0, 0, 0}, {0, 0}),
              (B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(PhiloxStream::bijection(B{1, 0, 0, 0}, {0, 0}),
              (B{0xf8e4cca4, 0x5cb200db, 0xb1a574eb, 0x097eff67}));
    EXPECT_EQ(PhiloxStream::bijection(B{0x76543210, 0xfedcba98, 0x89abcdef, 0x01234567}, {0xcafebabe, 0xdeadbeef}),
              (B{0xcde37577, 0xd6d94e2e, 0x82a46b94, 0x162b72ba}));
}

TEST(random, streams_are_pure_functions_of_seed) {
    const StateVector a = haar_state(7, {42, 3});
    for (std::uint64_t k = 0; k < 5; ++k) (void)haar_state(7, {42, k});
    const StateVector b = haar_state(7, {42, 3});
    EXPECT_EQ(a, b);
    EXPECT_NE(a, haar_state(7, {42, 4}));
    EXPECT_NE(a, haar_state(7, {43, 3}));
    EXPECT_EQ(haar_unitary(5, {9, 1}), haar_unitary(5, {9, 1}));

    PhiloxStream s1({5, 6});
    PhiloxStream s2({5, 6});
    for (int k = 0; k < 100; ++k) EXPECT_EQ(s1(), s2());
}

TEST(random, derive_seed_is_injective_on_small_ranges) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t m = 0; m < 4; ++m) {
        for (std::uint64_t s = 0; s < 500; ++s) seen.insert(derive_seed(m, s));
    }
    EXPECT_EQ(seen.size(), 2000u);
    EXPECT_EQ(derive_seed(7, 11), derive_seed(7, 11));
}

TEST(random, dimension_one) {
    const StateVector v = haar_state(1, {1, 0});
    EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-15);
    const ComplexMatrix u = haar_unitary(1, {1, 0});
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
    EXPECT_THROW(haar_state(0, {1, 0}), std::invalid_argument);
    EXPECT_THROW(haar_unitary(0, {1, 0}), std::invalid_argument);
}

TEST(random, haar_state_first_moment) {
    const Index d = 4;
    ComplexMatrix mean = ComplexMatrix::Zero(d, d);
    const int n = 10000;
    for (int k = 0; k < n; ++k) {
        const StateVector v = haar_state(d, {2024, static_cast<std::uint64_t>(k)});
        EXPECT_NEAR(v.norm(), 1.0, 1e-12);
        mean += v * v.adjoint();
    }
    mean /= n;
    EXPECT_LT((mean - identity(d) / 4.0).cwiseAbs().maxCoeff(), 0.02);
}

TEST(random, haar_state_second_moment) {
    // E[(psi psi^dag) (x) (psi psi^dag)] = (I + SWAP) / (d (d + 1)).
    const Index d = 3;
    ComplexMatrix swap = ComplexMatrix::Zero(d * d, d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) swap(i * d + j, j * d + i) = 1.0;
    const ComplexMatrix expected = (identity(d * d) + swap) / static_cast<double>(d * (d + 1));
    MatrixStats stats(d * d);
    for (int k = 0; k < 20000; ++k) {
        const StateVector v = haar_state(d, {77, static_cast<std::uint64_t>(k)});
        const StateVector vv = kron(v, v);
        stats.add(vv * vv.adjoint());
    }
    EXPECT_LT(stats.max_sigma(expected), 4.0);
}

TEST(random, haar_unitary_is_unitary) {
    for (Index d : {2, 5, 16}) {
        const ComplexMatrix u = haar_unitary(d, {3, static_cast<std::uint64_t>(d)});
        EXPECT_LT(unitarity_residual(u), 1e-10);
        for (Index c = 0; c < d; ++c) EXPECT_NEAR(u.col(c).norm(), 1.0, 1e-12);
    }
}

TEST(random, haar_unitary_column_statistics) {
    // |<0|U|0>|^2 has mean 1/d; any fixed entry has mean 0.
    const Index d = 4;
    const int n = 20000;
    std::vector<double> p;
    std::vector<double> re;
    std::vector<double> im;
    for (int k = 0; k < n; ++k) {
        const ComplexMatrix u = haar_unitary(d, {91, static_cast<std::uint64_t>(k)});
        p.push_back(std::norm(u(0, 0)));
        re.push_back(u(2, 1).real());
        im.push_back(u(2, 1).imag());
    }
    const auto mp = oracle::mean_and_error(p);
    EXPECT_LT(std::abs(mp.mean - 0.25), 3 * mp.stderr_);
    const auto mr = oracle::mean_and_error(re);
    const auto mi = oracle::mean_and_error(im);
    EXPECT_LT(std::abs(mr.mean), 3 * mr.stderr_);
    EXPECT_LT(std::abs(mi.mean), 3 * mi.stderr_);

    // The diagonal phase fix makes U|0> a Haar state: E|<0|U|0>|^4 = 2 / (d (d + 1)).
    std::vector<double> p2;
    for (double x : p) p2.push_back(x * x);
    const auto m2 = oracle::mean_and_error(p2);
    EXPECT_LT(std::abs(m2.mean - 2.0 / (d * (d + 1))), 3 * m2.stderr_);
}

TEST(random, second_moment_oracle_identities) {
    oracle::Rng rng(5);
    const ComplexMatrix y = oracle::ginibre(3, 3, rng);
    EXPECT_LT((haar_second_moment_oracle(identity(3), y, identity(3)) - y).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_THROW(haar_second_moment_oracle(identity(1), identity(1), identity(1)), std::invalid_argument);
    EXPECT_THROW(haar_second_moment_oracle(identity(2), identity(3), identity(2)), std::invalid_argument);
}

TEST(random, second_moment_oracle_matches_monte_carlo) {
    auto check = [](const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& z, int n,
                    const std::function<ComplexMatrix(int)>& draw) {
        MatrixStats stats(x.rows());
        for (int k = 0; k < n; ++k) {
            const ComplexMatrix v = draw(k);
            stats.add(v.adjoint() * x * v * y * v.adjoint() * z * v);
        }
        return stats.max_sigma(haar_second_moment_oracle(x, y, z));
    };
    oracle::Rng rng(6);
    const ComplexMatrix x = oracle::random_hermitian(3, rng);
    const ComplexMatrix z = oracle::random_hermitian(3, rng);
    const int n = 100000;
    // Library sampler.
    EXPECT_LT(check(x, identity(3), z, n,
                    [](int k) { return haar_unitary(3, {606, static_cast<std::uint64_t>(k)}); }),
              4.0);
    // Independent sampler, so the closed form is checked on its own.
    EXPECT_LT(check(x, identity(3), z, n, [&rng](int) { return oracle::random_unitary(3, rng); }), 4.0);

    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    EXPECT_LT(check(p0, p1, p0, n, [](int k) { return haar_unitary(2, {707, static_cast<std::uint64_t>(k)}); }),
              4.0);
    const ComplexMatrix y = oracle::random_hermitian(3, rng);
    EXPECT_LT(check(x, y, z, n, [](int k) { return haar_unitary(3, {808, static_cast<std::uint64_t>(k)}); }),
              4.0);
}
