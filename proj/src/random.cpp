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
#include <random>
#include <stdexcept>

namespace randdual {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr int kRounds = 10;

constexpr std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
constexpr std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

PhiloxStream::Block philox_round(const PhiloxStream::Block& ctr, const PhiloxStream::Key& key) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    return {hi32(p1) ^ ctr[1] ^ key[0], lo32(p1), hi32(p0) ^ ctr[3] ^ key[1], lo32(p0)};
}

// Gaussian matrix entries with unit variance per real component.
ComplexMatrix ginibre(Index rows, Index cols, PhiloxStream& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

PhiloxStream::PhiloxStream(SeedSpec seed)
    : key_{lo32(seed.master_seed), hi32(seed.master_seed)}, stream_(seed.sample_index) {}

PhiloxStream::Block PhiloxStream::bijection(Block counter, Key key) {
    counter = philox_round(counter, key);
    for (int r = 1; r < kRounds; ++r) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
        counter = philox_round(counter, key);
    }
    return counter;
}

PhiloxStream::result_type PhiloxStream::operator()() {
    if (used_ == 4) {
        buffer_ = bijection({lo32(block_), hi32(block_), lo32(stream_), hi32(stream_)}, key_);
        ++block_;
        used_ = 0;
    }
    return buffer_[static_cast<std::size_t>(used_++)];
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    // Block counter 2^64-1 is reserved for seed derivation; ordinary streams
    // never reach it.
    const auto out = PhiloxStream::bijection({0xFFFFFFFFu, 0xFFFFFFFFu, lo32(stream), hi32(stream)},
                                             {lo32(master), hi32(master)});
    return (std::uint64_t{out[1]} << 32) | out[0];
}

StateVector haar_state(Index d, SeedSpec seed) {
    if (d < 1) throw std::invalid_argument("haar_state: dimension must be >= 1");
    PhiloxStream rng(seed);
    StateVector v = ginibre(d, 1, rng).col(0);
    v /= v.norm();
    return v;
}

ComplexMatrix haar_unitary(Index d, SeedSpec seed) {
    if (d < 1) throw std::invalid_argument("haar_unitary: dimension must be >= 1");
    PhiloxStream rng(seed);
    const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(d, d, rng));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Index j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(j) *= diag / mag;
    }
    return q;
}

ComplexMatrix haar_second_moment_oracle(const ComplexMatrix& x, const ComplexMatrix& y,
                                        const ComplexMatrix& z) {
    const Index d = x.rows();
    if (d < 2) throw std::invalid_argument("haar_second_moment_oracle: dimension must be >= 2");
    for (const ComplexMatrix* m : {&x, &y, &z}) {
        if (m->rows() != d || m->cols() != d) {
            throw std::invalid_argument("haar_second_moment_oracle: operands must be square of equal size");
        }
    }
    const double dd = static_cast<double>(d);
    const double denom = dd * dd - 1.0;
    const Complex tr_x = x.trace();
    const Complex tr_y = y.trace();
    const Complex tr_z = z.trace();
    const Complex tr_xz = (x * z).trace();
    const Complex coeff_y = tr_x * tr_z / denom - tr_xz / (dd * denom);
    const Complex coeff_i = tr_xz * tr_y / denom - tr_x * tr_z * tr_y / (dd * denom);
    return coeff_y * y + coeff_i * identity(d);
}

}  // namespace randdual
