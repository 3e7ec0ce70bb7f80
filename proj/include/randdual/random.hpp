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

// Seeded Haar sampling.
//
// Every random object is a pure function of a SeedSpec. The underlying bit
// source is Philox4x32-10 (Salmon et al., SC'11) keyed by the 64-bit master
// seed, with the 128-bit counter split into (block counter, sample index).
// Changing this generator changes every seeded result; bump kRngVersion if it
// ever happens.

#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "randdual/linalg.hpp"

namespace randdual {

inline constexpr const char* kRngVersion = "philox4x32-10/v1";

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t sample_index = 0;
};

/// Counter-based Philox4x32-10 stream satisfying UniformRandomBitGenerator.
class PhiloxStream {
   public:
    using result_type = std::uint32_t;
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit PhiloxStream(SeedSpec seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    /// One application of the Philox4x32-10 bijection.
    static Block bijection(Block counter, Key key);

   private:
    Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    Block buffer_{};
    int used_ = 4;
};

/// Deterministic child seed for sub-stream `stream` of `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
StateVector haar_state(Index d, SeedSpec seed);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal absorbed into Q.
ComplexMatrix haar_unitary(Index d, SeedSpec seed);

/// Closed-form Haar integral of V^dagger X V Y V^dagger Z V over U(D).
/// Requires square X, Y, Z of equal dimension D >= 2.
ComplexMatrix haar_second_moment_oracle(const ComplexMatrix& x, const ComplexMatrix& y,
                                        const ComplexMatrix& z);

}  // namespace randdual
