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

// Second moments of randomized dual states: the infinite-temperature OTOC
//
//     F = d_a^2 E |<Psi| (B^t (x) A) |Psi'>|^2 = tr_c[(tr_b X)^2],
//     X = U A U^dag (B (x) I_c),
//
// which for a computational-basis rank-1 projector B reduces to
// tr[(U A U^dag (B (x) I_c))^2].

#pragma once

#include "randdual/channels.hpp"
#include "randdual/dual.hpp"

namespace randdual {

class OtocSpec {
   public:
    /// Checks dimensions and, when `b_is_projector` is set, that B is a
    /// diagonal rank-1 projector. Throws std::invalid_argument otherwise.
    OtocSpec(QuantumChannel channel, ComplexMatrix a, ComplexMatrix b, bool b_is_projector);

    [[nodiscard]] const QuantumChannel& channel() const { return channel_; }
    [[nodiscard]] const ComplexMatrix& a() const { return a_; }
    [[nodiscard]] const ComplexMatrix& b() const { return b_; }
    [[nodiscard]] bool b_is_projector() const { return b_is_projector_; }

   private:
    QuantumChannel channel_;
    ComplexMatrix a_;
    ComplexMatrix b_;
    bool b_is_projector_;
};

enum class PairingStrategy {
    disjoint,  // samples (2k, 2k+1); independent pairs, sigma is meaningful
    all_pairs  // U-statistic over k < k'; reported sigma is not a valid error bar
};

/// Pair estimator of the OTOC. Requires the projector flag and >= 2 samples.
EstimatorReport otoc_estimate(const OtocSpec& spec, const DualStateEnsemble& ens,
                              PairingStrategy pairing = PairingStrategy::disjoint);

/// Exact OTOC. Projector case: tr[(U A U^dag (B (x) I_c))^2]; otherwise the
/// reshaped contraction tr_c[(tr_b X)^2].
double otoc_exact(const OtocSpec& spec);

}  // namespace randdual
