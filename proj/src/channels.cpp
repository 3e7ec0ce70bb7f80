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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "randdual/errors.hpp"
#include "randdual/random.hpp"

namespace randdual {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

double tp_residual(const std::vector<ComplexMatrix>& ops) {
    const Index d_a = ops.front().cols();
    ComplexMatrix sum = ComplexMatrix::Zero(d_a, d_a);
    for (const auto& m : ops) sum.noalias() += m.adjoint() * m;
    return (sum - identity(d_a)).norm();
}

void require_unitary(const ComplexMatrix& u, Check check, const char* what) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw std::invalid_argument(std::string(what) + ": unitary must be square and nonempty");
    }
    if (check == Check::enforce) {
        const double res = unitarity_residual(u);
        if (!(res <= kChannelTol)) {
            throw ValidationError(std::string(what) + ": unitarity residual " + std::to_string(res) +
                                  " exceeds " + std::to_string(kChannelTol));
        }
    }
}

void require_dims(const ComplexMatrix& rho, Index d, const char* what) {
    if (rho.rows() != d || rho.cols() != d) {
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(d) + "x" +
                                    std::to_string(d) + " operator, got " +
                                    std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    }
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::kraus: return "kraus";
        case ChannelKind::unitary_induced: return "unitary_induced";
        case ChannelKind::dilated: return "dilated";
    }
    return "unknown";
}

QuantumChannel QuantumChannel::kraus(std::vector<ComplexMatrix> ops, Check check) {
    if (ops.empty()) throw std::invalid_argument("kraus channel: no Kraus operators");
    const Index d_b = ops.front().rows();
    const Index d_a = ops.front().cols();
    if (d_a == 0 || d_b == 0) throw std::invalid_argument("kraus channel: empty operator");
    for (const auto& m : ops) {
        if (m.rows() != d_b || m.cols() != d_a) {
            throw std::invalid_argument("kraus channel: Kraus operators have inconsistent shapes");
        }
    }
    if (check == Check::enforce) {
        const double res = tp_residual(ops);
        if (!(res <= kChannelTol)) {
            throw ValidationError("kraus channel: trace-preservation residual " +
                                  std::to_string(res) + " exceeds " + std::to_string(kChannelTol));
        }
    }
    return QuantumChannel(KrausRep{std::move(ops)}, d_a, d_b);
}

QuantumChannel QuantumChannel::unitary_induced(ComplexMatrix unitary, Index d_b, Check check) {
    require_unitary(unitary, check, "unitary_induced channel");
    const Index d_a = unitary.rows();
    if (d_b < 1 || d_a % d_b != 0) {
        throw std::invalid_argument("unitary_induced channel: d_b must divide d_a");
    }
    const Index d_c = d_a / d_b;
    return QuantumChannel(UnitaryInducedRep{std::move(unitary), d_b, d_c}, d_a, d_b);
}

QuantumChannel QuantumChannel::dilated(ComplexMatrix unitary, Index d_a, Index d_b, Check check) {
    require_unitary(unitary, check, "dilated channel");
    const Index d_u = unitary.rows();
    if (d_a < 1 || d_u % d_a != 0 || d_b < 1 || d_u % d_b != 0) {
        throw std::invalid_argument("dilated channel: d_a and d_b must divide the unitary dimension");
    }
    return QuantumChannel(DilatedRep{std::move(unitary), d_a, d_u / d_a, d_b, d_u / d_b}, d_a, d_b);
}

ChannelKind QuantumChannel::kind() const {
    return std::visit(Overloaded{[](const KrausRep&) { return ChannelKind::kraus; },
                                 [](const UnitaryInducedRep&) { return ChannelKind::unitary_induced; },
                                 [](const DilatedRep&) { return ChannelKind::dilated; }},
                      rep_);
}

const KrausRep& QuantumChannel::as_kraus() const {
    if (const auto* p = std::get_if<KrausRep>(&rep_)) return *p;
    throw std::invalid_argument("channel is not in Kraus form");
}

const UnitaryInducedRep& QuantumChannel::as_unitary_induced() const {
    if (const auto* p = std::get_if<UnitaryInducedRep>(&rep_)) return *p;
    throw std::invalid_argument("channel is not unitary-induced");
}

const DilatedRep& QuantumChannel::as_dilated() const {
    if (const auto* p = std::get_if<DilatedRep>(&rep_)) return *p;
    throw std::invalid_argument("channel is not dilated");
}

ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho) {
    require_dims(rho, ch.d_a(), "apply");
    return std::visit(
        Overloaded{
            [&](const KrausRep& k) {
                ComplexMatrix out = ComplexMatrix::Zero(ch.d_b(), ch.d_b());
                for (const auto& m : k.ops) out.noalias() += m * rho * m.adjoint();
                return out;
            },
            [&](const UnitaryInducedRep& u) {
                const ComplexMatrix evolved = u.unitary * rho * u.unitary.adjoint();
                return partial_trace(evolved, {u.d_b, u.d_c}, {0});
            },
            [&](const DilatedRep& u) {
                ComplexMatrix ref = ComplexMatrix::Zero(u.d_anc, u.d_anc);
                ref(0, 0) = 1.0;
                const ComplexMatrix evolved = u.unitary * kron(rho, ref) * u.unitary.adjoint();
                return partial_trace(evolved, {u.d_b, u.d_c}, {0});
            }},
        ch.rep());
}

std::vector<ComplexMatrix> kraus_operators(const QuantumChannel& ch) {
    return std::visit(
        Overloaded{[](const KrausRep& k) { return k.ops; },
                   [](const UnitaryInducedRep& u) {
                       std::vector<ComplexMatrix> ops;
                       const Index d_a = u.unitary.cols();
                       for (Index k = 0; k < u.d_c; ++k) {
                           ComplexMatrix m(u.d_b, d_a);
                           for (Index b = 0; b < u.d_b; ++b) m.row(b) = u.unitary.row(b * u.d_c + k);
                           ops.push_back(std::move(m));
                       }
                       return ops;
                   },
                   [](const DilatedRep& u) {
                       std::vector<ComplexMatrix> ops;
                       for (Index k = 0; k < u.d_c; ++k) {
                           ComplexMatrix m(u.d_b, u.d_a);
                           for (Index b = 0; b < u.d_b; ++b) {
                               for (Index x = 0; x < u.d_a; ++x) {
                                   m(b, x) = u.unitary(b * u.d_c + k, x * u.d_anc);
                               }
                           }
                           ops.push_back(std::move(m));
                       }
                       return ops;
                   }},
        ch.rep());
}

ChoiMatrix choi_matrix(const QuantumChannel& ch) {
    const Index d_a = ch.d_a();
    const Index d_b = ch.d_b();
    // (I (x) M)|phi+> has amplitude M[b, x] / sqrt(d_a) at index x * d_b + b.
    const auto ops = kraus_operators(ch);
    ComplexMatrix vecs(d_a * d_b, static_cast<Index>(ops.size()));
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const ComplexMatrix& m = ops[k];
        for (Index x = 0; x < d_a; ++x) {
            for (Index b = 0; b < d_b; ++b) vecs(x * d_b + b, static_cast<Index>(k)) = m(b, x);
        }
    }
    ComplexMatrix sigma = vecs * vecs.adjoint() / static_cast<double>(d_a);
    sigma = 0.5 * (sigma + sigma.adjoint()).eval();
    return {std::move(sigma), d_a, d_b};
}

double choi_pairing(const ChoiMatrix& sigma, const ComplexMatrix& a, const ComplexMatrix& b) {
    require_dims(a, sigma.d_a, "choi_pairing (A)");
    require_dims(b, sigma.d_b, "choi_pairing (B)");
    const ComplexMatrix op = kron(a.transpose(), b);
    const Complex tr = sigma.matrix.cwiseProduct(op.transpose()).sum();
    return static_cast<double>(sigma.d_a) * tr.real();
}

double default_choi_tol(Index d_a) { return 1e-10 * static_cast<double>(d_a); }

QuantumChannel kraus_from_choi(const ChoiMatrix& sigma, double tol) {
    const Index d_a = sigma.d_a;
    const Index d_b = sigma.d_b;
    if (sigma.matrix.rows() != d_a * d_b || sigma.matrix.cols() != d_a * d_b) {
        throw std::invalid_argument("kraus_from_choi: matrix dimension does not match d_a * d_b");
    }
    if (tol < 0.0) tol = default_choi_tol(d_a);
    const auto eig = hermitian_eig(static_cast<double>(d_a) * sigma.matrix);
    if (eig.values(0) < -tol) {
        throw ValidationError("kraus_from_choi: Choi matrix has eigenvalue " +
                              std::to_string(eig.values(0)) + " (not completely positive)");
    }
    std::vector<ComplexMatrix> ops;
    // Largest eigenvalues first.
    for (Index k = eig.values.size() - 1; k >= 0; --k) {
        const double lambda = eig.values(k);
        if (lambda <= tol) break;
        ComplexMatrix m(d_b, d_a);
        for (Index x = 0; x < d_a; ++x) {
            for (Index b = 0; b < d_b; ++b) m(b, x) = std::sqrt(lambda) * eig.vectors(x * d_b + b, k);
        }
        ops.push_back(std::move(m));
    }
    return QuantumChannel::kraus(std::move(ops));
}

Index kraus_rank(const QuantumChannel& ch, double tol) {
    if (tol < 0.0) tol = default_choi_tol(ch.d_a());
    const ChoiMatrix sigma = choi_matrix(ch);
    return numerical_rank(static_cast<double>(ch.d_a()) * sigma.matrix, tol);
}

Index dilation_dimension(const QuantumChannel& ch) {
    if (const auto* u = std::get_if<DilatedRep>(&ch.rep())) return u->unitary.rows();
    if (ch.kind() == ChannelKind::unitary_induced) return ch.d_a();
    const auto r = static_cast<Index>(ch.as_kraus().ops.size());
    // Smallest ancilla such that d_a * d_anc = d_b * d_c with d_c >= r.
    Index d_anc = 1;
    while ((ch.d_a() * d_anc) % ch.d_b() != 0 || (ch.d_a() * d_anc) / ch.d_b() < r) ++d_anc;
    return ch.d_a() * d_anc;
}

QuantumChannel stinespring_dilate(const QuantumChannel& ch,
                                  std::optional<std::uint64_t> completion_seed) {
    if (const auto* u = std::get_if<UnitaryInducedRep>(&ch.rep())) {
        return QuantumChannel::dilated(u->unitary, ch.d_a(), ch.d_b());
    }
    if (std::holds_alternative<DilatedRep>(ch.rep())) return ch;

    const auto& ops = ch.as_kraus().ops;
    const Index d_a = ch.d_a();
    const Index d_b = ch.d_b();
    const auto r = static_cast<Index>(ops.size());

    const Index d_u = dilation_dimension(ch);
    const Index d_anc = d_u / d_a;
    const Index d_c = d_u / d_b;

    // Isometry H_a -> H_b (x) H_c, column x is sum_k M_k|x> (x) |k>.
    ComplexMatrix iso = ComplexMatrix::Zero(d_u, d_a);
    for (Index k = 0; k < r; ++k) {
        for (Index b = 0; b < d_b; ++b) {
            for (Index x = 0; x < d_a; ++x) iso(b * d_c + k, x) = ops[static_cast<std::size_t>(k)](b, x);
        }
    }
    const double iso_res = (iso.adjoint() * iso - identity(d_a)).norm();
    if (!(iso_res <= kChannelTol)) {
        throw ValidationError("stinespring_dilate: Kraus set is not trace preserving (residual " +
                              std::to_string(iso_res) + ")");
    }

    // Householder Q of the isometry: its trailing columns span the complement.
    const Eigen::HouseholderQR<ComplexMatrix> qr(iso);
    ComplexMatrix complement = ComplexMatrix(qr.householderQ()).rightCols(d_u - d_a);
    if (completion_seed && complement.cols() > 0) {
        complement = complement * haar_unitary(complement.cols(), {*completion_seed, 0});
    }

    ComplexMatrix unitary(d_u, d_u);
    Index next = 0;
    for (Index x = 0; x < d_a; ++x) {
        unitary.col(x * d_anc) = iso.col(x);
        for (Index j = 1; j < d_anc; ++j) unitary.col(x * d_anc + j) = complement.col(next++);
    }
    return QuantumChannel::dilated(std::move(unitary), d_a, d_b);
}

bool ChannelDiagnostics::ok(double tol) const {
    return trace_preservation_residual <= tol && choi_min_eigenvalue >= -tol &&
           choi_trace_residual <= tol && (!unitarity_residual || *unitarity_residual <= tol);
}

bool ChoiDiagnostics::ok(double tol) const {
    return min_eigenvalue >= -tol && trace_residual <= tol && hermiticity_residual <= tol &&
           marginal_residual <= tol;
}

ChannelDiagnostics validate(const QuantumChannel& ch) {
    ChannelDiagnostics diag;
    const auto ops = kraus_operators(ch);
    diag.trace_preservation_residual = tp_residual(ops);
    std::visit(Overloaded{[](const KrausRep&) {},
                          [&](const UnitaryInducedRep& u) { diag.unitarity_residual = unitarity_residual(u.unitary); },
                          [&](const DilatedRep& u) { diag.unitarity_residual = unitarity_residual(u.unitary); }},
               ch.rep());
    const ChoiMatrix sigma = choi_matrix(ch);
    const RealVector spectrum = hermitian_eigenvalues(sigma.matrix);
    diag.choi_min_eigenvalue = spectrum(0);
    diag.choi_trace_residual = std::abs(sigma.matrix.trace().real() - 1.0);
    diag.kraus_rank = static_cast<Index>(
        (static_cast<double>(ch.d_a()) * spectrum.array() > default_choi_tol(ch.d_a())).count());
    return diag;
}

ChoiDiagnostics validate(const ChoiMatrix& sigma) {
    if (sigma.matrix.rows() != sigma.d_a * sigma.d_b || sigma.matrix.cols() != sigma.d_a * sigma.d_b) {
        throw std::invalid_argument("validate: Choi matrix dimension does not match d_a * d_b");
    }
    ChoiDiagnostics diag;
    diag.hermiticity_residual = hermiticity_residual(sigma.matrix);
    const ComplexMatrix herm = 0.5 * (sigma.matrix + sigma.matrix.adjoint());
    diag.min_eigenvalue = hermitian_eigenvalues(herm)(0);
    diag.trace_residual = std::abs(sigma.matrix.trace() - Complex(1.0, 0.0));
    const ComplexMatrix marginal = partial_trace(sigma.matrix, {sigma.d_a, sigma.d_b}, {0});
    diag.marginal_residual =
        (marginal - identity(sigma.d_a) / static_cast<double>(sigma.d_a)).norm();
    return diag;
}

}  // namespace randdual
