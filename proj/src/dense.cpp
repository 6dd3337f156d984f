// Copyright 2026 The MGPD Simulator Authors
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

#include "mgpd/dense.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace mgpd::dense {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kIdentityTol = 1e-10;

// Packed Pauli bit q-1 maps to dense index bit n-q.
std::uint64_t to_index_bits(std::uint64_t bits, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if ((bits >> q) & 1) out |= std::uint64_t{1} << (n - 1 - q);
    }
    return out;
}

struct DenseAction {
    std::uint64_t flip = 0;
    std::uint64_t sign = 0;
    Complex base;

    Complex weight(std::uint64_t c) const {
        return (std::popcount(c & sign) & 1) ? -base : base;
    }
};

DenseAction action_of(const PauliOperator &op) {
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::size_t n = op.num_qubits();
    const int exponent = op.phase_exp() + std::popcount(op.x_bits() & op.z_bits());
    return {to_index_bits(op.x_bits(), n), to_index_bits(op.z_bits(), n), kPowers[exponent & 3]};
}

Eigen::Index dimension_of(const PauliOperator &op) {
    if (op.num_qubits() > 10) throw std::invalid_argument("dense: at most 10 qubits");
    return Eigen::Index{1} << op.num_qubits();
}

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

PauliOperator strip_phase(const PauliOperator &op) {
    return PauliOperator(op.num_qubits(), op.x_bits(), op.z_bits(), 0);
}

Complex phase_of(const PauliOperator &op) {
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[op.phase_exp() & 3];
}

Complex frobenius_fit(const Matrix &target, const Matrix &basis) {
    return (basis.conjugate().cwiseProduct(target)).sum() / basis.squaredNorm();
}

State normalized(const State &v) { return v / v.norm(); }

}  // namespace

Matrix to_dense(const PauliOperator &op) {
    const Eigen::Index dim = dimension_of(op);
    const DenseAction a = action_of(op);
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        m(static_cast<Eigen::Index>(c ^ a.flip), c) = a.weight(static_cast<std::uint64_t>(c));
    }
    return m;
}

State apply_pauli(const PauliOperator &op, const State &v) {
    const Eigen::Index dim = dimension_of(op);
    if (v.size() != dim) throw std::invalid_argument("dense::apply: dimension mismatch");
    const DenseAction a = action_of(op);
    State out(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        out(static_cast<Eigen::Index>(c ^ a.flip)) = a.weight(static_cast<std::uint64_t>(c)) * v(c);
    }
    return out;
}

Matrix apply_left(const PauliOperator &op, const Matrix &m) {
    const Eigen::Index dim = dimension_of(op);
    if (m.rows() != dim) throw std::invalid_argument("dense::apply_left: dimension mismatch");
    const DenseAction a = action_of(op);
    Matrix out(dim, m.cols());
    for (Eigen::Index c = 0; c < dim; ++c) {
        out.row(static_cast<Eigen::Index>(c ^ a.flip)) = a.weight(static_cast<std::uint64_t>(c)) * m.row(c);
    }
    return out;
}

Matrix apply_right(const Matrix &m, const PauliOperator &op) {
    const Eigen::Index dim = dimension_of(op);
    if (m.cols() != dim) throw std::invalid_argument("dense::apply_right: dimension mismatch");
    const DenseAction a = action_of(op);
    Matrix out(m.rows(), dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        out.col(c) = m.col(static_cast<Eigen::Index>(c ^ a.flip)) * a.weight(static_cast<std::uint64_t>(c));
    }
    return out;
}

Matrix generator_product(SignMask mask, const std::vector<int> &generators) {
    const auto &code = steane_code();
    Matrix m = Matrix::Identity(kDim, kDim);
    for (int k : generators) {
        if (k < 1 || k > static_cast<int>(kNumGenerators)) throw std::out_of_range("generator index");
        const double s = mask.sign(static_cast<std::size_t>(k));
        m = 0.5 * (m + s * apply_left(code.generators[k - 1], m));
    }
    return m;
}

Matrix build_projector(SignMask mask) { return generator_product(mask, {1, 2, 3, 4, 5, 6}); }

State project(SignMask mask, const State &v) {
    const auto &code = steane_code();
    State out = v;
    for (std::size_t k = 1; k <= kNumGenerators; ++k) {
        out = 0.5 * (out + static_cast<double>(mask.sign(k)) * apply_pauli(code.generators[k - 1], out));
    }
    return out;
}

State basis_state(std::size_t index) {
    if (static_cast<Eigen::Index>(index) >= kDim) throw std::out_of_range("basis_state index");
    State v = State::Zero(kDim);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

PropositionChecker::PropositionChecker() : p_(build_projector(SignMask{})) {
    for (std::size_t h = 1; h <= kNumGenerators; ++h) {
        flipped_[h - 1] = build_projector(SignMask::of({static_cast<int>(h)}));
    }
}

const PropositionChecker::Sandwich &PropositionChecker::sandwich(int h, const PauliOperator &q) {
    const std::pair<int, std::uint64_t> key{h, q.x_bits() | (q.z_bits() << kBlockQubits)};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Matrix &f = flipped_[h - 1];
    Sandwich s;
    s.flipped = apply_right(f, q) * f;
    s.p_times_q = apply_right(p_, q);
    s.alpha = frobenius_fit(s.p_times_q * p_, p_);
    return cache_.emplace(key, std::move(s)).first->second;
}

PropositionReport PropositionChecker::check(int h, const PauliOperator &e_i, const PauliOperator &e_j) {
    if (h < 1 || h > static_cast<int>(kNumGenerators)) throw std::out_of_range("generator index h");
    PropositionReport r;
    r.h = h;
    r.e_i = e_i;
    r.e_j = e_j;
    const PauliOperator q = e_i.adjoint() * e_j;
    const Complex phase = phase_of(q);
    const Sandwich &s = sandwich(h, strip_phase(q));

    const std::uint8_t pattern = syndrome_of(q).packed();
    const std::uint8_t only_h = static_cast<std::uint8_t>(1u << (h - 1));
    r.case_id = pattern == 0 ? 1 : pattern == only_h ? 2 : 3;

    const Matrix lhs = phase * s.flipped;
    r.lhs_norm = lhs.norm();
    r.proportionality_constant = frobenius_fit(lhs, p_);
    r.residual_norm = (lhs - r.proportionality_constant * p_).norm();
    r.proportional_to_p = r.residual_norm < kIdentityTol;
    r.relative_residual = r.lhs_norm > 0.0 ? r.residual_norm / r.lhs_norm : 0.0;
    r.alpha = phase * s.alpha;
    r.matches_zero = r.lhs_norm < kIdentityTol;
    r.alternative_form_residual = (lhs - (r.alpha * p_ - 2.0 * phase * s.p_times_q)).norm();
    r.matches_alternative_form = r.alternative_form_residual < kIdentityTol;
    return r;
}

PropositionReport check_sandwich(int h, const PauliOperator &e_i, const PauliOperator &e_j) {
    PropositionChecker checker;
    return checker.check(h, e_i, e_j);
}

std::vector<PauliOperator> correctable_set() {
    std::vector<PauliOperator> out{PauliOperator(kBlockQubits)};
    for (PauliKind kind : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
        for (std::size_t q = 1; q <= kBlockQubits; ++q) out.push_back(single_error(kind, q, kBlockQubits));
    }
    return out;
}

PropositionSummary check_proposition_all() {
    const auto start = std::chrono::steady_clock::now();
    PropositionSummary summary;
    const Matrix p = build_projector(SignMask{});
    for (unsigned m = 1; m < 64; ++m) {
        const double overlap = (build_projector(SignMask(static_cast<std::uint8_t>(m))) * p).norm();
        summary.max_flipped_overlap = std::max(summary.max_flipped_overlap, overlap);
    }

    PropositionChecker checker;
    const auto set = correctable_set();
    const PauliOperator identity(kBlockQubits);
    summary.identity_pair = checker.check(1, identity, identity);
    for (int h = 1; h <= static_cast<int>(kNumGenerators); ++h) {
        for (const auto &e_i : set) {
            for (const auto &e_j : set) {
                PropositionReport r = checker.check(h, e_i, e_j);
                ++summary.case_counts[r.case_id - 1];
                if (!r.proportional_to_p) summary.common_beta_exists = false;
                if (r.case_id == 3) {
                    if (r.proportional_to_p) ++summary.case3_proportional;
                    summary.case3_max_beta_alpha_gap =
                        std::max(summary.case3_max_beta_alpha_gap, std::abs(r.proportionality_constant - r.alpha));
                } else if (r.case_id == 2) {
                    if (r.matches_zero) ++summary.case2_zero;
                    if (r.matches_alternative_form) ++summary.case2_alternative;
                    summary.case2_reports.push_back(std::move(r));
                }
            }
        }
    }
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

Projection project_onto(const State &state, const PauliOperator &g, int sign, int outcome) {
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("project_onto: outcome must be 0 or 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("project_onto: sign must be +1 or -1");
    const double s = outcome == 0 ? sign : -sign;
    const State v = 0.5 * (state + s * apply_pauli(g, state));
    Projection out;
    out.probability = v.squaredNorm() / state.squaredNorm();
    if (out.probability > 1e-15) out.post_state = normalized(v);
    return out;
}

Measurement measure_generator(const State &state, const PauliOperator &g, int sign) {
    Projection zero = project_onto(state, g, sign, 0);
    if (zero.probability >= 0.5) return {0, zero.probability, std::move(*zero.post_state)};
    Projection one = project_onto(state, g, sign, 1);
    return {1, one.probability, std::move(*one.post_state)};
}

SyndromeMeasurement measure_syndrome(const State &state, SignMask mask) {
    const auto &code = steane_code();
    SyndromeMeasurement out;
    out.post_state = normalized(state);
    std::uint8_t bits = 0;
    for (std::size_t k = 1; k <= kNumGenerators; ++k) {
        Measurement m = measure_generator(out.post_state, code.generators[k - 1], mask.sign(k));
        if (m.outcome == 1) bits |= static_cast<std::uint8_t>(1u << (k - 1));
        out.min_probability = std::min(out.min_probability, m.probability);
        out.post_state = std::move(m.post_state);
    }
    out.syndrome = Syndrome(bits);
    return out;
}

bool ConjugationReport::passed(double tol) const {
    return instance_max_diff <= tol && matched_equal == kNumLabels &&
           mismatched_unequal == kNumLabels * (kNumLabels - 1);
}

ConjugationReport verify_mask_conjugation() {
    ConjugationReport report;
    const std::vector<int> x_checks = {1, 2, 3};
    const PauliOperator z5 = single_error(PauliKind::Z, 5, kBlockQubits);
    const Matrix plain = generator_product(SignMask{}, x_checks);
    report.instance_max_diff =
        max_abs(apply_left(z5, generator_product(SignMask::of({1, 3}), x_checks)) - apply_right(plain, z5));

    std::array<Matrix, kNumLabels> products;
    for (int row = 0; row < static_cast<int>(kNumLabels); ++row) {
        products[row] = generator_product(mask_for_row(ChannelKind::PhaseFlip, row), x_checks);
    }
    for (int j = 0; j < static_cast<int>(kNumLabels); ++j) {
        const PauliOperator z = error_label(ChannelKind::PhaseFlip, j);
        const Matrix rhs = apply_right(plain, z);
        for (int row = 0; row < static_cast<int>(kNumLabels); ++row) {
            const double d = max_abs(apply_left(z, products[row]) - rhs);
            report.diff[j][row] = d;
            if (j == row && d <= kExactTol) ++report.matched_equal;
            if (j != row && d > kExactTol) ++report.mismatched_unequal;
        }
    }
    return report;
}

LogicalBasis logical_basis(SignMask mask) {
    const auto &code = steane_code();
    for (std::size_t s = 0; s < static_cast<std::size_t>(kDim); ++s) {
        State v = project(mask, basis_state(s));
        v = 0.5 * (v + apply_pauli(code.logical_z, v));
        const double norm = v.norm();
        if (norm < 1e-8) continue;
        LogicalBasis basis;
        basis.zero = v / norm;
        basis.one = apply_pauli(code.logical_x, basis.zero);
        basis.seed_index = s;
        return basis;
    }
    throw std::logic_error("logical_basis: no seed state has a nonzero projection");
}

FrameDenseReport frame_dense_agreement(ChannelKind kind) {
    FrameDenseReport report;
    report.kind = kind;
    for (int row = 0; row < static_cast<int>(kNumLabels); ++row) {
        const SignMask mask = mask_for_row(kind, row);
        const State codeword = logical_basis(mask).zero;
        for (int label = 0; label < static_cast<int>(kNumLabels); ++label) {
            const PauliOperator e = error_label(kind, label);
            const State corrupted = apply_pauli(e, codeword);
            const SyndromeMeasurement original = measure_syndrome(corrupted, SignMask{});
            const SyndromeMeasurement adjusted = measure_syndrome(corrupted, mask);
            ++report.cases;
            report.min_probability =
                std::min({report.min_probability, original.min_probability, adjusted.min_probability});
            if (original.syndrome == eve_view(syndrome_of(e), mask) && adjusted.syndrome == syndrome_of(e)) {
                ++report.agreements;
            }
        }
    }
    return report;
}

namespace {

// Ancilla-assisted measurement: H on the ancilla, controlled (sign g), H, then
// read the ancilla. Evaluated on the 2 * 128 dimensional joint state.
double ancilla_zero_probability(const State &psi, const PauliOperator &g, int sign) {
    const double r = 1.0 / std::sqrt(2.0);
    State joint = State::Zero(2 * kDim);
    joint.head(kDim) = r * psi;
    joint.tail(kDim) = r * psi;
    joint.tail(kDim) = static_cast<double>(sign) * apply_pauli(g, State(joint.tail(kDim)));
    const State a0 = r * (joint.head(kDim) + joint.tail(kDim));
    return a0.squaredNorm() / psi.squaredNorm();
}

CheckResult make_check(std::string name, bool passed, double measured, double tolerance, std::string detail = {}) {
    return {std::move(name), passed, measured, tolerance, std::move(detail)};
}

CheckResult outcome_check(const std::string &name, SignMask encode_mask, const std::string &expected) {
    const State state = apply_pauli(single_error(PauliKind::Z, 6, kBlockQubits), logical_basis(encode_mask).zero);
    const SyndromeMeasurement m = measure_syndrome(state, SignMask{});
    const bool ok = m.syndrome.str() == expected && m.min_probability >= 1.0 - kExactTol;
    return make_check(name, ok, 1.0 - m.min_probability, kExactTol,
                      "outcomes " + m.syndrome.str() + ", expected " + expected);
}

}  // namespace

std::vector<CheckResult> verify_circuits() {
    std::vector<CheckResult> out;
    const auto &code = steane_code();

    // Z6 on the unmodified code: g1 reads 1. With g1 flipped: g1 reads 0.
    out.push_back(outcome_check("unmodified_z6_outcomes", SignMask{}, "110000"));
    out.push_back(outcome_check("g1_flipped_z6_outcomes", SignMask::of({1}), "010000"));

    {
        double worst = 0.0;
        for (std::size_t s = 0; s < 16; ++s) {
            State psi = basis_state(s * 7 % static_cast<std::size_t>(kDim)) + basis_state((s * 13 + 5) % kDim);
            psi.normalize();
            for (std::size_t k = 0; k < kNumGenerators; ++k) {
                for (int sign : {1, -1}) {
                    const double direct = project_onto(psi, code.generators[k], sign, 0).probability;
                    worst = std::max(worst, std::abs(direct - ancilla_zero_probability(psi, code.generators[k], sign)));
                }
            }
        }
        out.push_back(make_check("ancilla_circuit_matches_projector", worst <= kExactTol, worst, kExactTol));
    }

    const ConjugationReport conj = verify_mask_conjugation();
    out.push_back(make_check("z5_conjugates_g1g3_pattern", conj.instance_max_diff <= kExactTol,
                             conj.instance_max_diff, kExactTol));
    out.push_back(make_check("conjugation_matched_pairs", conj.matched_equal == kNumLabels,
                             static_cast<double>(conj.matched_equal), 0.0, "of 8"));
    out.push_back(make_check("conjugation_mismatched_pairs", conj.mismatched_unequal == 56,
                             static_cast<double>(conj.mismatched_unequal), 0.0, "of 56"));

    for (ChannelKind kind : kAllChannelKinds) {
        const FrameDenseReport r = frame_dense_agreement(kind);
        out.push_back(make_check("frame_dense_agreement_" + std::string(to_string(kind)),
                                 r.agreements == r.cases && r.min_probability >= 1.0 - kExactTol,
                                 static_cast<double>(r.agreements), 0.0, "of " + std::to_string(r.cases)));
    }

    {
        double worst_axiom = 0.0;
        for (unsigned m = 0; m < 64; ++m) {
            const Matrix p = build_projector(SignMask(static_cast<std::uint8_t>(m)));
            worst_axiom = std::max({worst_axiom, max_abs(p * p - p), max_abs(p - p.adjoint()),
                                    std::abs(p.trace() - Complex(2.0, 0.0))});
        }
        out.push_back(make_check("projector_axioms_all_masks", worst_axiom <= kIdentityTol, worst_axiom, kIdentityTol));
    }

    for (ChannelKind kind : kAllChannelKinds) {
        std::array<Matrix, kNumLabels> projectors;
        Matrix sum = Matrix::Zero(kDim, kDim);
        for (int row = 0; row < static_cast<int>(kNumLabels); ++row) {
            projectors[row] = build_projector(mask_for_row(kind, row));
            sum += projectors[row];
        }
        double worst = 0.0;
        for (std::size_t a = 0; a < kNumLabels; ++a) {
            for (std::size_t b = a + 1; b < kNumLabels; ++b) worst = std::max(worst, (projectors[a] * projectors[b]).norm());
        }
        const double trace_gap = std::abs(sum.trace() - Complex(16.0, 0.0));
        const double idem = max_abs(sum * sum - sum);
        out.push_back(make_check("orthogonal_family_" + std::string(to_string(kind)),
                                 worst <= kExactTol && trace_gap <= kIdentityTol && idem <= kIdentityTol,
                                 std::max({worst, trace_gap, idem}), kExactTol));
    }

    {
        State psi = basis_state(1) + basis_state(42) + basis_state(100);
        psi.normalize();
        double worst = 0.0;
        for (std::size_t k = 0; k < kNumGenerators; ++k) {
            const Measurement first = measure_generator(psi, code.generators[k], 1);
            const Projection again = project_onto(first.post_state, code.generators[k], 1, first.outcome);
            worst = std::max(worst, 1.0 - again.probability);
        }
        out.push_back(make_check("repeated_measurement_agrees", worst <= kExactTol, worst, kExactTol));
    }
    return out;
}

double encode_decode_fidelity(Complex a, Complex b, SignMask mask, const PauliOperator &error, SignMask bob_mask) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kIdentityTol) {
        throw std::invalid_argument("encode_decode_fidelity: |a|^2 + |b|^2 must equal 1");
    }
    if (error.num_qubits() != kBlockQubits) throw std::invalid_argument("encode_decode_fidelity: 7-qubit error expected");
    const LogicalBasis basis = logical_basis(mask);
    const State encoded = a * basis.zero + b * basis.one;
    const SyndromeMeasurement m = measure_syndrome(apply_pauli(error, encoded), bob_mask);
    const State decoded = apply_pauli(decode_any_single_error(m.syndrome), m.post_state);
    return std::norm(encoded.dot(decoded));
}

Matrix2 apply_pauli_channel_dense(const Matrix2 &rho, ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("apply_pauli_channel_dense: p must lie in [0,1]");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kExactTol) {
        throw std::invalid_argument("apply_pauli_channel_dense: rho is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kExactTol) {
        throw std::invalid_argument("apply_pauli_channel_dense: rho must have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Matrix2> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kExactTol) {
        throw std::invalid_argument("apply_pauli_channel_dense: rho is not positive semidefinite");
    }
    Matrix2 s;
    switch (kind) {
        case ChannelKind::BitFlip: s << 0, 1, 1, 0; break;
        case ChannelKind::PhaseFlip: s << 1, 0, 0, -1; break;
        case ChannelKind::BitPhaseFlip: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    }
    return (1.0 - p) * rho + p * s * rho * s.adjoint();
}

}  // namespace mgpd::dense
