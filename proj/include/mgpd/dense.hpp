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

// Exact state-vector checks of the code's operator identities at dimension
// 2^7. Basis index convention: qubit 1 is the most significant bit.

#ifndef MGPD_DENSE_HPP
#define MGPD_DENSE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mgpd/steane.hpp"

namespace mgpd::dense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using State = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr Eigen::Index kDim = Eigen::Index{1} << kBlockQubits;

/// Full 2^n x 2^n matrix of a Pauli operator (n <= 10).
Matrix to_dense(const PauliOperator &op);

/// op * v without forming the matrix.
State apply_pauli(const PauliOperator &op, const State &v);
/// op * m and m * op.
Matrix apply_left(const PauliOperator &op, const Matrix &m);
Matrix apply_right(const Matrix &m, const PauliOperator &op);

/// prod over the listed generators (1-based) of (I + s_k g_k) / 2, with
/// s_k = -1 where `mask` flips g_k. Factors commute, so order is irrelevant.
Matrix generator_product(SignMask mask, const std::vector<int> &generators);
/// All six factors: the rank-2 code projector for `mask`.
Matrix build_projector(SignMask mask);
/// build_projector(mask) * v, evaluated on the vector.
State project(SignMask mask, const State &v);

/// Computational basis state |index>.
State basis_state(std::size_t index);

struct PropositionReport {
    int case_id = 0;  // 1: commutes with all g; 2: anticommutes with g_h only; 3: otherwise
    int h = 0;
    PauliOperator e_i{kBlockQubits};
    PauliOperator e_j{kBlockQubits};
    double lhs_norm = 0.0;  // ||P~ E_i^dag E_j P~||_F
    bool proportional_to_p = false;
    Complex proportionality_constant;  // best-fit beta
    double residual_norm = 0.0;        // ||lhs - beta P||_F
    /// residual_norm / lhs_norm (0 when lhs vanishes).
    double relative_residual = 0.0;
    /// alpha from P E_i^dag E_j P = alpha P.
    Complex alpha;
    bool matches_zero = false;
    /// ||lhs - (alpha P - 2 P E_i^dag E_j)||_F, the alternative printed form.
    double alternative_form_residual = 0.0;
    bool matches_alternative_form = false;
};

/// Evaluates P~ E_i^dag E_j P~ where P~ flips only g_h. Caches the dense
/// projectors and the sandwiched products of each distinct E_i^dag E_j.
class PropositionChecker {
public:
    PropositionChecker();

    PropositionReport check(int h, const PauliOperator &e_i, const PauliOperator &e_j);

private:
    struct Sandwich {
        Matrix flipped;   // P~ Q P~
        Complex alpha;    // P Q P = alpha P
        Matrix p_times_q; // P Q
    };
    const Sandwich &sandwich(int h, const PauliOperator &q);

    Matrix p_;
    std::array<Matrix, kNumGenerators> flipped_;
    std::map<std::pair<int, std::uint64_t>, Sandwich> cache_;
};

PropositionReport check_sandwich(int h, const PauliOperator &e_i, const PauliOperator &e_j);

/// I and every X_q, Y_q, Z_q: 22 operators.
std::vector<PauliOperator> correctable_set();

struct PropositionSummary {
    /// max over the 63 nonempty masks of ||P~ P||_F.
    double max_flipped_overlap = 0.0;
    /// Case-1 identity pair for h = 1.
    PropositionReport identity_pair;
    std::size_t case_counts[3] = {0, 0, 0};
    std::size_t case3_proportional = 0;
    double case3_max_beta_alpha_gap = 0.0;
    std::size_t case2_zero = 0;
    std::size_t case2_alternative = 0;
    std::vector<PropositionReport> case2_reports;
    /// A pair set admits a common beta only if every pair is proportional.
    bool common_beta_exists = true;
    double seconds = 0.0;
};

/// Every h in 1..6 and every ordered pair of correctable_set().
PropositionSummary check_proposition_all();

struct Projection {
    double probability = 0.0;
    std::optional<State> post_state;  // nullopt for a zero-probability branch
};

/// Projects onto outcome 0 ((I + sign g)/2) or outcome 1 ((I - sign g)/2).
Projection project_onto(const State &state, const PauliOperator &g, int sign, int outcome);

struct Measurement {
    int outcome = 0;
    double probability = 0.0;
    State post_state;
};

/// Takes the more probable branch (outcome 0 on ties), so the result is
/// deterministic; for the eigenstates produced by single errors the branch
/// probability is 1.
Measurement measure_generator(const State &state, const PauliOperator &g, int sign);

struct SyndromeMeasurement {
    Syndrome syndrome;
    double min_probability = 1.0;  // smallest branch probability met
    State post_state;
};

/// Measures g1..g6 in order with the signs of `mask`.
SyndromeMeasurement measure_syndrome(const State &state, SignMask mask);

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ConjugationReport {
    /// The single published instance: Z5 (I-g1)(I+g2)(I-g3) = (I+g1)(I+g2)(I+g3) Z5.
    double instance_max_diff = 0.0;
    /// [j][row]: max |Z_j M(row) - M(0) Z_j| with M over g1..g3.
    std::array<std::array<double, kNumLabels>, kNumLabels> diff{};
    std::size_t matched_equal = 0;
    std::size_t mismatched_unequal = 0;

    bool passed(double tol = 1e-12) const;
};

ConjugationReport verify_mask_conjugation();

struct FrameDenseReport {
    ChannelKind kind = ChannelKind::PhaseFlip;
    std::size_t cases = 0;
    std::size_t agreements = 0;
    double min_probability = 1.0;
};

/// For every (mask row, error label): dense outcomes with original signs must
/// equal eve_view(syndrome_of(e), mask), and with the mask's own signs must
/// equal syndrome_of(e).
FrameDenseReport frame_dense_agreement(ChannelKind kind);

/// Ancilla-style generator measurements, conjugation identities, frame/dense
/// agreement, orthogonality of the mask projectors and repeatability.
std::vector<CheckResult> verify_circuits();

struct LogicalBasis {
    State zero;
    State one;
    std::size_t seed_index = 0;
};

/// |0L> = normalized (I + Zbar)/2 P_mask |s> for the first seed s = 0, 1, ...
/// with a nonzero projection; |1L> = Xbar |0L>.
LogicalBasis logical_basis(SignMask mask);

/// Encodes a|0L> + b|1L> under `mask`, applies `error`, measures the syndrome
/// with `bob_mask` signs, applies decode_any_single_error and returns the
/// squared overlap with the encoded state.
double encode_decode_fidelity(Complex a, Complex b, SignMask mask, const PauliOperator &error,
                              SignMask bob_mask);

/// (1 - p) rho + p s rho s with s the family's Pauli. Throws on an invalid
/// density matrix.
Matrix2 apply_pauli_channel_dense(const Matrix2 &rho, ChannelKind kind, double p);

}  // namespace mgpd::dense

#endif  // MGPD_DENSE_HPP
