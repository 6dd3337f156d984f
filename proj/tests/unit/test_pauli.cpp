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

#include <doctest.h>

#include <complex>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "mgpd/pauli.hpp"

using mgpd::PauliKind;
using mgpd::PauliOperator;

namespace {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

// Independent oracle: textbook 2x2 matrices combined with Kronecker products,
// qubit 1 leftmost.
Mat single(int symbol) {
    Mat m(2, 2);
    switch (symbol) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, C(0, -1), C(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

Mat oracle(const PauliOperator &op) {
    static const C kPhase[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    Mat m = Mat::Identity(1, 1);
    for (std::size_t q = 1; q <= op.num_qubits(); ++q) {
        const bool x = op.x(q), z = op.z(q);
        m = kron(m, single(x && z ? 2 : x ? 1 : z ? 3 : 0));
    }
    return kPhase[op.phase_exp()] * m;
}

PauliOperator random_pauli(std::mt19937_64 &rng, std::size_t n) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return PauliOperator(n, rng() & mask, rng() & mask, static_cast<std::uint8_t>(rng() & 3));
}

}  // namespace

TEST_CASE("single errors reproduce the textbook matrices") {
    CHECK((oracle(mgpd::single_error(PauliKind::Y, 1, 1)) - single(2)).norm() < 1e-15);
    const PauliOperator y = mgpd::single_error(PauliKind::Y, 2, 3);
    CHECK(y.phase_exp() == 0);
    CHECK(y.str() == "Y2");
    CHECK(y.weight() == 1);
    CHECK_THROWS_AS(mgpd::single_error(PauliKind::X, 0, 7), std::out_of_range);
    CHECK_THROWS_AS(mgpd::single_error(PauliKind::X, 8, 7), std::out_of_range);
}

TEST_CASE("products of single-qubit Paulis carry the right phase") {
    const auto x = mgpd::single_error(PauliKind::X, 1, 1);
    const auto y = mgpd::single_error(PauliKind::Y, 1, 1);
    const auto z = mgpd::single_error(PauliKind::Z, 1, 1);
    CHECK((x * y) == PauliOperator(1, 0, 1, 1));  // XY = iZ
    CHECK((y * x) == PauliOperator(1, 0, 1, 3));  // YX = -iZ
    CHECK((z * x).str() == "iY1");
    CHECK((x * x).is_identity());
    CHECK((y * y).is_identity());
}

TEST_CASE("multiply is a homomorphism onto matrix multiplication") {
    std::mt19937_64 rng(12345);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_pauli(rng, n);
            const auto b = random_pauli(rng, n);
            CHECK((oracle(a * b) - oracle(a) * oracle(b)).norm() < 1e-12);
            const Mat ab = oracle(a) * oracle(b);
            const Mat ba = oracle(b) * oracle(a);
            CHECK(mgpd::commutes(a, b) == ((ab - ba).norm() < 1e-12));
            CHECK((oracle(a.adjoint()) - oracle(a).adjoint()).norm() < 1e-12);
        }
    }
}

TEST_CASE("multiplication is associative and squares to a scalar") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_pauli(rng, 7), b = random_pauli(rng, 7), c = random_pauli(rng, 7);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * a).is_scalar());
        CHECK(((a * b).same_support(b * a)));
    }
}

TEST_CASE("parse and str round trip") {
    const auto g = PauliOperator::parse("X4X5X6X7", 7);
    CHECK(g.x_bits() == 0x78);
    CHECK(g.z_bits() == 0);
    CHECK(g.str() == "X4X5X6X7");
    CHECK(PauliOperator::parse("Z1,Z3,Z5,Z7", 7).z_bits() == 0x55);
    CHECK(PauliOperator::parse("I", 7).is_identity());
    CHECK(PauliOperator::parse("-iY3", 7).str() == "-iY3");
    CHECK(PauliOperator::parse("-X1", 2).phase_exp() == 2);
    // Repeated factors multiply out.
    CHECK(PauliOperator::parse("Z4,Z5,Z5,Z7", 7).str() == "Z4Z7");
    CHECK_THROWS_AS(PauliOperator::parse("Q1", 7), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::parse("X", 7), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::parse("X9", 7), std::out_of_range);
    CHECK_THROWS_AS(PauliOperator::parse("", 7), std::invalid_argument);
}

TEST_CASE("construction validates sizes") {
    CHECK_THROWS_AS(PauliOperator(0), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator(65), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator(3, 0x8, 0), std::invalid_argument);
    CHECK_NOTHROW(PauliOperator(64, ~std::uint64_t{0}, ~std::uint64_t{0}));
    CHECK_THROWS_AS(mgpd::multiply(PauliOperator(3), PauliOperator(4)), std::invalid_argument);
    CHECK_THROWS_AS(mgpd::commutes(PauliOperator(3), PauliOperator(4)), std::invalid_argument);
}

TEST_CASE("64-qubit operators multiply without overflow") {
    const PauliOperator a(64, std::uint64_t{1} << 63, 0);
    const PauliOperator b(64, 0, std::uint64_t{1} << 63);
    const auto ab = a * b;
    CHECK(ab.x(64));
    CHECK(ab.z(64));
    CHECK(ab.phase_exp() == 3);  // XZ = -iY
    CHECK_FALSE(mgpd::commutes(a, b));
}
