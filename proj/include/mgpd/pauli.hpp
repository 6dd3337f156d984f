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

#ifndef MGPD_PAULI_HPP
#define MGPD_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace mgpd {

enum class PauliKind : std::uint8_t { X, Y, Z };

char to_char(PauliKind kind);

/// An n-qubit Pauli operator i^phase_exp * P_1 (x) ... (x) P_n in symplectic form.
///
/// Phase convention: a qubit with both its x-bit and z-bit set denotes the
/// textbook Y = [[0,-i],[i,0]], not XZ. With that choice the operator equals
/// i^(phase_exp + |x & z|) X^x Z^z, and an operator built by single_error()
/// has phase_exp 0 and reconstructs to exactly the textbook matrix.
///
/// Qubits are labelled 1..n externally; qubit q lives in bit (q - 1) of the
/// packed words. At most 64 qubits are supported.
class PauliOperator {
public:
    static constexpr std::size_t kMaxQubits = 64;

    /// The n-qubit identity.
    explicit PauliOperator(std::size_t num_qubits);
    PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                  std::uint8_t phase_exp = 0);

    /// Parses "X4X5X6X7"-style products, optionally prefixed with a phase
    /// ("-", "i", "-i", "+"). "I" is the identity.
    static PauliOperator parse(std::string_view text, std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    std::uint8_t phase_exp() const { return phase_; }

    bool x(std::size_t qubit) const;
    bool z(std::size_t qubit) const;

    std::size_t weight() const;
    bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
    /// True when all bit components vanish, whatever the phase.
    bool is_scalar() const { return x_ == 0 && z_ == 0; }

    /// Same bit components (ignores the global phase).
    bool same_support(const PauliOperator &other) const;

    /// Hermitian conjugate. Pauli strings are Hermitian up to their phase.
    PauliOperator adjoint() const;

    /// "X4X5X6X7" style; identity renders as "I", phases as a prefix.
    std::string str() const;

    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

private:
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    std::uint8_t num_qubits_ = 0;
    std::uint8_t phase_ = 0;
};

/// Weight-one operator with `kind` on `qubit` (1-based).
PauliOperator single_error(PauliKind kind, std::size_t qubit, std::size_t num_qubits);

/// Exact product a*b, including the phase.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

/// Symplectic inner-product parity test: ab == ba.
bool commutes(const PauliOperator &a, const PauliOperator &b);

inline PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) {
    return multiply(a, b);
}

}  // namespace mgpd

#endif  // MGPD_PAULI_HPP
