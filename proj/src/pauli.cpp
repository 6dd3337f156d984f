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

#include "mgpd/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace mgpd {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_size(const PauliOperator &a, const PauliOperator &b, const char *what) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                    std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + ")");
    }
}

// 0 = I, 1 = X, 2 = Y, 3 = Z.
int symbol(bool x, bool z) {
    if (x && z) return 2;
    if (x) return 1;
    if (z) return 3;
    return 0;
}

}  // namespace

char to_char(PauliKind kind) {
    switch (kind) {
        case PauliKind::X: return 'X';
        case PauliKind::Y: return 'Y';
        case PauliKind::Z: return 'Z';
    }
    return '?';
}

PauliOperator::PauliOperator(std::size_t num_qubits) : PauliOperator(num_qubits, 0, 0, 0) {}

PauliOperator::PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                             std::uint8_t phase_exp) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliOperator: qubit count must be in 1..64, got " +
                                    std::to_string(num_qubits));
    }
    if (((x_bits | z_bits) & ~low_mask(num_qubits)) != 0) {
        throw std::invalid_argument("PauliOperator: bits set beyond qubit count");
    }
    x_ = x_bits;
    z_ = z_bits;
    num_qubits_ = static_cast<std::uint8_t>(num_qubits);
    phase_ = static_cast<std::uint8_t>(phase_exp & 3);
}

PauliOperator PauliOperator::parse(std::string_view text, std::size_t num_qubits) {
    std::uint8_t phase = 0;
    if (text.starts_with("-i")) {
        phase = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+i")) {
        phase = 1;
        text.remove_prefix(2);
    } else if (text.starts_with('-')) {
        phase = 2;
        text.remove_prefix(1);
    } else if (text.starts_with('+')) {
        text.remove_prefix(1);
    } else if (text.starts_with('i') && text.size() > 1) {
        phase = 1;
        text.remove_prefix(1);
    }
    PauliOperator result(num_qubits);
    result.phase_ = phase;
    if (text == "I") return result;
    if (text.empty()) throw std::invalid_argument("PauliOperator::parse: empty operator");

    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos++];
        if (c == ',' || c == ' ') continue;
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("PauliOperator::parse: unexpected character '" +
                                        std::string(1, c) + "'");
        }
        std::size_t qubit = 0;
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            qubit = qubit * 10 + static_cast<std::size_t>(text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw std::invalid_argument("PauliOperator::parse: missing qubit index");
        const PauliKind kind = c == 'X' ? PauliKind::X : c == 'Y' ? PauliKind::Y : PauliKind::Z;
        result = multiply(result, single_error(kind, qubit, num_qubits));
    }
    return result;
}

bool PauliOperator::x(std::size_t qubit) const {
    if (qubit < 1 || qubit > num_qubits_) throw std::out_of_range("PauliOperator::x: qubit index");
    return (x_ >> (qubit - 1)) & 1;
}

bool PauliOperator::z(std::size_t qubit) const {
    if (qubit < 1 || qubit > num_qubits_) throw std::out_of_range("PauliOperator::z: qubit index");
    return (z_ >> (qubit - 1)) & 1;
}

std::size_t PauliOperator::weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

bool PauliOperator::same_support(const PauliOperator &other) const {
    return num_qubits_ == other.num_qubits_ && x_ == other.x_ && z_ == other.z_;
}

PauliOperator PauliOperator::adjoint() const {
    // (i^t P)^dagger = i^-t P for a Hermitian string P.
    return PauliOperator(num_qubits_, x_, z_, static_cast<std::uint8_t>((4 - phase_) & 3));
}

std::string PauliOperator::str() const {
    static constexpr const char *kPhase[] = {"", "i", "-", "-i"};
    std::string out = kPhase[phase_];
    if (x_ == 0 && z_ == 0) return out + "I";
    for (std::size_t q = 1; q <= num_qubits_; ++q) {
        const int s = symbol(x(q), z(q));
        if (s == 0) continue;
        out += "IXYZ"[s];
        out += std::to_string(q);
    }
    return out;
}

PauliOperator single_error(PauliKind kind, std::size_t qubit, std::size_t num_qubits) {
    if (qubit < 1 || qubit > num_qubits) {
        throw std::out_of_range("single_error: qubit index " + std::to_string(qubit) +
                                " outside 1.." + std::to_string(num_qubits));
    }
    const std::uint64_t bit = std::uint64_t{1} << (qubit - 1);
    switch (kind) {
        case PauliKind::X: return PauliOperator(num_qubits, bit, 0);
        case PauliKind::Z: return PauliOperator(num_qubits, 0, bit);
        case PauliKind::Y: return PauliOperator(num_qubits, bit, bit);
    }
    throw std::invalid_argument("single_error: unknown kind");
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b, "multiply");
    int phase = a.phase_exp() + b.phase_exp();
    // Only qubits where both factors are non-identity contribute a phase.
    std::uint64_t overlap = (a.x_bits() | a.z_bits()) & (b.x_bits() | b.z_bits());
    while (overlap != 0) {
        const int bit = std::countr_zero(overlap);
        overlap &= overlap - 1;
        const int sa = symbol((a.x_bits() >> bit) & 1, (a.z_bits() >> bit) & 1);
        const int sb = symbol((b.x_bits() >> bit) & 1, (b.z_bits() >> bit) & 1);
        if (sa == sb) continue;
        // Cyclic order X -> Y -> Z -> X gives +i, the reverse order -i.
        phase += ((sb - sa + 3) % 3 == 1) ? 1 : 3;
    }
    return PauliOperator(a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(),
                         static_cast<std::uint8_t>(phase & 3));
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b, "commutes");
    const int parity =
        std::popcount(a.x_bits() & b.z_bits()) + std::popcount(a.z_bits() & b.x_bits());
    return (parity & 1) == 0;
}

}  // namespace mgpd
