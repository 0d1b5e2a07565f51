/*
 * Copyright 2026 The debruijn-lfsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/bit_matrix.hpp"
#include "debruijn/polynomial.hpp"

namespace debruijn {

/// Widest register supported by the packed state representation.
inline constexpr int kMaxStages = 62;

/// Cyclic or finite binary sequence, one bit per element.
using BitSequence = std::vector<std::uint8_t>;

BitSequence bits_from_string(std::string_view text);
std::string bits_to_string(std::span<const std::uint8_t> bits);

/// Register contents (s_i, ..., s_{i+n-1}). Bit k of the packed word is s_{i+k},
/// so the earliest sequence element is the least significant bit.
class StateVector {
public:
    StateVector() = default;
    StateVector(std::uint64_t bits, int length);

    /// Reads '0'/'1' characters, first character is s_0.
    static StateVector parse(std::string_view text);
    static StateVector unit(int length) { return StateVector{1, length}; }

    std::uint64_t bits() const { return bits_; }
    int size() const { return length_; }
    bool operator[](int k) const { return (bits_ >> k) & 1U; }
    bool is_zero() const { return bits_ == 0; }
    std::string to_string() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;
    friend StateVector operator+(const StateVector& a, const StateVector& b);

private:
    std::uint64_t bits_ = 0;
    int length_ = 0;
};

/// Linear feedback shift register with characteristic polynomial
/// f(x) = x^n + c_{n-1} x^{n-1} + ... + c_0, feedback s_{i+n} = sum c_k s_{i+k}.
class LfsrSpec {
public:
    /// The one-stage register x + 1.
    LfsrSpec() : LfsrSpec(BinaryPolynomial{3}) {}
    /// Throws Error for degree < 1, degree > kMaxStages, or a zero constant term.
    explicit LfsrSpec(BinaryPolynomial characteristic);

    BinaryPolynomial characteristic() const { return poly_; }
    int stages() const { return n_; }
    /// c_0..c_{n-1} packed.
    std::uint64_t taps() const { return taps_; }

    std::uint64_t feedback(std::uint64_t state) const {
        return static_cast<std::uint64_t>(std::popcount(state & taps_) & 1);
    }
    std::uint64_t step(std::uint64_t state) const { return (state >> 1) | (feedback(state) << (n_ - 1)); }

    /// Matrix A with state * A = T(state).
    const BitMatrix& companion() const { return companion_; }

private:
    BinaryPolynomial poly_;
    int n_ = 0;
    std::uint64_t taps_ = 0;
    BitMatrix companion_;
};

/// First `length` output bits from `init`. Throws Error on a length mismatch.
BitSequence generate(const LfsrSpec& spec, const StateVector& init, std::size_t length);

/// k-th successor of `state` under T. Large k uses companion-matrix powers.
StateVector apply_T(const StateVector& state, const LfsrSpec& spec, std::uint64_t k);
std::uint64_t apply_T(std::uint64_t state, const LfsrSpec& spec, std::uint64_t k);

/// v_j = s_{offset + d*j} for j < count. Throws Error if seq is too short.
BitSequence decimate(std::span<const std::uint8_t> seq, std::size_t d, std::size_t offset, std::size_t count);

/// Initial state s0 for the m-sequence of primitive q whose t-decimation
/// begins with (1, 0, ..., 0). Found by a linear solve over GF(2).
StateVector solve_initial_state(BinaryPolynomial q, std::uint64_t t);

/// Block matrix P mapping component states (a_1 | ... | a_s) to an n-bit state
/// of the product LFSR, together with its inverse.
class StateBasis {
public:
    /// Throws Error if the factors are not distinct (P rank deficient).
    explicit StateBasis(std::span<const BinaryPolynomial> factors);

    int stages() const { return n_; }
    int factor_count() const { return static_cast<int>(widths_.size()); }
    int block_offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
    int block_width(int i) const { return widths_[static_cast<std::size_t>(i)]; }

    const BitMatrix& matrix() const { return p_; }
    const BitMatrix& inverse() const { return p_inv_; }

    /// Contribution of component i's state to the composed state.
    std::uint64_t compose_block(int i, std::uint64_t component) const {
        return p_.apply(component << offsets_[static_cast<std::size_t>(i)]);
    }
    std::uint64_t compose(std::span<const std::uint64_t> components) const;
    std::vector<std::uint64_t> decompose(std::uint64_t state) const;

private:
    int n_ = 0;
    std::vector<int> offsets_;
    std::vector<int> widths_;
    BitMatrix p_;
    BitMatrix p_inv_;
};

/// (a_1, ..., a_s) * P. Component lengths must match the block widths.
StateVector state_compose(std::span<const StateVector> components, const StateBasis& basis);
/// Inverse of state_compose.
std::vector<StateVector> state_decompose(const StateVector& v, const StateBasis& basis);

}  // namespace debruijn
