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

#include "debruijn/lfsr.hpp"

#include <string>

namespace debruijn {

BitSequence bits_from_string(std::string_view text) {
    BitSequence out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw Error("expected a 0/1 string, got '" + std::string(text) + "'");
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

StateVector::StateVector(std::uint64_t bits, int length) : bits_(bits), length_(length) {
    if (length < 0 || length > 64) throw Error("state length out of range");
    if (length < 64 && (bits >> length) != 0) throw Error("state bits exceed its length");
}

StateVector StateVector::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxStages)) throw Error("state longer than supported");
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] != '0' && text[k] != '1') throw Error("invalid state '" + std::string(text) + "'");
        if (text[k] == '1') bits |= std::uint64_t{1} << k;
    }
    return StateVector{bits, static_cast<int>(text.size())};
}

std::string StateVector::to_string() const {
    std::string out;
    for (int k = 0; k < length_; ++k) out.push_back((*this)[k] ? '1' : '0');
    return out;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) throw Error("state length mismatch");
    return StateVector{a.bits() ^ b.bits(), a.size()};
}

LfsrSpec::LfsrSpec(BinaryPolynomial characteristic) : poly_(characteristic), n_(characteristic.degree()) {
    if (n_ < 1) throw Error("characteristic polynomial must have degree >= 1");
    if (n_ > kMaxStages) throw Error("register wider than " + std::to_string(kMaxStages) + " stages");
    if (!characteristic.coeff(0))
        throw Error("characteristic polynomial " + characteristic.to_string() +
                    " has zero constant term (singular feedback)");
    taps_ = characteristic.bits() & ((std::uint64_t{1} << n_) - 1);
    companion_ = BitMatrix(n_, n_);
    for (int i = 0; i < n_; ++i) companion_.set_row(i, step(std::uint64_t{1} << i));
}

BitSequence generate(const LfsrSpec& spec, const StateVector& init, std::size_t length) {
    if (init.size() != spec.stages()) throw Error("initial state length does not match the register");
    BitSequence out;
    out.reserve(length);
    std::uint64_t state = init.bits();
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(static_cast<std::uint8_t>(state & 1U));
        state = spec.step(state);
    }
    return out;
}

std::uint64_t apply_T(std::uint64_t state, const LfsrSpec& spec, std::uint64_t k) {
    if (k <= static_cast<std::uint64_t>(4 * spec.stages())) {
        for (std::uint64_t i = 0; i < k; ++i) state = spec.step(state);
        return state;
    }
    return spec.companion().pow(k).apply(state);
}

StateVector apply_T(const StateVector& state, const LfsrSpec& spec, std::uint64_t k) {
    if (state.size() != spec.stages()) throw Error("state length does not match the register");
    return StateVector{apply_T(state.bits(), spec, k), state.size()};
}

BitSequence decimate(std::span<const std::uint8_t> seq, std::size_t d, std::size_t offset, std::size_t count) {
    if (count == 0) return {};
    if (d == 0) throw Error("decimation step must be positive");
    if (offset + d * (count - 1) >= seq.size()) throw Error("sequence too short for requested decimation");
    BitSequence out(count);
    for (std::size_t j = 0; j < count; ++j) out[j] = seq[offset + d * j];
    return out;
}

StateVector solve_initial_state(BinaryPolynomial q, std::uint64_t t) {
    const LfsrSpec spec(q);
    const int n = spec.stages();
    // Column k of the system is A^{kt} e_0^T; the first bit of s * A^{kt}
    // is the inner product of s with that column.
    const BitMatrix step_t = spec.companion().pow(t);
    BitMatrix system(n, n);
    std::vector<std::uint64_t> column_bits(static_cast<std::size_t>(n));
    std::uint64_t column = 1;  // e_0 as a column vector
    for (int k = 0; k < n; ++k) {
        for (int r = 0; r < n; ++r)
            if ((column >> r) & 1U) system.set(r, k, true);
        // A^t * column: entry r is row r of A^t dotted with column.
        std::uint64_t next = 0;
        for (int r = 0; r < n; ++r)
            if (std::popcount(step_t.row(r) & column) & 1) next |= std::uint64_t{1} << r;
        column = next;
    }
    const auto solution = solve_left(system, 1);
    if (!solution) throw Error("initial-state system is singular for " + q.to_string());
    return StateVector{*solution, n};
}

StateBasis::StateBasis(std::span<const BinaryPolynomial> factors) {
    for (const auto& p : factors) {
        offsets_.push_back(n_);
        widths_.push_back(p.degree());
        n_ += p.degree();
    }
    if (n_ < 1 || n_ > kMaxStages) throw Error("total degree out of supported range");
    p_ = BitMatrix(n_, n_);
    int row = 0;
    for (const auto& p : factors) {
        const LfsrSpec spec(p);
        for (int j = 0; j < spec.stages(); ++j, ++row) {
            const BitSequence prefix = generate(spec, StateVector{std::uint64_t{1} << j, spec.stages()},
                                                static_cast<std::size_t>(n_));
            std::uint64_t bits = 0;
            for (int k = 0; k < n_; ++k)
                if (prefix[static_cast<std::size_t>(k)]) bits |= std::uint64_t{1} << k;
            p_.set_row(row, bits);
        }
    }
    auto inv = p_.inverse();
    if (!inv) throw Error("state basis is rank deficient; factors must be distinct");
    p_inv_ = std::move(*inv);
}

std::uint64_t StateBasis::compose(std::span<const std::uint64_t> components) const {
    if (components.size() != widths_.size()) throw Error("component count does not match the basis");
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < components.size(); ++i) packed |= components[i] << offsets_[i];
    return p_.apply(packed);
}

std::vector<std::uint64_t> StateBasis::decompose(std::uint64_t state) const {
    const std::uint64_t packed = p_inv_.apply(state);
    std::vector<std::uint64_t> out;
    out.reserve(widths_.size());
    for (std::size_t i = 0; i < widths_.size(); ++i)
        out.push_back((packed >> offsets_[i]) & ((std::uint64_t{1} << widths_[i]) - 1));
    return out;
}

StateVector state_compose(std::span<const StateVector> components, const StateBasis& basis) {
    if (static_cast<int>(components.size()) != basis.factor_count())
        throw Error("component count does not match the basis");
    std::vector<std::uint64_t> raw;
    for (int i = 0; i < basis.factor_count(); ++i) {
        if (components[static_cast<std::size_t>(i)].size() != basis.block_width(i))
            throw Error("component length does not match its factor degree");
        raw.push_back(components[static_cast<std::size_t>(i)].bits());
    }
    return StateVector{basis.compose(raw), basis.stages()};
}

std::vector<StateVector> state_decompose(const StateVector& v, const StateBasis& basis) {
    if (v.size() != basis.stages()) throw Error("state length does not match the basis");
    const auto raw = basis.decompose(v.bits());
    std::vector<StateVector> out;
    for (int i = 0; i < basis.factor_count(); ++i)
        out.emplace_back(raw[static_cast<std::size_t>(i)], basis.block_width(i));
    return out;
}

}  // namespace debruijn
