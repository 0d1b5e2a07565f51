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

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "debruijn/field.hpp"
#include "debruijn/lfsr.hpp"
#include "debruijn/polynomial.hpp"

namespace debruijn {

/// Everything known about one irreducible factor p_i of f: its order e_i,
/// t_i = (2^{n_i}-1)/e_i, one state a_j on each of the t_i nonzero cycles of
/// Omega(p_i), and the orbit of every such state.
struct FactorData {
    BinaryPolynomial poly;
    int degree = 0;
    std::uint64_t order = 1;  // e_i
    std::uint64_t cofactor = 1;  // t_i
    BinaryPolynomial associated;  // associated primitive polynomial
    LfsrSpec spec;
    std::shared_ptr<const FieldContext> field;
    /// a^i_0 .. a^i_{t-1}; the zero state is implied at index t.
    std::vector<std::uint64_t> states;
    /// orbit[j * e + u] = T^u a_j.
    std::vector<std::uint32_t> orbit;
    /// position[s] = j * e + u for every nonzero state s; index 0 unused.
    std::vector<std::uint32_t> position;

    bool primitive() const { return cofactor == 1; }
    std::uint32_t zero_index() const { return static_cast<std::uint32_t>(cofactor); }
    /// T^u a_j with u reduced modulo e.
    std::uint64_t shifted(std::uint32_t j, std::uint64_t u) const {
        return orbit[j * order + u % order];
    }
};

/// Per-factor data for an irreducible p with degree <= kMaxFieldDegree.
/// Throws Error for reducible input or p = x.
FactorData states_per_factor(BinaryPolynomial p);

/// One cycle of Omega(f): [sum_i a_i L^{l_i} s^i_{j_i}].
struct CycleDescriptor {
    std::vector<std::uint8_t> active;  // a_i
    std::vector<std::uint32_t> index;  // j_i; equals t_i when inactive
    std::vector<std::uint64_t> shift;  // l_i, l_1 = 0, zero when inactive
    std::uint64_t period = 1;

    bool is_zero() const;
};

class CycleSet {
public:
    CycleSet() = default;
    explicit CycleSet(std::vector<CycleDescriptor> cycles);

    std::size_t size() const { return cycles_.size(); }
    const CycleDescriptor& operator[](std::size_t k) const { return cycles_[k]; }
    const std::vector<CycleDescriptor>& cycles() const { return cycles_; }
    std::size_t zero_index() const { return zero_index_; }

    /// Index of the cycle containing the state whose component states are
    /// given (as decomposed by the basis). Throws Error if none matches.
    std::size_t locate_components(std::span<const std::uint64_t> components,
                                  std::span<const FactorData> factors) const;

private:
    std::vector<CycleDescriptor> cycles_;
    std::size_t zero_index_ = 0;
    // (a, j) pattern -> descriptor indices sharing it.
    std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_pattern_;
};

/// Enumerates every cycle of Omega(prod p_i). The a-flags are the outermost
/// loop: a_1 slowest, then a_2..a_s counted in binary with a_2 as the low bit.
/// Within a flag pattern the j indices are nested j_1 outermost, then the
/// shifts l_2..l_s with l_k < gcd(f_k, lcm(f_1..f_{k-1})).
CycleSet enumerate_cycles(std::span<const FactorData> factors);

/// Composes (T^{l_1} a_{j_1}, ..., T^{l_s} a_{j_s}) * P, zero blocks for
/// inactive components.
std::uint64_t representative_state(const CycleDescriptor& cycle, const StateBasis& basis,
                                   std::span<const FactorData> factors);

/// "[0]", "[s1_0 + L^2 s3_1]" and so on; factor numbers are 1-based.
std::string describe_cycle(const CycleDescriptor& cycle);

/// Validated factor list: parses, checks irreducibility and distinctness,
/// rejects x and constants. Throws Error with an explanatory message.
std::vector<BinaryPolynomial> validate_factors(std::span<const BinaryPolynomial> factors);

/// Product of the factors.
BinaryPolynomial product(std::span<const BinaryPolynomial> factors);

}  // namespace debruijn
