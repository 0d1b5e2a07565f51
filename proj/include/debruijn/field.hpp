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
#include <limits>
#include <vector>

#include "debruijn/polynomial.hpp"

namespace debruijn {

/// Largest extension degree for which log/exp/Zech tables are built.
inline constexpr int kMaxFieldDegree = 24;

/// GF(2^n) defined by a primitive modulus, with alpha = x mod modulus.
///
/// Elements are packed n-bit polynomials. Construction eagerly fills the
/// exp/log tables and the Zech table; the object is immutable afterwards and
/// may be shared between threads.
class FieldContext {
public:
    /// Sentinel returned by zech(0): alpha^0 + 1 = 0 has no logarithm.
    static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

    /// Throws Error if `modulus` is not primitive or its degree exceeds
    /// kMaxFieldDegree.
    explicit FieldContext(BinaryPolynomial modulus);

    BinaryPolynomial modulus() const { return modulus_; }
    int degree() const { return degree_; }
    /// 2^n - 1.
    std::uint32_t group_order() const { return group_order_; }

    /// alpha^k, k reduced modulo the group order.
    std::uint32_t exp(std::uint64_t k) const { return exp_[k % group_order_]; }
    /// Discrete log of a nonzero element.
    std::uint32_t log(std::uint32_t element) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    /// tau(l) with alpha^l + 1 = alpha^tau(l); kInfinity when l = 0 mod 2^n - 1.
    std::uint32_t zech(std::uint64_t l) const { return zech_[l % group_order_]; }
    const std::vector<std::uint32_t>& zech_table() const { return zech_; }

private:
    BinaryPolynomial modulus_;
    int degree_ = 0;
    std::uint32_t group_order_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

/// Order e of an irreducible factor and the cofactor t = (2^n - 1)/e.
struct CyclotomicParams {
    std::uint64_t e = 1;
    std::uint64_t t = 1;

    /// Throws Error unless e divides 2^n - 1.
    static CyclotomicParams make(int n, std::uint64_t e);
};

/// (i, j)_t = |{ xi in C_i : xi + 1 in C_j }| with C_i = alpha^i <alpha^t>.
/// Indices are taken modulo t.
std::uint64_t cyclotomic_number(std::int64_t i, std::int64_t j, const CyclotomicParams& params,
                                const FieldContext& ctx);

}  // namespace debruijn
