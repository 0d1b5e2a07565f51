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

#include "debruijn/field.hpp"

#include <string>

namespace debruijn {

FieldContext::FieldContext(BinaryPolynomial modulus) : modulus_(modulus), degree_(modulus.degree()) {
    if (degree_ > kMaxFieldDegree)
        throw Error("field degree " + std::to_string(degree_) + " exceeds table limit " +
                    std::to_string(kMaxFieldDegree));
    if (!is_primitive(modulus))
        throw Error("field modulus " + modulus.to_string() + " is not primitive");
    group_order_ = static_cast<std::uint32_t>((std::uint64_t{1} << degree_) - 1);
    exp_.resize(group_order_);
    log_.assign(std::size_t{group_order_} + 1, kInfinity);

    const std::uint32_t top = 1U << degree_;
    const auto reduce = static_cast<std::uint32_t>(modulus.bits());
    std::uint32_t elem = 1;
    for (std::uint32_t k = 0; k < group_order_; ++k) {
        exp_[k] = elem;
        log_[elem] = k;
        elem <<= 1;
        if (elem & top) elem ^= reduce;
    }

    zech_.resize(group_order_);
    zech_[0] = kInfinity;
    for (std::uint32_t l = 1; l < group_order_; ++l) zech_[l] = log_[exp_[l] ^ 1U];
}

std::uint32_t FieldContext::log(std::uint32_t element) const {
    if (element == 0 || element > group_order_) throw Error("discrete log of zero or out-of-field element");
    return log_[element];
}

std::uint32_t FieldContext::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % group_order_];
}

CyclotomicParams CyclotomicParams::make(int n, std::uint64_t e) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (e == 0 || full % e != 0)
        throw Error("order " + std::to_string(e) + " does not divide 2^" + std::to_string(n) + "-1");
    return CyclotomicParams{e, full / e};
}

std::uint64_t cyclotomic_number(std::int64_t i, std::int64_t j, const CyclotomicParams& params,
                                const FieldContext& ctx) {
    const auto t = static_cast<std::int64_t>(params.t);
    const auto ri = static_cast<std::uint64_t>(((i % t) + t) % t);
    const auto rj = static_cast<std::uint64_t>(((j % t) + t) % t);
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < params.e; ++s) {
        const std::uint32_t tau = ctx.zech(ri + s * params.t);
        if (tau == FieldContext::kInfinity) continue;
        if (tau % params.t == rj) ++count;
    }
    return count;
}

}  // namespace debruijn
