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

#include "debruijn/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace debruijn {

FactorData states_per_factor(BinaryPolynomial p) {
    if (p.degree() > kMaxFieldDegree)
        throw Error("factor " + p.to_string() + " has degree above " + std::to_string(kMaxFieldDegree));
    FactorData f;
    f.poly = p;
    f.degree = p.degree();
    f.order = poly_order(p);
    f.cofactor = ((std::uint64_t{1} << f.degree) - 1) / f.order;
    f.spec = LfsrSpec(p);
    f.associated = find_associated_primitive(p);
    f.field = std::make_shared<const FieldContext>(f.associated);

    const auto n = static_cast<std::size_t>(f.degree);
    if (f.cofactor == 1) {
        f.states.push_back(1);
    } else {
        // Decimate the associated m-sequence anchored so that state 0 is (1,0,...,0).
        const LfsrSpec q(f.associated);
        const StateVector s0 = solve_initial_state(f.associated, f.cofactor);
        const BitSequence w = generate(q, s0, n * f.cofactor);
        for (std::uint64_t j = 0; j < f.cofactor; ++j) {
            const BitSequence v = decimate(w, f.cofactor, j, n);
            std::uint64_t bits = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (v[k]) bits |= std::uint64_t{1} << k;
            f.states.push_back(bits);
        }
    }

    const std::size_t space = std::size_t{1} << n;
    f.orbit.resize(f.cofactor * f.order);
    f.position.assign(space, 0);
    std::vector<std::uint8_t> seen(space, 0);
    for (std::uint64_t j = 0; j < f.cofactor; ++j) {
        std::uint64_t s = f.states[j];
        if (s == 0 || seen[s]) throw Error("representative states of " + p.to_string() + " overlap");
        for (std::uint64_t u = 0; u < f.order; ++u) {
            if (seen[s]) throw Error("cycle of " + p.to_string() + " shorter than its order");
            seen[s] = 1;
            f.orbit[j * f.order + u] = static_cast<std::uint32_t>(s);
            f.position[s] = static_cast<std::uint32_t>(j * f.order + u);
            s = f.spec.step(s);
        }
        if (s != f.states[j]) throw Error("cycle of " + p.to_string() + " does not close at its order");
    }
    return f;
}

bool CycleDescriptor::is_zero() const {
    return std::none_of(active.begin(), active.end(), [](std::uint8_t a) { return a != 0; });
}

namespace {

std::vector<std::uint32_t> pattern_key(const CycleDescriptor& c) {
    return {c.index.begin(), c.index.end()};
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return ((a % m) + m - (b % m)) % m;
}

}  // namespace

CycleSet::CycleSet(std::vector<CycleDescriptor> cycles) : cycles_(std::move(cycles)) {
    for (std::size_t k = 0; k < cycles_.size(); ++k) {
        if (cycles_[k].is_zero()) zero_index_ = k;
        by_pattern_[pattern_key(cycles_[k])].push_back(k);
    }
}

std::size_t CycleSet::locate_components(std::span<const std::uint64_t> components,
                                        std::span<const FactorData> factors) const {
    const std::size_t s = factors.size();
    std::vector<std::uint32_t> key(s);
    std::vector<std::uint64_t> u(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
        const auto& f = factors[i];
        if (components[i] == 0) {
            key[i] = f.zero_index();
            continue;
        }
        const std::uint32_t pos = f.position[components[i]];
        key[i] = static_cast<std::uint32_t>(pos / f.order);
        u[i] = pos % f.order;
    }
    const auto it = by_pattern_.find(key);
    if (it == by_pattern_.end()) throw Error("state does not belong to any enumerated cycle");
    for (std::size_t k : it->second) {
        const auto& c = cycles_[k];
        bool ok = true;
        for (std::size_t i = 0; i < s && ok; ++i) {
            if (!c.active[i]) continue;
            for (std::size_t m = 0; m < i && ok; ++m) {
                if (!c.active[m]) continue;
                const std::uint64_t g = std::gcd(factors[i].order, factors[m].order);
                ok = mod_sub(u[i], c.shift[i], g) == mod_sub(u[m], c.shift[m], g);
            }
        }
        if (ok) return k;
    }
    throw Error("state does not belong to any enumerated cycle");
}

CycleSet enumerate_cycles(std::span<const FactorData> factors) {
    const std::size_t s = factors.size();
    if (s == 0) throw Error("no factors given");
    std::vector<CycleDescriptor> out;

    const std::uint64_t low_patterns = std::uint64_t{1} << (s - 1);
    for (std::uint64_t high = 0; high < 2; ++high) {
        for (std::uint64_t low = 0; low < low_patterns; ++low) {
            CycleDescriptor base;
            base.active.assign(s, 0);
            base.index.assign(s, 0);
            base.shift.assign(s, 0);
            base.active[0] = static_cast<std::uint8_t>(high);
            for (std::size_t i = 1; i < s; ++i) base.active[i] = static_cast<std::uint8_t>((low >> (i - 1)) & 1U);

            // f_i, the shift bounds and the period for this flag pattern.
            std::vector<std::uint64_t> bound(s, 1);
            std::uint64_t lcm_so_far = 1;
            for (std::size_t i = 0; i < s; ++i) {
                const std::uint64_t fi = base.active[i] ? factors[i].order : 1;
                if (i > 0) bound[i] = std::gcd(fi, lcm_so_far);
                lcm_so_far = std::lcm(lcm_so_far, fi);
            }
            base.period = lcm_so_far;

            // Odometer over j_1..j_s (active only) and then l_2..l_s.
            std::vector<std::uint64_t> radix;
            std::vector<std::pair<std::size_t, bool>> slot;  // (factor, is_shift)
            for (std::size_t i = 0; i < s; ++i)
                if (base.active[i]) {
                    radix.push_back(factors[i].cofactor);
                    slot.emplace_back(i, false);
                }
            for (std::size_t i = 1; i < s; ++i)
                if (bound[i] > 1) {
                    radix.push_back(bound[i]);
                    slot.emplace_back(i, true);
                }
            std::vector<std::uint64_t> digit(radix.size(), 0);
            // Last slot varies fastest.
            const auto advance = [&] {
                for (std::size_t k = radix.size(); k-- > 0;) {
                    if (++digit[k] < radix[k]) return true;
                    digit[k] = 0;
                }
                return false;
            };
            do {
                CycleDescriptor c = base;
                for (std::size_t i = 0; i < s; ++i)
                    if (!c.active[i]) c.index[i] = factors[i].zero_index();
                for (std::size_t k = 0; k < radix.size(); ++k) {
                    const auto [i, is_shift] = slot[k];
                    if (is_shift)
                        c.shift[i] = digit[k];
                    else
                        c.index[i] = static_cast<std::uint32_t>(digit[k]);
                }
                out.push_back(std::move(c));
            } while (advance());
        }
    }
    return CycleSet(std::move(out));
}

std::uint64_t representative_state(const CycleDescriptor& cycle, const StateBasis& basis,
                                   std::span<const FactorData> factors) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!cycle.active[i]) continue;
        v ^= basis.compose_block(static_cast<int>(i), factors[i].shifted(cycle.index[i], cycle.shift[i]));
    }
    return v;
}

std::string describe_cycle(const CycleDescriptor& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.active.size(); ++i) {
        if (!cycle.active[i]) continue;
        if (!out.empty()) out += " + ";
        if (cycle.shift[i] != 0) out += "L^" + std::to_string(cycle.shift[i]) + " ";
        out += "s" + std::to_string(i + 1) + "_" + std::to_string(cycle.index[i]);
    }
    return "[" + (out.empty() ? std::string("0") : out) + "]";
}

std::vector<BinaryPolynomial> validate_factors(std::span<const BinaryPolynomial> factors) {
    if (factors.empty()) throw Error("at least one factor is required");
    std::set<BinaryPolynomial> seen;
    int total = 0;
    for (const auto& p : factors) {
        if (p.degree() < 1) throw Error("factor " + p.to_string() + " is constant; factors need degree >= 1");
        if (p == BinaryPolynomial::x())
            throw Error("factor x is not allowed: it makes the feedback singular");
        if (p.degree() > kMaxFieldDegree)
            throw Error("factor " + p.to_string() + " has degree " + std::to_string(p.degree()) +
                        "; at most " + std::to_string(kMaxFieldDegree) + " is supported per factor");
        if (!is_irreducible(p)) throw Error("factor " + p.to_string() + " is reducible over GF(2)");
        if (!seen.insert(p).second)
            throw Error("factor " + p.to_string() +
                        " is repeated; characteristic polynomials with repeated roots are not supported "
                        "(they need far more resources for few extra sequences). Use distinct irreducible factors.");
        total += p.degree();
    }
    if (total > kMaxStages) throw Error("total degree exceeds " + std::to_string(kMaxStages));
    return {factors.begin(), factors.end()};
}

BinaryPolynomial product(std::span<const BinaryPolynomial> factors) {
    BinaryPolynomial acc = BinaryPolynomial::one();
    for (const auto& p : factors) acc = acc * p;
    return acc;
}

}  // namespace debruijn
