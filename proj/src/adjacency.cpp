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

#include "debruijn/adjacency.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace debruijn {

SpecialStateRep represent_special_state(const StateBasis& basis, std::span<const FactorData> factors) {
    const auto blocks = basis.decompose(1);
    SpecialStateRep rep;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (blocks[i] == 0) throw Error("special state has a zero component; basis is corrupted");
        bool found = false;
        for (std::uint32_t j = 0; j < f.cofactor && !found; ++j) {
            std::uint64_t a = f.states[j];
            for (std::uint64_t k = 0; k < f.order; ++k) {
                if (a == blocks[i]) {
                    rep.shift.push_back(k);
                    rep.index.push_back(j);
                    found = true;
                    break;
                }
                a = f.spec.step(a);
            }
        }
        if (!found) throw Error("special state component not found on any cycle; basis is corrupted");
    }
    return rep;
}

std::vector<ShiftPair> local_pairs(const FactorData& factor, std::uint32_t j, std::uint32_t k,
                                   std::uint64_t c, std::uint32_t d) {
    const std::uint32_t zero = factor.zero_index();
    const auto e = factor.order;
    std::vector<ShiftPair> out;
    if (j == zero && k == zero) return out;
    if (j == zero) {
        if (k == d) out.emplace_back(0, static_cast<std::uint32_t>(c));
        return out;
    }
    if (k == zero) {
        if (j == d) out.emplace_back(static_cast<std::uint32_t>(c), 0);
        return out;
    }
    if (factor.primitive()) {
        // a + T^l a = T^{tau(l)} a on an m-sequence.
        const FieldContext& field = *factor.field;
        for (std::uint64_t y = 0; y < e; ++y) {
            if (y == c) continue;
            const std::uint64_t tau = field.zech((y + e - c) % e);
            out.emplace_back(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>((c + tau) % e));
        }
        return out;
    }
    const std::uint64_t target = factor.shifted(d, c);
    for (std::uint64_t u = 0; u < e; ++u) {
        const std::uint64_t w = factor.shifted(j, u) ^ target;
        if (w == 0) continue;
        const std::uint32_t pos = factor.position[w];
        if (pos / e == k) out.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(pos % e));
    }
    return out;
}

LocalPairTable::LocalPairTable(const FactorData& factor, std::uint64_t c, std::uint32_t d)
    : width_(factor.zero_index() + 1) {
    table_.resize(static_cast<std::size_t>(width_) * width_);
    for (std::uint32_t j = 0; j < width_; ++j)
        for (std::uint32_t k = 0; k < width_; ++k)
            table_[static_cast<std::size_t>(j) * width_ + k] = local_pairs(factor, j, k, c, d);
}

PairFinder::PairFinder(std::span<const FactorData> factors, const StateBasis& basis)
    : rep_(represent_special_state(basis, factors)) {
    const std::size_t s = factors.size();
    gcd_.assign(s, std::vector<std::uint64_t>(s, 1));
    for (std::size_t i = 0; i < s; ++i) {
        factors_.push_back(&factors[i]);
        orders_.push_back(factors[i].order);
        for (std::size_t m = 0; m < s; ++m) gcd_[i][m] = std::gcd(factors[i].order, factors[m].order);
        locals_.emplace_back(factors[i], rep_.shift[i], rep_.index[i]);
        std::vector<std::uint64_t> composed(factors[i].orbit.size());
        for (std::size_t k = 0; k < composed.size(); ++k)
            composed[k] = basis.compose_block(static_cast<int>(i), factors[i].orbit[k]);
        composed_.push_back(std::move(composed));
    }
}

bool PairFinder::may_be_adjacent(const CycleDescriptor& c1, const CycleDescriptor& c2) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (locals_[i].pairs(c1.index[i], c2.index[i]).empty()) return false;
    return true;
}

std::vector<ConjugatePair> PairFinder::conjugate_pairs(const CycleDescriptor& c1, const CycleDescriptor& c2,
                                                       std::size_t limit) const {
    std::vector<ConjugatePair> out;
    if (!may_be_adjacent(c1, c2) || limit == 0) return out;
    const std::size_t s = factors_.size();
    std::vector<const std::vector<ShiftPair>*> lists(s);
    for (std::size_t i = 0; i < s; ++i) lists[i] = &locals_[i].pairs(c1.index[i], c2.index[i]);

    // Residues u_i - l_i and v_i - l'_i, kept modulo e_i.
    std::vector<std::uint64_t> ru(s), rv(s);
    std::vector<std::size_t> cursor(s, 0);
    std::vector<std::uint64_t> partial(s + 1, 0);

    const auto consistent = [&](std::size_t i) {
        for (std::size_t m = 0; m < i; ++m) {
            const std::uint64_t g = gcd_[i][m];
            if (g == 1) continue;
            if (c1.active[i] && c1.active[m] && ru[i] % g != ru[m] % g) return false;
            if (c2.active[i] && c2.active[m] && rv[i] % g != rv[m] % g) return false;
        }
        return true;
    };

    // Depth-first over K_1 x ... x K_s, abandoning a prefix at the first
    // failed congruence.
    std::size_t depth = 0;
    while (true) {
        if (cursor[depth] == lists[depth]->size()) {
            if (depth == 0) break;
            cursor[depth] = 0;
            --depth;
            ++cursor[depth];
            continue;
        }
        const auto [u, v] = (*lists[depth])[cursor[depth]];
        const std::uint64_t e = orders_[depth];
        ru[depth] = (u + e - c1.shift[depth] % e) % e;
        rv[depth] = (v + e - c2.shift[depth] % e) % e;
        if (!consistent(depth)) {
            ++cursor[depth];
            continue;
        }
        partial[depth + 1] = partial[depth];
        if (c1.active[depth]) partial[depth + 1] ^= composed_[depth][c1.index[depth] * e + u];
        if (depth + 1 == s) {
            out.push_back(ConjugatePair{partial[s]});
            if (out.size() >= limit) break;
            ++cursor[depth];
        } else {
            ++depth;
        }
    }
    return out;
}

AdjacencyGraph::AdjacencyGraph(std::size_t vertices, std::vector<GraphEdge> edges)
    : vertices_(vertices), edges_(std::move(edges)), incident_(vertices) {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto& e = edges_[k];
        if (e.low >= e.high || e.high >= vertices_) throw Error("malformed graph edge");
        if (bundles_.empty() || bundles_.back().low != e.low || bundles_.back().high != e.high) {
            if (!bundles_.empty() && std::pair(bundles_.back().low, bundles_.back().high) > std::pair(e.low, e.high))
                throw Error("graph edges must be grouped in ascending (low, high) order");
            bundles_.push_back(EdgeBundle{e.low, e.high, k, 0});
        }
        ++bundles_.back().count;
    }
    for (std::size_t b = 0; b < bundles_.size(); ++b) {
        incident_[bundles_[b].low].push_back(b);
        incident_[bundles_[b].high].push_back(b);
    }
    for (std::size_t v = 0; v < vertices_; ++v)
        std::sort(incident_[v].begin(), incident_[v].end(),
                  [&](std::size_t a, std::size_t b) { return other_end(a, v) < other_end(b, v); });
}

std::uint32_t AdjacencyGraph::other_end(std::size_t bundle, std::size_t v) const {
    const auto& b = bundles_[bundle];
    return b.low == v ? b.high : b.low;
}

std::size_t AdjacencyGraph::multiplicity(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t k : incident_[a])
        if (bundles_[k].high == b && bundles_[k].low == a) return bundles_[k].count;
    return 0;
}

std::size_t AdjacencyGraph::degree(std::size_t v) const {
    std::size_t total = 0;
    for (std::size_t k : incident_[v]) total += bundles_[k].count;
    return total;
}

bool AdjacencyGraph::connected() const {
    if (vertices_ == 0) return true;
    std::vector<std::uint8_t> seen(vertices_, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t k : incident_[v]) {
            const std::size_t w = other_end(k, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertices_;
}

AdjacencyGraph build_graph(const CycleSet& cycles, const PairFinder& finder, unsigned threads) {
    const std::size_t psi = cycles.size();
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::vector<GraphEdge>> rows(psi);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t low = next++; low < psi; low = next++) {
            auto& row = rows[low];
            for (std::size_t high = low + 1; high < psi; ++high) {
                if (!finder.may_be_adjacent(cycles[low], cycles[high])) continue;
                for (const auto& p : finder.conjugate_pairs(cycles[low], cycles[high]))
                    row.push_back(GraphEdge{static_cast<std::uint32_t>(low), static_cast<std::uint32_t>(high), p});
            }
        }
    };
    if (threads == 1 || psi < 16) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<GraphEdge> edges;
    for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
    return AdjacencyGraph(psi, std::move(edges));
}

std::vector<std::vector<mpz_class>> laplacian(const AdjacencyGraph& graph, bool condensed) {
    const std::size_t psi = graph.vertex_count();
    std::vector<std::vector<mpz_class>> m(psi, std::vector<mpz_class>(psi, 0));
    for (const auto& b : graph.bundles()) {
        const long w = condensed ? 1 : static_cast<long>(b.count);
        m[b.low][b.low] += w;
        m[b.high][b.high] += w;
        m[b.low][b.high] -= w;
        m[b.high][b.low] -= w;
    }
    return m;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class cofactor(const std::vector<std::vector<mpz_class>>& m, std::size_t i, std::size_t j) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == i) continue;
        std::vector<mpz_class> row;
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
    }
    mpz_class det = determinant(std::move(minor));
    return ((i + j) % 2 == 0) ? det : mpz_class(-det);
}

mpz_class best_count(const AdjacencyGraph& graph, bool condensed) {
    if (graph.vertex_count() <= 1) return 1;
    return cofactor(laplacian(graph, condensed), 0, 0);
}

double log2_of(const mpz_class& value) {
    if (value <= 0) return 0.0;
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log2(mantissa) + static_cast<double>(exponent);
}

}  // namespace debruijn
