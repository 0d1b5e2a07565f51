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
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "debruijn/cycles.hpp"
#include "debruijn/lfsr.hpp"

namespace debruijn {

/// S = (1, 0, ..., 0) written per factor as T^{c_i} a^i_{d_i}.
struct SpecialStateRep {
    std::vector<std::uint64_t> shift;  // c_i
    std::vector<std::uint32_t> index;  // d_i
};

/// Scans T^k a^i_j (j < t_i, k < e_i) for each block of S * P^{-1}.
/// Throws Error if a block is zero or cannot be found.
SpecialStateRep represent_special_state(const StateBasis& basis, std::span<const FactorData> factors);

/// Shift pair (u, v) with T^u a_j + T^v a_k = T^c a_d inside one factor.
using ShiftPair = std::pair<std::uint32_t, std::uint32_t>;

/// Gamma(j, k) for one factor, j and k ranging over the t nonzero cycle
/// indices plus the zero index t. Entries are sorted by u.
class LocalPairTable {
public:
    LocalPairTable() = default;
    LocalPairTable(const FactorData& factor, std::uint64_t c, std::uint32_t d);

    const std::vector<ShiftPair>& pairs(std::uint32_t j, std::uint32_t k) const {
        return table_[static_cast<std::size_t>(j) * width_ + k];
    }
    std::uint32_t width() const { return width_; }

private:
    std::uint32_t width_ = 0;
    std::vector<std::vector<ShiftPair>> table_;
};

/// Gamma(j, k) for one factor. Primitive factors use the Zech shortcut
/// {(y, c + tau(y - c)) : y != c}; others look every candidate sum up in the
/// factor's orbit table.
std::vector<ShiftPair> local_pairs(const FactorData& factor, std::uint32_t j, std::uint32_t k,
                                   std::uint64_t c, std::uint32_t d);

/// Conjugate pair (v, v + S); v and its conjugate differ only in bit 0.
struct ConjugatePair {
    std::uint64_t state = 0;

    std::uint64_t conjugate() const { return state ^ 1U; }
    /// Last n-1 bits (s_1..s_{n-1}) packed from bit 0.
    std::uint64_t suffix() const { return state >> 1; }
    friend bool operator==(ConjugatePair, ConjugatePair) = default;
    friend auto operator<=>(ConjugatePair a, ConjugatePair b) { return a.state <=> b.state; }
};

/// Precomputed per-factor tables for finding all conjugate pairs between
/// two cycles by combining local pairs under the generalized CRT condition.
class PairFinder {
public:
    PairFinder(std::span<const FactorData> factors, const StateBasis& basis);

    const SpecialStateRep& special() const { return rep_; }
    const LocalPairTable& local(std::size_t i) const { return locals_[i]; }

    /// Necessary conditions: every factor has a nonempty local pair set for
    /// the two cycles' (j_i, j'_i). Covers the zero/nonzero mixes as well.
    bool may_be_adjacent(const CycleDescriptor& c1, const CycleDescriptor& c2) const;

    /// All v on c1 with v + S on c2, in search order (factor 1 slowest).
    /// Stops after `limit` pairs.
    std::vector<ConjugatePair> conjugate_pairs(const CycleDescriptor& c1, const CycleDescriptor& c2,
                                               std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

private:
    std::vector<const FactorData*> factors_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::vector<std::uint64_t>> gcd_;
    SpecialStateRep rep_;
    std::vector<LocalPairTable> locals_;
    // composed_[i][j * e + u] = (T^u a^i_j) placed in block i, times P.
    std::vector<std::vector<std::uint64_t>> composed_;
};

/// One edge of G: a conjugate pair whose state lies on cycle `low` and whose
/// conjugate lies on cycle `high`, low < high.
struct GraphEdge {
    std::uint32_t low = 0;
    std::uint32_t high = 0;
    ConjugatePair pair;
};

/// All parallel edges between one vertex pair; a single edge of the
/// condensed simple graph.
struct EdgeBundle {
    std::uint32_t low = 0;
    std::uint32_t high = 0;
    std::size_t first = 0;  // index of the first edge in AdjacencyGraph::edges()
    std::size_t count = 0;
};

class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    /// Edges must be grouped by (low, high) in ascending order.
    AdjacencyGraph(std::size_t vertices, std::vector<GraphEdge> edges);

    std::size_t vertex_count() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::vector<EdgeBundle>& bundles() const { return bundles_; }
    /// Bundle indices incident to `v`, ordered by neighbour index.
    const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
    std::uint32_t other_end(std::size_t bundle, std::size_t v) const;

    /// Number of parallel edges between a and b (0 when not adjacent).
    std::size_t multiplicity(std::size_t a, std::size_t b) const;
    /// Count of edges incident to v in G.
    std::size_t degree(std::size_t v) const;
    bool connected() const;

private:
    std::size_t vertices_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<EdgeBundle> bundles_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Every conjugate pair between every pair of distinct cycles. Pairs of
/// cycles are processed across `threads` workers and merged by
/// (low, high) order; threads = 0 picks the hardware concurrency.
AdjacencyGraph build_graph(const CycleSet& cycles, const PairFinder& finder, unsigned threads = 0);

/// Laplacian of G (condensed = false) or of its simple condensation.
std::vector<std::vector<mpz_class>> laplacian(const AdjacencyGraph& graph, bool condensed);

/// Determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(std::vector<std::vector<mpz_class>> m);

/// (-1)^{i+j} times the minor of entry (i, j).
mpz_class cofactor(const std::vector<std::vector<mpz_class>>& m, std::size_t i, std::size_t j);

/// Spanning-tree count of G or of the condensed graph.
mpz_class best_count(const AdjacencyGraph& graph, bool condensed);

/// log2 of a positive integer (0 for zero).
double log2_of(const mpz_class& value);

}  // namespace debruijn
