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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "debruijn/adjacency.hpp"
#include "debruijn/cycles.hpp"
#include "debruijn/lfsr.hpp"

namespace debruijn {

/// Spanning tree of the condensed graph, as psi-1 bundle indices in the
/// order the enumerator attached them.
using CondensedTree = std::vector<std::size_t>;

/// Spanning tree of G, as psi-1 conjugate pairs.
using PairTree = std::vector<ConjugatePair>;

/// Depth-first enumeration of the spanning trees of the condensed graph.
/// Visited vertices are checked smallest index first and the subsets of
/// each frontier are tried in ascending bitmask order, so the k-th tree is
/// reproducible. Branches that cannot reach every vertex are skipped.
class SpanningTreeEnumerator {
public:
    /// Throws Error if the graph is not connected. The graph must outlive
    /// the enumerator.
    explicit SpanningTreeEnumerator(const AdjacencyGraph& graph);

    /// Next tree, or nullopt once every tree has been produced.
    std::optional<CondensedTree> next();

    /// Trees produced so far.
    std::uint64_t produced() const { return produced_; }

private:
    struct Frame {
        std::uint32_t vertex = 0;
        std::vector<std::size_t> frontier;  // bundle indices to unvisited neighbours
        std::vector<std::uint64_t> subset;  // next subset to try, multiword
        bool exhausted = false;
        std::vector<std::size_t> applied;  // bundles taken by the current subset
    };

    void undo(Frame& f);
    bool apply_next(Frame& f);
    bool viable() const;
    std::optional<std::uint32_t> pick_unchecked() const;
    void push_frame(std::uint32_t v);

    const AdjacencyGraph* graph_;
    std::vector<std::uint8_t> visited_;
    std::vector<std::uint8_t> checked_;
    std::size_t visited_count_ = 0;
    std::vector<std::size_t> edges_;
    std::vector<Frame> stack_;
    bool started_ = false;
    bool done_ = false;
    std::uint64_t produced_ = 0;
};

/// Up to `limit` trees from a fresh enumerator.
std::vector<CondensedTree> enumerate_spanning_trees(const AdjacencyGraph& graph,
                                                    std::optional<std::uint64_t> limit = std::nullopt);

/// Number of G-trees a condensed tree expands to: product of multiplicities.
mpz_class expansion_count(const CondensedTree& tree, const AdjacencyGraph& graph);

/// Replaces each bundle by the conjugate pair chosen by selector[k], which
/// must be below the bundle's multiplicity. Throws Error otherwise.
PairTree expand_tree(const CondensedTree& tree, const AdjacencyGraph& graph, std::span<const std::size_t> selector);

/// Steps a mixed-radix selector over the bundle multiplicities, last edge
/// fastest. Returns false after the final selector (and resets to zeros).
bool advance_selector(const CondensedTree& tree, const AdjacencyGraph& graph, std::vector<std::size_t>& selector);

/// Uniform spanning tree of the multigraph G by Broder's random walk.
/// Deterministic for a given seed. Throws Error if G is disconnected.
PairTree random_spanning_tree(const AdjacencyGraph& graph, std::uint64_t seed);

/// A spanning tree found by frontier expansion from cycle 0: the smallest
/// reached cycle is expanded first and contributes one conjugate pair for
/// each cycle it reaches for the first time. Only psi-1 pair searches
/// succeed, so this avoids building G. Throws Error naming the unreachable
/// cycles if the expansion stalls.
AdjacencyGraph greedy_connected_subgraph(const CycleSet& cycles, const PairFinder& finder);

/// h plus one product term per suffix in E.
class FeedbackFunction {
public:
    FeedbackFunction(const LfsrSpec& spec, std::span<const ConjugatePair> tree);

    int stages() const { return n_; }
    std::uint64_t taps() const { return taps_; }
    /// Sorted, distinct (n-1)-bit suffixes.
    const std::vector<std::uint64_t>& suffixes() const { return suffixes_; }

    bool modified(std::uint64_t state) const;
    std::uint64_t evaluate(std::uint64_t state) const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::uint64_t taps_ = 0;
    std::vector<std::uint64_t> suffixes_;
};

FeedbackFunction feedback_function(std::span<const ConjugatePair> tree, const LfsrSpec& spec);

struct DeBruijnSequence {
    BitSequence bits;
    PairTree tree;
    StateVector init;
};

/// One period (2^n bits) of the cycle-joined register started at `init`.
/// Throws Error for n above 32, a size mismatch, or repeated suffixes.
DeBruijnSequence join_cycles(std::span<const ConjugatePair> tree, const StateVector& init, const LfsrSpec& spec);

/// True iff the 2^n cyclic windows are all distinct. Throws Error when
/// |seq| != 2^n.
bool verify_de_bruijn(std::span<const std::uint8_t> seq, int n);

/// Most significant bit first = s_0; padded with zero bits to a nibble.
std::string bits_to_hex(std::span<const std::uint8_t> bits);

}  // namespace debruijn
