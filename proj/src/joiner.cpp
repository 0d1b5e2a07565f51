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

#include "debruijn/joiner.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace debruijn {

SpanningTreeEnumerator::SpanningTreeEnumerator(const AdjacencyGraph& graph)
    : graph_(&graph), visited_(graph.vertex_count(), 0), checked_(graph.vertex_count(), 0) {
    if (graph.vertex_count() == 0) throw Error("graph has no vertices");
    if (!graph.connected()) throw Error("adjacency graph is not connected; it has no spanning tree");
}

void SpanningTreeEnumerator::undo(Frame& f) {
    for (std::size_t k = f.applied.size(); k-- > 0;) {
        visited_[graph_->other_end(f.applied[k], f.vertex)] = 0;
        --visited_count_;
        edges_.pop_back();
    }
    f.applied.clear();
}

bool SpanningTreeEnumerator::apply_next(Frame& f) {
    if (f.exhausted) return false;
    const std::size_t b = f.frontier.size();
    for (std::size_t k = 0; k < b; ++k) {
        if (!((f.subset[k / 64] >> (k % 64)) & 1U)) continue;
        const std::size_t bundle = f.frontier[k];
        visited_[graph_->other_end(bundle, f.vertex)] = 1;
        ++visited_count_;
        edges_.push_back(bundle);
        f.applied.push_back(bundle);
    }
    // Increment the counter; the subset after 2^b - 1 ends the frame.
    if (b == 0) {
        f.exhausted = true;
        return true;
    }
    bool carry = true;
    for (std::size_t w = 0; w < f.subset.size() && carry; ++w) carry = ++f.subset[w] == 0;
    if (b % 64 == 0 ? carry : (f.subset.back() >> (b % 64)) != 0) f.exhausted = true;
    return true;
}

bool SpanningTreeEnumerator::viable() const {
    // Every unvisited vertex must still be reachable from an unchecked
    // visited vertex through unvisited vertices.
    const std::size_t psi = graph_->vertex_count();
    std::vector<std::uint8_t> seen(psi, 0);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < psi; ++v)
        if (visited_[v] && !checked_[v]) stack.push_back(v);
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t k : graph_->incident(v)) {
            const std::size_t w = graph_->other_end(k, v);
            if (visited_[w] || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == psi - visited_count_;
}

std::optional<std::uint32_t> SpanningTreeEnumerator::pick_unchecked() const {
    for (std::size_t v = 0; v < visited_.size(); ++v)
        if (visited_[v] && !checked_[v]) return static_cast<std::uint32_t>(v);
    return std::nullopt;
}

void SpanningTreeEnumerator::push_frame(std::uint32_t v) {
    Frame f;
    f.vertex = v;
    checked_[v] = 1;
    for (std::size_t k : graph_->incident(v))
        if (!visited_[graph_->other_end(k, v)]) f.frontier.push_back(k);
    f.subset.assign(std::max<std::size_t>(1, (f.frontier.size() + 63) / 64), 0);
    stack_.push_back(std::move(f));
}

std::optional<CondensedTree> SpanningTreeEnumerator::next() {
    if (done_) return std::nullopt;
    const std::size_t psi = graph_->vertex_count();
    if (!started_) {
        started_ = true;
        visited_[0] = 1;
        visited_count_ = 1;
        if (psi == 1) {
            done_ = true;
            ++produced_;
            return CondensedTree{};
        }
        push_frame(0);
    }
    while (!stack_.empty()) {
        undo(stack_.back());
        if (!apply_next(stack_.back())) {
            checked_[stack_.back().vertex] = 0;
            stack_.pop_back();
            continue;
        }
        if (edges_.size() == psi - 1) {
            ++produced_;
            return edges_;
        }
        if (!viable()) continue;
        const auto v = pick_unchecked();
        if (!v) continue;
        push_frame(*v);
    }
    done_ = true;
    return std::nullopt;
}

std::vector<CondensedTree> enumerate_spanning_trees(const AdjacencyGraph& graph, std::optional<std::uint64_t> limit) {
    SpanningTreeEnumerator it(graph);
    std::vector<CondensedTree> out;
    while (!limit || out.size() < *limit) {
        auto t = it.next();
        if (!t) break;
        out.push_back(std::move(*t));
    }
    return out;
}

mpz_class expansion_count(const CondensedTree& tree, const AdjacencyGraph& graph) {
    mpz_class total = 1;
    for (std::size_t b : tree) total *= static_cast<unsigned long>(graph.bundles().at(b).count);
    return total;
}

PairTree expand_tree(const CondensedTree& tree, const AdjacencyGraph& graph, std::span<const std::size_t> selector) {
    if (selector.size() != tree.size()) throw Error("selector length does not match the tree");
    PairTree out;
    out.reserve(tree.size());
    for (std::size_t k = 0; k < tree.size(); ++k) {
        const auto& b = graph.bundles().at(tree[k]);
        if (selector[k] >= b.count)
            throw Error("selector " + std::to_string(selector[k]) + " out of range for an edge of multiplicity " +
                        std::to_string(b.count));
        out.push_back(graph.edges()[b.first + selector[k]].pair);
    }
    return out;
}

bool advance_selector(const CondensedTree& tree, const AdjacencyGraph& graph, std::vector<std::size_t>& selector) {
    selector.resize(tree.size(), 0);
    for (std::size_t k = tree.size(); k-- > 0;) {
        if (++selector[k] < graph.bundles()[tree[k]].count) return true;
        selector[k] = 0;
    }
    return false;
}

PairTree random_spanning_tree(const AdjacencyGraph& graph, std::uint64_t seed) {
    const std::size_t psi = graph.vertex_count();
    if (psi == 0 || !graph.connected()) throw Error("adjacency graph is not connected; it has no spanning tree");
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> seen(psi, 0);
    PairTree out;
    std::size_t v = 0;
    seen[0] = 1;
    std::size_t reached = 1;
    while (reached < psi) {
        std::uniform_int_distribution<std::size_t> pick(0, graph.degree(v) - 1);
        std::size_t r = pick(rng);
        std::size_t chosen = 0;
        for (std::size_t k : graph.incident(v)) {
            const auto& b = graph.bundles()[k];
            if (r < b.count) {
                chosen = k;
                break;
            }
            r -= b.count;
        }
        const std::size_t w = graph.other_end(chosen, v);
        if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            out.push_back(graph.edges()[graph.bundles()[chosen].first + r].pair);
        }
        v = w;
    }
    return out;
}

AdjacencyGraph greedy_connected_subgraph(const CycleSet& cycles, const PairFinder& finder) {
    const std::size_t psi = cycles.size();
    std::vector<std::uint8_t> reached(psi, 0);
    std::set<std::size_t> pending{0};
    reached[0] = 1;
    std::vector<GraphEdge> edges;
    while (!pending.empty()) {
        const std::size_t c = *pending.begin();
        pending.erase(pending.begin());
        for (std::size_t d = 0; d < psi; ++d) {
            if (reached[d]) continue;
            const std::size_t lo = std::min(c, d);
            const std::size_t hi = std::max(c, d);
            const auto pairs = finder.conjugate_pairs(cycles[lo], cycles[hi], 1);
            if (pairs.empty()) continue;
            edges.push_back(GraphEdge{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi), pairs.front()});
            reached[d] = 1;
            pending.insert(d);
        }
    }
    std::string missing;
    for (std::size_t d = 0; d < psi; ++d)
        if (!reached[d]) missing += (missing.empty() ? "" : ", ") + std::to_string(d + 1);
    if (!missing.empty()) throw Error("cycles not reachable from cycle 1: " + missing);
    std::sort(edges.begin(), edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return std::pair(a.low, a.high) < std::pair(b.low, b.high); });
    return AdjacencyGraph(psi, std::move(edges));
}

FeedbackFunction::FeedbackFunction(const LfsrSpec& spec, std::span<const ConjugatePair> tree)
    : n_(spec.stages()), taps_(spec.taps()) {
    for (const auto& p : tree) suffixes_.push_back(p.suffix());
    std::sort(suffixes_.begin(), suffixes_.end());
    if (std::adjacent_find(suffixes_.begin(), suffixes_.end()) != suffixes_.end())
        throw Error("two tree edges share a suffix; the tree is not valid");
}

bool FeedbackFunction::modified(std::uint64_t state) const {
    return std::binary_search(suffixes_.begin(), suffixes_.end(), state >> 1);
}

std::uint64_t FeedbackFunction::evaluate(std::uint64_t state) const {
    return static_cast<std::uint64_t>(std::popcount(state & taps_) & 1) ^ (modified(state) ? 1U : 0U);
}

std::string FeedbackFunction::to_string() const {
    std::string out;
    for (int k = 0; k < n_; ++k) {
        if (!((taps_ >> k) & 1U)) continue;
        if (!out.empty()) out += " + ";
        out += "x" + std::to_string(k);
    }
    // [x1..x{n-1} = w] stands for the product of (x_i + w_i + 1).
    for (std::uint64_t w : suffixes_)
        out += " + [x1..x" + std::to_string(n_ - 1) + " = " + StateVector(w, n_ - 1).to_string() + "]";
    return out.empty() ? "0" : out;
}

FeedbackFunction feedback_function(std::span<const ConjugatePair> tree, const LfsrSpec& spec) {
    return FeedbackFunction(spec, tree);
}

DeBruijnSequence join_cycles(std::span<const ConjugatePair> tree, const StateVector& init, const LfsrSpec& spec) {
    const int n = spec.stages();
    if (n > 32) throw Error("sequence output is limited to n <= 32");
    if (init.size() != n)
        throw Error("initial state has " + std::to_string(init.size()) + " bits, expected " + std::to_string(n));
    const FeedbackFunction h(spec, tree);
    const std::uint64_t period = std::uint64_t{1} << n;
    DeBruijnSequence out;
    out.bits.resize(period);
    out.tree.assign(tree.begin(), tree.end());
    out.init = init;
    std::uint64_t state = init.bits();
    for (std::uint64_t i = 0; i < period; ++i) {
        out.bits[i] = static_cast<std::uint8_t>(state & 1U);
        state = (state >> 1) | (h.evaluate(state) << (n - 1));
    }
    return out;
}

bool verify_de_bruijn(std::span<const std::uint8_t> seq, int n) {
    if (n < 1 || n > 32) throw Error("order must be between 1 and 32");
    const std::uint64_t period = std::uint64_t{1} << n;
    if (seq.size() != period)
        throw Error("sequence has " + std::to_string(seq.size()) + " bits, expected 2^" + std::to_string(n));
    std::vector<bool> seen(period, false);
    std::uint64_t w = 0;
    for (int k = 0; k < n; ++k) w |= static_cast<std::uint64_t>(seq[k] & 1U) << k;
    for (std::uint64_t i = 0; i < period; ++i) {
        if (seen[w]) return false;
        seen[w] = true;
        w = (w >> 1) | (static_cast<std::uint64_t>(seq[(i + n) % period] & 1U) << (n - 1));
    }
    return true;
}

std::string bits_to_hex(std::span<const std::uint8_t> bits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t k = 0; k < 4; ++k) nibble = (nibble << 1) | (i + k < bits.size() ? (bits[i + k] & 1U) : 0U);
        out += kDigits[nibble];
    }
    return out;
}

}  // namespace debruijn
