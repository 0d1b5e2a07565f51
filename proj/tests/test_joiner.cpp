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

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <set>

#include "debruijn/cli.hpp"
#include "debruijn/joiner.hpp"

using namespace debruijn;

namespace {

Instance make(std::initializer_list<const char*> fs) {
    std::vector<BinaryPolynomial> polys;
    for (auto s : fs) polys.push_back(BinaryPolynomial::parse(s));
    return build_instance(polys);
}

bool spans(const CondensedTree& t, const AdjacencyGraph& g) {
    std::vector<std::uint32_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0U);
    const auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (t.size() + 1 != g.vertex_count()) return false;
    for (std::size_t b : t) {
        const auto x = find(g.bundles()[b].low), y = find(g.bundles()[b].high);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

std::size_t ones(const BitSequence& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

AdjacencyGraph path_graph(std::size_t vertices) {
    std::vector<GraphEdge> edges;
    for (std::uint32_t v = 0; v + 1 < vertices; ++v) edges.push_back(GraphEdge{v, v + 1, ConjugatePair{v}});
    return AdjacencyGraph(vertices, std::move(edges));
}

}  // namespace

TEST_CASE("spanning trees of small graphs") {
    CHECK(enumerate_spanning_trees(path_graph(3)).size() == 1);
    CHECK(enumerate_spanning_trees(path_graph(1)).size() == 1);
    // Triangle with one doubled edge: 3 condensed trees.
    const AdjacencyGraph tri(3, {GraphEdge{0, 1, {10}}, GraphEdge{0, 1, {12}}, GraphEdge{0, 2, {20}}, GraphEdge{1, 2, {30}}});
    const auto trees = enumerate_spanning_trees(tri);
    CHECK(trees.size() == 3);
    mpz_class total = 0;
    for (const auto& t : trees) total += expansion_count(t, tri);
    CHECK(total == best_count(tri, false));
    CHECK(total == 5);
    const AdjacencyGraph split(3, {GraphEdge{0, 1, {1}}});
    CHECK_THROWS_AS(SpanningTreeEnumerator{split}, Error);
    CHECK_THROWS_AS(random_spanning_tree(split, 1), Error);
}

TEST_CASE("enumeration of the eight-cycle instance") {
    const auto inst = make({"11", "1101", "11001"});
    const auto trees = enumerate_spanning_trees(inst.graph);
    CHECK(trees.size() == 15);
    std::set<std::vector<std::size_t>> distinct;
    mpz_class total = 0;
    for (auto t : trees) {
        CHECK(spans(t, inst.graph));
        total += expansion_count(t, inst.graph);
        std::sort(t.begin(), t.end());
        distinct.insert(t);
    }
    CHECK(distinct.size() == 15);
    CHECK(total == 926016);
    // Limits and restart.
    CHECK(enumerate_spanning_trees(inst.graph, 4).size() == 4);
    CHECK(enumerate_spanning_trees(inst.graph, 4) == std::vector<CondensedTree>(trees.begin(), trees.begin() + 4));
}

TEST_CASE("enumeration count matches brute force on the ten-cycle instance") {
    const auto inst = make({"1011", "1101"});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> simple;
    for (const auto& b : inst.graph.bundles()) simple.emplace_back(b.low, b.high);
    const std::uint64_t brute = oracle::count_spanning_trees(inst.graph.vertex_count(), simple);
    CHECK(brute == 51984);
    SpanningTreeEnumerator it(inst.graph);
    std::set<std::vector<std::size_t>> distinct;
    mpz_class total = 0;
    while (auto t = it.next()) {
        REQUIRE(spans(*t, inst.graph));
        total += expansion_count(*t, inst.graph);
        std::sort(t->begin(), t->end());
        distinct.insert(*t);
    }
    CHECK(it.produced() == brute);
    CHECK(distinct.size() == brute);
    CHECK(total == 393216);
    CHECK_FALSE(it.next().has_value());
}

TEST_CASE("enumeration of the seven-stage instance") {
    const auto inst = make({"11", "111", "11111"});
    SpanningTreeEnumerator it(inst.graph);
    mpz_class total = 0;
    while (auto t = it.next()) total += expansion_count(*t, inst.graph);
    CHECK(it.produced() == 1451520);
    CHECK(total == mpz_class("12485394432"));
}

TEST_CASE("tree expansion") {
    const auto inst = make({"11", "111", "11111"});
    const auto& g = inst.graph;
    std::size_t b614 = 0;
    for (std::size_t k = 0; k < g.bundles().size(); ++k)
        if (g.bundles()[k].low == 5 && g.bundles()[k].high == 13) b614 = k;
    CHECK(g.bundles()[b614].count == 4);
    const CondensedTree t{b614};
    std::vector<std::size_t> sel{0};
    std::set<std::uint64_t> states;
    do {
        states.insert(expand_tree(t, g, sel).front().state);
    } while (advance_selector(t, g, sel));
    CHECK(states.size() == 4);
    CHECK_THROWS_AS(expand_tree(t, g, std::vector<std::size_t>{4}), Error);
    CHECK_THROWS_AS(expand_tree(t, g, std::vector<std::size_t>{}), Error);

    const auto tree = enumerate_spanning_trees(inst.graph, 1).front();
    const std::vector<std::size_t> zero(tree.size(), 0);
    const auto pt = expand_tree(tree, g, zero);
    CHECK(pt.size() == 15);
}

TEST_CASE("random spanning trees") {
    const auto two = make({"10011"});
    const auto t = random_spanning_tree(two.graph, 99);
    REQUIRE(t.size() == 1);
    CHECK(t.front() == two.graph.edges().front().pair);

    const auto inst = make({"11", "1101", "11001"});
    CHECK(random_spanning_tree(inst.graph, 5) == random_spanning_tree(inst.graph, 5));

    // Project samples onto condensed trees; frequencies follow the
    // multiplicity products.
    std::map<std::uint64_t, std::size_t> bundle_of;
    for (std::size_t k = 0; k < inst.graph.bundles().size(); ++k) {
        const auto& b = inst.graph.bundles()[k];
        for (std::size_t e = 0; e < b.count; ++e) bundle_of[inst.graph.edges()[b.first + e].pair.state] = k;
    }
    std::map<std::vector<std::size_t>, double> weight;
    for (auto tr : enumerate_spanning_trees(inst.graph)) {
        const double w = expansion_count(tr, inst.graph).get_d() / 926016.0;
        std::sort(tr.begin(), tr.end());
        weight[tr] = w;
    }
    REQUIRE(weight.size() == 15);
    const auto tally = [&](std::uint64_t seed, std::size_t samples) {
        std::map<std::vector<std::size_t>, std::size_t> seen;
        std::mt19937_64 seeds(seed);
        for (std::size_t s = 0; s < samples; ++s) {
            const auto tr = random_spanning_tree(inst.graph, seeds());
            std::vector<std::size_t> proj;
            for (const auto& p : tr) proj.push_back(bundle_of.at(p.state));
            std::sort(proj.begin(), proj.end());
            ++seen[proj];
        }
        return seen;
    };

    // Every class within 3 sigma of its multinomial expectation.
    constexpr std::size_t kSamples = 100000;
    auto seen = tally(424243, kSamples);
    for (const auto& [tree, w] : weight) {
        const double expected = w * kSamples;
        const double sigma = std::sqrt(kSamples * w * (1 - w));
        CAPTURE(expected);
        CHECK(std::abs(static_cast<double>(seen[tree]) - expected) <= 3 * sigma);
    }
    CHECK(seen.size() == 15);

    // Pooled goodness of fit over 8 * 10^5 samples: chi-square with 14
    // degrees of freedom below its 0.1% critical value.
    std::map<std::vector<std::size_t>, std::size_t> pooled;
    for (std::uint64_t run = 0; run < 8; ++run)
        for (const auto& [tree, c] : tally(1000 + run, kSamples)) pooled[tree] += c;
    double chi2 = 0;
    for (const auto& [tree, w] : weight) {
        const double expected = w * 8 * kSamples;
        chi2 += (static_cast<double>(pooled[tree]) - expected) * (static_cast<double>(pooled[tree]) - expected) / expected;
    }
    CHECK(chi2 < 36.12);
}

TEST_CASE("greedy spanning subgraph") {
    const auto inst = make({"11", "111", "11111"});
    const auto g = greedy_connected_subgraph(inst.cycles, *inst.finder);
    CHECK(g.edges().size() == 15);
    CHECK(g.connected());
    PairTree t;
    for (const auto& e : g.edges()) t.push_back(e.pair);
    const auto seq = join_cycles(t, StateVector(0, 7), inst.spec);
    CHECK(verify_de_bruijn(seq.bits, 7));

    const auto two = make({"10011"});
    CHECK(greedy_connected_subgraph(two.cycles, *two.finder).edges().size() == 1);
}

TEST_CASE("joining cycles") {
    const auto inst = make({"11", "1101", "11001"});
    std::set<BitSequence> outputs;
    for (const auto& t : enumerate_spanning_trees(inst.graph)) {
        const auto pt = expand_tree(t, inst.graph, std::vector<std::size_t>(t.size(), 0));
        const auto seq = join_cycles(pt, StateVector(0, 8), inst.spec);
        CHECK(verify_de_bruijn(seq.bits, 8));
        CHECK(ones(seq.bits) == 128);
        // Zero window appears once, at the start.
        CHECK(std::all_of(seq.bits.begin(), seq.bits.begin() + 8, [](auto b) { return b == 0; }));
        // Stepping the feedback function reproduces the output.
        const auto h = feedback_function(pt, inst.spec);
        CHECK(h.suffixes().size() == 7);
        std::uint64_t state = 0;
        for (std::size_t i = 0; i < seq.bits.size(); ++i) {
            REQUIRE((state & 1U) == seq.bits[i]);
            state = (state >> 1) | (h.evaluate(state) << 7);
        }
        outputs.insert(seq.bits);
    }
    CHECK(outputs.size() == 15);

    // Other initial states give rotations.
    const auto pt = expand_tree(enumerate_spanning_trees(inst.graph, 1).front(), inst.graph,
                                std::vector<std::size_t>(7, 0));
    const auto a = join_cycles(pt, StateVector(0, 8), inst.spec).bits;
    const auto b = join_cycles(pt, StateVector::parse("10110011"), inst.spec).bits;
    CHECK(verify_de_bruijn(b, 8));
    auto doubled = a;
    doubled.insert(doubled.end(), a.begin(), a.end());
    CHECK(std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end());

    // No modifier: the plain register output.
    const auto plain = join_cycles(PairTree{}, StateVector::parse("10000000"), inst.spec);
    CHECK(plain.bits == generate(inst.spec, StateVector::parse("10000000"), 256));
    CHECK_THROWS_AS(join_cycles(pt, StateVector(0, 7), inst.spec), Error);
    PairTree dup{pt.front(), pt.front()};
    CHECK_THROWS_AS(join_cycles(dup, StateVector(0, 8), inst.spec), Error);
}

TEST_CASE("feedback description") {
    const LfsrSpec spec(BinaryPolynomial::parse("10011"));
    const FeedbackFunction plain(spec, PairTree{});
    CHECK(plain.to_string() == "x0 + x1");
    CHECK(plain.suffixes().empty());
    const PairTree one{ConjugatePair{0b1110}};
    const FeedbackFunction h(spec, one);
    REQUIRE(h.suffixes().size() == 1);
    CHECK(h.suffixes().front() == 0b111);
    CHECK(h.to_string() == "x0 + x1 + [x1..x3 = 111]");
    CHECK(h.modified(0b1111));
    CHECK(h.modified(0b1110));
    CHECK_FALSE(h.modified(0b0111));
    CHECK(h.evaluate(0b1111) == 1);
    CHECK(h.evaluate(0b0111) == 0);
}

TEST_CASE("de Bruijn verification") {
    CHECK(verify_de_bruijn(bits_from_string("00010111"), 3));
    CHECK_FALSE(verify_de_bruijn(bits_from_string("00000000"), 3));
    CHECK(verify_de_bruijn(bits_from_string("0011"), 2));
    CHECK_THROWS_AS(verify_de_bruijn(bits_from_string("0001011"), 3), Error);
    CHECK(bits_to_hex(bits_from_string("00010111")) == "17");
    CHECK(bits_to_hex(bits_from_string("1")) == "8");
}

TEST_CASE("every tree of small instances gives a distinct de Bruijn sequence") {
    for (auto fs : std::vector<std::vector<const char*>>{{"11", "111"}, {"11", "1011"}, {"111", "1011"},
                                                         {"11", "11111"}, {"11", "10011"}, {"111", "10011"}}) {
        std::vector<BinaryPolynomial> polys;
        for (auto s : fs) polys.push_back(BinaryPolynomial::parse(s));
        const auto inst = build_instance(polys);
        const mpz_class zeta = best_count(inst.graph, false);
        if (zeta > 10000) continue;
        std::set<BitSequence> outputs;
        for (const auto& t : enumerate_spanning_trees(inst.graph)) {
            std::vector<std::size_t> sel(t.size(), 0);
            do {
                const auto seq = join_cycles(expand_tree(t, inst.graph, sel), StateVector(0, inst.n), inst.spec);
                REQUIRE(verify_de_bruijn(seq.bits, inst.n));
                outputs.insert(seq.bits);
            } while (advance_selector(t, inst.graph, sel));
        }
        CAPTURE(inst.n);
        CHECK(mpz_class(static_cast<unsigned long>(outputs.size())) == zeta);
    }
}
