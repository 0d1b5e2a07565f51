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
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/adjacency.hpp"
#include "debruijn/cycles.hpp"
#include "debruijn/joiner.hpp"
#include "debruijn/lfsr.hpp"

namespace debruijn {

/// Everything derived from one factor list: per-factor data, the state
/// basis, the cycles, the pair finder and either the full adjacency graph
/// or a greedy spanning subgraph.
struct Instance {
    std::vector<BinaryPolynomial> factors;
    BinaryPolynomial characteristic;
    int n = 0;
    std::vector<FactorData> data;
    std::unique_ptr<StateBasis> basis;
    LfsrSpec spec;
    CycleSet cycles;
    std::unique_ptr<PairFinder> finder;
    AdjacencyGraph graph;
    bool partial = false;
};

/// Parses "11,111,11111" (whitespace ignored). Throws Error.
std::vector<BinaryPolynomial> parse_factor_list(std::string_view text);

/// Validates the factors and builds the instance. With partial = false the
/// full graph is built and n must not exceed max_degree; with partial = true
/// only a greedy spanning subgraph is built and no cap applies.
Instance build_instance(std::span<const BinaryPolynomial> factors, bool partial = false, int max_degree = 24,
                        unsigned threads = 0);

enum class Command { analyze, count, generate, sample, verify };
enum class Format { text, json };

struct RunConfig {
    Command command = Command::count;
    std::vector<std::string> factors;
    std::uint64_t limit = 100;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> tree_index;
    std::optional<std::string> initial_state;
    Format format = Format::text;
    bool partial = false;
    int max_degree = 24;
    bool hex = false;
    bool show_tree = false;
    unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one command. Reports go to `out`, diagnostics to `err`; `in` is
/// read by verify (one sequence per line). Returns kExitError for invalid
/// input and kExitVerifyFailed when verify rejects a sequence.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace debruijn
