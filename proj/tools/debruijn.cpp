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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "debruijn/cli.hpp"

int main(int argc, char** argv) {
    using debruijn::Command;
    using debruijn::Format;

    CLI::App app{"Binary de Bruijn sequences by joining the cycles of an LFSR"};
    app.require_subcommand(1);
    debruijn::RunConfig config;
    std::string format = "text";

    const std::map<std::string, Command> commands{{"analyze", Command::analyze},
                                                  {"count", Command::count},
                                                  {"generate", Command::generate},
                                                  {"sample", Command::sample},
                                                  {"verify", Command::verify}};
    const std::map<std::string, std::string> help{
        {"analyze", "list the cycles, the special state and the conjugate pair counts"},
        {"count", "count the constructible de Bruijn sequences"},
        {"generate", "emit sequences from spanning trees in enumeration order"},
        {"sample", "emit sequences from uniformly sampled spanning trees"},
        {"verify", "check sequences read from standard input, one per line"}};

    for (const auto& [name, command] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->callback([&config, command = command] { config.command = command; });
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        if (command == Command::verify) continue;
        sub->add_option("--factors", config.factors,
                        "comma-separated irreducible factors, highest coefficient first (e.g. 11,111,11111)")
            ->required();
        sub->add_option("--max-degree", config.max_degree, "safety cap on n for the full graph")
            ->capture_default_str();
        sub->add_flag("--partial", config.partial, "build only a greedy spanning subgraph (no cap on n)");
        sub->add_option("--threads", config.threads, "worker threads for the pair search (0 = all cores)");
        if (command == Command::generate || command == Command::sample) {
            sub->add_option("--limit", config.limit, "number of sequences")->capture_default_str();
            sub->add_option("--initial-state", config.initial_state, "n-bit start state, s_0 first");
            sub->add_flag("--hex", config.hex, "pack output as hex, s_0 most significant");
            sub->add_flag("--show-tree", config.show_tree, "print the conjugate pairs of each tree");
        }
        if (command == Command::generate)
            sub->add_option("--tree-index", config.tree_index, "index of the first tree in enumeration order");
        if (command == Command::sample) sub->add_option("--seed", config.seed, "random seed");
    }

    CLI11_PARSE(app, argc, argv);
    config.format = format == "json" ? Format::json : Format::text;
    return debruijn::run(config, std::cin, std::cout, std::cerr);
}
