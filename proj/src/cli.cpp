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

#include "debruijn/cli.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <random>

#include "json.hpp"

namespace debruijn {

std::vector<BinaryPolynomial> parse_factor_list(std::string_view text) {
    std::vector<BinaryPolynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        out.push_back(BinaryPolynomial::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Instance build_instance(std::span<const BinaryPolynomial> factors, bool partial, int max_degree, unsigned threads) {
    Instance inst;
    inst.factors = validate_factors(factors);
    inst.characteristic = product(inst.factors);
    inst.n = inst.characteristic.degree();
    if (inst.n < 2) throw Error("the product of the factors must have degree at least 2");
    if (!partial && inst.n > max_degree)
        throw Error("n = " + std::to_string(inst.n) + " exceeds the safety cap of " + std::to_string(max_degree) +
                    " for building the full adjacency graph; raise --max-degree or use --partial");
    for (const auto& p : inst.factors) inst.data.push_back(states_per_factor(p));
    inst.basis = std::make_unique<StateBasis>(inst.factors);
    inst.spec = LfsrSpec(inst.characteristic);
    inst.cycles = enumerate_cycles(inst.data);
    inst.finder = std::make_unique<PairFinder>(inst.data, *inst.basis);
    inst.partial = partial;
    inst.graph = partial ? greedy_connected_subgraph(inst.cycles, *inst.finder)
                         : build_graph(inst.cycles, *inst.finder, threads);
    return inst;
}

namespace {

using nlohmann::json;

std::string one_decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string components(const CycleDescriptor& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.index.size(); ++i) {
        if (i) out += ",";
        if (c.active[i] && c.shift[i] != 0) out += "T^" + std::to_string(c.shift[i]) + " ";
        out += "a" + std::to_string(i + 1) + "_" + std::to_string(c.index[i]);
    }
    return out + ")";
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

struct Counts {
    mpz_class full;
    mpz_class condensed;
};

struct Report {
    const Instance& inst;
    std::optional<Counts> counts;
    std::vector<DeBruijnSequence> sequences;
};

json cycles_json(const Instance& inst) {
    json arr = json::array();
    for (std::size_t k = 0; k < inst.cycles.size(); ++k) {
        const auto& c = inst.cycles[k];
        arr.push_back({{"index", k + 1},
                       {"components", components(c)},
                       {"state", StateVector(representative_state(c, *inst.basis, inst.data), inst.n).to_string()},
                       {"cycle", describe_cycle(c)},
                       {"period", c.period}});
    }
    return arr;
}

json pair_counts_json(const Instance& inst) {
    json arr = json::array();
    for (const auto& b : inst.graph.bundles()) arr.push_back({b.low + 1, b.high + 1, b.count});
    return arr;
}

json report_json(const Report& r, const RunConfig& config) {
    const Instance& inst = r.inst;
    json j;
    j["n"] = inst.n;
    json fs = json::array();
    for (const auto& p : inst.factors) fs.push_back(p.to_string());
    j["factors"] = fs;
    j["psi"] = inst.cycles.size();
    j["partial"] = inst.partial;
    if (r.counts) {
        j["zeta_G"] = r.counts->full.get_str();
        j["zeta_Ghat"] = r.counts->condensed.get_str();
        j["log2_zeta_G"] = log2_of(r.counts->full);
        j["log2_zeta_Ghat"] = log2_of(r.counts->condensed);
    } else {
        j["zeta_G"] = nullptr;
        j["zeta_Ghat"] = nullptr;
    }
    j["cycles"] = cycles_json(inst);
    j["pair_counts"] = pair_counts_json(inst);
    json seqs = json::array();
    json trees = json::array();
    for (const auto& s : r.sequences) {
        seqs.push_back(config.hex ? bits_to_hex(s.bits) : bits_to_string(s.bits));
        json t = json::array();
        for (const auto& p : s.tree) t.push_back(StateVector(p.state, inst.n).to_string());
        trees.push_back(t);
    }
    j["sequences"] = seqs;
    if (config.show_tree) j["trees"] = trees;
    return j;
}

void print_analysis(const Instance& inst, std::ostream& out) {
    out << "f(x) = " << inst.characteristic.to_algebraic() << "  (n = " << inst.n << ")\n";
    for (std::size_t i = 0; i < inst.data.size(); ++i) {
        const auto& d = inst.data[i];
        out << "p" << i + 1 << " = " << d.poly.to_string() << "  order " << d.order << ", " << d.cofactor
            << (d.cofactor == 1 ? " cycle" : " cycles");
        if (!d.primitive()) out << ", associated primitive " << d.associated.to_string();
        out << "\n";
    }
    out << "psi = " << inst.cycles.size() << "\n\n";

    std::vector<std::string> comp, state, cyc;
    std::size_t wc = 10, ws = 5, wy = 5;
    for (std::size_t k = 0; k < inst.cycles.size(); ++k) {
        const auto& c = inst.cycles[k];
        comp.push_back(components(c));
        state.push_back(StateVector(representative_state(c, *inst.basis, inst.data), inst.n).to_string());
        cyc.push_back(describe_cycle(c));
        wc = std::max(wc, comp.back().size());
        ws = std::max(ws, state.back().size());
        wy = std::max(wy, cyc.back().size());
    }
    out << pad("V", 6) << pad("apply P to", wc + 2) << pad("state", ws + 2) << pad("cycle", wy + 2) << "period\n";
    for (std::size_t k = 0; k < inst.cycles.size(); ++k)
        out << pad("V" + std::to_string(k + 1), 6) << pad(comp[k], wc + 2) << pad(state[k], ws + 2)
            << pad(cyc[k], wy + 2) << inst.cycles[k].period << "\n";

    const auto& rep = inst.finder->special();
    out << "\nS = " << StateVector(1, inst.n).to_string() << " = (";
    for (std::size_t i = 0; i < rep.shift.size(); ++i) {
        if (i) out << ", ";
        out << "T^" << rep.shift[i] << " a" << i + 1 << "_" << rep.index[i];
    }
    out << ") * P\n\n";
    out << (inst.partial ? "conjugate pairs (spanning subgraph)\n" : "conjugate pairs\n");
    for (const auto& b : inst.graph.bundles())
        out << pad("{V" + std::to_string(b.low + 1) + ",V" + std::to_string(b.high + 1) + "}", 12) << b.count << "\n";
}

void print_counts(const Instance& inst, const std::optional<Counts>& counts, std::ostream& out) {
    out << "n = " << inst.n << "\n";
    out << "psi = " << inst.cycles.size() << "\n";
    if (!counts) {
        out << "zeta_G = not computed (partial mode)\n";
        out << "zeta_Ghat = not computed (partial mode)\n";
        return;
    }
    out << "zeta_G = " << counts->full.get_str() << "  (2^" << one_decimal(log2_of(counts->full)) << ")\n";
    out << "zeta_Ghat = " << counts->condensed.get_str() << "  (2^" << one_decimal(log2_of(counts->condensed))
        << ")\n";
}

void print_sequences(const Report& r, const RunConfig& config, std::ostream& out) {
    for (const auto& s : r.sequences) {
        if (config.show_tree) {
            out << "# tree";
            for (const auto& p : s.tree) out << " " << StateVector(p.state, r.inst.n).to_string();
            out << "\n";
        }
        out << (config.hex ? bits_to_hex(s.bits) : bits_to_string(s.bits)) << "\n";
    }
}

StateVector initial_state(const RunConfig& config, int n) {
    if (!config.initial_state) return StateVector(0, n);
    StateVector s = StateVector::parse(*config.initial_state);
    if (s.size() != n)
        throw Error("initial state has " + std::to_string(s.size()) + " bits, expected " + std::to_string(n));
    return s;
}

std::vector<PairTree> trees_in_order(const Instance& inst, std::uint64_t limit, std::uint64_t first) {
    std::vector<PairTree> out;
    if (inst.partial) {
        if (first != 0) throw Error("partial mode yields a single tree; --tree-index must be 0");
        PairTree t;
        for (const auto& e : inst.graph.edges()) t.push_back(e.pair);
        if (limit > 0) out.push_back(std::move(t));
        return out;
    }
    SpanningTreeEnumerator it(inst.graph);
    mpz_class skip = static_cast<unsigned long>(first);
    while (out.size() < limit) {
        auto t = it.next();
        if (!t) break;
        const mpz_class count = expansion_count(*t, inst.graph);
        if (skip >= count) {
            skip -= count;
            continue;
        }
        std::vector<std::size_t> sel(t->size(), 0);
        for (std::size_t k = t->size(); k-- > 0;) {
            const unsigned long m = inst.graph.bundles()[(*t)[k]].count;
            sel[k] = mpz_fdiv_q_ui(skip.get_mpz_t(), skip.get_mpz_t(), m);
        }
        skip = 0;
        do {
            out.push_back(expand_tree(*t, inst.graph, sel));
        } while (out.size() < limit && advance_selector(*t, inst.graph, sel));
    }
    if (out.empty() && limit > 0) throw Error("tree index " + std::to_string(first) + " is beyond the last tree");
    return out;
}

void check_emittable(const Instance& inst) {
    if (inst.n > 32) throw Error("sequences can only be emitted for n <= 32");
}

int run_verify(const RunConfig& config, std::istream& in, std::ostream& out) {
    json results = json::array();
    bool all_ok = true;
    std::string line;
    std::size_t lineno = 0;
    std::size_t checked = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string bits;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r') bits += ch;
        if (bits.empty() || bits[0] == '#') continue;
        if (bits.find_first_not_of("01") != std::string::npos)
            throw Error("line " + std::to_string(lineno) + ": expected only '0' and '1'");
        const std::size_t len = bits.size();
        if (len < 2 || !std::has_single_bit(len))
            throw Error("line " + std::to_string(lineno) + ": length " + std::to_string(len) +
                        " is not a power of two");
        const int n = std::countr_zero(len);
        const bool ok = verify_de_bruijn(bits_from_string(bits), n);
        all_ok = all_ok && ok;
        ++checked;
        if (config.format == Format::json)
            results.push_back({{"line", lineno}, {"n", n}, {"de_bruijn", ok}});
        else
            out << "line " << lineno << ": " << (ok ? "ok" : "not de Bruijn") << " (n = " << n << ")\n";
    }
    if (config.format == Format::json)
        out << json{{"results", results}, {"all_de_bruijn", all_ok}}.dump(2) << "\n";
    else
        out << checked << " sequence(s) checked, " << (all_ok ? "all de Bruijn" : "some not de Bruijn") << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == Command::verify) return run_verify(config, in, out);

        if (config.factors.empty()) throw Error("--factors is required");
        std::vector<BinaryPolynomial> polys;
        for (const auto& f : config.factors)
            for (const auto& p : parse_factor_list(f)) polys.push_back(p);
        const Instance inst = build_instance(polys, config.partial, config.max_degree, config.threads);

        Report report{inst, std::nullopt, {}};
        if (!inst.partial) report.counts = Counts{best_count(inst.graph, false), best_count(inst.graph, true)};

        if (config.command == Command::generate) {
            check_emittable(inst);
            const StateVector init = initial_state(config, inst.n);
            for (const auto& t : trees_in_order(inst, config.limit, config.tree_index.value_or(0)))
                report.sequences.push_back(join_cycles(t, init, inst.spec));
        } else if (config.command == Command::sample) {
            if (inst.partial) throw Error("sample needs the full adjacency graph; drop --partial");
            check_emittable(inst);
            const StateVector init = initial_state(config, inst.n);
            std::mt19937_64 master(config.seed.value_or(0));
            for (std::uint64_t k = 0; k < config.limit; ++k)
                report.sequences.push_back(join_cycles(random_spanning_tree(inst.graph, master()), init, inst.spec));
        }

        if (config.format == Format::json) {
            out << report_json(report, config).dump(2) << "\n";
            return kExitOk;
        }
        switch (config.command) {
            case Command::analyze:
                print_analysis(inst, out);
                out << "\n";
                print_counts(inst, report.counts, out);
                break;
            case Command::count:
                print_counts(inst, report.counts, out);
                break;
            case Command::generate:
            case Command::sample:
                print_sequences(report, config, out);
                break;
            case Command::verify:
                break;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace debruijn
