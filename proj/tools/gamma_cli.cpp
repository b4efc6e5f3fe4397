/*
 * Copyright 2026 The gammatools authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamma/certify.hpp"
#include "gamma/enumerate.hpp"
#include "gamma/fate.hpp"
#include "gamma/oracle.hpp"
#include "gamma/realize.hpp"

namespace gt = ::gammatools;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1; // INVALID / EPSILON / FAIL
constexpr int exit_usage = 2;

std::vector<int> parse_set_literal(const std::string& literal) {
    std::vector<int> out;
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError("set", "not an integer list: " + literal);
        }
    }
    if (out.empty())
        throw CLI::ValidationError("set", "empty set literal");
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != out)
        std::cerr << "warning: set literal reordered to ascending order\n";
    return sorted;
}

int default_jobs() {
    if (const char* env = std::getenv("GAMMA_JOBS"))
        return std::max(1, std::atoi(env));
    return 1;
}

// Minimal standalone SVG bar chart, one bar per (key, count).
void write_plot(const std::string& path, const std::map<int, long long>& data,
                const std::string& title) {
    const int bar = 8, w_pad = 40, h = 240, h_pad = 30;
    long long max_v = 1;
    for (const auto& [k, v] : data)
        max_v = std::max(max_v, v);
    const int width = w_pad * 2 + bar * static_cast<int>(data.size());
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << h + h_pad
        << "'>\n<text x='10' y='16'>" << title << "</text>\n";
    int i = 0;
    for (const auto& [k, v] : data) {
        const int bh = static_cast<int>(static_cast<double>(v) / static_cast<double>(max_v) * (h - 40));
        out << "<rect x='" << w_pad + i * bar << "' y='" << h - bh << "' width='" << bar - 1
            << "' height='" << bh << "' fill='steelblue'><title>" << k << ": " << v
            << "</title></rect>\n";
        ++i;
    }
    out << "</svg>\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"period set enumeration, certification and analysis"};
    app.require_subcommand(1);

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "incrementally enumerate Gamma files");
    int enum_to = 1;
    std::string enum_out, enum_from, enum_certifier = "pair";
    int enum_jobs = default_jobs();
    cmd_enum->add_option("--to", enum_to, "largest length to enumerate")->required();
    cmd_enum->add_option("--out", enum_out, "output directory")->required();
    cmd_enum->add_option("--from-dir", enum_from, "directory with files to resume from");
    cmd_enum->add_option("--certifier", enum_certifier, "rules|lothaire|pair|constructive");
    cmd_enum->add_option("--jobs", enum_jobs, "worker count");

    // certify
    auto* cmd_certify = app.add_subcommand("certify", "test membership of a candidate set");
    int certify_n = 0;
    std::string certify_set;
    cmd_certify->add_option("--n", certify_n, "word length")->required();
    cmd_certify->add_option("--set", certify_set, "comma-separated candidate set")->required();

    // realize
    auto* cmd_realize = app.add_subcommand("realize", "build a word realizing a set");
    int realize_n = 0;
    std::string realize_set;
    bool realize_trace = false, realize_multi = false;
    cmd_realize->add_option("--n", realize_n, "word length")->required();
    cmd_realize->add_option("--set", realize_set, "comma-separated candidate set")->required();
    cmd_realize->add_flag("--trace", realize_trace, "print the construction trace");
    cmd_realize->add_flag("--multi", realize_multi, "maximize the number of distinct symbols");

    // fate
    auto* cmd_fate = app.add_subcommand("fate", "birth, extension and death limits of a set");
    std::string fate_set;
    int fate_at = -1;
    cmd_fate->add_option("--set", fate_set, "comma-separated period set")->required();
    cmd_fate->add_option("--at", fate_at, "also classify the fate at this length");

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "distribution of a Gamma file");
    std::string stats_in, stats_by = "basic-period", stats_csv, stats_plot;
    cmd_stats->add_option("--in", stats_in, "input .gamma file")->required();
    cmd_stats->add_option("--by", stats_by, "basic-period|weight");
    cmd_stats->add_option("--csv", stats_csv, "CSV output path");
    cmd_stats->add_option("--plot", stats_plot, "SVG bar chart output path");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force Gamma(n) from all words");
    int oracle_n = 0, oracle_alphabet = 2;
    std::string oracle_out;
    bool oracle_force = false;
    cmd_oracle->add_option("--n", oracle_n, "word length")->required();
    cmd_oracle->add_option("--alphabet", oracle_alphabet, "alphabet size");
    cmd_oracle->add_option("--out", oracle_out, "write a .gamma file instead of stdout");
    cmd_oracle->add_flag("--force", oracle_force, "lift the cost guard");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a Gamma file");
    int verify_n = 0;
    std::string verify_in, verify_mode = "oracle";
    cmd_verify->add_option("--n", verify_n, "word length")->required();
    cmd_verify->add_option("--in", verify_in, "input .gamma file")->required();
    cmd_verify->add_option("--mode", verify_mode, "oracle|witness");

    // tree
    auto* cmd_tree = app.add_subcommand("tree", "export the parental tree as DOT");
    int tree_to = 0;
    std::string tree_dot;
    cmd_tree->add_option("--to", tree_to, "deepest layer")->required();
    cmd_tree->add_option("--dot", tree_dot, "output DOT path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_enum) {
            gt::enumerate_range(enum_to, enum_out, gt::certifier_from_name(enum_certifier),
                                   enum_jobs, enum_from, [](const gt::EnumProgress& p) {
                                       std::cout << "n=" << p.n << " kappa=" << p.kappa
                                                 << " dying=" << p.dying << "\n";
                                   });
            return exit_ok;
        }

        if (*cmd_certify) {
            auto set = parse_set_literal(certify_set);
            auto res = gt::certify_rules(set, certify_n);
            if (res.valid) {
                std::cout << "VALID\n";
                return exit_ok;
            }
            std::cout << "INVALID (" << gt::violation_name(res.violation) << ")\n";
            return exit_negative;
        }

        if (*cmd_realize) {
            auto set = parse_set_literal(realize_set);
            auto r = realize_multi ? gt::multi_symbol_realize(realize_n, set)
                                   : gt::binary_realize(realize_n, set);
            if (realize_trace)
                std::cout << gt::render_trace(r.trace);
            if (!r.realizable()) {
                std::cout << "EPSILON\n";
                return exit_negative;
            }
            std::cout << r.word.to_text() << "\n";
            return exit_ok;
        }

        if (*cmd_fate) {
            auto set = parse_set_literal(fate_set);
            gt::PeriodSet p(set.back() + 1, set);
            auto rec = gt::fate_record(p);
            std::cout << "birth=" << rec.birth << " e=" << gt::format_length(rec.next_extension)
                      << " rfw=" << gt::format_length(rec.rfw)
                      << " last_unchanged=" << gt::format_length(rec.last_unchanged_length)
                      << " dies_at=" << gt::format_length(rec.dies_at) << "\n";
            if (fate_at >= 1)
                std::cout << "at n=" << fate_at << ": "
                          << gt::fate_name(gt::classify_fate(p, fate_at)) << "\n";
            return exit_ok;
        }

        if (*cmd_stats) {
            auto stats = gt::stats_of_file(stats_in);
            if (!stats_csv.empty()) {
                std::ofstream out(stats_csv);
                if (!out)
                    throw std::runtime_error("cannot write " + stats_csv);
                out << gt::stats_to_csv(stats);
            }
            const auto& selected =
                stats_by == "weight" ? stats.by_weight : stats.by_basic_period;
            if (stats_by != "weight" && stats_by != "basic-period")
                throw CLI::ValidationError("by", "expected basic-period or weight");
            if (!stats_plot.empty())
                write_plot(stats_plot, selected, "by " + stats_by);
            for (const auto& [k, v] : selected)
                std::cout << k << "," << v << "\n";
            return exit_ok;
        }

        if (*cmd_oracle) {
            auto g = gt::brute_force_gamma(oracle_n, oracle_alphabet, oracle_force);
            if (!oracle_out.empty()) {
                gt::write_gamma_file(oracle_out, g);
            } else {
                std::cout << "# gamma v1\nn=" << g.n << "\ncount=" << g.kappa() << "\n";
                for (const auto& p : g.sets)
                    std::cout << p.to_line() << "\n";
            }
            return exit_ok;
        }

        if (*cmd_verify) {
            auto mode = verify_mode == "witness" ? gt::VerifyMode::witness
                                                 : gt::VerifyMode::oracle;
            if (verify_mode != "witness" && verify_mode != "oracle")
                throw CLI::ValidationError("mode", "expected oracle or witness");
            auto report = gt::verify_gamma_file(verify_in, verify_n, mode);
            for (const auto& f : report.findings)
                std::cout << f << "\n";
            std::cout << report.summary(verify_n) << "\n";
            return report.pass ? exit_ok : exit_negative;
        }

        if (*cmd_tree) {
            auto tree = gt::build_parental_tree(tree_to);
            std::ofstream out(tree_dot);
            if (!out)
                throw std::runtime_error("cannot write " + tree_dot);
            out << gt::tree_to_dot(tree);
            std::cout << "layers=" << tree.layers.size() << "\n";
            return exit_ok;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
