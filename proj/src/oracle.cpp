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
#include "gamma/oracle.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gamma/realize.hpp"
#include "gamma/word.hpp"

namespace gammatools {
namespace fs = std::filesystem;
namespace {

void check_guard(int n, bool force) {
    if (n < 1)
        throw std::invalid_argument("length must be positive");
    if (n > k_oracle_guard && !force)
        throw std::invalid_argument("brute force beyond n=" + std::to_string(k_oracle_guard) +
                                    " requires force");
}

// Enumerates all words with fixed first symbol via a base-sigma odometer.
template <typename Fn>
void for_each_fixed_first_word(int n, int sigma, Fn&& fn) {
    Word w(std::vector<int>(static_cast<std::size_t>(n), 0), sigma);
    while (true) {
        fn(w);
        int i = n - 1;
        while (i >= 1 && w.symbols[static_cast<std::size_t>(i)] == sigma - 1)
            w.symbols[static_cast<std::size_t>(i--)] = 0;
        if (i < 1)
            break;
        ++w.symbols[static_cast<std::size_t>(i)];
    }
}

} // namespace

GammaSet brute_force_gamma(int n, int alphabet_size, bool force) {
    check_guard(n, force);
    if (alphabet_size < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    std::set<std::vector<int>, bool (*)(const std::vector<int>&, const std::vector<int>&)>
        found(static_cast<bool (*)(const std::vector<int>&, const std::vector<int>&)>(canonical_less));
    for_each_fixed_first_word(n, alphabet_size,
                              [&](const Word& w) { found.insert(period_set_of(w).periods()); });
    GammaSet g;
    g.n = n;
    for (const auto& periods : found)
        g.sets.emplace_back(n, periods);
    return g;
}

long long population_count(int n, const PeriodSet& p, int alphabet_size, bool force) {
    check_guard(n, force);
    if (p.length() != n)
        throw std::invalid_argument("period set length mismatch");
    long long fixed_first = 0;
    for_each_fixed_first_word(n, alphabet_size, [&](const Word& w) {
        if (period_set_of(w) == p)
            ++fixed_first;
    });
    // transposing the first symbol with symbol 0 is a period-preserving bijection
    return fixed_first * alphabet_size;
}

std::string VerifyReport::summary(int n) const {
    std::ostringstream os;
    os << "VERIFY " << (pass ? "PASS" : "FAIL") << " n=" << n << " checked=" << checked;
    return os.str();
}

VerifyReport verify_gamma_file(const fs::path& path, int n, VerifyMode mode) {
    VerifyReport report;

    if (mode == VerifyMode::oracle) {
        GammaSet expected = brute_force_gamma(n);
        std::ostringstream want;
        want << "# gamma v1\nn=" << n << "\ncount=" << expected.kappa() << "\n";
        for (const auto& p : expected.sets)
            want << p.to_line() << "\n";
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            report.findings.push_back("cannot read " + path.string());
            return report;
        }
        std::ostringstream got;
        got << in.rdbuf();
        report.checked = expected.kappa();
        if (got.str() == want.str()) {
            report.pass = true;
        } else {
            // locate the first differing line for the report
            std::istringstream a(got.str()), b(want.str());
            std::string la, lb;
            std::size_t line_no = 1;
            while (true) {
                const bool ra = static_cast<bool>(std::getline(a, la));
                const bool rb = static_cast<bool>(std::getline(b, lb));
                if (!ra && !rb)
                    break;
                if (la != lb || ra != rb) {
                    report.findings.push_back("line " + std::to_string(line_no) + ": got '" +
                                              (ra ? la : "<eof>") + "' want '" + (rb ? lb : "<eof>") + "'");
                    break;
                }
                ++line_no;
            }
        }
        return report;
    }

    // witness mode
    std::set<std::vector<int>> prev_sets;
    bool have_prev = false;
    const fs::path prev = gamma_file_name(path.parent_path(), n - 1);
    if (n >= 2 && fs::exists(prev)) {
        have_prev = true;
        for_each_gamma_line(prev, [&](const PeriodSet& p, std::size_t) {
            prev_sets.insert(p.periods());
        });
    }

    try {
        for_each_gamma_line(path, [&](const PeriodSet& p, std::size_t line_no) {
            ++report.checked;
            auto r = binary_realize(n, p.periods());
            if (!r.realizable()) {
                report.findings.push_back("line " + std::to_string(line_no) +
                                          ": certification violation, not realizable: " + p.to_line());
                return;
            }
            if (!(period_set_of(r.word) == p)) {
                report.findings.push_back("line " + std::to_string(line_no) +
                                          ": witness round-trip mismatch for " + p.to_line());
                return;
            }
            if (have_prev) {
                std::vector<int> projected = p.periods();
                if (projected.back() == n - 1)
                    projected.pop_back();
                if (!prev_sets.count(projected))
                    report.findings.push_back("line " + std::to_string(line_no) +
                                              ": projection missing from previous file: " + p.to_line());
            }
        });
    } catch (const std::exception& e) {
        report.findings.push_back(e.what());
        return report;
    }
    report.pass = report.findings.empty();
    return report;
}

} // namespace gammatools
