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
#include "gamma/realize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gammatools {
namespace {

void check_input(int n, const std::vector<int>& p) {
    if (n < 1)
        throw std::invalid_argument("length must be positive");
    if (p.empty() || p.front() != 0)
        throw std::invalid_argument("candidate must have zero as first period");
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] <= p[i - 1])
            throw std::invalid_argument("candidate must be strictly increasing");
    if (p.back() >= n)
        throw std::invalid_argument("candidate period out of range");
}

Word word_of(std::vector<int> syms, int sigma) {
    return Word(std::move(syms), std::max(sigma, 2));
}

// a.b^(len-1) in binary mode; len fresh symbols otherwise.
Word base_word(int len, bool multi, int& next_symbol) {
    std::vector<int> syms(static_cast<std::size_t>(len), 1);
    if (multi) {
        for (auto& s : syms)
            s = next_symbol++;
    } else {
        syms[0] = 0;
    }
    return word_of(std::move(syms), multi ? next_symbol : 2);
}

Realization realize(int n, const std::vector<int>& p, bool multi) {
    check_input(n, p);
    Realization out;
    const int k = static_cast<int>(p.size());
    int next_symbol = 0;

    if (k == 1) {
        Word w = base_word(n, multi, next_symbol);
        out.trace.push_back({0, n, n, "base", w, true});
        out.word = std::move(w);
        return out;
    }

    int prev_lg = n - p[static_cast<std::size_t>(k - 1)];
    int prev_ip = prev_lg;
    Word prev_suffix = base_word(prev_lg, multi, next_symbol);
    out.trace.push_back({p[static_cast<std::size_t>(k - 1)], prev_lg, prev_ip, "base", prev_suffix, true});

    for (int i = k - 2; i >= 0; --i) {
        const int lg = n - p[static_cast<std::size_t>(i)];
        const int inner = p[static_cast<std::size_t>(i + 1)] - p[static_cast<std::size_t>(i)];
        const bool case1 = lg <= 2 * prev_lg;
        const std::string tag = case1 ? "1" : "2";

        if (inner < prev_ip) { // FPR violated inside the nested sets
            out.trace.push_back({p[static_cast<std::size_t>(i)], lg, inner, tag, Word{}, false});
            return out;
        }

        Word suffix;
        if (case1) {
            const bool feasible = inner == prev_ip ||
                (inner % prev_ip != 0 &&
                 (inner == prev_lg || has_period(prev_suffix, inner)));
            if (!feasible) {
                out.trace.push_back({p[static_cast<std::size_t>(i)], lg, inner, tag, Word{}, false});
                return out;
            }
            std::vector<int> syms(prev_suffix.symbols.begin(), prev_suffix.symbols.begin() + inner);
            syms.insert(syms.end(), prev_suffix.symbols.begin(), prev_suffix.symbols.end());
            suffix = word_of(std::move(syms), prev_suffix.alphabet_size);
        } else {
            const int m = lg - 2 * prev_lg;
            std::vector<int> prefix = prev_suffix.symbols;
            if (multi) {
                for (int j = 0; j < m; ++j)
                    prefix.push_back(next_symbol++);
            } else {
                prefix.insert(prefix.end(), static_cast<std::size_t>(m), 0);
                if (!is_primitive(word_of(prefix, 2)))
                    prefix.back() = 1;
            }
            Word new_prefix = word_of(std::move(prefix), multi ? next_symbol : 2);
            if (!is_primitive(new_prefix))
                throw std::logic_error("realization invariant broken: newPrefix not primitive");
            std::vector<int> syms = new_prefix.symbols;
            syms.insert(syms.end(), prev_suffix.symbols.begin(), prev_suffix.symbols.end());
            suffix = word_of(std::move(syms), new_prefix.alphabet_size);
        }

        out.trace.push_back({p[static_cast<std::size_t>(i)], lg, inner, tag, suffix, true});
        prev_lg = lg;
        prev_ip = inner;
        prev_suffix = std::move(suffix);
    }

    out.word = std::move(prev_suffix);
    return out;
}

} // namespace

Realization binary_realize(int n, const std::vector<int>& candidate) {
    return realize(n, candidate, false);
}

Realization multi_symbol_realize(int n, const std::vector<int>& candidate) {
    return realize(n, candidate, true);
}

ConstructiveResult certify_constructive(int n, const std::vector<int>& candidate) {
    auto r = binary_realize(n, candidate);
    ConstructiveResult out;
    if (!r.realizable()) {
        out.cert = CertResult::fail(Violation::fpr); // not realizable
        return out;
    }
    if (!(period_set_of(r.word).periods() == candidate))
        throw std::logic_error("realization round-trip mismatch");
    out.cert = CertResult::ok();
    out.witness = std::move(r.word);
    return out;
}

std::string render_trace(const std::vector<TraceRow>& rows) {
    std::size_t suffix_width = 6;
    for (const auto& r : rows)
        suffix_width = std::max(suffix_width, r.suffix.symbols.size());
    std::ostringstream os;
    os << std::left << std::setw(8) << "period" << std::setw(8) << "length" << std::setw(7)
       << "inner" << std::setw(6) << "case" << std::setw(static_cast<int>(suffix_width + 2))
       << "suffix" << "valid\n";
    for (const auto& r : rows) {
        std::string suffix = r.suffix.empty() ? "-" : r.suffix.to_text();
        os << std::left << std::setw(8) << r.period << std::setw(8) << r.length << std::setw(7)
           << r.inner_period << std::setw(6) << r.case_tag
           << std::setw(static_cast<int>(suffix_width + 2)) << suffix
           << (r.valid ? "true" : "false") << '\n';
    }
    return os.str();
}

} // namespace gammatools
