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
#ifndef GAMMA_TESTS_NAIVE_HPP
#define GAMMA_TESTS_NAIVE_HPP

#include <set>
#include <vector>

#include "gamma/period_set.hpp"
#include "gamma/word.hpp"

namespace gammatools::naive {

// Quadratic period test straight from the definition, independent of the
// border-array machinery under test.
inline bool has_period_definition(const Word& w, int p) {
    const int n = w.size();
    for (int i = 0; i + p < n; ++i)
        if (w[i] != w[i + p])
            return false;
    return true;
}

inline std::vector<int> period_set_definition(const Word& w) {
    std::vector<int> out;
    for (int p = 0; p < w.size(); ++p)
        if (has_period_definition(w, p))
            out.push_back(p);
    return out;
}

// Gamma(n) over the binary alphabet by trying all 2^n words.
inline std::set<std::vector<int>> gamma_definition(int n) {
    std::set<std::vector<int>> out;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> syms(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            syms[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
        out.insert(period_set_definition(Word(std::move(syms), 2)));
    }
    return out;
}

} // namespace gammatools::naive

#endif
