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
#include "gamma/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammatools {

Word::Word(std::vector<int> syms, int sigma) : symbols(std::move(syms)), alphabet_size(sigma) {
    if (sigma < 1)
        throw std::invalid_argument("alphabet size must be positive");
    for (int s : symbols)
        if (s < 0 || s >= sigma)
            throw std::invalid_argument("symbol index out of alphabet range");
}

Word Word::from_text(std::string_view text) {
    Word w;
    w.symbols.reserve(text.size());
    int max_sym = 1;
    for (char c : text) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("word text must consist of letters a..z");
        int s = c - 'a';
        max_sym = std::max(max_sym, s);
        w.symbols.push_back(s);
    }
    w.alphabet_size = max_sym + 1;
    return w;
}

std::string Word::to_text() const {
    std::string out;
    out.reserve(symbols.size());
    for (int s : symbols) {
        if (s >= 26)
            throw std::invalid_argument("cannot render symbol index >= 26 as a letter");
        out.push_back(static_cast<char>('a' + s));
    }
    return out;
}

std::vector<int> border_array(const Word& w) {
    const int n = w.size();
    std::vector<int> ba(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        int b = ba[static_cast<std::size_t>(i - 1)];
        while (b > 0 && w[i] != w[b])
            b = ba[static_cast<std::size_t>(b - 1)];
        if (w[i] == w[b])
            ++b;
        ba[static_cast<std::size_t>(i)] = b;
    }
    return ba;
}

bool has_period(const Word& w, int p) {
    const int n = w.size();
    if (p < 0 || p > n)
        throw std::invalid_argument("period out of range");
    if (p == 0 || p == n)
        return true; // trivial shift, or vacuous equality
    auto ba = border_array(w);
    // p is a period iff n-p appears on the border chain of the whole word
    for (int b = ba[static_cast<std::size_t>(n - 1)]; b > 0; b = ba[static_cast<std::size_t>(b - 1)])
        if (n - b == p)
            return true;
    return false;
}

bool is_primitive(const Word& w) {
    const int n = w.size();
    if (n == 0)
        throw std::invalid_argument("empty word has no primitivity");
    auto ba = border_array(w);
    int p = n - ba[static_cast<std::size_t>(n - 1)];
    return !(p < n && n % p == 0);
}

MergeResult merge(const Word& x, const Word& y, int offset) {
    if (offset < 0 || offset > x.size() || offset > y.size())
        throw std::invalid_argument("merge offset out of range");
    MergeResult r;
    for (int i = 0; i < offset; ++i) {
        if (x[x.size() - offset + i] != y[i]) {
            r.mismatch_pos = i;
            return r;
        }
    }
    r.ok = true;
    std::vector<int> syms(x.symbols.begin(), x.symbols.end() - offset);
    syms.insert(syms.end(), y.symbols.begin(), y.symbols.end());
    r.word = Word(std::move(syms), std::max(x.alphabet_size, y.alphabet_size));
    return r;
}

} // namespace gammatools
