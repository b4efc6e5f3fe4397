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
#ifndef GAMMA_WORD_HPP
#define GAMMA_WORD_HPP

#include <string>
#include <string_view>
#include <vector>

namespace gammatools {

/// A finite word over a small integer alphabet. Symbols are 0-based
/// indices; letters a..z only appear at I/O boundaries (0 -> a, 1 -> b, ...).
struct Word {
    std::vector<int> symbols;
    int alphabet_size = 2;

    Word() = default;
    Word(std::vector<int> syms, int sigma);

    int size() const { return static_cast<int>(symbols.size()); }
    bool empty() const { return symbols.empty(); }
    int operator[](int i) const { return symbols[static_cast<std::size_t>(i)]; }

    bool operator==(const Word& other) const { return symbols == other.symbols; }

    /// Parses ASCII letters a..z. Throws std::invalid_argument on other characters.
    static Word from_text(std::string_view text);
    std::string to_text() const;
};

/// Classical failure function: entry i is the length of the longest proper
/// border of w[0..i]. Empty word yields an empty array.
std::vector<int> border_array(const Word& w);

/// True iff p is a period of w in the sense of the prefix/suffix equality.
bool has_period(const Word& w, int p);

/// True iff w is not a proper power. Throws on the empty word.
bool is_primitive(const Word& w);

struct MergeResult {
    bool ok = false;
    Word word;            // x[0..|x|-j-1].y when ok
    int mismatch_pos = -1; // first mismatching overlap position otherwise
};

/// Merge of x and y with offset j: succeeds iff the length-j suffix of x
/// equals the length-j prefix of y. Preconditions on j are checked.
MergeResult merge(const Word& x, const Word& y, int offset);

} // namespace gammatools

#endif
