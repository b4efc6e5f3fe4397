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
#ifndef GAMMA_PERIOD_SET_HPP
#define GAMMA_PERIOD_SET_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gamma/word.hpp"

namespace gammatools {

/// Sentinel for +infinity in length arithmetic, serialized as "inf".
inline constexpr int k_infinity = std::numeric_limits<int>::max();

std::string format_length(int value); // "inf" for the sentinel, decimal otherwise

/// The period set of a word of length n: a strictly increasing sequence of
/// integers in [0, n) starting with 0. Immutable after construction.
/// Membership is backed by a bit vector (one machine word up to n = 64).
class PeriodSet {
public:
    PeriodSet(int n, std::vector<int> periods);

    int length() const { return n_; }
    const std::vector<int>& periods() const { return periods_; }
    bool contains(int p) const {
        if (p < 0 || p >= n_)
            return false;
        return (bits_[static_cast<std::size_t>(p) >> 6] >> (p & 63)) & 1u;
    }
    int weight() const { return static_cast<int>(periods_.size()); }
    int max_period() const { return periods_.back(); }
    /// Smallest nonzero period, or n when the set is {0}.
    int basic_period() const;

    /// Nested set starting at period q: members >= q shifted down by q, at
    /// length n - q. Throws unless q is a member.
    PeriodSet nested(int q) const;
    /// P united with a new period p > max(P).
    PeriodSet extended(int p) const;

    std::string to_autocorrelation() const;
    static PeriodSet from_autocorrelation(std::string_view bits);

    /// "0,5,7" form used by .gamma files.
    std::string to_line() const;
    static PeriodSet parse_line(std::string_view line, int n);

    bool operator==(const PeriodSet& other) const {
        return n_ == other.n_ && periods_ == other.periods_;
    }

private:
    int n_;
    std::vector<int> periods_;
    std::vector<std::uint64_t> bits_;
};

/// Canonical order on period sequences of a common length: the order of
/// their autocorrelation strings. At the first membership difference, the
/// set lacking the smaller element comes first.
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b);
bool canonical_less(const PeriodSet& a, const PeriodSet& b);

/// Period set of a word, via the border-array chain. Throws on the empty word.
PeriodSet period_set_of(const Word& w);

/// Fine and Wilf limit p + q - gcd(p,q); k_infinity when one argument
/// divides the other. Arguments must be positive and distinct.
int fw_limit(int p, int q);

} // namespace gammatools

#endif
