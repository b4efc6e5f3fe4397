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
#include "gamma/period_set.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gammatools {

std::string format_length(int value) {
    return value == k_infinity ? std::string("inf") : std::to_string(value);
}

PeriodSet::PeriodSet(int n, std::vector<int> periods) : n_(n), periods_(std::move(periods)) {
    if (n_ < 1)
        throw std::invalid_argument("period set length must be positive");
    if (periods_.empty() || periods_.front() != 0)
        throw std::invalid_argument("zero must be a period");
    for (std::size_t i = 1; i < periods_.size(); ++i)
        if (periods_[i] <= periods_[i - 1])
            throw std::invalid_argument("periods must be strictly increasing");
    if (periods_.back() >= n_)
        throw std::invalid_argument("period exceeds word length");
    bits_.assign((static_cast<std::size_t>(n_) + 63) / 64, 0);
    for (int p : periods_)
        bits_[static_cast<std::size_t>(p) >> 6] |= std::uint64_t{1} << (p & 63);
}

int PeriodSet::basic_period() const {
    return periods_.size() == 1 ? n_ : periods_[1];
}

PeriodSet PeriodSet::nested(int q) const {
    if (!contains(q))
        throw std::invalid_argument("nested set start must be a member period");
    std::vector<int> shifted;
    for (int p : periods_)
        if (p >= q)
            shifted.push_back(p - q);
    return PeriodSet(n_ - q, std::move(shifted));
}

PeriodSet PeriodSet::extended(int p) const {
    if (p <= max_period())
        throw std::invalid_argument("extension period must exceed max(P)");
    std::vector<int> out = periods_;
    out.push_back(p);
    return PeriodSet(p + 1 > n_ ? p + 1 : n_, std::move(out));
}

std::string PeriodSet::to_autocorrelation() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int p : periods_)
        out[static_cast<std::size_t>(p)] = '1';
    return out;
}

PeriodSet PeriodSet::from_autocorrelation(std::string_view bits) {
    if (bits.empty())
        throw std::invalid_argument("autocorrelation must be nonempty");
    if (bits[0] != '1')
        throw std::invalid_argument("zero must be a period");
    std::vector<int> periods;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            periods.push_back(static_cast<int>(i));
        else if (bits[i] != '0')
            throw std::invalid_argument("autocorrelation must consist of 0/1 characters");
    }
    return PeriodSet(static_cast<int>(bits.size()), std::move(periods));
}

std::string PeriodSet::to_line() const {
    std::string out;
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(periods_[i]);
    }
    return out;
}

PeriodSet PeriodSet::parse_line(std::string_view line, int n) {
    std::vector<int> periods;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || (next < end && *next != ','))
            throw std::invalid_argument("malformed period list: " + std::string(line));
        periods.push_back(value);
        p = next < end ? next + 1 : next;
    }
    return PeriodSet(n, std::move(periods));
}

bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i])
        ++i;
    if (i == a.size())
        return i != b.size();
    if (i == b.size())
        return false;
    // the sequence skipping the smaller value lacks that bit, hence sorts first
    return a[i] > b[i];
}

bool canonical_less(const PeriodSet& a, const PeriodSet& b) {
    return canonical_less(a.periods(), b.periods());
}

PeriodSet period_set_of(const Word& w) {
    const int n = w.size();
    if (n == 0)
        throw std::invalid_argument("empty word has no period set");
    auto ba = border_array(w);
    std::vector<int> periods{0};
    // the border chain yields borders in decreasing length, hence periods ascending
    for (int b = ba[static_cast<std::size_t>(n - 1)]; b > 0; b = ba[static_cast<std::size_t>(b - 1)])
        periods.push_back(n - b);
    return PeriodSet(n, std::move(periods));
}

int fw_limit(int p, int q) {
    if (p <= 0 || q <= 0)
        throw std::invalid_argument("FW limit requires positive periods");
    if (p == q)
        throw std::invalid_argument("FW limit requires distinct periods");
    if (p % q == 0 || q % p == 0)
        return k_infinity;
    return p + q - std::gcd(p, q);
}

} // namespace gammatools
