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
#include "gamma/certify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gammatools {
namespace {

struct Members {
    int n;
    std::vector<std::uint64_t> bits;

    Members(const std::vector<int>& sorted, int length) : n(length) {
        bits.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
        for (int p : sorted)
            bits[static_cast<std::size_t>(p) >> 6] |= std::uint64_t{1} << (p & 63);
    }
    bool contains(int p) const {
        if (p < 0 || p >= n)
            return false;
        return (bits[static_cast<std::size_t>(p) >> 6] >> (p & 63)) & 1u;
    }
};

// Propagated values equal to n fall outside {0..n-1} and are vacuously
// satisfied (n is a trivial period under the other convention).
CertResult fpr_pair(const std::vector<int>& s, const Members& m, int p, int q) {
    const int d = q - p;
    for (long long v = static_cast<long long>(p) + 2LL * d; v < m.n; v += d)
        if (!m.contains(static_cast<int>(v)))
            return CertResult::fail(Violation::fpr, p, q, static_cast<int>(v));
    (void)s;
    return CertResult::ok();
}

CertResult fpr_direct(const std::vector<int>& s, const Members& m) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (auto r = fpr_pair(s, m, s[a], s[b]); !r.valid)
                return r;
    return CertResult::ok();
}

CertResult bpr_direct(const std::vector<int>& s, const Members& m) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        const int p = s[a];
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            const int q = s[b];
            if (q >= 2 * p)
                break;
            if (m.contains(2 * p - q))
                continue;
            const int d = q - p;
            const int imax = std::min(p / d, (m.n - p) / d);
            for (int i = 2; i <= imax; ++i)
                if (m.contains(p - i * d))
                    return CertResult::fail(Violation::bpr, p, q, p - i * d);
        }
    }
    return CertResult::ok();
}

// Difference-sequence conditions over p plus the appended trivial period n:
// each forced value p_h + d_h below n must be a member, and consecutive
// offsets may only divide each other with quotient 1.
// Zero-membership and range are assumed already checked.
CertResult lothaire_conditions(const std::vector<int>& s, const Members& m, int n) {
    std::vector<int> full = s;
    full.push_back(n);
    const std::size_t count = full.size() - 1; // index of p_s = n
    for (std::size_t h = 1; h < count; ++h) {
        const int d = full[h] - full[h - 1];
        if (full[h] + d > n)
            continue;
        const int forced = full[h] + d;
        if (forced != n && !m.contains(forced))
            return CertResult::fail(Violation::lothaire_a, full[h - 1], full[h], static_cast<int>(h));
        const int d_next = full[h + 1] - full[h];
        if (d % d_next == 0 && d / d_next != 1)
            return CertResult::fail(Violation::lothaire_b, full[h], full[h + 1], static_cast<int>(h));
    }
    return CertResult::ok();
}

struct Normalized {
    std::vector<int> sorted;
    CertResult precheck = CertResult::ok();
};

Normalized normalize(const std::vector<int>& candidate, int n) {
    Normalized out;
    out.sorted = candidate;
    std::sort(out.sorted.begin(), out.sorted.end());
    out.sorted.erase(std::unique(out.sorted.begin(), out.sorted.end()), out.sorted.end());
    for (int v : out.sorted)
        if (v < 0 || v >= n) {
            out.precheck = CertResult::fail(Violation::out_of_range, v);
            return out;
        }
    if (out.sorted.empty() || out.sorted.front() != 0)
        out.precheck = CertResult::fail(Violation::missing_zero);
    return out;
}

} // namespace

std::string violation_name(Violation v) {
    switch (v) {
    case Violation::none: return "none";
    case Violation::missing_zero: return "missing-zero";
    case Violation::out_of_range: return "out-of-range";
    case Violation::fpr: return "fpr";
    case Violation::bpr: return "bpr";
    case Violation::lothaire_a: return "lothaire-a";
    case Violation::lothaire_b: return "lothaire-b";
    }
    return "?";
}

CertResult check_fpr(const PeriodSet& p) {
    Members m(p.periods(), p.length());
    return fpr_direct(p.periods(), m);
}

CertResult check_fpr_optimized(const PeriodSet& p) {
    const auto& s = p.periods();
    Members m(s, p.length());
    // Once the FPR holds for the leftmost pair of some offset, it holds for
    // every pair whose offset is that value or a multiple of it.
    std::vector<int> offsets;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const int d = s[i + 1] - s[i];
        bool covered = false;
        for (int r : offsets)
            if (d % r == 0) {
                covered = true;
                break;
            }
        if (covered)
            continue;
        offsets.push_back(d);
        if (auto r = fpr_pair(s, m, s[i], s[i + 1]); !r.valid)
            return r;
    }
    return CertResult::ok();
}

CertResult check_bpr_direct(const PeriodSet& p) {
    Members m(p.periods(), p.length());
    return bpr_direct(p.periods(), m);
}

CertResult check_bpr_via_fw(const PeriodSet& p) {
    const auto& s = p.periods();
    const int n = p.length();
    for (std::size_t j = 0; j + 2 < s.size(); ++j) {
        const int r = s[j];
        const int q1 = s[j + 1] - r;
        const int q2 = s[j + 2] - r;
        if (q2 % q1 == 0)
            continue; // gcd is the basic period of the nested set itself
        if (q1 + q2 - std::gcd(q1, q2) <= n - r)
            return CertResult::fail(Violation::bpr, s[j + 1], s[j + 2], r);
    }
    return CertResult::ok();
}

CertResult certify_rules(const std::vector<int>& candidate, int n) {
    auto norm = normalize(candidate, n);
    if (!norm.precheck.valid)
        return norm.precheck;
    Members m(norm.sorted, n);
    if (auto r = fpr_direct(norm.sorted, m); !r.valid)
        return r;
    return bpr_direct(norm.sorted, m);
}

CertResult certify_lothaire(const std::vector<int>& candidate, int n) {
    auto norm = normalize(candidate, n);
    if (!norm.precheck.valid)
        return norm.precheck;
    Members m(norm.sorted, n);
    return lothaire_conditions(norm.sorted, m, n);
}

std::pair<CertResult, CertResult> certify_incremental_pair(const PeriodSet& parent, int n) {
    if (parent.length() != n - 1)
        throw std::invalid_argument("parent must be certified for length n-1");
    const auto& s = parent.periods();
    const std::size_t k = s.size();

    // Is n-1 forced by the FPR? Adjacent pairs suffice: offsets shrink with
    // the index, so the minimal forced value comes from an adjacent pair.
    int forced_from = -1;
    for (std::size_t h = 1; h < k; ++h)
        if (2 * s[h] - s[h - 1] == n - 1) {
            forced_from = static_cast<int>(h);
            break;
        }

    // Candidate P at length n. Only condition (b) of the difference
    // characterization can newly fail: at indices whose trigger value
    // p_h + d_h reaches n, and at the top index where d_s changed.
    CertResult res_p = CertResult::ok();
    if (forced_from >= 0) {
        res_p = CertResult::fail(Violation::fpr, s[static_cast<std::size_t>(forced_from) - 1],
                                 s[static_cast<std::size_t>(forced_from)], n - 1);
    } else {
        for (std::size_t h = 1; h + 1 < k && res_p.valid; ++h) {
            const int d = s[h] - s[h - 1];
            if (s[h] + d != n)
                continue;
            const int d_next = s[h + 1] - s[h];
            if (d % d_next == 0 && d / d_next != 1)
                res_p = CertResult::fail(Violation::lothaire_b, s[h], s[h + 1], static_cast<int>(h));
        }
        if (res_p.valid && k >= 2) {
            const int d = s[k - 1] - s[k - 2];
            if (s[k - 1] + d <= n) {
                const int d_top = n - s[k - 1];
                if (d % d_top == 0 && d / d_top != 1)
                    res_p = CertResult::fail(Violation::lothaire_b, s[k - 1], n, static_cast<int>(k - 1));
            }
        }
    }

    // Candidate Q = P union {n-1} at length n. The FPR always holds; (b)
    // needs checking only where the trigger newly reaches n. The successor
    // offset at the former top index is now n-1 - max(P).
    CertResult res_q = CertResult::ok();
    for (std::size_t h = 1; h < k && res_q.valid; ++h) {
        const int d = s[h] - s[h - 1];
        if (s[h] + d != n)
            continue;
        const int d_next = (h + 1 < k) ? s[h + 1] - s[h] : (n - 1) - s[k - 1];
        if (d_next > 0 && d % d_next == 0 && d / d_next != 1)
            res_q = CertResult::fail(Violation::lothaire_b, s[h], s[h] + d_next, static_cast<int>(h));
    }
    return {res_p, res_q};
}

} // namespace gammatools
