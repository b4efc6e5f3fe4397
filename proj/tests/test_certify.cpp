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
#include <doctest.h>

#include <vector>

#include "gamma/certify.hpp"
#include "gamma/enumerate.hpp"
#include "gamma/oracle.hpp"
#include "gamma/realize.hpp"
#include "naive.hpp"

using namespace gammatools;

TEST_CASE("rule characterization matches brute force for all candidates up to n=14") {
    for (int n = 1; n <= 14; ++n) {
        auto truth = naive::gamma_definition(n);
        // iterate over all subsets of {1..n-1}, always including 0
        const unsigned long long top = 1ull << (n - 1);
        for (unsigned long long mask = 0; mask < top; ++mask) {
            std::vector<int> cand{0};
            for (int b = 1; b < n; ++b)
                if ((mask >> (b - 1)) & 1u)
                    cand.push_back(b);
            const bool expect = truth.count(cand) > 0;
            CHECK(certify_rules(cand, n).valid == expect);
        }
    }
}

TEST_CASE("lothaire characterization agrees with the rules up to n=14") {
    for (int n = 1; n <= 14; ++n) {
        const unsigned long long top = 1ull << (n - 1);
        for (unsigned long long mask = 0; mask < top; ++mask) {
            std::vector<int> cand{0};
            for (int b = 1; b < n; ++b)
                if ((mask >> (b - 1)) & 1u)
                    cand.push_back(b);
            CHECK(certify_lothaire(cand, n).valid == certify_rules(cand, n).valid);
        }
    }
}

TEST_CASE("named membership examples") {
    CHECK(certify_rules({0, 5, 7}, 8).valid);
    CHECK(certify_rules({0, 3, 6, 8}, 9).valid);
    CHECK(certify_rules({0, 3, 6}, 9).valid);
    CHECK_FALSE(certify_rules({0, 3, 6, 8}, 10).valid);
    CHECK(certify_rules({0, 4, 6}, 7).valid);
    CHECK_FALSE(certify_rules({0, 4, 6}, 8).valid);
    CHECK(certify_rules({0, 11, 14, 17}, 18).valid);
    CHECK(certify_rules({0}, 1).valid);
    CHECK_FALSE(certify_rules({0, 2, 3}, 6).valid);
}

TEST_CASE("malformed candidates report the structural violation") {
    CHECK(certify_rules({1, 3}, 5).violation == Violation::missing_zero);
    CHECK(certify_rules({0, 5}, 5).violation == Violation::out_of_range);
    CHECK(certify_rules({0, -1}, 5).violation == Violation::out_of_range);
}

TEST_CASE("optimized FPR agrees with the direct FPR on all valid-BPR subsets up to n=13") {
    for (int n = 2; n <= 13; ++n) {
        const unsigned long long top = 1ull << (n - 1);
        for (unsigned long long mask = 0; mask < top; ++mask) {
            std::vector<int> cand{0};
            for (int b = 1; b < n; ++b)
                if ((mask >> (b - 1)) & 1u)
                    cand.push_back(b);
            PeriodSet p(n, cand);
            CHECK(check_fpr(p).valid == check_fpr_optimized(p).valid);
        }
    }
}

TEST_CASE("BPR via FW agrees with direct BPR on FPR-closed sets up to n=16") {
    for (int n = 2; n <= 16; ++n) {
        const unsigned long long top = 1ull << (n - 1);
        for (unsigned long long mask = 0; mask < top; ++mask) {
            std::vector<int> cand{0};
            for (int b = 1; b < n; ++b)
                if ((mask >> (b - 1)) & 1u)
                    cand.push_back(b);
            PeriodSet p(n, cand);
            if (!check_fpr(p).valid)
                continue;
            CHECK(check_bpr_direct(p).valid == check_bpr_via_fw(p).valid);
        }
    }
}

TEST_CASE("incremental pair certification matches full certification up to n=18") {
    GammaSet layer = GammaSet::initial();
    for (int n = 2; n <= 18; ++n) {
        for (const auto& parent : layer.sets) {
            auto [keep, extend] = certify_incremental_pair(parent, n);
            CHECK(keep.valid == certify_rules(parent.periods(), n).valid);
            std::vector<int> q = parent.periods();
            q.push_back(n - 1);
            CHECK(extend.valid == certify_rules(q, n).valid);
        }
        layer = incremental_gamma(n, layer, Certifier::rules);
    }
}

TEST_CASE("constructive certification agrees with the rules up to n=12") {
    for (int n = 1; n <= 12; ++n) {
        const unsigned long long top = 1ull << (n - 1);
        for (unsigned long long mask = 0; mask < top; ++mask) {
            std::vector<int> cand{0};
            for (int b = 1; b < n; ++b)
                if ((mask >> (b - 1)) & 1u)
                    cand.push_back(b);
            auto r = certify_constructive(n, cand);
            CHECK(r.cert.valid == certify_rules(cand, n).valid);
            if (r.cert.valid)
                CHECK(period_set_of(r.witness).periods() == cand);
        }
    }
}
