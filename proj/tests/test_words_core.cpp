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

#include <stdexcept>

#include "gamma/period_set.hpp"
#include "gamma/word.hpp"
#include "naive.hpp"

using namespace gammatools;

TEST_CASE("word text round trip") {
    Word w = Word::from_text("abaab");
    CHECK(w.size() == 5);
    CHECK(w.to_text() == "abaab");
    CHECK(w[0] == 0);
    CHECK(w[1] == 1);
    CHECK_THROWS_AS(Word::from_text("ab1"), std::invalid_argument);
}

TEST_CASE("border array of abaababaab") {
    Word w = Word::from_text("abaababaab");
    auto ba = border_array(w);
    REQUIRE(ba.size() == 10);
    CHECK(ba[0] == 0);
    CHECK(ba[2] == 1);
    CHECK(ba[9] == 5);
}

TEST_CASE("has_period matches the definition on all binary words up to 10") {
    for (int n = 1; n <= 10; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> syms(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                syms[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
            Word w(syms, 2);
            for (int p = 0; p <= n; ++p)
                CHECK(has_period(w, p) == naive::has_period_definition(w, p));
        }
}

TEST_CASE("period_set_of matches the definition on all binary words up to 12") {
    for (int n = 1; n <= 12; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> syms(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                syms[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
            Word w(syms, 2);
            CHECK(period_set_of(w).periods() == naive::period_set_definition(w));
        }
}

TEST_CASE("named period sets") {
    CHECK(period_set_of(Word::from_text("abaabaaba")).periods() == std::vector<int>{0, 3, 6, 8});
    CHECK(period_set_of(Word::from_text("aabaabaab")).periods() == std::vector<int>{0, 3, 6});
    CHECK(period_set_of(Word::from_text("abaaaaba")).periods() == std::vector<int>{0, 5, 7});
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(Word::from_text("aab")));
    CHECK(is_primitive(Word::from_text("a")));
    CHECK_FALSE(is_primitive(Word::from_text("abab")));
    CHECK_FALSE(is_primitive(Word::from_text("aaa")));
    CHECK(is_primitive(Word::from_text("aba")));
    CHECK_THROWS_AS(is_primitive(Word()), std::invalid_argument);
}

TEST_CASE("merge") {
    Word x = Word::from_text("abaab");
    Word y = Word::from_text("abba");
    auto r = merge(x, y, 2);
    REQUIRE(r.ok);
    CHECK(r.word.to_text() == "abaabba");
    auto bad = merge(x, Word::from_text("baab"), 2);
    CHECK_FALSE(bad.ok);
    CHECK(bad.mismatch_pos >= 0);
}

TEST_CASE("period set construction validates its input") {
    CHECK_THROWS_AS(PeriodSet(5, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodSet(5, {0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodSet(5, {0, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodSet(5, {0, 3, 2}), std::invalid_argument);
}

TEST_CASE("autocorrelation round trip") {
    PeriodSet p(6, {0, 3, 5});
    CHECK(p.to_autocorrelation() == "100101");
    CHECK(PeriodSet::from_autocorrelation("100101") == p);
    CHECK(p.contains(3));
    CHECK_FALSE(p.contains(4));
    CHECK(p.basic_period() == 3);
    CHECK(PeriodSet(6, {0}).basic_period() == 6);
}

TEST_CASE("nested and extended sets") {
    PeriodSet p(9, {0, 3, 6, 8});
    PeriodSet q = p.nested(3);
    CHECK(q.length() == 6);
    CHECK(q.periods() == std::vector<int>{0, 3, 5});
    CHECK_THROWS_AS(p.nested(4), std::invalid_argument);
    PeriodSet prev(8, {0, 3, 6});
    CHECK(prev.extended(7).periods() == std::vector<int>{0, 3, 6, 7});
}

TEST_CASE("line format round trip") {
    PeriodSet p(8, {0, 5, 7});
    CHECK(p.to_line() == "0,5,7");
    CHECK(PeriodSet::parse_line("0,5,7", 8) == p);
    CHECK_THROWS_AS(PeriodSet::parse_line("0,5,x", 8), std::invalid_argument);
}

TEST_CASE("canonical order follows the autocorrelation strings") {
    // Gamma(3) in order: {0} (100), {0,2} (101), {0,1,2} (111)
    std::vector<std::vector<int>> expect = {{0}, {0, 2}, {0, 1, 2}};
    for (std::size_t i = 0; i < expect.size(); ++i)
        for (std::size_t j = 0; j < expect.size(); ++j)
            CHECK(canonical_less(expect[i], expect[j]) == (i < j));
}

TEST_CASE("fine and wilf limit") {
    CHECK(fw_limit(3, 8) == 10);
    CHECK(fw_limit(4, 6) == 8);
    CHECK(fw_limit(2, 4) == k_infinity);
    CHECK(format_length(k_infinity) == "inf");
    CHECK(format_length(12) == "12");
}
