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

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "gamma/enumerate.hpp"
#include "gamma/oracle.hpp"
#include "naive.hpp"

using namespace gammatools;
namespace fs = std::filesystem;

TEST_CASE("brute force matches the naive definition up to n=14") {
    for (int n = 1; n <= 14; ++n) {
        auto truth = naive::gamma_definition(n);
        auto g = brute_force_gamma(n);
        REQUIRE(g.kappa() == truth.size());
        for (const auto& p : g.sets)
            CHECK(truth.count(p.periods()) == 1);
        for (std::size_t i = 1; i < g.sets.size(); ++i)
            CHECK(canonical_less(g.sets[i - 1], g.sets[i]));
    }
}

TEST_CASE("larger alphabets add no period sets") {
    for (int n = 1; n <= 9; ++n) {
        auto two = brute_force_gamma(n, 2);
        auto three = brute_force_gamma(n, 3);
        REQUIRE(two.kappa() == three.kappa());
        for (std::size_t i = 0; i < two.sets.size(); ++i)
            CHECK(two.sets[i] == three.sets[i]);
    }
}

TEST_CASE("small oracle facts") {
    auto g3 = brute_force_gamma(3);
    REQUIRE(g3.kappa() == 3);
    CHECK(g3.sets[0].periods() == std::vector<int>{0});
    CHECK(g3.sets[1].periods() == std::vector<int>{0, 2});
    CHECK(g3.sets[2].periods() == std::vector<int>{0, 1, 2});
    auto g8 = brute_force_gamma(8);
    bool found = false;
    for (const auto& p : g8.sets)
        found = found || p.periods() == std::vector<int>{0, 5, 7};
    CHECK(found);
}

TEST_CASE("population counts") {
    // length 2: aa/bb have periods {0,1}, ab/ba have {0}
    CHECK(population_count(2, PeriodSet(2, {0, 1})) == 2);
    CHECK(population_count(2, PeriodSet(2, {0})) == 2);
    long long total = 0;
    for (const auto& p : brute_force_gamma(6).sets)
        total += population_count(6, p);
    CHECK(total == 64);
}

TEST_CASE("oracle guard") {
    CHECK_THROWS_AS(brute_force_gamma(29), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_gamma(0), std::invalid_argument);
}

TEST_CASE("verification in oracle mode") {
    fs::path dir = fs::temp_directory_path() / "gamma_test_verify";
    fs::remove_all(dir);
    fs::create_directories(dir);
    enumerate_range(10, dir);
    auto good = verify_gamma_file(gamma_file_name(dir, 10), 10, VerifyMode::oracle);
    CHECK(good.pass);
    CHECK(good.summary(10) == "VERIFY PASS n=10 checked=" + std::to_string(good.checked));

    fs::path bad = dir / "tampered.gamma";
    {
        GammaSet g = read_gamma_file(gamma_file_name(dir, 10));
        g.sets.erase(g.sets.begin() + 3);
        std::ofstream out(bad, std::ios::binary);
        out << "# gamma v1\nn=10\ncount=" << g.kappa() << "\n";
        for (const auto& p : g.sets)
            out << p.to_line() << "\n";
    }
    auto fail = verify_gamma_file(bad, 10, VerifyMode::oracle);
    CHECK_FALSE(fail.pass);
    CHECK_FALSE(fail.findings.empty());
}

TEST_CASE("verification in witness mode") {
    fs::path dir = fs::temp_directory_path() / "gamma_test_verify_witness";
    fs::remove_all(dir);
    fs::create_directories(dir);
    enumerate_range(20, dir);
    auto good = verify_gamma_file(gamma_file_name(dir, 20), 20, VerifyMode::witness);
    CHECK(good.pass);
    CHECK(good.checked > 0);

    fs::path alone = dir / "solo";
    fs::create_directories(alone);
    fs::copy_file(gamma_file_name(dir, 18), gamma_file_name(alone, 18));
    CHECK(verify_gamma_file(gamma_file_name(alone, 18), 18, VerifyMode::witness).pass);

    fs::path bad = dir / "bad";
    fs::create_directories(bad);
    {
        std::ofstream out(gamma_file_name(bad, 10), std::ios::binary);
        out << "# gamma v1\nn=10\ncount=2\n0\n0,3,6,8\n";
    }
    auto fail = verify_gamma_file(gamma_file_name(bad, 10), 10, VerifyMode::witness);
    CHECK_FALSE(fail.pass);
    CHECK_FALSE(fail.findings.empty());
}
