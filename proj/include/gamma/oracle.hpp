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
#ifndef GAMMA_ORACLE_HPP
#define GAMMA_ORACLE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gamma/enumerate.hpp"
#include "gamma/period_set.hpp"

namespace gammatools {

inline constexpr int k_oracle_guard = 28;

/// Ground truth by exhaustion: the period sets of all words of length n.
/// The first symbol is fixed (relabeling preserves equality patterns).
/// Guarded at n = 28 unless force is set.
GammaSet brute_force_gamma(int n, int alphabet_size = 2, bool force = false);

/// Number of words of length n whose period set is exactly p.
long long population_count(int n, const PeriodSet& p, int alphabet_size = 2, bool force = false);

struct VerifyReport {
    bool pass = false;
    std::size_t checked = 0;
    std::vector<std::string> findings;

    std::string summary(int n) const;
};

enum class VerifyMode { oracle, witness };

/// oracle mode: byte-level comparison with the brute-force enumeration.
/// witness mode: per line, realization succeeds and round-trips; projection
/// into the (n-1)-file is checked when that file is present.
VerifyReport verify_gamma_file(const std::filesystem::path& path, int n, VerifyMode mode);

} // namespace gammatools

#endif
