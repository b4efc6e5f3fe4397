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
#ifndef GAMMA_ENUMERATE_HPP
#define GAMMA_ENUMERATE_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gamma/certify.hpp"
#include "gamma/period_set.hpp"

namespace gammatools {

/// The full collection Gamma(n), canonically ordered (autocorrelation order).
struct GammaSet {
    int n = 1;
    std::vector<PeriodSet> sets;

    std::size_t kappa() const { return sets.size(); }
    static GammaSet initial(); // Gamma(1) = { {0} }
};

enum class Certifier { rules, lothaire, pair, constructive };

Certifier certifier_from_name(const std::string& name);

/// Certifies both candidates P and P union {n-1} with the chosen function.
std::pair<CertResult, CertResult> certify_candidates(const PeriodSet& parent, int n, Certifier c);

/// One incremental step: Gamma(n) from Gamma(n-1). Identical output for
/// every certifier.
GammaSet incremental_gamma(int n, const GammaSet& prev, Certifier c = Certifier::pair);

/// Same step, also reporting the parents with no surviving form at length n.
std::pair<GammaSet, std::vector<PeriodSet>> incremental_gamma_with_dying(int n, const GammaSet& prev);

/// { P minus {n-1} : P in g }, deduplicated; equals Gamma(n-1) minus the
/// sets dying at n.
GammaSet project_down(const GammaSet& g);

struct GammaStats {
    std::map<int, long long> by_basic_period; // key n for the {0} set
    std::map<int, long long> by_weight;
};

GammaStats compute_stats(const GammaSet& g);
std::string stats_to_csv(const GammaStats& s);

/// .gamma file format (bit-exact):
///   # gamma v1
///   n=<N>
///   count=<kappa>
///   one comma-joined period set per line, canonical order, LF endings.
void write_gamma_file(const std::filesystem::path& path, const GammaSet& g);
GammaSet read_gamma_file(const std::filesystem::path& path);
/// Streaming variants that never materialize the whole set.
void for_each_gamma_line(const std::filesystem::path& path,
                         const std::function<void(const PeriodSet&, std::size_t line_no)>& fn);
int gamma_file_length(const std::filesystem::path& path); // the n= header field
std::filesystem::path gamma_file_name(const std::filesystem::path& dir, int n);
GammaStats stats_of_file(const std::filesystem::path& path);

struct EnumProgress {
    int n = 0;
    std::size_t kappa = 0;
    std::size_t dying = 0;
};

/// Streams Gamma files for n = 1..n_max into out_dir, resuming from the
/// highest valid file already present (in from_dir if given, else out_dir).
/// Workers certify contiguous chunks of the parent file; memory per worker
/// stays O(n) beyond the I/O buffers.
void enumerate_range(int n_max, const std::filesystem::path& out_dir,
                     Certifier c = Certifier::pair, int jobs = 1,
                     const std::filesystem::path& from_dir = {},
                     const std::function<void(const EnumProgress&)>& on_length = {});

} // namespace gammatools

#endif
