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
#ifndef GAMMA_REALIZE_HPP
#define GAMMA_REALIZE_HPP

#include <string>
#include <vector>

#include "gamma/certify.hpp"
#include "gamma/period_set.hpp"
#include "gamma/word.hpp"

namespace gammatools {

/// One iteration of the realization loop, ordered by decreasing period.
struct TraceRow {
    int period;
    int length;
    int inner_period;
    std::string case_tag; // "base", "1" or "2"
    Word suffix;          // empty on the failing row
    bool valid;
};

struct Realization {
    Word word; // empty means epsilon: the set is not realizable
    std::vector<TraceRow> trace;

    bool realizable() const { return !word.empty(); }
};

/// Builds a binary word of length n realizing the candidate set, or epsilon
/// when the set is not a period set. Malformed input (unsorted, missing
/// zero, out of range) throws std::invalid_argument instead.
Realization binary_realize(int n, const std::vector<int>& candidate);

/// Variant that introduces a fresh symbol wherever the construction allows
/// one, maximizing the number of distinct symbols. Same validity outcome.
Realization multi_symbol_realize(int n, const std::vector<int>& candidate);

struct ConstructiveResult {
    CertResult cert;
    Word witness; // empty iff invalid
};

/// Certification through realization: valid iff a witness is produced and
/// its recomputed period set equals the candidate.
ConstructiveResult certify_constructive(int n, const std::vector<int>& candidate);

/// Fixed-width text table mirroring the trace columns.
std::string render_trace(const std::vector<TraceRow>& rows);

} // namespace gammatools

#endif
