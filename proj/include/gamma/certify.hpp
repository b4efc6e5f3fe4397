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
#ifndef GAMMA_CERTIFY_HPP
#define GAMMA_CERTIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "gamma/period_set.hpp"

namespace gammatools {

enum class Violation {
    none,
    missing_zero,
    out_of_range,
    fpr,
    bpr,
    lothaire_a,
    lothaire_b,
};

std::string violation_name(Violation v);

/// Outcome of a membership test, with the first witnessing pair/index in
/// scan order when invalid.
struct CertResult {
    bool valid = true;
    Violation violation = Violation::none;
    int p = -1; // witnessing pair, when meaningful
    int q = -1;
    int index = -1; // offending value (rule checks) or index h (Lothaire)

    static CertResult ok() { return {}; }
    static CertResult fail(Violation v, int p = -1, int q = -1, int index = -1) {
        return {false, v, p, q, index};
    }
};

/// Forward propagation rule: for every pair p < q, every propagated value
/// p + i(q-p) below n is a member. Direct reference implementation.
CertResult check_fpr(const PeriodSet& p);
/// FPR restricted to leftmost pairs with pairwise non-multiple offsets;
/// must agree with check_fpr.
CertResult check_fpr_optimized(const PeriodSet& p);

/// Backward propagation rule, checked directly from its definition.
CertResult check_bpr_direct(const PeriodSet& p);
/// BPR via the Fine and Wilf condition on the two smallest nonzero periods
/// of every nested set. O(|P|). Assumes the FPR holds.
CertResult check_bpr_via_fw(const PeriodSet& p);

/// Rule-based characterization for an arbitrary candidate set.
CertResult certify_rules(const std::vector<int>& candidate, int n);

/// Difference-sequence characterization for an arbitrary candidate set
/// (the trivial period n is appended internally).
CertResult certify_lothaire(const std::vector<int>& candidate, int n);

/// Combined O(|P|) certification of both candidates P and P union {n-1},
/// for a parent known to belong to Gamma(n-1).
std::pair<CertResult, CertResult> certify_incremental_pair(const PeriodSet& parent, int n);

} // namespace gammatools

#endif
