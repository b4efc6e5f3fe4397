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
#ifndef GAMMA_FATE_HPP
#define GAMMA_FATE_HPP

#include <string>
#include <vector>

#include "gamma/period_set.hpp"

namespace gammatools {

/// Smallest FPR-forced period beyond max(P); the extension with that period
/// becomes compulsory at length e(P)+1. k_infinity for {0}.
int next_extension(const PeriodSet& p);

/// First length at which some nested pair violates the Fine and Wilf
/// condition, forcing the set to die. k_infinity when the basic period
/// divides every period.
int recursive_fw_limit(const PeriodSet& p);

enum class Fate { remains, extends, both, dies, not_yet_born };
std::string fate_name(Fate f);

/// Fate of P at length n, from membership of P and P union {n-1} in Gamma(n).
Fate classify_fate(const PeriodSet& p, int n);

/// Birth/extension/death summary of one period set.
struct FateRecord {
    std::vector<int> periods;
    int birth;                 // max(P)+1
    int next_extension;        // e(P), or k_infinity
    int rfw;                   // rfw(P), or k_infinity
    int last_unchanged_length; // min(e(P)+1, rfw(P)) - 1
    int dies_at;               // rfw(P)
};

FateRecord fate_record(const PeriodSet& p);

/// Layered tree of the parental relation, Gamma(1) .. Gamma(n_max).
struct ParentalTree {
    struct Node {
        std::vector<int> periods;
        std::vector<std::size_t> children; // indices into the next layer
        bool dead_end = false;             // outdegree 0 in a non-final layer
    };
    std::vector<std::vector<Node>> layers; // layers[i] holds Gamma(i+1)
};

ParentalTree build_parental_tree(int n_max);

/// DOT rendering: one cluster per layer, dead ends drawn with peripheries=2.
std::string tree_to_dot(const ParentalTree& tree);

} // namespace gammatools

#endif
