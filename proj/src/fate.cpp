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
#include "gamma/fate.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gamma/certify.hpp"
#include "gamma/enumerate.hpp"

namespace gammatools {

int next_extension(const PeriodSet& p) {
    const auto& s = p.periods();
    const int birth = p.max_period() + 1;
    int limit = k_infinity;
    // Adjacent pairs suffice: offsets shrink with the index, so the smallest
    // forced value for any pair is reached one step past its larger member.
    for (std::size_t i = s.size() - 1; i >= 1; --i) {
        if (2 * s[i] < birth)
            break; // every remaining candidate falls below the birth length
        const int candidate = s[i] + (s[i] - s[i - 1]);
        if (candidate >= birth)
            limit = std::min(limit, candidate);
    }
    return limit;
}

int recursive_fw_limit(const PeriodSet& p) {
    const auto& s = p.periods();
    const std::size_t k = s.size();
    if (k == 1)
        return k_infinity;
    bool all_multiples = true;
    for (std::size_t i = 2; i < k; ++i)
        if (s[i] % s[1] != 0) {
            all_multiples = false;
            break;
        }
    if (all_multiples)
        return k_infinity;
    if (k == 3)
        return fw_limit(s[1], s[2]);

    int limit = k_infinity;
    // Two smallest nonzero offsets of the nested set starting at s[i].
    int q0 = s[k - 1] - s[k - 2];
    int q1 = 0;
    for (std::size_t i = k - 2; i-- > 0;) {
        const int offset = s[i + 1] - s[i];
        q1 = q0 + offset;
        q0 = offset;
        if (q1 % q0 != 0) {
            const int fw = q0 + q1 - std::gcd(q0, q1);
            if (s[i] + fw < limit)
                limit = s[i] + fw;
        }
    }
    return limit;
}

std::string fate_name(Fate f) {
    switch (f) {
    case Fate::remains: return "remains";
    case Fate::extends: return "extends";
    case Fate::both: return "both";
    case Fate::dies: return "dies";
    case Fate::not_yet_born: return "not-yet-born";
    }
    return "?";
}

Fate classify_fate(const PeriodSet& p, int n) {
    if (n <= p.max_period())
        return Fate::not_yet_born;
    const bool as_is = certify_rules(p.periods(), n).valid;
    std::vector<int> q = p.periods();
    if (q.back() != n - 1)
        q.push_back(n - 1);
    const bool extended = certify_rules(q, n).valid;
    if (as_is && extended && q != p.periods())
        return Fate::both;
    if (as_is)
        return Fate::remains;
    if (extended)
        return Fate::extends;
    return Fate::dies;
}

FateRecord fate_record(const PeriodSet& p) {
    FateRecord r;
    r.periods = p.periods();
    r.birth = p.max_period() + 1;
    r.next_extension = next_extension(p);
    r.rfw = recursive_fw_limit(p);
    const int e_plus_1 = r.next_extension == k_infinity ? k_infinity : r.next_extension + 1;
    const int cease = std::min(e_plus_1, r.rfw);
    r.last_unchanged_length = cease == k_infinity ? k_infinity : cease - 1;
    r.dies_at = r.rfw;
    return r;
}

ParentalTree build_parental_tree(int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("tree depth must be positive");
    ParentalTree tree;
    GammaSet layer = GammaSet::initial();
    tree.layers.push_back({ParentalTree::Node{{0}, {}, false}});

    for (int n = 2; n <= n_max; ++n) {
        GammaSet next;
        next.n = n;
        std::vector<ParentalTree::Node> nodes;
        auto& parents = tree.layers.back();
        for (std::size_t i = 0; i < layer.sets.size(); ++i) {
            auto [keep, extend] = certify_incremental_pair(layer.sets[i], n);
            if (keep.valid) {
                parents[i].children.push_back(nodes.size());
                nodes.push_back({layer.sets[i].periods(), {}, false});
                next.sets.emplace_back(n, layer.sets[i].periods());
            }
            if (extend.valid) {
                std::vector<int> q = layer.sets[i].periods();
                q.push_back(n - 1);
                parents[i].children.push_back(nodes.size());
                nodes.push_back({q, {}, false});
                next.sets.emplace_back(n, std::move(q));
            }
            if (parents[i].children.empty())
                parents[i].dead_end = true;
        }
        tree.layers.push_back(std::move(nodes));
        layer = std::move(next);
    }
    return tree;
}

std::string tree_to_dot(const ParentalTree& tree) {
    std::ostringstream os;
    os << "digraph parental {\n  rankdir=TB;\n  node [shape=box];\n";
    auto node_id = [](std::size_t layer, std::size_t idx) {
        return "n" + std::to_string(layer + 1) + "_" + std::to_string(idx);
    };
    for (std::size_t l = 0; l < tree.layers.size(); ++l) {
        os << "  subgraph cluster_" << l + 1 << " {\n    label=\"n=" << l + 1 << "\";\n";
        for (std::size_t i = 0; i < tree.layers[l].size(); ++i) {
            const auto& node = tree.layers[l][i];
            std::string label;
            for (std::size_t j = 0; j < node.periods.size(); ++j) {
                if (j)
                    label.push_back(',');
                label += std::to_string(node.periods[j]);
            }
            os << "    " << node_id(l, i) << " [label=\"" << label << "\"";
            if (node.dead_end)
                os << " peripheries=2";
            os << "];\n";
        }
        os << "  }\n";
    }
    for (std::size_t l = 0; l + 1 < tree.layers.size(); ++l)
        for (std::size_t i = 0; i < tree.layers[l].size(); ++i)
            for (std::size_t child : tree.layers[l][i].children)
                os << "  " << node_id(l, i) << " -> " << node_id(l + 1, child) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace gammatools
