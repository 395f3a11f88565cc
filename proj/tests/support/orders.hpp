#pragma once

// A second descending linear extension of the dominance order on a block,
// built greedily: repeatedly emit the lexicographically smallest label among
// those not strictly dominated by anything still waiting.  Tends to disagree
// with the production enumeration order, which is what the order-independence
// tests want.

#include <vector>

#include <qwedge/blocks.hpp>

namespace qwedge::testing {

inline std::vector<MultiPartition> alternate_descending_order(const BlockSpec& spec) {
    std::vector<MultiPartition> pool = enumerate_block(spec);
    std::vector<MultiPartition> out;
    out.reserve(pool.size());
    while (!pool.empty()) {
        int pick = -1;
        for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
            bool dominated = false;
            for (int j = 0; j < static_cast<int>(pool.size()); ++j) {
                if (j == i) continue;
                if (dominance_leq(pool[j], pool[i], spec.charge, spec.n) == DomRel::greater) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated && (pick < 0 || pool[i] < pool[pick])) pick = i;
        }
        QWEDGE_ASSERT(pick >= 0, "dominance order has a cycle");
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return out;
}

} // namespace qwedge::testing
