#pragma once

// Partitions, multipartitions, multicharges: the labelling side of the basis.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "laurent.hpp"

namespace qwedge {

/// Weakly decreasing list of positive parts; the empty partition is {}.
using Partition = std::vector<int>;
/// One partition per sector, outer size = level.
using MultiPartition = std::vector<Partition>;
/// One integer charge per sector, size = level.
using MultiCharge = std::vector<int>;

inline void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw InputError("partition parts must be positive (trailing zeros are implicit)");
        if (i > 0 && p[i] > p[i - 1]) throw InputError("partition parts must be weakly decreasing");
    }
}

inline void validate_multipartition(const MultiPartition& mp, int level) {
    if (static_cast<int>(mp.size()) != level)
        throw InputError("multipartition has " + std::to_string(mp.size()) +
                         " components, expected level = " + std::to_string(level));
    for (const auto& p : mp) validate_partition(p);
}

inline int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline int multipartition_size(const MultiPartition& mp) {
    int total = 0;
    for (const auto& p : mp) total += partition_size(p);
    return total;
}

inline bool is_empty_multipartition(const MultiPartition& mp) {
    return std::all_of(mp.begin(), mp.end(), [](const Partition& p) { return p.empty(); });
}

inline MultiPartition empty_multipartition(int level) {
    return MultiPartition(static_cast<std::size_t>(level));
}

inline int charge_sum(const MultiCharge& s) {
    return std::accumulate(s.begin(), s.end(), 0);
}

// ---------------------------------------------------------------------------
// Text and JSON forms.
//
// A multipartition prints as nested brackets, components in sector order:
// "[[2,1],[],[1]]".  A multicharge prints comma-separated: "3,-3".
// ---------------------------------------------------------------------------

inline std::string partition_to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out + "]";
}

inline std::string to_string(const MultiPartition& mp) {
    std::string out = "[";
    for (std::size_t i = 0; i < mp.size(); ++i) {
        if (i) out += ',';
        out += partition_to_string(mp[i]);
    }
    return out + "]";
}

inline std::string charge_to_string(const MultiCharge& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

inline nlohmann::ordered_json to_json(const MultiPartition& mp) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : mp) arr.push_back(p);
    return arr;
}

inline MultiPartition multipartition_from_json(const nlohmann::json& j, int level) {
    if (!j.is_array()) throw InputError("multipartition must be a JSON array of arrays");
    MultiPartition mp;
    for (const auto& comp : j) {
        if (!comp.is_array()) throw InputError("each multipartition component must be a JSON array");
        Partition p;
        for (const auto& part : comp) {
            if (!part.is_number_integer()) throw InputError("partition parts must be integers");
            p.push_back(part.get<int>());
        }
        mp.push_back(std::move(p));
    }
    validate_multipartition(mp, level);
    return mp;
}

/// Parse "3,-3" (or a single integer for level one).
inline MultiCharge multicharge_from_string(const std::string& text, int level) {
    MultiCharge s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            s.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad charge entry '" + piece + "' in \"" + text + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(s.size()) != level)
        throw InputError("charge \"" + text + "\" has " + std::to_string(s.size()) +
                         " entries, expected level = " + std::to_string(level));
    return s;
}

} // namespace qwedge
