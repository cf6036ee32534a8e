#pragma once

#include <optional>
#include <vector>

#include "k3lat/glue.hpp"

namespace k3lat {

/// Published root and coset counts for 2n = 2..14, in published row order.
struct ReferenceRow {
    int two_n;
    int roots;
    std::vector<std::uint64_t> counts;  // k = 0..n
    bool primitive;
};

inline const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {2, 126, {1, 56}, true},
        {4, 84, {1, 64, 14}, true},
        {6, 74, {1, 54, 27, 2}, true},
        {8, 126, {1, 0, 56, 0, 1}, false},
        {8, 56, {1, 56, 28, 8, 0}, true},
        {10, 60, {1, 44, 33, 12, 1, 0}, true},
        {12, 46, {1, 48, 30, 16, 3, 48, 10}, true},
        {14, 44, {1, 42, 35, 14, 7, 0, 21, 2}, true},
        {14, 72, {1, 28, 27, 27, 1, 1, 27, 0}, true},
    };
    return rows;
}

struct ReferenceMatch {
    std::size_t index = 0;          // position in reference_rows()
    std::vector<int> differing_k;  // columns whose counts disagree
    bool matches() const { return differing_k.empty(); }
};

/// Matches a computed row to the published row with the same 2n and root
/// count (root counts distinguish the orbits of equal norm).
inline std::optional<ReferenceMatch> match_reference(const CosetCountTable& row) {
    const auto& refs = reference_rows();
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (refs[i].two_n != row.two_n || Integer(refs[i].roots) != row.root_count) continue;
        ReferenceMatch m;
        m.index = i;
        for (int k = 0; k <= row.n(); ++k)
            if (static_cast<std::size_t>(k) >= refs[i].counts.size() || refs[i].counts[k] != row.column_total(k))
                m.differing_k.push_back(k);
        return m;
    }
    return std::nullopt;
}

}  // namespace k3lat
