#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "k3lat/glue.hpp"

namespace k3lat {

namespace detail {
inline int table_k_columns(const std::vector<CosetCountTable>& rows) {
    int k = 7;
    for (const auto& r : rows) k = std::max(k, r.n());
    return k;
}
}  // namespace detail

/// "2n,roots,k=0,...,k=K" followed by one line per row holding only the
/// columns k = 0..n of that row.
inline std::string format_table_csv(const std::vector<CosetCountTable>& rows) {
    std::ostringstream out;
    out << "2n,roots";
    for (int k = 0; k <= detail::table_k_columns(rows); ++k) out << ",k=" << k;
    out << '\n';
    for (const auto& r : rows) {
        out << r.two_n << ',' << r.root_count;
        for (int k = 0; k <= r.n(); ++k) out << ',' << r.column_total(k);
        out << '\n';
    }
    return out.str();
}

/// Markdown table; rows from non-primitive vectors carry a '*' on 2n and a
/// note below the table.
inline std::string format_table_markdown(const std::vector<CosetCountTable>& rows) {
    const int kcols = detail::table_k_columns(rows);
    std::ostringstream out;
    out << "| 2n | roots |";
    for (int k = 0; k <= kcols; ++k) out << " k=" << k << " |";
    out << "\n|---:|---:|";
    for (int k = 0; k <= kcols; ++k) out << "---:|";
    out << '\n';
    bool any_nonprimitive = false;
    for (const auto& r : rows) {
        any_nonprimitive = any_nonprimitive || !r.primitive;
        out << "| " << r.two_n << (r.primitive ? "" : "*") << " | " << r.root_count << " |";
        for (int k = 0; k <= kcols; ++k) {
            if (k <= r.n())
                out << ' ' << r.column_total(k) << " |";
            else
                out << "  |";
        }
        out << '\n';
    }
    if (any_nonprimitive)
        out << "\n\\* non-primitive vector: does not correspond to a primitive embedding of T into II(2,26).\n";
    return out.str();
}

}  // namespace k3lat
