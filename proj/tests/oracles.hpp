#pragma once

// Brute-force reference implementations used only by the test suites.
// Deliberately naive and independent of the library's code paths.

#include <set>
#include <vector>

#include "repdecomp/bigint.hpp"
#include "repdecomp/partition.hpp"

namespace repdecomp::oracle {

/// Transpose via an explicit diagram bitmap.
inline Partition conjugate_by_bitmap(const Partition& p) {
    const int rows = p.length();
    const int cols = p.part(0);
    std::vector<std::vector<bool>> box(static_cast<std::size_t>(cols),
                                       std::vector<bool>(static_cast<std::size_t>(rows), false));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p.part(static_cast<std::size_t>(i)); ++j)
            box[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    std::vector<int> parts;
    for (int j = 0; j < cols; ++j) {
        int run = 0;
        for (int i = 0; i < rows; ++i)
            if (box[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) ++run;
        parts.push_back(run);
    }
    return Partition(parts);
}

/// Reversed complement in a (lambda_1 x m) box, assembled cell by cell.
inline Partition sl_dual_by_complement(const Partition& p, int m) {
    const int width = p.part(0);
    std::vector<int> rows;
    for (int i = m - 1; i >= 0; --i) rows.push_back(width - p.part(static_cast<std::size_t>(i)));
    return Partition(rows);
}

/// All partitions of n (optionally restricted), by descending recursion.
inline void enumerate_partitions(int n, int max_part, int max_parts,
                                 std::vector<int>& stack,
                                 std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(stack);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        stack.push_back(p);
        enumerate_partitions(n - p, p, max_parts - 1, stack, out);
        stack.pop_back();
    }
}

/// p(k, j, n) by explicit enumeration.
inline Int count_in_box(int k, int j, int n) {
    if (n == 0) return 1;
    std::vector<std::vector<int>> all;
    std::vector<int> stack;
    enumerate_partitions(n, k, j, stack, all);
    return Int(all.size());
}

}  // namespace repdecomp::oracle
