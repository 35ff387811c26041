#pragma once

#include <vector>

namespace rigidwitt {

namespace detail {

template <typename Visit>
void subspaces_with_pivots(const std::vector<int>& positions, std::vector<int>& pivots, std::size_t next,
                           int remaining, Visit& visit) {
    if (remaining == 0) {
        // Free positions of row j: non-pivot positions above its pivot.
        std::vector<std::vector<int>> free(pivots.size());
        int total = 0;
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            for (std::size_t q = pivots[j] + 1; q < positions.size(); ++q) {
                bool is_pivot = false;
                for (int p : pivots) is_pivot = is_pivot || p == static_cast<int>(q);
                if (!is_pivot) free[j].push_back(positions[q]);
            }
            total += static_cast<int>(free[j].size());
        }
        std::vector<ClassBits> basis(pivots.size());
        for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << total); ++assignment) {
            int used = 0;
            for (std::size_t j = 0; j < pivots.size(); ++j) {
                ClassBits row = ClassBits{1} << positions[pivots[j]];
                for (int bit : free[j]) {
                    if ((assignment >> used++) & 1u) row |= ClassBits{1} << bit;
                }
                basis[j] = row;
            }
            visit(static_cast<const std::vector<ClassBits>&>(basis));
        }
        return;
    }
    for (std::size_t i = next; i + remaining <= positions.size(); ++i) {
        pivots.push_back(static_cast<int>(i));
        subspaces_with_pivots(positions, pivots, i + 1, remaining - 1, visit);
        pivots.pop_back();
    }
}

}  // namespace detail

template <typename Visit>
void for_each_subspace(ClassBits mask, int max_rank, Visit&& visit) {
    std::vector<int> positions;
    for (int bit = 0; bit < 32; ++bit) {
        if ((mask >> bit) & 1u) positions.push_back(bit);
    }
    for (int rank = 0; rank <= max_rank && rank <= static_cast<int>(positions.size()); ++rank) {
        std::vector<int> pivots;
        detail::subspaces_with_pivots(positions, pivots, 0, rank, visit);
    }
}

}  // namespace rigidwitt
