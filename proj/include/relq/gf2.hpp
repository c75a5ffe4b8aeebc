#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relq/bits.hpp"
#include "relq/errors.hpp"

namespace relq {

/// Rows collected from Simon measurements: n-bit vectors, each orthogonal to
/// the hidden string over GF(2).
struct Gf2System {
    std::vector<std::uint64_t> rows;
};

inline int gf2_rank(std::vector<std::uint64_t> rows, int n) {
    int rank = 0;
    for (int col = n - 1; col >= 0; --col) {
        const std::uint64_t pivot_mask = std::uint64_t{1} << col;
        std::size_t pivot_row = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r) {
            if (rows[r] & pivot_mask) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != static_cast<std::size_t>(rank) && (rows[r] & pivot_mask))
                rows[r] ^= rows[static_cast<std::size_t>(rank)];
        }
        ++rank;
    }
    return rank;
}

/// Gaussian elimination over GF(2). With rank n-1 the nullspace is spanned by
/// a single nonzero vector, which is the hidden string; lower rank cannot pin
/// it down, and full rank contradicts the existence of a nonzero solution.
///
/// Returns the hidden string, or nullopt when the rows are insufficient.
/// Throws ContradictorySystem when rank == n.
inline std::optional<std::uint64_t> gf2_solve(const Gf2System &system, int n) {
    std::vector<std::uint64_t> rows = system.rows;

    // Reduced row echelon form, pivoting from the most significant column.
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = n - 1; col >= 0; --col) {
        const std::uint64_t pivot_mask = std::uint64_t{1} << col;
        std::size_t pivot_row = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r) {
            if (rows[r] & pivot_mask) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != static_cast<std::size_t>(rank) && (rows[r] & pivot_mask))
                rows[r] ^= rows[static_cast<std::size_t>(rank)];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    if (rank == n)
        throw ContradictorySystem("rows have full rank " + std::to_string(n) +
                                  "; no nonzero string is orthogonal to all of them");
    if (rank < n - 1) return std::nullopt;

    // One free column: set it to 1 and read the pivot values off the RREF.
    std::uint64_t free_mask = (std::uint64_t{1} << n) - 1;
    for (int col : pivot_cols) free_mask &= ~(std::uint64_t{1} << col);
    std::uint64_t k = free_mask; // exactly one bit set
    for (int r = 0; r < rank; ++r) {
        if (rows[static_cast<std::size_t>(r)] & free_mask)
            k |= std::uint64_t{1} << pivot_cols[static_cast<std::size_t>(r)];
    }
    return k;
}

} // namespace relq
