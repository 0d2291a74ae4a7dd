#pragma once

#include <cstddef>
#include <vector>

#include "dtgw/coeff.hpp"
#include "dtgw/partition.hpp"

namespace dtgw::detail {

/// Cells that can carry positive height in a volume-<=M partition with
/// leg `lambda`: outside the shape, fewer than M steps past the row end
/// and past the column end. Row-major; up/left give the index of the
/// in-region neighbor constraining each cell, -1 when the neighbor lies
/// in the shape or off the grid (no constraint).
struct Region {
    std::vector<Cell> cells;
    std::vector<int> up;
    std::vector<int> left;
};

Region build_region(const Partition& lambda, int max_volume);

/// Depth-first tally over heights of cells[k..] given the prefix in h
/// and remaining volume budget; one increment per completed assignment,
/// indexed by total volume used.
void tally_from(const Region& region, std::size_t k, int rem, std::vector<int>& h,
                int max_volume, std::vector<Int>& counts);

}  // namespace dtgw::detail
