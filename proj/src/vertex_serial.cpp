#include <algorithm>
#include <map>

#include "dtgw/vertex.hpp"
#include "vertex_internal.hpp"

namespace dtgw {

namespace detail {

Region build_region(const Partition& lambda, int max_volume) {
    Region r;
    if (max_volume == 0) return r;
    Partition t = lambda.transpose();
    std::map<Cell, int> index;
    int row_limit = lambda.rows() + max_volume;
    for (int i = 0; i < row_limit; ++i) {
        for (int j = lambda.part(i); j < lambda.part(i) + max_volume; ++j) {
            if (i - t.part(j) >= max_volume) break;
            index[{i, j}] = static_cast<int>(r.cells.size());
            r.cells.push_back({i, j});
        }
    }
    r.up.assign(r.cells.size(), -1);
    r.left.assign(r.cells.size(), -1);
    for (std::size_t k = 0; k < r.cells.size(); ++k) {
        Cell c = r.cells[k];
        if (c.row > 0 && !lambda.contains(c.row - 1, c.col))
            r.up[k] = index.at({c.row - 1, c.col});
        if (c.col > 0 && !lambda.contains(c.row, c.col - 1))
            r.left[k] = index.at({c.row, c.col - 1});
    }
    return r;
}

void tally_from(const Region& region, std::size_t k, int rem, std::vector<int>& h,
                int max_volume, std::vector<Int>& counts) {
    if (k == region.cells.size()) {
        ++counts[static_cast<std::size_t>(max_volume - rem)];
        return;
    }
    if (rem == 0) {
        // remaining cells forced to zero height
        ++counts[static_cast<std::size_t>(max_volume)];
        return;
    }
    int bound = rem;
    if (region.up[k] >= 0) bound = std::min(bound, h[static_cast<std::size_t>(region.up[k])]);
    if (region.left[k] >= 0)
        bound = std::min(bound, h[static_cast<std::size_t>(region.left[k])]);
    for (int v = bound; v >= 0; --v) {
        h[k] = v;
        tally_from(region, k + 1, rem - v, h, max_volume, counts);
    }
    h[k] = 0;
}

}  // namespace detail

std::vector<Int> count_by_volume_serial(const Partition& lambda, int max_volume) {
    detail::Region region = detail::build_region(lambda, max_volume);
    std::vector<Int> counts(static_cast<std::size_t>(max_volume) + 1, Int(0));
    std::vector<int> h(region.cells.size(), 0);
    detail::tally_from(region, 0, max_volume, h, max_volume, counts);
    return counts;
}

namespace {

void visit_from(const detail::Region& region, std::size_t k, int rem, std::vector<int>& h,
                const Partition& shape,
                const std::function<void(const AsymptoticPP&)>& fn) {
    if (k == region.cells.size() || rem == 0) {
        if (rem != 0) return;
        AsymptoticPP pp{shape, {}};
        for (std::size_t i = 0; i < k; ++i)
            if (h[i] > 0) pp.heights.emplace_back(region.cells[i], h[i]);
        fn(pp);
        return;
    }
    int bound = rem;
    if (region.up[k] >= 0) bound = std::min(bound, h[static_cast<std::size_t>(region.up[k])]);
    if (region.left[k] >= 0)
        bound = std::min(bound, h[static_cast<std::size_t>(region.left[k])]);
    for (int v = bound; v >= 0; --v) {
        h[k] = v;
        visit_from(region, k + 1, rem - v, h, shape, fn);
    }
    h[k] = 0;
}

}  // namespace

void for_each_app(const Partition& lambda, int m,
                  const std::function<void(const AsymptoticPP&)>& fn) {
    detail::Region region = detail::build_region(lambda, m);
    std::vector<int> h(region.cells.size(), 0);
    visit_from(region, 0, m, h, lambda, fn);
}

}  // namespace dtgw
