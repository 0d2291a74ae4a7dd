#include <omp.h>

#include <algorithm>
#include <utility>

#include "dtgw/vertex.hpp"
#include "vertex_internal.hpp"

namespace dtgw {

namespace {

/// Partial assignment: heights fixed for cells[0..h.size()), budget left.
struct State {
    int rem;
    std::vector<int> h;
};

}  // namespace

std::vector<Int> count_by_volume_parallel(const Partition& lambda, int max_volume) {
    detail::Region region = detail::build_region(lambda, max_volume);
    std::vector<Int> counts(static_cast<std::size_t>(max_volume) + 1, Int(0));

    // Breadth-first expansion until the frontier is wide enough to split.
    std::vector<State> frontier{{max_volume, {}}};
    std::size_t target = 8 * static_cast<std::size_t>(omp_get_max_threads());
    while (frontier.size() < target) {
        std::vector<State> next;
        bool expanded = false;
        for (State& st : frontier) {
            std::size_t k = st.h.size();
            if (k == region.cells.size()) {
                ++counts[static_cast<std::size_t>(max_volume - st.rem)];
                continue;
            }
            if (st.rem == 0) {
                ++counts[static_cast<std::size_t>(max_volume)];
                continue;
            }
            expanded = true;
            int bound = st.rem;
            if (region.up[k] >= 0)
                bound = std::min(bound, st.h[static_cast<std::size_t>(region.up[k])]);
            if (region.left[k] >= 0)
                bound = std::min(bound, st.h[static_cast<std::size_t>(region.left[k])]);
            for (int v = bound; v >= 0; --v) {
                State child{st.rem - v, st.h};
                child.h.push_back(v);
                next.push_back(std::move(child));
            }
        }
        frontier.swap(next);
        if (!expanded) break;
    }

    int threads = omp_get_max_threads();
    std::vector<std::vector<Int>> local(
        static_cast<std::size_t>(threads),
        std::vector<Int>(static_cast<std::size_t>(max_volume) + 1, Int(0)));

#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < frontier.size(); ++s) {
        std::vector<Int>& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
        std::vector<int> h = frontier[s].h;
        std::size_t k = h.size();
        h.resize(region.cells.size(), 0);
        detail::tally_from(region, k, frontier[s].rem, h, max_volume, mine);
    }

    // exact integer adds commute, so the merge order cannot matter
    for (const auto& l : local)
        for (std::size_t v = 0; v < counts.size(); ++v) counts[v] += l[v];
    return counts;
}

}  // namespace dtgw
