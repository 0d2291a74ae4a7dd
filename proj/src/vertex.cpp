#include <gmp.h>

#include <map>
#include <mutex>
#include <stdexcept>

#include "dtgw/schur.hpp"
#include "dtgw/vertex.hpp"

namespace dtgw {

long AsymptoticPP::volume() const {
    long v = 0;
    for (const auto& [cell, h] : heights) v += h;
    return v;
}

bool app_valid(const AsymptoticPP& pp) {
    std::map<Cell, int> hmap;
    for (const auto& [cell, h] : pp.heights) {
        if (h <= 0) return false;
        if (pp.shape.contains(cell.row, cell.col)) return false;
        if (cell.row < 0 || cell.col < 0) return false;
        if (!hmap.emplace(cell, h).second) return false;
    }
    auto height = [&](int i, int j) {
        auto it = hmap.find({i, j});
        return it == hmap.end() ? 0 : it->second;
    };
    // Weak decrease toward larger row/col. Checking each positive cell
    // against its up/left neighbors covers every adjacent pair: pairs
    // whose lower-right member is absent are vacuous.
    for (const auto& [cell, h] : hmap) {
        if (cell.row > 0 && !pp.shape.contains(cell.row - 1, cell.col) &&
            height(cell.row - 1, cell.col) < h)
            return false;
        if (cell.col > 0 && !pp.shape.contains(cell.row, cell.col - 1) &&
            height(cell.row, cell.col - 1) < h)
            return false;
    }
    return true;
}

namespace {

std::mutex memo_mutex;
std::map<std::vector<int>, std::vector<Int>>& memo() {
    static std::map<std::vector<int>, std::vector<Int>> m;
    return m;
}

/// Counts by volume 0..m for leg lambda, cached per shape.
std::vector<Int> counts_for(const Partition& lambda, int m) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo().find(lambda.parts());
        if (it != memo().end() && static_cast<int>(it->second.size()) > m)
            return {it->second.begin(), it->second.begin() + m + 1};
    }
    std::vector<Int> counts = count_by_volume_parallel(lambda, m);
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto& slot = memo()[lambda.parts()];
    if (slot.size() < counts.size()) slot = counts;
    return counts;
}

}  // namespace

Int enumerate_app(const Partition& lambda, int m) {
    if (m < 0) throw std::invalid_argument("enumerate_app: negative volume");
    return counts_for(lambda, m)[static_cast<std::size_t>(m)];
}

BoxCount p_enumerate(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("p_enumerate: negative index");
    Int total = 0;
    for (const Partition& lam : enumerate_partitions(d)) {
        long rem = n - leg_weight(lam);
        if (rem < 0) continue;
        std::vector<Int> cv = counts_for(lam, static_cast<int>(rem));
        for (long a = 0; a <= rem; ++a)
            total += cv[static_cast<std::size_t>(a)] * cv[static_cast<std::size_t>(rem - a)];
    }
    return BoxCount{n, d, std::move(total)};
}

TruncSeries pd_product(int d, int N) {
    if (d < 0 || N < 0) throw std::invalid_argument("pd_product: negative argument");
    std::vector<TruncSeries> acc(static_cast<std::size_t>(d) + 1, TruncSeries(Var::q, N));
    acc[0] = TruncSeries::constant(Var::q, GaussianRational(1L), N);
    for (int m = 1; m <= N; ++m) {
        // (1 + q^m v)^m, v-degree capped at d
        std::vector<TruncSeries> factor;
        for (int k = 0; k <= std::min(m, d); ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                         static_cast<unsigned long>(k));
            factor.push_back(TruncSeries::monomial(Var::q, GaussianRational(std::move(binom)),
                                                   m * k, N));
        }
        std::vector<TruncSeries> next(static_cast<std::size_t>(d) + 1, TruncSeries(Var::q, N));
        for (std::size_t t = 0; t <= static_cast<std::size_t>(d); ++t)
            for (std::size_t k = 0; k < factor.size() && k <= t; ++k)
                next[t] = next[t] + acc[t - k] * factor[k];
        acc.swap(next);
    }
    return acc[static_cast<std::size_t>(d)];
}

TruncSeries p_gf(int d, int N) {
    TruncSeries m = mcmahon(N);
    return m * m * pd_product(d, N);
}

Int signed_local(int n, int d) {
    Int c = p_enumerate(n, d).count;
    return ((n - d) % 2 != 0) ? Int(-c) : c;
}

bool vertex_one_leg_check(const Partition& lambda, int N) {
    if (N < 0) throw std::invalid_argument("vertex_one_leg_check: negative order");
    int shift = static_cast<int>(b2(lambda));
    int order = N + shift;

    std::vector<Int> cv = counts_for(lambda, N);
    std::vector<GaussianRational> lhs(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= N; ++m)
        lhs[static_cast<std::size_t>(m + shift)] =
            GaussianRational(cv[static_cast<std::size_t>(m)]);
    TruncSeries enumerated(Var::q, order, std::move(lhs));

    TruncSeries closed =
        mcmahon(order) * rf_expand(schur_principal_rat(lambda.transpose()), order);
    return enumerated == closed;
}

}  // namespace dtgw
