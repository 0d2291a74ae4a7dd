#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dtgw/coeff.hpp"
#include "dtgw/partition.hpp"
#include "dtgw/series.hpp"

namespace dtgw {

/// 3D partition with one infinite leg of cross-section `shape`. Heights
/// are stored for cells outside the shape only (row-major, positive);
/// columns over the shape are implicitly infinite. The renormalized
/// volume counts only the stored boxes.
struct AsymptoticPP {
    Partition shape;
    std::vector<std::pair<Cell, int>> heights;

    long volume() const;
};

/// Validity: keyed cells outside the shape, all heights positive, and
/// heights weakly decreasing in both directions (absent cell = 0).
bool app_valid(const AsymptoticPP& pp);

/// Counts of asymptotic plane partitions with leg `lambda` by renormalized
/// volume 0..max_volume. Serial reference kernel.
std::vector<Int> count_by_volume_serial(const Partition& lambda, int max_volume);

/// Same counts via the frontier-split OpenMP kernel. Exact integer
/// tallies merge commutatively, so results are deterministic.
std::vector<Int> count_by_volume_parallel(const Partition& lambda, int max_volume);

/// Count of asymptotic plane partitions with leg `lambda` and volume
/// exactly m. Memoized; safe to call concurrently.
Int enumerate_app(const Partition& lambda, int m);

/// Visits every such partition of volume exactly m, cells scanned
/// row-major with heights descending.
void for_each_app(const Partition& lambda, int m,
                  const std::function<void(const AsymptoticPP&)>& fn);

struct BoxCount {
    int n;
    int d;
    Int count;
};

/// Number of triples (leg shape of size d, pair of asymptotic partitions)
/// with total renormalized weight n.
BoxCount p_enumerate(int n, int d);

/// v^d coefficient of prod_{m>=1} (1+q^m v)^m through q^N.
TruncSeries pd_product(int d, int N);

/// Generating function sum_n p(n,d) q^n = M(q)^2 P_d(q) through q^N.
TruncSeries p_gf(int d, int N);

/// (-1)^{n-d} p(n,d).
Int signed_local(int n, int d);

/// Checks sum over volumes m <= N of enumerate_app(lambda,m) q^{m+b2}
/// against M(q) s_{lambda^t}(q) through q^{N+b2(lambda)}.
bool vertex_one_leg_check(const Partition& lambda, int N);

}  // namespace dtgw
