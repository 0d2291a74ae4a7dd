#pragma once

#include <vector>

#include "dtgw/partition.hpp"
#include "dtgw/ratfun.hpp"
#include "dtgw/series.hpp"

namespace dtgw {

/// Principal specialization s_lambda(1, q, q^2, ...) as a closed form:
/// q^{b2(transpose)} / prod over cells of (1 - q^{hook}).
RatFun schur_principal_rat(const Partition& lambda);

/// Checks s_{lambda^t}(q) = q^{b2(lambda) - b2(lambda^t)} s_lambda(q).
bool schur_transpose_check(const Partition& lambda);

/// P_d(q) = q^d sum over lambda of size d of s_lambda(q) s_{lambda^t}(q).
RatFun pd_schur(int d);

/// prod_{i,j>=1} (1 + q^{i+j-1} v) through q^N, v-degree <= D, as the
/// list of v-coefficients. Factors with i+j-1 > N cannot contribute.
std::vector<TruncSeries> cauchy_product(int N, int D);

/// Verifies sum over |lambda| <= D of s_lambda s_{lambda^t} q^{|lambda|}
/// v^{|lambda|} against cauchy_product through (q^N, v^D).
bool cauchy_check(int N, int D);

}  // namespace dtgw
