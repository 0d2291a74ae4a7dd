#include "dtgw/schur.hpp"

#include <cstddef>

namespace dtgw {

RatFun schur_principal_rat(const Partition& lambda) {
    IntPoly den = IntPoly::constant(1);
    for (const Cell& c : lambda.cells()) {
        long h = hook_length(lambda, c.row, c.col);
        den = den * (IntPoly::constant(1) - IntPoly::monomial(1, static_cast<int>(h)));
    }
    long shift = b2(lambda.transpose());
    return RatFun(IntPoly::monomial(1, static_cast<int>(shift)), std::move(den));
}

bool schur_transpose_check(const Partition& lambda) {
    RatFun s = schur_principal_rat(lambda);
    RatFun st = schur_principal_rat(lambda.transpose());
    long e = b2(lambda) - b2(lambda.transpose());
    RatFun lhs = st, rhs = s;
    if (e >= 0)
        rhs = rhs * RatFun(IntPoly::monomial(1, static_cast<int>(e)), IntPoly::constant(1));
    else
        lhs = lhs * RatFun(IntPoly::monomial(1, static_cast<int>(-e)), IntPoly::constant(1));
    return rf_eq(lhs, rhs);
}

RatFun pd_schur(int d) {
    RatFun sum;
    for (const Partition& lam : enumerate_partitions(d))
        sum = sum + schur_principal_rat(lam) * schur_principal_rat(lam.transpose());
    return sum * RatFun(IntPoly::monomial(1, d), IntPoly::constant(1));
}

std::vector<TruncSeries> cauchy_product(int N, int D) {
    std::vector<TruncSeries> acc(static_cast<std::size_t>(D) + 1, TruncSeries(Var::q, N));
    acc[0] = TruncSeries::constant(Var::q, GaussianRational(1L), N);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; i + j - 1 <= N; ++j) {
            int m = i + j - 1;
            // multiply acc by 1 + q^m v
            for (int t = D; t >= 1; --t)
                acc[static_cast<std::size_t>(t)] =
                    acc[static_cast<std::size_t>(t)] +
                    acc[static_cast<std::size_t>(t - 1)] *
                        TruncSeries::monomial(Var::q, GaussianRational(1L), m, N);
        }
    }
    return acc;
}

bool cauchy_check(int N, int D) {
    std::vector<Partition> lams;
    for (int d = 0; d <= D; ++d)
        for (const Partition& lam : enumerate_partitions(d)) lams.push_back(lam);

    std::vector<TruncSeries> terms(lams.size(), TruncSeries(Var::q, N));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < lams.size(); ++k) {
        RatFun term = schur_principal_rat(lams[k]) * schur_principal_rat(lams[k].transpose());
        long d = lams[k].size();
        term = term * RatFun(IntPoly::monomial(1, static_cast<int>(d)), IntPoly::constant(1));
        terms[k] = rf_expand(term, N);
    }

    std::vector<TruncSeries> lhs(static_cast<std::size_t>(D) + 1, TruncSeries(Var::q, N));
    for (std::size_t k = 0; k < lams.size(); ++k) {
        std::size_t d = static_cast<std::size_t>(lams[k].size());
        lhs[d] = lhs[d] + terms[k];
    }

    std::vector<TruncSeries> rhs = cauchy_product(N, D);
    for (std::size_t d = 0; d <= static_cast<std::size_t>(D); ++d)
        if (!(lhs[d] == rhs[d])) return false;
    return true;
}

}  // namespace dtgw
