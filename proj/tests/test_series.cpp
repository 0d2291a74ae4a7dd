#include "dtgw/series.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using dtgw::agree_through;
using dtgw::GaussianRational;
using dtgw::LaurentSeries;
using dtgw::make_rat;
using dtgw::Rat;
using dtgw::TruncSeries;
using dtgw::Var;

namespace {

TruncSeries one(Var v, int n) {
    return TruncSeries::constant(v, GaussianRational(1L), n);
}

TruncSeries from_longs(Var v, const std::vector<long>& c) {
    std::vector<GaussianRational> g;
    g.reserve(c.size());
    for (long x : c) g.emplace_back(x);
    return TruncSeries(v, static_cast<int>(c.size()) - 1, std::move(g));
}

// Small deterministic generator for property checks.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long small(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    TruncSeries series(int trunc) {
        std::vector<GaussianRational> c;
        for (int k = 0; k <= trunc; ++k)
            c.emplace_back(make_rat(small(-6, 6), small(1, 4)));
        return TruncSeries(Var::q, trunc, std::move(c));
    }
};

}  // namespace

TEST_CASE("construction and access") {
    TruncSeries s = from_longs(Var::q, {1, 2, 3});
    CHECK(s.trunc() == 2);
    CHECK(s.coeff(0) == GaussianRational(1L));
    CHECK(s.coeff(2) == GaussianRational(3L));
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(-1), std::out_of_range);
    CHECK_THROWS_AS(TruncSeries(Var::q, 1, {GaussianRational(1L)}), std::invalid_argument);
    CHECK(TruncSeries::monomial(Var::q, GaussianRational(5L), 9, 3).is_zero());
    CHECK(s.truncated(1) == from_longs(Var::q, {1, 2}));
    CHECK_THROWS_AS(s.truncated(5), std::out_of_range);
}

TEST_CASE("basic ring operations") {
    TruncSeries p = from_longs(Var::q, {1, 1, 0, 0, 0, 0});
    TruncSeries m = from_longs(Var::q, {1, -1, 0, 0, 0, 0});
    CHECK(p * m == from_longs(Var::q, {1, 0, -1, 0, 0, 0}));

    TruncSeries z(Var::q, 5);
    TruncSeries s = from_longs(Var::q, {3, 1, 4, 1, 5, 9});
    CHECK(z + s == s);
    CHECK(s - s == z);

    // min truncation propagation
    CHECK((from_longs(Var::q, {1, 1}) * from_longs(Var::q, {1, 1, 1, 1})).trunc() == 1);

    CHECK_THROWS_AS(from_longs(Var::q, {1}) + from_longs(Var::v, {1}),
                    std::invalid_argument);

    CHECK(scale(s, GaussianRational(2L)) == from_longs(Var::q, {6, 2, 8, 2, 10, 18}));
}

TEST_CASE("ring axioms on pseudorandom triples") {
    Lcg rng(20240817);
    for (int rep = 0; rep < 25; ++rep) {
        int n = static_cast<int>(rng.small(1, 20));
        TruncSeries a = rng.series(n), b = rng.series(n), c = rng.series(n);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("inverse and int_pow") {
    TruncSeries g = from_longs(Var::q, {1, -1, 0, 0, 0});
    CHECK(dtgw::int_pow(g, -1) == from_longs(Var::q, {1, 1, 1, 1, 1}));
    CHECK(dtgw::int_pow(g, 0) == one(Var::q, 4));

    TruncSeries s = from_longs(Var::q, {1, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0});
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            CHECK(dtgw::int_pow(s, a) * dtgw::int_pow(s, b) == dtgw::int_pow(s, a + b));

    TruncSeries noconst = from_longs(Var::q, {0, 1, 0});
    CHECK_THROWS_AS(dtgw::inverse(noconst), std::domain_error);
    CHECK_THROWS_AS(dtgw::int_pow(noconst, -2), std::domain_error);
}

TEST_CASE("exp and log") {
    TruncSeries z(Var::q, 6);
    CHECK(exp_series(z) == one(Var::q, 6));

    TruncSeries q1 = from_longs(Var::q, {0, 1, 0, 0});
    TruncSeries e = exp_series(q1);
    CHECK(e.coeff(0) == GaussianRational(1L));
    CHECK(e.coeff(1) == GaussianRational(1L));
    CHECK(e.coeff(2) == GaussianRational(make_rat(1, 2)));
    CHECK(e.coeff(3) == GaussianRational(make_rat(1, 6)));

    TruncSeries s = from_longs(Var::q, {0, 1, 3, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(log_series(exp_series(s)) == s);

    Lcg rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        int n = static_cast<int>(rng.small(2, 20));
        TruncSeries a = rng.series(n);
        std::vector<GaussianRational> c = a.coeffs();
        c[0] = GaussianRational();
        TruncSeries nz(Var::q, n, c);
        CHECK(log_series(exp_series(nz)) == nz);
        c[0] = GaussianRational(1L);
        TruncSeries u(Var::q, n, c);
        CHECK(exp_series(log_series(u)) == u);
    }

    CHECK_THROWS_AS(exp_series(one(Var::q, 3)), std::invalid_argument);
    CHECK_THROWS_AS(log_series(TruncSeries(Var::q, 3)), std::invalid_argument);
}

TEST_CASE("substitution") {
    // q^2 composed with u+u^2
    TruncSeries outer = from_longs(Var::q, {0, 0, 1, 0, 0});
    TruncSeries inner = from_longs(Var::u, {0, 1, 1, 0, 0});
    TruncSeries got = substitute(outer, inner);
    CHECK(got.var() == Var::u);
    CHECK(got == from_longs(Var::u, {0, 0, 1, 2, 1}));

    // identity inner
    TruncSeries s = from_longs(Var::q, {4, 0, 7, 1});
    CHECK(substitute(s, from_longs(Var::q, {0, 1, 0, 0})) == s);

    // geometric series at q^2
    TruncSeries geo = from_longs(Var::q, {1, 1, 1, 1, 1, 1, 1});
    TruncSeries q2 = TruncSeries::monomial(Var::q, GaussianRational(1L), 2, 6);
    CHECK(substitute(geo, q2) == from_longs(Var::q, {1, 0, 1, 0, 1, 0, 1}));

    CHECK_THROWS_AS(substitute(s, from_longs(Var::q, {1, 1})), std::invalid_argument);

    // polynomial branch permits nonzero constant term
    TruncSeries poly = from_longs(Var::q, {1, 1, 1});
    TruncSeries shifted = from_longs(Var::u, {1, 1, 0});
    CHECK(substitute_poly(poly, shifted) == from_longs(Var::u, {3, 3, 1}));
}

TEST_CASE("subst_neg flips odd coefficients") {
    CHECK(subst_neg(from_longs(Var::q, {1, 1, 1, 1})) ==
          from_longs(Var::q, {1, -1, 1, -1}));
    TruncSeries s = from_longs(Var::q, {2, -3, 5, 7});
    CHECK(subst_neg(subst_neg(s)) == s);
}

TEST_CASE("mcmahon") {
    CHECK(dtgw::mcmahon(0) == one(Var::q, 0));
    // Plane partition counts by volume.
    TruncSeries m = dtgw::mcmahon(12);
    std::vector<long> expect = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479};
    for (int n = 0; n <= 12; ++n)
        CHECK(m.coeff(n) == GaussianRational(expect[static_cast<std::size_t>(n)]));

    // M(q)^2 by direct convolution of the list above.
    TruncSeries m2 = m.truncated(5) * m.truncated(5);
    CHECK(m2 == from_longs(Var::q, {1, 2, 7, 18, 47, 110}));

    // M(-q)^{-200} linear coefficient.
    TruncSeries mneg = subst_neg(dtgw::mcmahon(3));
    CHECK(dtgw::int_pow(mneg, -200).coeff(1) == GaussianRational(200L));
}

TEST_CASE("laurent construction and normalization") {
    LaurentSeries s(-2, 0, {GaussianRational(), GaussianRational(1L), GaussianRational(3L)});
    CHECK(s.lead() == -1);
    CHECK(s.trunc() == 0);
    CHECK(s.coeff(-1) == GaussianRational(1L));
    CHECK(s.coeff(-7) == GaussianRational());
    CHECK_THROWS_AS(s.coeff(1), std::out_of_range);

    LaurentSeries z = LaurentSeries::zero(4);
    CHECK(z.is_zero());
    CHECK(z.coeff(4) == GaussianRational());

    LaurentSeries t = LaurentSeries::from_trunc(from_longs(Var::u, {0, 5, 0}));
    CHECK(t.lead() == 1);
    CHECK(t.trunc() == 2);
}

TEST_CASE("laurent arithmetic and truncation windows") {
    // s = u^{-1}(1+u)
    LaurentSeries s(-1, 0, {GaussianRational(1L), GaussianRational(1L)});
    LaurentSeries sq = s * s;
    CHECK(sq.lead() == -2);
    CHECK(sq.trunc() == -1);
    CHECK(sq.coeff(-2) == GaussianRational(1L));
    CHECK(sq.coeff(-1) == GaussianRational(2L));

    LaurentSeries inv = dtgw::inverse(s);
    CHECK(inv.lead() == 1);
    CHECK(inv.trunc() == 2);
    CHECK(inv.coeff(1) == GaussianRational(1L));
    CHECK(inv.coeff(2) == GaussianRational(-1L));
    // s * s^{-1} = 1 on the known window
    LaurentSeries prod = s * inv;
    CHECK(prod.coeff(0) == GaussianRational(1L));
    CHECK(prod.coeff(1) == GaussianRational());

    CHECK(dtgw::int_pow(s, 3).lead() == -3);
    CHECK(dtgw::int_pow(s, 0).coeff(0) == GaussianRational(1L));
    CHECK(dtgw::int_pow(s, -2) == dtgw::inverse(sq));

    LaurentSeries diff = s - s;
    CHECK(diff.is_zero());
    CHECK(agree_through(s + LaurentSeries::zero(0), s, 0));
}
