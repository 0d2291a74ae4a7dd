#include "dtgw/vertex.hpp"

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dtgw/ratfun.hpp"
#include "dtgw/schur.hpp"

using dtgw::agree_through;
using dtgw::app_valid;
using dtgw::AsymptoticPP;
using dtgw::count_by_volume_parallel;
using dtgw::count_by_volume_serial;
using dtgw::enumerate_app;
using dtgw::for_each_app;
using dtgw::GaussianRational;
using dtgw::Int;
using dtgw::p_enumerate;
using dtgw::p_gf;
using dtgw::Partition;
using dtgw::pd_product;
using dtgw::signed_local;
using dtgw::TruncSeries;
using dtgw::vertex_one_leg_check;

TEST_CASE("plane partition counts") {
    std::vector<long> expect = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479};
    std::vector<Int> got = count_by_volume_serial(Partition(), 12);
    REQUIRE(got.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k)
        CHECK(got[k] == Int(expect[k]));
}

TEST_CASE("one-leg counts for small shapes") {
    // shape (1): generating function M(q)/(1-q), partial sums of M
    std::vector<long> leg1 = {1, 2, 5, 11, 24, 48};
    std::vector<Int> got = count_by_volume_serial(Partition({1}), 5);
    for (std::size_t k = 0; k < leg1.size(); ++k)
        CHECK(got[k] == Int(leg1[k]));

    // shape (2,1): volume 1 admits exactly the three inner-corner cells
    std::vector<Int> got21 = count_by_volume_serial(Partition({2, 1}), 1);
    CHECK(got21[0] == 1);
    CHECK(got21[1] == 3);

    // a long thin leg exposes cells past the row end
    std::vector<Int> got5 = count_by_volume_serial(Partition({5}), 1);
    CHECK(got5[1] == 2);
}

TEST_CASE("parallel kernel matches serial reference") {
    std::vector<Partition> shapes = {Partition(),       Partition({1}),
                                     Partition({2}),    Partition({1, 1}),
                                     Partition({2, 1}), Partition({3}),
                                     Partition({2, 2}), Partition({3, 2, 1})};
    for (const Partition& lam : shapes)
        for (int m = 0; m <= 8; ++m)
            CHECK(count_by_volume_parallel(lam, m) == count_by_volume_serial(lam, m));
    CHECK(count_by_volume_parallel(Partition(), 11) ==
          count_by_volume_serial(Partition(), 11));
}

TEST_CASE("enumerate_app memoization") {
    CHECK(enumerate_app(Partition({1}), 5) == Int(48));
    CHECK(enumerate_app(Partition({1}), 5) == Int(48));
    CHECK(enumerate_app(Partition({1}), 2) == Int(5));
    CHECK(enumerate_app(Partition(), 0) == Int(1));
}

TEST_CASE("for_each_app yields valid distinct partitions") {
    int count = 0;
    std::set<std::string> seen;
    for_each_app(Partition({1}), 2, [&](const AsymptoticPP& pp) {
        ++count;
        CHECK(app_valid(pp));
        CHECK(pp.volume() == 2);
        std::string key;
        for (const auto& [cell, h] : pp.heights)
            key += std::to_string(cell.row) + "," + std::to_string(cell.col) + ":" +
                   std::to_string(h) + ";";
        CHECK(seen.insert(key).second);
    });
    CHECK(count == 5);

    int empty_count = 0;
    for_each_app(Partition(), 3, [&](const AsymptoticPP& pp) {
        ++empty_count;
        CHECK(app_valid(pp));
        CHECK(pp.volume() == 3);
    });
    CHECK(empty_count == 6);

    int trivial = 0;
    for_each_app(Partition({2, 1}), 0, [&](const AsymptoticPP& pp) {
        ++trivial;
        CHECK(pp.heights.empty());
    });
    CHECK(trivial == 1);
}

TEST_CASE("app_valid rejects bad configurations") {
    // height on a shape cell
    CHECK_FALSE(app_valid(AsymptoticPP{Partition({1}), {{{0, 0}, 1}}}));
    // increase to the right
    CHECK_FALSE(app_valid(AsymptoticPP{Partition(), {{{0, 1}, 2}}}));
    // non-positive height
    CHECK_FALSE(app_valid(AsymptoticPP{Partition(), {{{0, 0}, 0}}}));
    // fine: isolated box at the origin
    CHECK(app_valid(AsymptoticPP{Partition(), {{{0, 0}, 3}}}));
    // fine: box past the leg of (5)
    CHECK(app_valid(AsymptoticPP{Partition({5}), {{{0, 5}, 1}}}));
}

TEST_CASE("p_enumerate") {
    CHECK(p_enumerate(0, 0).count == Int(1));
    CHECK(p_enumerate(2, 1).count == Int(4));
    CHECK(p_enumerate(3, 1).count == Int(14));
    CHECK(p_enumerate(3, 2).count == Int(2));
    CHECK(p_enumerate(4, 2).count == Int(8));
    CHECK(p_enumerate(0, 1).count == Int(0));
    CHECK(p_enumerate(1, 2).count == Int(0));
}

TEST_CASE("pd_product") {
    CHECK(pd_product(0, 6) ==
          TruncSeries::constant(dtgw::Var::q, GaussianRational(1L), 6));
    TruncSeries p1 = pd_product(1, 4);
    for (int m = 1; m <= 4; ++m)
        CHECK(p1.coeff(m) == GaussianRational(static_cast<long>(m)));
    TruncSeries p2 = pd_product(2, 5);
    CHECK(p2.coeff(2) == GaussianRational(0L));
    CHECK(p2.coeff(3) == GaussianRational(2L));
    CHECK(p2.coeff(4) == GaussianRational(4L));
    CHECK(p2.coeff(5) == GaussianRational(10L));

    for (int d = 0; d <= 4; ++d)
        CHECK(agree_through(pd_product(d, 20), rf_expand(dtgw::pd_schur(d), 20), 20));
}

TEST_CASE("p_gf") {
    TruncSeries g0 = p_gf(0, 5);
    std::vector<long> m2 = {1, 2, 7, 18, 47, 110};
    for (int k = 0; k <= 5; ++k)
        CHECK(g0.coeff(k) == GaussianRational(m2[static_cast<std::size_t>(k)]));

    TruncSeries g1 = p_gf(1, 3);
    CHECK(g1.coeff(1) == GaussianRational(1L));
    CHECK(g1.coeff(2) == GaussianRational(4L));
    CHECK(g1.coeff(3) == GaussianRational(14L));

    CHECK(p_gf(2, 3).coeff(3) == GaussianRational(2L));

    for (int d = 0; d <= 3; ++d) {
        TruncSeries g = p_gf(d, 10);
        for (int n = 0; n <= 10; ++n)
            CHECK(g.coeff(n) == GaussianRational(p_enumerate(n, d).count));
    }
}

TEST_CASE("signed_local") {
    CHECK(signed_local(0, 0) == Int(1));
    CHECK(signed_local(2, 1) == Int(-4));
    CHECK(signed_local(3, 1) == Int(14));
    CHECK(signed_local(4, 1) == Int(-42));
}

TEST_CASE("vertex_one_leg_check") {
    CHECK(vertex_one_leg_check(Partition(), 8));
    CHECK(vertex_one_leg_check(Partition({1}), 8));
    CHECK(vertex_one_leg_check(Partition({2, 1}), 8));
    CHECK(vertex_one_leg_check(Partition({3}), 8));
}
