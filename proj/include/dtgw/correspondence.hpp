#pragma once

#include <string>
#include <vector>

#include "dtgw/coeff.hpp"
#include "dtgw/ratfun.hpp"
#include "dtgw/series.hpp"

namespace dtgw {

/// A family of pairwise disjoint super-rigid rational curves sharing a
/// homology class degree (lines 1, conics 2, ...).
struct CurveSpecies {
    Int count;
    int class_degree;
};

struct Geometry {
    long euler_char;
    std::vector<CurveSpecies> species;
};

/// Per-curve multiplicities d_i >= 1.
struct MultiplicityVector {
    std::vector<int> d;
};

struct ReportRow {
    int u_exp;
    GaussianRational dt;
    GaussianRational gw;
    bool equal;
};

struct VerificationReport {
    std::string target;
    std::vector<ReportRow> rows;
    bool q_inv_symmetric;
    bool pass;
    std::vector<std::string> notes;
};

/// Degree-zero partition function M(-q)^chi through q^N.
TruncSeries z_degree_zero(long chi, int N);

/// M(-q)^chi * prod_i (-1)^{d_i} P_{d_i}(-q) through q^N.
TruncSeries z_contribution(long chi, const MultiplicityVector& dvec, int N);

/// Reduced partition function prod_i (-1)^{d_i} P_{d_i}(-q).
RatFun z_reduced(const MultiplicityVector& dvec);

/// Sum of reduced contributions over all ways to distribute multiplicities
/// across the geometry's curves with total class degree D, weighted by the
/// number of curve assignments.
RatFun z_reduced_class(const Geometry& geom, int D);

/// Multiple-cover series (1/d)(2 sin(du/2))^{-2} through u^{2G-2}.
LaurentSeries gw_c(int d, int G);

/// v^D coefficient of exp(sum_j count_j sum_d gw_c(d) v^{d * class_j}),
/// through u^{2G-2}.
LaurentSeries zgw_reduced_class(const Geometry& geom, int D, int G);

/// f at q = -e^{iu} as a Laurent series through u^{2G-2}. Throws
/// std::domain_error when the result has an imaginary component or an
/// odd power, both of which signal a q -> 1/q asymmetry in f.
LaurentSeries dt_in_u(const RatFun& f, int G);

/// Compares the u-expansion of z_reduced_class against zgw_reduced_class
/// row by row; failures land in the report, never as exceptions.
VerificationReport correspondence_check(const Geometry& geom, int D, int G);

/// Quintic threefold: 2875 lines, 609250 conics, chi = -200.
Geometry quintic_preset();

}  // namespace dtgw
