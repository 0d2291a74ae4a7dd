#pragma once

#include <vector>

#include "dtgw/coeff.hpp"

namespace dtgw {

enum class Var { q, v, u };

char var_name(Var v);

/// Truncated formal power series: coefficients for exponents 0..trunc are
/// known exactly, nothing is known beyond. Operations propagate the
/// truncation as the min of the operands; reading past it throws.
class TruncSeries {
  public:
    TruncSeries(Var var, int trunc);
    TruncSeries(Var var, int trunc, std::vector<GaussianRational> coeffs);

    static TruncSeries constant(Var var, GaussianRational c, int trunc);
    static TruncSeries monomial(Var var, GaussianRational c, int exp, int trunc);

    Var var() const { return var_; }
    int trunc() const { return trunc_; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    /// Throws std::out_of_range unless 0 <= k <= trunc.
    const GaussianRational& coeff(int k) const;

    /// Copy with truncation lowered to n <= trunc.
    TruncSeries truncated(int n) const;

    bool is_zero() const;
    bool all_real() const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  private:
    Var var_;
    int trunc_;
    std::vector<GaussianRational> c_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& s);

TruncSeries scale(const TruncSeries& s, const GaussianRational& c);

/// Multiplicative inverse; constant term must be nonzero.
TruncSeries inverse(const TruncSeries& s);

/// s^k, negative k via inversion. k < 0 with zero constant term throws.
TruncSeries int_pow(const TruncSeries& s, long k);

/// exp of a series with zero constant term.
TruncSeries exp_series(const TruncSeries& s);
/// log of a series with constant term 1.
TruncSeries log_series(const TruncSeries& s);

/// Composition outer(inner) for inner with zero constant term. The result
/// lives in inner's variable; truncation is the largest order the operands
/// determine. Nonzero constant term of inner throws; use substitute_poly
/// when outer is an exact polynomial.
TruncSeries substitute(const TruncSeries& outer, const TruncSeries& inner);

/// Composition treating outer's coefficient list as an exact polynomial,
/// so inner may have any constant term. Result truncation = inner's.
TruncSeries substitute_poly(const TruncSeries& outer, const TruncSeries& inner);

/// s(-x): negates odd coefficients.
TruncSeries subst_neg(const TruncSeries& s);

/// MacMahon function prod_{m=1..N} (1-q^m)^{-m} through q^N.
TruncSeries mcmahon(int N);

/// Coefficientwise agreement through exponent n (both truncs must reach n).
bool agree_through(const TruncSeries& a, const TruncSeries& b, int n);

/// Laurent series in u: coefficients for exponents lead..trunc, with
/// everything below lead exactly zero. Normalized so the stored window
/// starts at a nonzero coefficient; the zero series has an empty window
/// (lead = trunc+1).
class LaurentSeries {
  public:
    LaurentSeries(int lead, int trunc, std::vector<GaussianRational> coeffs);

    static LaurentSeries zero(int trunc);
    /// Embeds a series as exponents 0..trunc.
    static LaurentSeries from_trunc(const TruncSeries& s);

    int lead() const { return lead_; }
    int trunc() const { return trunc_; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    /// Zero below lead; throws std::out_of_range above trunc.
    GaussianRational coeff(int k) const;

    bool is_zero() const { return c_.empty(); }
    bool all_real() const;

    /// Copy with truncation lowered to n <= trunc.
    LaurentSeries truncated(int n) const;

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  private:
    int lead_;
    int trunc_;
    std::vector<GaussianRational> c_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& s);

LaurentSeries scale(const LaurentSeries& s, const GaussianRational& c);

/// Inverse of a Laurent series with nonzero stored lead coefficient.
/// Result window: lead -l, trunc t-2l.
LaurentSeries inverse(const LaurentSeries& s);

/// s^k for k >= 0 (k < 0 via inverse then power).
LaurentSeries int_pow(const LaurentSeries& s, long k);

bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int n);

}  // namespace dtgw
