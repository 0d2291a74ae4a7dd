#pragma once

#include <vector>

#include "dtgw/coeff.hpp"
#include "dtgw/series.hpp"

namespace dtgw {

/// Integer-coefficient polynomial, ascending exponents, no trailing zeros.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int exp);

    /// -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of q^k; 0 beyond the degree.
    Int at(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int lead() const;
    /// gcd of coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    std::vector<Int> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);

IntPoly poly_pow(const IntPoly& a, int k);

/// Exact quotient; throws std::domain_error when b does not divide a.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

/// gcd in Z[q] via primitive pseudo-remainder sequence, content included;
/// normalized to positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Rational function num/den over the integers, kept in the canonical
/// form gcd(num, den) = 1 with den's leading coefficient positive. den(0)
/// may be zero (e.g. images under q -> 1/q); expansion then refuses.
class RatFun {
  public:
    RatFun();  // zero
    RatFun(IntPoly num, IntPoly den);

    static RatFun from_int(long v);
    static RatFun poly(std::vector<Int> coeffs);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RatFun&, const RatFun&) = default;

  private:
    IntPoly num_, den_;
};

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator*(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a);

/// f^k; negative k requires f nonzero.
RatFun rf_pow(const RatFun& f, long k);

/// Maclaurin expansion through q^N; den(0) = 0 throws std::domain_error.
TruncSeries rf_expand(const RatFun& f, int N);

/// f(-q).
RatFun rf_subst_neg(const RatFun& f);

/// f(1/q), written as polynomials by clearing powers of q.
RatFun rf_subst_inv(const RatFun& f);

/// Value equality by cross-multiplication (works for den(0)=0 forms too).
bool rf_eq(const RatFun& f, const RatFun& g);

}  // namespace dtgw
