#include "dtgw/ratfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dtgw {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::monomial(Int c, int exp) {
    if (exp < 0) throw std::invalid_argument("IntPoly: negative exponent");
    std::vector<Int> v(static_cast<std::size_t>(exp) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

Int IntPoly::at(int k) const {
    if (k < 0 || k > deg()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Int IntPoly::lead() const {
    if (is_zero()) throw std::domain_error("IntPoly: zero polynomial has no lead");
    return c_.back();
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& x : c_) g = gcd(g, x);
    return g;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(static_cast<std::size_t>(std::max(a.deg(), b.deg())) + 1, Int(0));
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        c[static_cast<std::size_t>(k)] = a.at(k) + b.at(k);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> c = a.coeffs();
    for (Int& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(static_cast<std::size_t>(a.deg() + b.deg()) + 1, Int(0));
    for (int i = 0; i <= a.deg(); ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; j <= b.deg(); ++j)
            c[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return IntPoly(std::move(c));
}

IntPoly poly_pow(const IntPoly& a, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = a;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.deg() < b.deg()) throw std::domain_error("poly_divexact: not divisible");
    std::vector<Int> rem = a.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(a.deg() - b.deg()) + 1, Int(0));
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + b.deg())];
        if (top % b.lead() != 0) throw std::domain_error("poly_divexact: not divisible");
        Int q = top / b.lead();
        if (q != 0)
            for (int j = 0; j <= b.deg(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= q * b.at(j);
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const Int& x : rem)
        if (x != 0) throw std::domain_error("poly_divexact: not divisible");
    return IntPoly(std::move(quot));
}

namespace {

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int c = a.content();
    if (sgn(a.lead()) < 0) c = -c;
    std::vector<Int> v = a.coeffs();
    for (Int& x : v) x /= c;
    return IntPoly(std::move(v));
}

/// Pseudo-remainder of a by b: lead(b)^{deg a - deg b + 1} * a mod b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    while (!a.is_zero() && a.deg() >= b.deg()) {
        Int al = a.lead();
        int shift = a.deg() - b.deg();
        std::vector<Int> v = a.coeffs();
        for (Int& x : v) x *= b.lead();
        a = IntPoly(std::move(v)) - IntPoly::monomial(std::move(al), shift) * b;
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b) * IntPoly::constant(b.content());
    if (b.is_zero()) return primitive_part(a) * IntPoly::constant(a.content());
    Int cg = gcd(a.content(), b.content());
    IntPoly r0 = primitive_part(a), r1 = primitive_part(b);
    if (r0.deg() < r1.deg()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        IntPoly r2 = primitive_part(pseudo_rem(r0, r1));
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0 * IntPoly::constant(cg);
}

RatFun::RatFun() : num_(), den_(IntPoly::constant(1)) {}

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
    if (sgn(den_.lead()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun RatFun::from_int(long v) {
    return RatFun(IntPoly::constant(Int(v)), IntPoly::constant(1));
}

RatFun RatFun::poly(std::vector<Int> coeffs) {
    return RatFun(IntPoly(std::move(coeffs)), IntPoly::constant(1));
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a) { return RatFun(-a.num(), a.den()); }

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num() * b.num(), a.den() * b.den());
}

RatFun rf_pow(const RatFun& f, long k) {
    if (k < 0) {
        if (f.is_zero()) throw std::domain_error("rf_pow: zero to negative power");
        return rf_pow(RatFun(f.den(), f.num()), -k);
    }
    RatFun acc = RatFun::from_int(1);
    RatFun base = f;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

namespace {

TruncSeries poly_to_series(const IntPoly& p, int N) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= std::min(N, p.deg()); ++k)
        c[static_cast<std::size_t>(k)] = GaussianRational(p.at(k));
    return TruncSeries(Var::q, N, std::move(c));
}

}  // namespace

TruncSeries rf_expand(const RatFun& f, int N) {
    if (f.den().at(0) == 0)
        throw std::domain_error("rf_expand: denominator vanishes at q=0");
    return poly_to_series(f.num(), N) * inverse(poly_to_series(f.den(), N));
}

namespace {

IntPoly poly_subst_neg(const IntPoly& p) {
    std::vector<Int> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return IntPoly(std::move(c));
}

IntPoly poly_reverse(const IntPoly& p, int D) {
    std::vector<Int> c(static_cast<std::size_t>(D) + 1, Int(0));
    for (int k = 0; k <= D; ++k) c[static_cast<std::size_t>(k)] = p.at(D - k);
    return IntPoly(std::move(c));
}

}  // namespace

RatFun rf_subst_neg(const RatFun& f) {
    return RatFun(poly_subst_neg(f.num()), poly_subst_neg(f.den()));
}

RatFun rf_subst_inv(const RatFun& f) {
    if (f.is_zero()) return f;
    int D = std::max(f.num().deg(), f.den().deg());
    return RatFun(poly_reverse(f.num(), D), poly_reverse(f.den(), D));
}

bool rf_eq(const RatFun& f, const RatFun& g) {
    return f.num() * g.den() == g.num() * f.den();
}

}  // namespace dtgw
