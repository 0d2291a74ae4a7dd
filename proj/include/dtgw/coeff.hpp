#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace dtgw {

using Int = mpz_class;
using Rat = mpq_class;

/// Gaussian rational a + b*i. All arithmetic is exact; mpq keeps the
/// components in lowest terms with positive denominators.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT: implicit for literals
    GaussianRational(Int v) : re(std::move(v)), im(0) {}
    GaussianRational(Rat v) : re(std::move(v)), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    /// True when the value is an integer (real with denominator one).
    bool is_integer() const { return is_real() && re.get_den() == 1; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rat n = re * re + im * im;
        return {re / n, -im / n};
    }

    std::string str() const;
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    return a *= b.inverse();
}

inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

inline std::string GaussianRational::str() const {
    if (is_real()) return re.get_str();
    return re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "*i";
}

/// Exact rational n/d in canonical form.
inline Rat make_rat(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace dtgw
