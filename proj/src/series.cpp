#include "dtgw/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dtgw {

char var_name(Var v) {
    switch (v) {
        case Var::q: return 'q';
        case Var::v: return 'v';
        case Var::u: return 'u';
    }
    return '?';
}

namespace {

void require_same_var(const TruncSeries& a, const TruncSeries& b) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string("series: variable mismatch ") +
                                    var_name(a.var()) + " vs " + var_name(b.var()));
}

}  // namespace

TruncSeries::TruncSeries(Var var, int trunc) : var_(var), trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("TruncSeries: trunc must be >= 0");
    c_.assign(static_cast<std::size_t>(trunc) + 1, GaussianRational());
}

TruncSeries::TruncSeries(Var var, int trunc, std::vector<GaussianRational> coeffs)
    : var_(var), trunc_(trunc), c_(std::move(coeffs)) {
    if (trunc < 0) throw std::invalid_argument("TruncSeries: trunc must be >= 0");
    if (c_.size() != static_cast<std::size_t>(trunc) + 1)
        throw std::invalid_argument("TruncSeries: coeff count must be trunc+1");
}

TruncSeries TruncSeries::constant(Var var, GaussianRational c, int trunc) {
    TruncSeries s(var, trunc);
    s.c_[0] = std::move(c);
    return s;
}

TruncSeries TruncSeries::monomial(Var var, GaussianRational c, int exp, int trunc) {
    if (exp < 0) throw std::invalid_argument("TruncSeries: negative exponent");
    TruncSeries s(var, trunc);
    if (exp <= trunc) s.c_[static_cast<std::size_t>(exp)] = std::move(c);
    return s;
}

const GaussianRational& TruncSeries::coeff(int k) const {
    if (k < 0 || k > trunc_)
        throw std::out_of_range("TruncSeries: coefficient " + std::to_string(k) +
                                " outside truncation " + std::to_string(trunc_));
    return c_[static_cast<std::size_t>(k)];
}

TruncSeries TruncSeries::truncated(int n) const {
    if (n > trunc_) throw std::out_of_range("TruncSeries: cannot raise truncation");
    std::vector<GaussianRational> c(c_.begin(), c_.begin() + n + 1);
    return TruncSeries(var_, n, std::move(c));
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const GaussianRational& x) { return x.is_zero(); });
}

bool TruncSeries::all_real() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const GaussianRational& x) { return x.is_real(); });
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_var(a, b);
    int n = std::min(a.trunc(), b.trunc());
    std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return TruncSeries(a.var(), n, std::move(c));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + (-b);
}

TruncSeries operator-(const TruncSeries& s) {
    std::vector<GaussianRational> c = s.coeffs();
    for (auto& x : c) x = -x;
    return TruncSeries(s.var(), s.trunc(), std::move(c));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same_var(a, b);
    int n = std::min(a.trunc(), b.trunc());
    std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n && i <= a.trunc(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return TruncSeries(a.var(), n, std::move(c));
}

TruncSeries scale(const TruncSeries& s, const GaussianRational& c) {
    std::vector<GaussianRational> v = s.coeffs();
    for (auto& x : v) x *= c;
    return TruncSeries(s.var(), s.trunc(), std::move(v));
}

TruncSeries inverse(const TruncSeries& s) {
    if (s.coeff(0).is_zero())
        throw std::domain_error("series inverse: constant term is zero");
    int n = s.trunc();
    GaussianRational b0 = s.coeff(0).inverse();
    std::vector<GaussianRational> b(static_cast<std::size_t>(n) + 1);
    b[0] = b0;
    for (int k = 1; k <= n; ++k) {
        GaussianRational acc;
        for (int j = 1; j <= k; ++j) acc += s.coeff(j) * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -(b0 * acc);
    }
    return TruncSeries(s.var(), n, std::move(b));
}

TruncSeries int_pow(const TruncSeries& s, long k) {
    if (k < 0) return int_pow(inverse(s), -k);
    TruncSeries acc = TruncSeries::constant(s.var(), GaussianRational(1L), s.trunc());
    TruncSeries base = s;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

TruncSeries exp_series(const TruncSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("exp_series: constant term must be zero");
    int n = s.trunc();
    std::vector<GaussianRational> e(static_cast<std::size_t>(n) + 1);
    e[0] = GaussianRational(1L);
    for (int m = 1; m <= n; ++m) {
        GaussianRational acc;
        for (int k = 1; k <= m; ++k)
            acc += GaussianRational(Rat(k)) * s.coeff(k) * e[static_cast<std::size_t>(m - k)];
        e[static_cast<std::size_t>(m)] = acc * GaussianRational(make_rat(1, m));
    }
    return TruncSeries(s.var(), n, std::move(e));
}

TruncSeries log_series(const TruncSeries& s) {
    if (s.coeff(0) != GaussianRational(1L))
        throw std::invalid_argument("log_series: constant term must be one");
    int n = s.trunc();
    std::vector<GaussianRational> l(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        GaussianRational acc;
        for (int k = 1; k < m; ++k)
            acc += GaussianRational(Rat(k)) * l[static_cast<std::size_t>(k)] * s.coeff(m - k);
        l[static_cast<std::size_t>(m)] = s.coeff(m) - acc * GaussianRational(make_rat(1, m));
    }
    return TruncSeries(s.var(), n, std::move(l));
}

namespace {

TruncSeries horner_compose(const TruncSeries& outer, const TruncSeries& inner, int out_trunc) {
    TruncSeries in = inner.trunc() > out_trunc ? inner.truncated(out_trunc) : inner;
    TruncSeries r =
        TruncSeries::constant(inner.var(), outer.coeff(outer.trunc()), out_trunc);
    for (int k = outer.trunc() - 1; k >= 0; --k)
        r = r * in + TruncSeries::constant(inner.var(), outer.coeff(k), out_trunc);
    return r;
}

}  // namespace

TruncSeries substitute(const TruncSeries& outer, const TruncSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::invalid_argument(
            "substitute: inner constant term must be zero (use substitute_poly)");
    int val = inner.trunc() + 1;
    for (int k = 1; k <= inner.trunc(); ++k)
        if (!inner.coeff(k).is_zero()) {
            val = k;
            break;
        }
    long best = static_cast<long>(outer.trunc() + 1) * val - 1;
    int out_trunc = static_cast<int>(std::min<long>(inner.trunc(), best));
    return horner_compose(outer, inner, out_trunc);
}

TruncSeries substitute_poly(const TruncSeries& outer, const TruncSeries& inner) {
    return horner_compose(outer, inner, inner.trunc());
}

TruncSeries subst_neg(const TruncSeries& s) {
    std::vector<GaussianRational> c = s.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return TruncSeries(s.var(), s.trunc(), std::move(c));
}

TruncSeries mcmahon(int N) {
    if (N < 0) throw std::invalid_argument("mcmahon: order must be >= 0");
    TruncSeries s = TruncSeries::constant(Var::q, GaussianRational(1L), N);
    for (int m = 1; m <= N; ++m) {
        TruncSeries factor =
            TruncSeries::constant(Var::q, GaussianRational(1L), N) -
            TruncSeries::monomial(Var::q, GaussianRational(1L), m, N);
        s = s * int_pow(factor, -m);
    }
    return s;
}

bool agree_through(const TruncSeries& a, const TruncSeries& b, int n) {
    for (int k = 0; k <= n; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

LaurentSeries::LaurentSeries(int lead, int trunc, std::vector<GaussianRational> coeffs)
    : lead_(lead), trunc_(trunc), c_(std::move(coeffs)) {
    if (!c_.empty() && c_.size() != static_cast<std::size_t>(trunc_ - lead_) + 1)
        throw std::invalid_argument("LaurentSeries: coeff count must be trunc-lead+1");
    if (c_.empty() && lead_ != trunc_ + 1)
        throw std::invalid_argument("LaurentSeries: empty window requires lead = trunc+1");
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++lead_;
    }
    if (c_.empty()) lead_ = trunc_ + 1;
}

LaurentSeries LaurentSeries::zero(int trunc) {
    return LaurentSeries(trunc + 1, trunc, {});
}

LaurentSeries LaurentSeries::from_trunc(const TruncSeries& s) {
    return LaurentSeries(0, s.trunc(), s.coeffs());
}

GaussianRational LaurentSeries::coeff(int k) const {
    if (k > trunc_)
        throw std::out_of_range("LaurentSeries: coefficient " + std::to_string(k) +
                                " outside truncation " + std::to_string(trunc_));
    if (k < lead_) return GaussianRational();
    return c_[static_cast<std::size_t>(k - lead_)];
}

bool LaurentSeries::all_real() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const GaussianRational& x) { return x.is_real(); });
}

LaurentSeries LaurentSeries::truncated(int n) const {
    if (n > trunc_) throw std::out_of_range("LaurentSeries: cannot raise truncation");
    if (n < lead_) return LaurentSeries::zero(n);
    std::vector<GaussianRational> c(c_.begin(), c_.begin() + (n - lead_) + 1);
    return LaurentSeries(lead_, n, std::move(c));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int lead = std::min(a.lead(), b.lead());
    int trunc = std::min(a.trunc(), b.trunc());
    if (lead > trunc) return LaurentSeries::zero(trunc);
    std::vector<GaussianRational> c(static_cast<std::size_t>(trunc - lead) + 1);
    for (int k = lead; k <= trunc; ++k)
        c[static_cast<std::size_t>(k - lead)] = a.coeff(k) + b.coeff(k);
    return LaurentSeries(lead, trunc, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& s) {
    std::vector<GaussianRational> c = s.coeffs();
    for (auto& x : c) x = -x;
    return LaurentSeries(s.lead(), s.trunc(), std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    long trunc = std::min(static_cast<long>(a.trunc()) + b.lead(),
                          static_cast<long>(b.trunc()) + a.lead());
    int t = static_cast<int>(trunc);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(t);
    int lead = a.lead() + b.lead();
    std::vector<GaussianRational> c(static_cast<std::size_t>(t - lead) + 1);
    for (int i = a.lead(); i <= a.trunc(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = b.lead(); j <= b.trunc() && i + j <= t; ++j)
            c[static_cast<std::size_t>(i + j - lead)] += a.coeff(i) * b.coeff(j);
    }
    return LaurentSeries(lead, t, std::move(c));
}

LaurentSeries scale(const LaurentSeries& s, const GaussianRational& c) {
    if (c.is_zero()) return LaurentSeries::zero(s.trunc());
    std::vector<GaussianRational> v = s.coeffs();
    for (auto& x : v) x *= c;
    return LaurentSeries(s.lead(), s.trunc(), std::move(v));
}

LaurentSeries inverse(const LaurentSeries& s) {
    if (s.is_zero()) throw std::domain_error("laurent inverse: zero series");
    int rel = s.trunc() - s.lead();
    TruncSeries unit(Var::u, rel, s.coeffs());
    TruncSeries inv = inverse(unit);
    return LaurentSeries(-s.lead(), -s.lead() + rel, inv.coeffs());
}

LaurentSeries int_pow(const LaurentSeries& s, long k) {
    if (k < 0) return int_pow(inverse(s), -k);
    if (k == 0) {
        int rel = std::max(s.trunc() - s.lead(), 0);
        std::vector<GaussianRational> c(static_cast<std::size_t>(rel) + 1);
        c[0] = GaussianRational(1L);
        return LaurentSeries(0, rel, std::move(c));
    }
    LaurentSeries acc = s;
    for (long i = 1; i < k; ++i) acc = acc * s;
    return acc;
}

bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int n) {
    for (int k = std::min(a.lead(), b.lead()); k <= n; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

}  // namespace dtgw
