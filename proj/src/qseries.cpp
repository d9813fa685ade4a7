#include "etabridge/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace etabridge {

namespace {

long floor_mod(long x, long m)
{
    long r = x % m;
    return r < 0 ? r + m : r;
}

// order arithmetic saturating at the "known to all orders" sentinel
long shift_order(long order, long by)
{
    if (order >= FracSeries::kOrderInf) return FracSeries::kOrderInf;
    return order + by;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

void Scalar::canonicalize()
{
    if (r_ == 0) {
        a_ = b_ = c_ = d_ = 0;
        return;
    }
    long q3 = b_ - floor_mod(b_, 2);
    if (q3 != 0) {
        // sqrt(3)^2 = 3
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(std::labs(q3) / 2));
        if (q3 > 0) r_ *= p; else r_ /= p;
        b_ = floor_mod(b_, 2);
    }
    long q2 = c_ - floor_mod(c_, 3);
    if (q2 != 0) {
        // (2^{1/3})^3 = 2
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(q2) / 3));
        if (q2 > 0) r_ *= p; else r_ /= p;
        c_ = floor_mod(c_, 3);
    }
    d_ = floor_mod(d_, 12);
    if (d_ >= 6) {
        // zeta12^6 = -1
        d_ -= 6;
        r_ = -r_;
    }
    r_.canonicalize();
}

Scalar Scalar::operator*(const Scalar& o) const
{
    return Scalar(r_ * o.r_, a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw Error("inverse of zero scalar");
    return Scalar(1 / r_, -a_, -b_, -c_, -d_);
}

Scalar Scalar::pow(long k) const
{
    if (k == 0) return Scalar::one();
    if (k < 0) return inverse().pow(-k);
    Scalar acc = Scalar::one();
    Scalar base = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::negated() const
{
    Scalar s = *this;
    s.r_ = -s.r_;
    return s;
}

std::complex<double> Scalar::to_complex() const
{
    if (is_zero()) return {0.0, 0.0};
    double v = r_.get_d();
    v *= std::pow(M_PI, static_cast<double>(a_));
    if (b_ == 1) v *= std::sqrt(3.0);
    if (c_ != 0) v *= std::pow(2.0, static_cast<double>(c_) / 3.0);
    double arg = M_PI * static_cast<double>(d_) / 6.0;
    return std::complex<double>(v * std::cos(arg), v * std::sin(arg));
}

std::string Scalar::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    os << r_.get_str();
    if (a_ != 0) os << "*pi^" << a_;
    if (b_ != 0) os << "*sqrt3";
    if (c_ != 0) os << "*2^(" << c_ << "/3)";
    if (d_ != 0) os << "*zeta12^" << d_;
    return os.str();
}

// ---------------------------------------------------------------------------
// FracSeries

FracSeries::FracSeries(long lead, std::vector<mpq_class> coeffs, long order)
    : lead_(lead), order_(order), coeffs_(std::move(coeffs))
{
    normalize();
    if (!coeffs_.empty() && lead_ + static_cast<long>(coeffs_.size()) > order_)
        throw Error("series coefficients extend past the truncation order");
}

void FracSeries::normalize()
{
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    std::size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        lead_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        std::vector<mpq_class> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
        coeffs_ = std::move(trimmed);
        lead_ += static_cast<long>(lo);
    }
}

FracSeries FracSeries::zero(long order)
{
    FracSeries s;
    s.order_ = order;
    return s;
}

FracSeries FracSeries::constant(const mpq_class& v, long order)
{
    return monomial(v, 0, order);
}

FracSeries FracSeries::monomial(const mpq_class& v, long exp_units, long order)
{
    if (v == 0) return zero(order);
    if (exp_units >= order) throw Error("monomial exponent at or past truncation order");
    return FracSeries(exp_units, {v}, order);
}

mpq_class FracSeries::coeff_at(long exp_units) const
{
    long i = exp_units - lead_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return mpq_class(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

std::string FracSeries::str(std::size_t max_terms) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        if (shown) os << " + ";
        os << "(" << coeffs_[i].get_str() << ")q^{" << (lead_ + static_cast<long>(i)) << "/24}";
        ++shown;
    }
    if (shown == max_terms) os << " + ...";
    os << "  [O(q^{" << order_ << "/24})]";
    return os.str();
}

FracSeries series_add(const FracSeries& a, const FracSeries& b)
{
    long order = std::min(a.order(), b.order());
    if (a.is_zero()) return series_truncate(b, order);
    if (b.is_zero()) return series_truncate(a, order);
    long lead = std::min(a.lead(), b.lead());
    long top = std::min(order, std::max(a.lead() + static_cast<long>(a.coeffs().size()),
                                        b.lead() + static_cast<long>(b.coeffs().size())));
    if (top <= lead) return FracSeries::zero(order);
    std::vector<mpq_class> out(static_cast<std::size_t>(top - lead));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        long e = a.lead() + static_cast<long>(i);
        if (e >= top) break;
        out[static_cast<std::size_t>(e - lead)] += a.coeffs()[i];
    }
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        long e = b.lead() + static_cast<long>(i);
        if (e >= top) break;
        out[static_cast<std::size_t>(e - lead)] += b.coeffs()[i];
    }
    return FracSeries(lead, std::move(out), order);
}

FracSeries series_neg(const FracSeries& a)
{
    return series_scale(mpq_class(-1), a);
}

FracSeries series_sub(const FracSeries& a, const FracSeries& b)
{
    return series_add(a, series_neg(b));
}

FracSeries series_scale(const mpq_class& c, const FracSeries& a)
{
    if (c == 0) return FracSeries::zero(a.order());
    std::vector<mpq_class> out = a.coeffs();
    for (auto& x : out) x *= c;
    return FracSeries(a.lead(), std::move(out), a.order());
}

FracSeries series_mul(const FracSeries& a, const FracSeries& b)
{
    long order = std::min(shift_order(a.order(), b.lead()), shift_order(b.order(), a.lead()));
    if (a.is_zero() || b.is_zero()) return FracSeries::zero(order);
    long lead = a.lead() + b.lead();
    if (order <= lead) return FracSeries::zero(order);
    long len = order - lead;
    long alen = static_cast<long>(a.coeffs().size());
    long blen = static_cast<long>(b.coeffs().size());
    len = std::min(len, alen + blen - 1);
    std::vector<mpq_class> out(static_cast<std::size_t>(len));
    for (long i = 0; i < alen && i < len; ++i) {
        const mpq_class& ai = a.coeffs()[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        long jmax = std::min(blen, len - i);
        for (long j = 0; j < jmax; ++j) {
            const mpq_class& bj = b.coeffs()[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            out[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return FracSeries(lead, std::move(out), order);
}

FracSeries series_pow(const FracSeries& a, unsigned long k)
{
    if (k == 0) return FracSeries::one(a.order() >= FracSeries::kOrderInf
                                           ? FracSeries::kOrderInf
                                           : a.order() - a.lead());
    FracSeries acc = a;
    unsigned long done = 1;
    // square-and-multiply, keeping the exact order bookkeeping of series_mul
    std::vector<bool> bits;
    unsigned long e = k;
    while (e > 1) {
        bits.push_back(e & 1);
        e >>= 1;
    }
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        acc = series_mul(acc, acc);
        done *= 2;
        if (*it) {
            acc = series_mul(acc, a);
            ++done;
        }
    }
    (void)done;
    return acc;
}

FracSeries series_inv(const FracSeries& a)
{
    if (a.is_zero()) throw ZeroSeries();
    if (a.order() >= FracSeries::kOrderInf)
        throw Error("series_inv needs a finite truncation order");
    long rel = a.order() - a.lead();  // number of known relative coefficients
    std::vector<mpq_class> x(static_cast<std::size_t>(rel));
    const auto& c = a.coeffs();
    const mpq_class& c0 = c[0];
    x[0] = 1 / mpq_class(c0);
    for (long n = 1; n < rel; ++n) {
        mpq_class acc(0);
        long kmax = std::min<long>(n, static_cast<long>(c.size()) - 1);
        for (long k = 1; k <= kmax; ++k) {
            const mpq_class& ck = c[static_cast<std::size_t>(k)];
            if (ck == 0) continue;
            acc += ck * x[static_cast<std::size_t>(n - k)];
        }
        x[static_cast<std::size_t>(n)] = -acc / c0;
    }
    return FracSeries(-a.lead(), std::move(x), a.order() - 2 * a.lead());
}

FracSeries series_nth_root(const FracSeries& a, long n)
{
    if (n <= 0) throw Error("root degree must be positive");
    if (a.is_zero()) throw NonUnitLeading();
    if (a.coeffs()[0] != 1) throw NonUnitLeading();
    if (a.lead() % n != 0) throw ExponentNotDivisible();
    if (a.order() >= FracSeries::kOrderInf)
        throw Error("series_nth_root needs a finite truncation order");
    long rel = a.order() - a.lead();
    // y^n = a with y = 1 + sum y_m t^m solved from  n a y' = a' y:
    //   y_m = (1/(n m)) sum_{k=1..m} (k - n(m-k)) a_k y_{m-k}
    std::vector<mpq_class> y(static_cast<std::size_t>(rel));
    y[0] = 1;
    const auto& c = a.coeffs();
    for (long m = 1; m < rel; ++m) {
        mpq_class acc(0);
        long kmax = std::min<long>(m, static_cast<long>(c.size()) - 1);
        for (long k = 1; k <= kmax; ++k) {
            const mpq_class& ak = c[static_cast<std::size_t>(k)];
            if (ak == 0) continue;
            acc += mpq_class(k - n * (m - k)) * ak * y[static_cast<std::size_t>(m - k)];
        }
        y[static_cast<std::size_t>(m)] = acc / mpq_class(n * m);
    }
    return FracSeries(a.lead() / n, std::move(y), rel + a.lead() / n);
}

FracSeries series_theta_deriv(const FracSeries& a)
{
    std::vector<mpq_class> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        long e = a.lead() + static_cast<long>(i);
        mpq_class factor(e, 24);
        factor.canonicalize();  // mpq_class(num, den) does not reduce by itself
        out[i] = a.coeffs()[i] * factor;
    }
    return FracSeries(a.lead(), std::move(out), a.order());
}

FracSeries series_truncate(const FracSeries& a, long order)
{
    if (order >= a.order()) {
        FracSeries s = a;
        return s;
    }
    if (a.is_zero() || order <= a.lead()) return FracSeries::zero(order);
    long keep = std::min<long>(order - a.lead(), static_cast<long>(a.coeffs().size()));
    std::vector<mpq_class> out(a.coeffs().begin(), a.coeffs().begin() + keep);
    return FracSeries(a.lead(), std::move(out), order);
}

std::optional<Mismatch> first_mismatch(const FracSeries& a, const FracSeries& b)
{
    long order = std::min(a.order(), b.order());
    long lo = std::min(a.is_zero() ? order : a.lead(), b.is_zero() ? order : b.lead());
    long hi = std::min(order,
                       std::max(a.is_zero() ? lo : a.lead() + static_cast<long>(a.coeffs().size()),
                                b.is_zero() ? lo : b.lead() + static_cast<long>(b.coeffs().size())));
    for (long e = lo; e < hi; ++e) {
        mpq_class x = a.coeff_at(e);
        mpq_class y = b.coeff_at(e);
        if (x != y) return Mismatch{e, x, y};
    }
    return std::nullopt;
}

bool agree_through_order(const FracSeries& a, const FracSeries& b)
{
    return !first_mismatch(a, b).has_value();
}

// ---------------------------------------------------------------------------
// PrefixedSeries

PrefixedSeries::PrefixedSeries(Scalar scalar, FracSeries series)
    : scalar_(std::move(scalar)), series_(std::move(series))
{
    if (scalar_.is_zero()) {
        series_ = FracSeries::zero(series_.order());
        scalar_ = Scalar::one();
        return;
    }
    if (series_.is_zero()) {
        scalar_ = Scalar::one();
        return;
    }
    const mpq_class& lc = series_.coeffs()[0];
    if (lc != 1) {
        scalar_ = scalar_ * Scalar::rational(lc);
        series_ = series_scale(1 / lc, series_);
    }
}

PrefixedSeries PrefixedSeries::operator*(const PrefixedSeries& o) const
{
    return PrefixedSeries(scalar_ * o.scalar_, series_mul(series_, o.series_));
}

PrefixedSeries PrefixedSeries::pow(unsigned long k) const
{
    return PrefixedSeries(scalar_.pow(static_cast<long>(k)), series_pow(series_, k));
}

PrefixedSeries PrefixedSeries::scale(const Scalar& s) const
{
    return PrefixedSeries(scalar_ * s, series_);
}

PrefixedSeries PrefixedSeries::operator+(const PrefixedSeries& o) const
{
    if (is_zero()) {
        return PrefixedSeries(o.scalar_, series_truncate(o.series_, std::min(series_.order(), o.series_.order())));
    }
    if (o.is_zero()) {
        return PrefixedSeries(scalar_, series_truncate(series_, std::min(series_.order(), o.series_.order())));
    }
    if (scalar_.a() != o.scalar_.a() || scalar_.b() != o.scalar_.b() ||
        scalar_.c() != o.scalar_.c() || scalar_.d() != o.scalar_.d()) {
        throw ScalarMismatch("cannot add series with different irrational prefactors: " +
                             scalar_.str() + " vs " + o.scalar_.str());
    }
    Scalar sig(mpq_class(1), scalar_.a(), scalar_.b(), scalar_.c(), scalar_.d());
    FracSeries combined = series_add(series_scale(scalar_.r(), series_),
                                     series_scale(o.scalar_.r(), o.series_));
    return PrefixedSeries(sig, std::move(combined));
}

PrefixedSeries PrefixedSeries::operator-(const PrefixedSeries& o) const
{
    return *this + PrefixedSeries(o.scalar_.negated(), o.series_);
}

FracSeries PrefixedSeries::to_plain() const
{
    if (is_zero()) return FracSeries::zero(series_.order());
    if (!scalar_.is_rational())
        throw ScalarMismatch("prefactor does not cancel to a rational: " + scalar_.str());
    return series_scale(scalar_.r(), series_);
}

std::string PrefixedSeries::str(std::size_t max_terms) const
{
    return "(" + scalar_.str() + ") * [" + series_.str(max_terms) + "]";
}

std::optional<Mismatch> first_mismatch(const PrefixedSeries& a, const PrefixedSeries& b)
{
    return first_mismatch(a.to_plain(), b.to_plain());
}

}  // namespace etabridge
