#ifndef ETABRIDGE_QSERIES_HPP
#define ETABRIDGE_QSERIES_HPP

// Exact arithmetic on truncated q-series whose exponents live on the grid
// (1/24)Z.  All coefficients are big rationals; there is no floating point
// in this module, so identity checks are exact pass/fail.
//
// Conventions:
//   * exponents are stored as integer numerators in units of 1/24, so the
//     series  sum_i c_i q^{(lead+i)/24}  is (lead, [c_0, c_1, ...], order);
//   * `order` is the exclusive truncation exponent in the same units: the
//     coefficient of q^{e/24} is known exactly for every e < order;
//   * the zero series is canonical: empty coefficient list, lead = 0.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace etabridge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroSeries : Error {
    ZeroSeries() : Error("inverse of the zero series") {}
};
struct NonUnitLeading : Error {
    NonUnitLeading() : Error("nth root requires leading coefficient 1") {}
};
struct ExponentNotDivisible : Error {
    ExponentNotDivisible() : Error("leading exponent not divisible by root degree") {}
};
struct ScalarMismatch : Error {
    using Error::Error;
};

// Exact symbolic prefactor  r * pi^a * sqrt(3)^b * 2^(c/3) * zeta12^d  with
// zeta12 = e^{i pi/6}.  Canonical form: b in {0,1}, c in {0,1,2} and
// d in [0,6) -- since zeta12^6 = -1 is rational, the sign is folded into r
// so that field-wise equality is decidable.
class Scalar {
public:
    Scalar() : r_(1) {}
    explicit Scalar(mpq_class r, long a = 0, long b = 0, long c = 0, long d = 0)
        : r_(std::move(r)), a_(a), b_(b), c_(c), d_(d)
    {
        canonicalize();
    }

    static Scalar zero() { return Scalar(mpq_class(0)); }
    static Scalar one() { return Scalar(); }
    static Scalar rational(mpq_class r) { return Scalar(std::move(r)); }
    static Scalar pi_pow(long a) { return Scalar(mpq_class(1), a); }
    static Scalar sqrt3_pow(long b) { return Scalar(mpq_class(1), 0, b); }
    static Scalar cbrt2_pow(long c) { return Scalar(mpq_class(1), 0, 0, c); }
    static Scalar zeta12_pow(long d) { return Scalar(mpq_class(1), 0, 0, 0, d); }

    const mpq_class& r() const { return r_; }
    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    long d() const { return d_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1 && a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return is_zero() || (a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0); }

    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar inverse() const;
    Scalar pow(long k) const;
    Scalar negated() const;

    bool operator==(const Scalar& o) const
    {
        return r_ == o.r_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    mpq_class r_;
    long a_ = 0;  // power of pi
    long b_ = 0;  // power of sqrt(3), canonical in {0,1}
    long c_ = 0;  // power of 2^{1/3}, canonical in {0,1,2}
    long d_ = 0;  // power of zeta12, canonical in [0,6)
    void canonicalize();
};

class FracSeries {
public:
    // Sentinel for "known to all orders" (exact polynomials).
    static constexpr long kOrderInf = std::numeric_limits<long>::max() / 4;

    FracSeries() = default;  // canonical zero, unbounded order
    FracSeries(long lead, std::vector<mpq_class> coeffs, long order);

    static FracSeries zero(long order = kOrderInf);
    static FracSeries constant(const mpq_class& v, long order = kOrderInf);
    static FracSeries one(long order = kOrderInf) { return constant(1, order); }
    // v * q^{exp_units/24}
    static FracSeries monomial(const mpq_class& v, long exp_units, long order = kOrderInf);

    bool is_zero() const { return coeffs_.empty(); }
    long lead() const { return lead_; }
    long order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    // Coefficient of q^{exp_units/24}; zero for exponents inside the known
    // window that carry no term.  It is the caller's job to stay below
    // order() -- use known(e) when in doubt.
    mpq_class coeff_at(long exp_units) const;
    bool known(long exp_units) const { return exp_units < order_; }

    // Structural equality (lead, coefficients and order all agree).
    bool operator==(const FracSeries& o) const
    {
        return lead_ == o.lead_ && order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const FracSeries& o) const { return !(*this == o); }

    std::string str(std::size_t max_terms = 12) const;

private:
    long lead_ = 0;
    long order_ = kOrderInf;
    std::vector<mpq_class> coeffs_;
    void normalize();
    friend FracSeries series_add(const FracSeries&, const FracSeries&);
    friend FracSeries series_mul(const FracSeries&, const FracSeries&);
    friend FracSeries series_scale(const mpq_class&, const FracSeries&);
    friend FracSeries series_inv(const FracSeries&);
    friend FracSeries series_nth_root(const FracSeries&, long);
    friend FracSeries series_theta_deriv(const FracSeries&);
    friend FracSeries series_truncate(const FracSeries&, long);
};

FracSeries series_add(const FracSeries& a, const FracSeries& b);
FracSeries series_sub(const FracSeries& a, const FracSeries& b);
FracSeries series_neg(const FracSeries& a);
FracSeries series_scale(const mpq_class& c, const FracSeries& a);
// Cauchy product; order = min(order(a)+lead(b), order(b)+lead(a)).
FracSeries series_mul(const FracSeries& a, const FracSeries& b);
FracSeries series_pow(const FracSeries& a, unsigned long k);
// Multiplicative inverse through the truncation window; requires a nonzero
// series with finite order.  lead(inv) = -lead(a).
FracSeries series_inv(const FracSeries& a);
// Principal n-th root (leading coefficient stays 1).
FracSeries series_nth_root(const FracSeries& a, long n);
// theta_q = q d/dq: the coefficient of q^{e/24} is multiplied by e/24.
FracSeries series_theta_deriv(const FracSeries& a);
FracSeries series_truncate(const FracSeries& a, long order);

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) { return series_add(a, b); }
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) { return series_sub(a, b); }
inline FracSeries operator-(const FracSeries& a) { return series_neg(a); }
inline FracSeries operator*(const FracSeries& a, const FracSeries& b) { return series_mul(a, b); }
inline FracSeries operator*(const mpq_class& c, const FracSeries& a) { return series_scale(c, a); }

struct Mismatch {
    long exp_units = 0;
    mpq_class lhs, rhs;
};

// First exponent below min(order(a), order(b)) where the coefficients
// disagree, if any.
std::optional<Mismatch> first_mismatch(const FracSeries& a, const FracSeries& b);
// Equality of all coefficients through min(order(a), order(b)).
bool agree_through_order(const FracSeries& a, const FracSeries& b);

// scalar * series, with the series kept monic: a nonzero leading coefficient
// is absorbed into the scalar on construction.
class PrefixedSeries {
public:
    PrefixedSeries() : scalar_(Scalar::one()) {}
    PrefixedSeries(Scalar scalar, FracSeries series);

    const Scalar& scalar() const { return scalar_; }
    const FracSeries& series() const { return series_; }
    bool is_zero() const { return scalar_.is_zero() || series_.is_zero(); }

    PrefixedSeries operator*(const PrefixedSeries& o) const;
    PrefixedSeries pow(unsigned long k) const;
    // Addition requires both scalars to share the irrational signature
    // (pi, sqrt3, cbrt2, zeta12 exponents); throws ScalarMismatch otherwise.
    PrefixedSeries operator+(const PrefixedSeries& o) const;
    PrefixedSeries operator-(const PrefixedSeries& o) const;
    PrefixedSeries scale(const Scalar& s) const;

    // Folds a rational scalar into the coefficients; throws ScalarMismatch
    // when the prefactor is irrational (a wrong branch in an identity).
    FracSeries to_plain() const;

    std::string str(std::size_t max_terms = 12) const;

private:
    Scalar scalar_;
    FracSeries series_;
};

std::optional<Mismatch> first_mismatch(const PrefixedSeries& a, const PrefixedSeries& b);

}  // namespace etabridge

#endif
