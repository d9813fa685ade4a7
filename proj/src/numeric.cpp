#include "etabridge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace etabridge::num {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double sqr(double x) { return x * x; }

}  // namespace

Lattice::Lattice(cplx o1, cplx o2) : omega1(o1), omega2(o2)
{
    if (std::abs(o1) == 0.0 || std::abs(o2) == 0.0) throw DegenerateLattice();
    if (std::imag(o2 / o1) <= 0.0) throw DegenerateLattice();
}

cplx eval_scalar(const Scalar& s) { return s.to_complex(); }

cplx eval_series(const FracSeries& s, cplx tau)
{
    if (std::imag(tau) <= 0.0) throw NotInUpperHalfPlane();
    if (s.is_zero()) return {0.0, 0.0};
    // Horner in q over the unit grid, one initial fractional power.
    const cplx q = std::exp(cplx(0.0, kTwoPi) * tau);
    const cplx q24 = std::exp(cplx(0.0, kTwoPi) * tau / 24.0);
    cplx acc(0.0, 0.0);
    const auto& c = s.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= q24;
        if (c[i] != 0) acc += cplx(c[i].get_d(), 0.0);
    }
    // multiply by q^{lead/24}
    long lead = s.lead();
    long whole = lead / 24;
    long frac = lead % 24;
    acc *= std::pow(q, static_cast<double>(whole));
    if (frac != 0) acc *= std::pow(q24, static_cast<double>(frac));
    return acc;
}

cplx eval_prefixed(const PrefixedSeries& p, cplx tau)
{
    return eval_scalar(p.scalar()) * eval_series(p.series(), tau);
}

cplx eval_form(forms::FormId id, cplx tau, long order_q, double tail_target)
{
    if (std::imag(tau) <= 0.0) throw NotInUpperHalfPlane();
    const double absq = std::exp(-kTwoPi * std::imag(tau));
    const double tail = std::pow(absq, static_cast<double>(order_q)) / (1.0 - absq);
    if (!(tail < tail_target))
        throw PrecisionUnreachable("tail estimate " + std::to_string(tail) +
                                   " misses the target at Im tau = " +
                                   std::to_string(std::imag(tau)));
    return eval_prefixed(forms::build_form(id, order_q), tau);
}

EllipticModel lattice_invariants(const Lattice& L, double radius)
{
    const double a1 = std::abs(L.omega1), a2 = std::abs(L.omega2);
    if (radius < 10.0 * std::max(a1, a2))
        throw Error("radius must be at least 10 * max(|omega1|, |omega2|)");
    // Gram matrix and its smallest eigenvalue give the enumeration box.
    const double g11 = std::norm(L.omega1);
    const double g22 = std::norm(L.omega2);
    const double g12 = std::real(L.omega1 * std::conj(L.omega2));
    const double tr = g11 + g22, det = g11 * g22 - g12 * g12;
    if (det <= 0.0) throw DegenerateLattice();
    const double lam_min = (tr - std::sqrt(tr * tr - 4.0 * det)) / 2.0;
    const long box = static_cast<long>(std::ceil(radius / std::sqrt(lam_min))) + 1;
    const double r2cut = radius * radius;

    cplx s4(0.0, 0.0), s6(0.0, 0.0);
    for (long m = -box; m <= box; ++m) {
        for (long n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            const double mm = static_cast<double>(m), nn = static_cast<double>(n);
            const double norm2 = g11 * mm * mm + 2.0 * g12 * mm * nn + g22 * nn * nn;
            if (norm2 > r2cut) continue;
            const cplx w = mm * L.omega1 + nn * L.omega2;
            const cplx w2 = w * w;
            const cplx iw2 = 1.0 / w2;
            const cplx iw4 = iw2 * iw2;
            s4 += iw4;
            s6 += iw4 * iw2;
        }
    }
    // tail: point density 1/area, sum_{|w|>R} |w|^-k ~ (2 pi/area) R^{2-k}/(k-2)
    const double area = std::abs(std::imag(std::conj(L.omega1) * L.omega2));
    const double safety = 1.5;
    EllipticModel model;
    model.g2 = 60.0 * s4;
    model.g3 = 140.0 * s6;
    model.g2_err = safety * 60.0 * M_PI / (area * sqr(radius));
    model.g3_err = safety * 140.0 * M_PI / (2.0 * area * sqr(sqr(radius)));
    return model;
}

cplx mu_factor(cplx tau, long order_q)
{
    const cplx eta = eval_form(forms::FormId::eta(), tau, order_q);
    return kTwoPi * std::pow(3.0, -0.25) * eta * eta;
}

Lattice scaled_lattice(cplx tau, long order_q)
{
    const cplx mu = mu_factor(tau, order_q);
    return Lattice(mu, mu * tau);
}

// ---------------------------------------------------------------------------
// Weierstrass functions via the nome series after basis reduction

namespace {

struct ReducedLattice {
    cplx omega1;  // scale
    cplx tau;     // reduced: |Re| <= 1/2 + eps, |tau| >= 1 - eps
};

ReducedLattice lagrange_reduce(const Lattice& L)
{
    cplx w1 = L.omega1, w2 = L.omega2;
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(w2) < std::abs(w1)) std::swap(w1, w2);
        const double m = std::round(std::real(w2 * std::conj(w1)) / std::norm(w1));
        if (m == 0.0) break;
        w2 -= m * w1;
    }
    if (std::abs(w2) < std::abs(w1)) std::swap(w1, w2);
    cplx tau = w2 / w1;
    if (std::imag(tau) < 0.0) tau = -tau;  // same lattice set
    return {w1, tau};
}

// wp and wp' on [1, tau] through the absolutely convergent u,q series
// (u = e^{2 pi i z}, q = e^{2 pi i tau}):
//   wp  = (2 pi i)^2 [ 1/12 + u/(1-u)^2
//           + sum_{n>=1} ( q^n u/(1-q^n u)^2 + q^n/u/(1-q^n/u)^2 - 2 q^n/(1-q^n)^2 ) ]
//   wp' = (2 pi i)^3 [ u(1+u)/(1-u)^3
//           + sum_{n>=1} ( q^n u (1+q^n u)/(1-q^n u)^3 - (q^n/u)(1+q^n/u)/(1-q^n/u)^3 ) ]
WpValue wp_unit(cplx z, cplx tau)
{
    const cplx q = std::exp(cplx(0.0, kTwoPi) * tau);
    const cplx u = std::exp(cplx(0.0, kTwoPi) * z);
    const cplx I2 = cplx(0.0, kTwoPi) * cplx(0.0, kTwoPi);
    const cplx I3 = I2 * cplx(0.0, kTwoPi);

    cplx X = u / ((1.0 - u) * (1.0 - u)) + 1.0 / 12.0;
    cplx Y = u * (1.0 + u) / std::pow(1.0 - u, 3);
    cplx qn(1.0, 0.0);
    for (int n = 1; n <= 256; ++n) {
        qn *= q;
        const cplx a = qn * u, b = qn / u;
        const cplx ta = a / ((1.0 - a) * (1.0 - a));
        const cplx tb = b / ((1.0 - b) * (1.0 - b));
        const cplx tc = qn / ((1.0 - qn) * (1.0 - qn));
        X += ta + tb - 2.0 * tc;
        Y += a * (1.0 + a) / std::pow(1.0 - a, 3) - b * (1.0 + b) / std::pow(1.0 - b, 3);
        const double mag = std::abs(a) + std::abs(b) + std::abs(qn);
        if (mag < 1e-18) break;
    }
    return {I2 * X, I3 * Y};
}

}  // namespace

WpValue wp_eval(cplx z, const Lattice& L)
{
    ReducedLattice R = lagrange_reduce(L);
    // coordinates of z in the reduced basis, folded near the origin cell
    cplx zr = z / R.omega1;
    const double b = std::imag(zr) / std::imag(R.tau);
    const double bf = b - std::round(b);
    const double a = std::real(zr) - std::real(R.tau) * b;
    const double af = a - std::round(a);
    cplx zf = af + bf * R.tau;
    const double dist = std::abs(zf);
    if (dist < 1e-9) throw OnLattice();
    WpValue w = wp_unit(zf, R.tau);
    const cplx s = R.omega1;
    return {w.p / (s * s), w.p_prime / (s * s * s)};
}

const Lattice& l0_lattice()
{
    static const Lattice L0 = [] {
        // c^6 = g3([1, rho]) = (2 pi)^6/216 * E6(rho); E6 evaluated from the
        // exact series at the corner point.
        const cplx rho(-0.5, std::sqrt(3.0) / 2.0);
        const cplx e6 = eval_form(forms::FormId::e6(), rho, 96);
        const double g3 = std::real(std::pow(kTwoPi, 6) / 216.0 * e6);
        const double c = std::pow(g3, 1.0 / 6.0);
        return Lattice(cplx(c, 0.0), c * rho);
    }();
    return L0;
}

cplx invert_wp(cplx u0, const Lattice& L)
{
    // branch values first: wp' vanishes exactly at the half periods
    const std::array<cplx, 3> halves{L.omega1 * 0.5, L.omega2 * 0.5,
                                     (L.omega1 + L.omega2) * 0.5};
    const double scale = 1.0 + std::abs(u0);
    for (const cplx& h : halves) {
        const cplx e = wp_eval(h, L).p;
        if (std::abs(u0 - e) < 1e-8 * scale) throw HalfPeriodSingularity();
    }

    // coarse grid of starting points in the fundamental cell
    struct Start {
        cplx z;
        double err;
    };
    std::vector<Start> starts;
    const int G = 13;
    for (int i = 1; i < G; ++i) {
        for (int j = 1; j < G; ++j) {
            const cplx z = (static_cast<double>(i) / G) * L.omega1 +
                           (static_cast<double>(j) / G) * L.omega2;
            WpValue w = wp_eval(z, L);
            if (std::abs(w.p_prime) < 1e-8) continue;
            starts.push_back({z, std::abs(w.p - u0)});
        }
    }
    std::sort(starts.begin(), starts.end(),
              [](const Start& x, const Start& y) { return x.err < y.err; });

    const std::size_t tries = std::min<std::size_t>(starts.size(), 12);
    for (std::size_t k = 0; k < tries; ++k) {
        cplx z = starts[k].z;
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            WpValue w = wp_eval(z, L);
            const cplx f = w.p - u0;
            if (std::abs(f) < 1e-12 * scale) {
                ok = true;
                break;
            }
            if (std::abs(w.p_prime) < 1e-12) break;
            cplx step = f / w.p_prime;
            // damp wild steps out of the cell
            const double cap = 0.5 * std::abs(L.omega1);
            if (std::abs(step) > cap) step *= cap / std::abs(step);
            z -= step;
        }
        if (!ok) continue;
        // representative with coordinates in [0,1) in the lattice basis
        const double det = std::imag(std::conj(L.omega1) * L.omega2);
        const double bb = std::imag(std::conj(L.omega1) * z) / det;
        const double aa = -std::imag(z * std::conj(L.omega2)) / det;
        const double ar = aa - std::floor(aa);
        const double br = bb - std::floor(bb);
        return ar * L.omega1 + br * L.omega2;
    }
    throw NoConvergence("Newton iteration failed from every grid start");
}

std::vector<std::pair<cplx, cplx>> orbit_points(cplx u, cplx t)
{
    const cplx residual = t * t - (4.0 * u * u * u - 1.0);
    if (std::abs(residual) > 1e-9 * (1.0 + std::norm(t) + std::abs(std::pow(u, 3))))
        throw NotOnCurve();
    const cplx rho(-0.5, std::sqrt(3.0) / 2.0);
    std::vector<std::pair<cplx, cplx>> pts;
    const double tol = 1e-9 * (1.0 + std::abs(u) + std::abs(t));
    for (int k = 0; k < 3; ++k) {
        const cplx uk = std::pow(rho, static_cast<double>(k)) * u;
        for (const cplx tk : {t, -t}) {
            bool dup = false;
            for (const auto& [pu, pt] : pts)
                if (std::abs(pu - uk) < tol && std::abs(pt - tk) < tol) dup = true;
            if (!dup) pts.emplace_back(uk, tk);
        }
    }
    return pts;
}

RoundtripReport roundtrip_check(cplx tau, long order_q)
{
    if (std::imag(tau) < 0.5)
        throw Error("roundtrip_check needs Im tau >= 0.5");
    RoundtripReport rep;
    rep.u = eval_form(forms::FormId::u(), tau, order_q);
    rep.t = eval_form(forms::FormId::t(), tau, order_q);
    const Lattice& L0 = l0_lattice();
    rep.z = invert_wp(rep.u, L0);
    WpValue w = wp_eval(rep.z, L0);
    rep.r1 = std::abs(w.p - rep.u);
    rep.r2 = std::min(std::abs(w.p_prime - rep.t), std::abs(w.p_prime + rep.t));
    rep.r3 = std::abs(rep.t * rep.t - (4.0 * std::pow(rep.u, 3) - 1.0));

    // bridge: du/dtau = s eta^4 t with s = 2 k pi 2^{1/3}/sqrt(3), k = -i
    const PrefixedSeries u_form = forms::build_form(forms::FormId::u(), order_q);
    const cplx du_dtau = cplx(0.0, kTwoPi) * eval_scalar(u_form.scalar()) *
                         eval_series(series_theta_deriv(u_form.series()), tau);
    const cplx eta = eval_form(forms::FormId::eta(), tau, order_q);
    const cplx eta4 = std::pow(eta, 4);
    const cplx s = cplx(0.0, -1.0) * kTwoPi * std::pow(2.0, 1.0 / 3.0) / std::sqrt(3.0);
    rep.bridge_ratio = du_dtau / (eta4 * rep.t);
    rep.r4 = std::abs(du_dtau - s * eta4 * rep.t) / std::abs(s * eta4 * rep.t);
    return rep;
}

// ---------------------------------------------------------------------------
// eta^8 via modular reduction

std::pair<cplx, std::array<long, 4>> reduce_to_fundamental(cplx tau)
{
    if (std::imag(tau) <= 0.0) throw NotInUpperHalfPlane();
    long a = 1, b = 0, c = 0, d = 1;  // accumulated gamma with tau_F = gamma tau
    cplx t = tau;
    for (int iter = 0; iter < 256; ++iter) {
        const double n = std::round(std::real(t));
        if (n != 0.0) {
            const long ln = static_cast<long>(n);
            // apply T^{-n}
            a -= ln * c;
            b -= ln * d;
            t -= n;
        }
        if (std::norm(t) < 1.0 - 1e-15) {
            // apply S: tau -> -1/tau
            const long na = -c, nb = -d, nc = a, nd = b;
            a = na;
            b = nb;
            c = nc;
            d = nd;
            t = -1.0 / t;
        } else {
            break;
        }
    }
    // recompute in one step for accuracy
    const cplx tf = (static_cast<double>(a) * tau + static_cast<double>(b)) /
                    (static_cast<double>(c) * tau + static_cast<double>(d));
    return {tf, {a, b, c, d}};
}

namespace {

double dedekind_sum(long d, long c)
{
    // s(d, c) for c > 0
    double s = 0.0;
    const long dd = ((d % c) + c) % c;
    for (long n = 1; n < c; ++n) {
        const double x = static_cast<double>(n) / static_cast<double>(c);
        const long r = (n * dd) % c;
        const double y = static_cast<double>(r) / static_cast<double>(c);
        const double saw = (r == 0) ? 0.0 : y - 0.5;
        s += (x - 0.5) * saw;
    }
    return s;
}

// eps(gamma)^8 for the eta multiplier, gamma with c > 0:
// eps = exp(pi i ((a+d)/(12c) - s(d,c) - 1/4))
cplx eta8_multiplier(long a, long /*b*/, long c, long d)
{
    const double phase = 8.0 * M_PI *
                         (static_cast<double>(a + d) / (12.0 * static_cast<double>(c)) -
                          dedekind_sum(d, c) - 0.25);
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

cplx eta8_eval(cplx tau)
{
    auto [tf, g] = reduce_to_fundamental(tau);
    auto [a, b, c, d] = g;
    const cplx eta_f = eval_form(forms::FormId::eta(), tf, 72);
    const cplx eta8_f = std::pow(eta_f, 4) * std::pow(eta_f, 4);
    if (c == 0) {
        // gamma = +-T^n: eta^8(tau + n) = e^{2 pi i n/3} eta^8(tau)
        const long n = (a > 0) ? b : -b;
        const double arg = -kTwoPi * static_cast<double>(n) / 3.0;
        return eta8_f * cplx(std::cos(arg), std::sin(arg));
    }
    long aa = a, bb = b, cc = c, dd = d;
    if (cc < 0) {
        aa = -aa;
        bb = -bb;
        cc = -cc;
        dd = -dd;
    }
    // eta^8(gamma tau) = eps8 (c tau + d)^4 eta^8(tau)
    const cplx j = static_cast<double>(cc) * tau + static_cast<double>(dd);
    const cplx eps8 = eta8_multiplier(aa, bb, cc, dd);
    return eta8_f / (eps8 * std::pow(j, 4));
}

}  // namespace etabridge::num
