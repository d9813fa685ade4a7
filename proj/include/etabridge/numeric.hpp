#ifndef ETABRIDGE_NUMERIC_HPP
#define ETABRIDGE_NUMERIC_HPP

// Complex-valued evaluation of the built forms and of the Weierstrass
// functions on explicit lattices: the euclidean side of the toolkit.
//
// Form evaluation is a truncated q-expansion with an explicit tail estimate;
// lattice invariants are direct Eisenstein sums over a disc with an analytic
// tail bound; wp/wp' use the absolutely convergent nome series after Lagrange
// reduction of the basis.

#include "etabridge/modforms.hpp"
#include "etabridge/qseries.hpp"

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace etabridge::num {

using cplx = std::complex<double>;

struct NotInUpperHalfPlane : Error {
    NotInUpperHalfPlane() : Error("tau must have positive imaginary part") {}
};
struct PrecisionUnreachable : Error {
    using Error::Error;
};
struct DegenerateLattice : Error {
    DegenerateLattice() : Error("lattice basis is degenerate") {}
};
struct OnLattice : Error {
    OnLattice() : Error("z is too close to a lattice point") {}
};
struct HalfPeriodSingularity : Error {
    HalfPeriodSingularity() : Error("target is a branch value (wp' vanishes there)") {}
};
struct NoConvergence : Error {
    using Error::Error;
};
struct NotOnCurve : Error {
    NotOnCurve() : Error("(u,t) does not satisfy t^2 = 4u^3 - 1") {}
};

struct Lattice {
    cplx omega1, omega2;
    Lattice(cplx o1, cplx o2);  // requires Im(o2/o1) > 0
    cplx tau() const { return omega2 / omega1; }
};

struct EllipticModel {
    cplx g2, g3;
    double g2_err = 0.0, g3_err = 0.0;  // absolute tail bounds of the sums
};

cplx eval_scalar(const Scalar& s);
// Partial sum of the series at q = e^{2 pi i tau} (exponents in 1/24 units).
cplx eval_series(const FracSeries& s, cplx tau);
cplx eval_prefixed(const PrefixedSeries& p, cplx tau);

// Numeric value of a built form.  The tail estimate |q|^{order}/(1-|q|) must
// reach tail_target, otherwise PrecisionUnreachable.
cplx eval_form(forms::FormId id, cplx tau, long order_q = 72, double tail_target = 1e-12);

// g2 = 60 sum' w^-4, g3 = 140 sum' w^-6 over 0 != |w| <= radius, with the
// analytic tail bounds reported in the result.
EllipticModel lattice_invariants(const Lattice& L, double radius);

// L(tau) = mu(tau) [1, tau] with mu = 2 pi 3^{-1/4} eta^2(tau)
Lattice scaled_lattice(cplx tau, long order_q = 72);
cplx mu_factor(cplx tau, long order_q = 72);

struct WpValue {
    cplx p, p_prime;
};
WpValue wp_eval(cplx z, const Lattice& L);

// The hexagonal lattice c [1, rho] normalized so that g2 = 0, g3 = 1;
// computed once and cached.
const Lattice& l0_lattice();

// z in the fundamental cell with wp(z) = u0, by Newton iteration from a
// coarse grid of starting points.
cplx invert_wp(cplx u0, const Lattice& L);

// the orbit {(rho^k u, +-t)} on t^2 = 4u^3 - 1, duplicates removed
std::vector<std::pair<cplx, cplx>> orbit_points(cplx u, cplx t);

struct RoundtripReport {
    cplx u, t, z;
    double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
    cplx bridge_ratio;  // (du/dtau) / (eta^4 t); the constant s with k = -i
};
// Round-trip H -> (u,t) -> z on L0 plus the differential bridge residual.
RoundtripReport roundtrip_check(cplx tau, long order_q = 72);

// eta^8 anywhere on H: reduces tau to the fundamental domain and applies the
// weight-4 transformation with the Dedekind-sum multiplier.  Usable at small
// Im(tau) where the raw q-series cannot reach precision.
cplx eta8_eval(cplx tau);

// tau_F = (a tau + b)/(c tau + d) in the fundamental domain; returns
// {tau_F, {a,b,c,d}}.
std::pair<cplx, std::array<long, 4>> reduce_to_fundamental(cplx tau);

}  // namespace etabridge::num

#endif
