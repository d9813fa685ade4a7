#ifndef ETABRIDGE_ODE_HPP
#define ETABRIDGE_ODE_HPP

// The accessory-parameter equation  y'' + (b s^2/2) eta^8(tau) y = 0 with
// s = -2 pi i 2^{1/3}/sqrt(3): complex-path transport, monodromy of the
// punctured-torus generators, and trace scans over b.
//
// There is no first-order term, so the Wronskian of a fundamental system is
// constant and every transfer/monodromy matrix is unimodular; the reported
// wronskian_drift measures |det - 1| of the integrated transfer.

#include "etabridge/numeric.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace etabridge::ode {

using num::cplx;

struct StepFailure : Error {
    using Error::Error;
};
struct PathTooLow : Error {
    using Error::Error;
};

using Mat2c = std::array<cplx, 4>;  // row major [[m00, m01], [m10, m11]]

inline cplx mat_trace(const Mat2c& m) { return m[0] + m[3]; }
inline cplx mat_det(const Mat2c& m) { return m[0] * m[3] - m[1] * m[2]; }
Mat2c mat_mul(const Mat2c& x, const Mat2c& y);

struct PathSpec {
    std::vector<cplx> vertices;
    double max_step = 0.05;
};

struct OdeConfig {
    double tol = 1e-12;          // local error target per step
    double im_floor = 1e-4;      // smallest admissible Im along a path
    double parabolic_band = 1e-3;
    bool lower_half_plane = false;  // integrate the reflected equation on L
    long max_steps = 200000;
};

struct TransportResult {
    cplx y, yp;
    Mat2c transfer;          // maps (y, y') at the start to (y, y') at the end
    double wronskian_drift;  // |det(transfer) - 1|
    long steps = 0;
};

TransportResult transport(cplx b, const PathSpec& path, cplx y0, cplx y0p,
                          const OdeConfig& cfg = {});

enum class Generator { A, B, Comm };
std::string generator_name(Generator g);

struct MonodromyResult {
    Mat2c matrix;
    double wronskian_drift;
};

// Continues the canonical fundamental system from the basepoint to
// gamma(basepoint) and expresses the pulled-back solutions
// ytilde(tau) = (c tau + d) y(gamma tau) in the original basis.
MonodromyResult monodromy(cplx b, Generator gen, cplx basepoint, const OdeConfig& cfg = {});

struct MonodromyRecord {
    cplx b;
    cplx trace_A, trace_B, trace_comm;
    double wronskian_drift = 0.0;
    cplx basepoint;
    bool valid = false;
    bool parabolic_candidate = false;
    std::string error;
};

std::vector<MonodromyRecord> trace_scan(const std::vector<cplx>& b_grid, cplx basepoint,
                                        const OdeConfig& cfg = {});

// s^2 with k = -i (a negative real number)
double s_squared();

}  // namespace etabridge::ode

#endif
