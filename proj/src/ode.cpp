#include "etabridge/ode.hpp"

#include "etabridge/cosets.hpp"

#include <algorithm>
#include <cmath>

namespace etabridge::ode {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// state: the 2x2 transfer matrix M with M' = [[0, 1], [-kappa, 0]] M along tau
struct State {
    Mat2c m;
};

State axpy(const State& s, double h, const std::array<Mat2c, 7>& k, const double* w, int n)
{
    State out = s;
    for (int j = 0; j < n; ++j) {
        if (w[j] == 0.0) continue;
        for (int i = 0; i < 4; ++i) out.m[static_cast<std::size_t>(i)] += h * w[j] * k[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace

Mat2c mat_mul(const Mat2c& x, const Mat2c& y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

double s_squared()
{
    const double s_abs = 2.0 * M_PI * std::pow(2.0, 1.0 / 3.0) / std::sqrt(3.0);
    return -s_abs * s_abs;  // k^2 = (-i)^2 = -1
}

std::string generator_name(Generator g)
{
    switch (g) {
        case Generator::A: return "A";
        case Generator::B: return "B";
        case Generator::Comm: return "comm";
    }
    return "?";
}

namespace {

// kappa(tau) = (b s^2 / 2) eta^8(tau); on the reflected branch eta^8 is the
// conjugate-symmetric extension to the lower half-plane.
cplx kappa_at(cplx b, cplx tau, bool lower)
{
    cplx e8 = lower ? std::conj(num::eta8_eval(std::conj(tau))) : num::eta8_eval(tau);
    return b * (s_squared() / 2.0) * e8;
}

Mat2c rhs(const Mat2c& m, cplx dir, cplx kappa)
{
    // d/dsigma [[y1, y2], [y1', y2']] = dir * [[row2], [-kappa * row1]]
    return {dir * m[2], dir * m[3], -dir * kappa * m[0], -dir * kappa * m[1]};
}

double state_norm(const Mat2c& m)
{
    double s = 0.0;
    for (const cplx& v : m) s = std::max(s, std::abs(v));
    return s;
}

Mat2c segment_transfer(cplx b, cplx from, cplx to, double max_step, const OdeConfig& cfg,
                       long& steps_used)
{
    const cplx dir = to - from;
    const double len = std::abs(dir);
    Mat2c m{1.0, 0.0, 0.0, 1.0};
    if (len == 0.0) return m;
    double sigma = 0.0;
    const double h_cap = max_step > 0.0 ? std::min(1.0, max_step / len) : 1.0;
    double h = std::min(0.05, h_cap);
    const double h_min = 1e-10;
    auto kap = [&](double s) { return kappa_at(b, from + s * dir, false); };
    while (sigma < 1.0) {
        if (steps_used++ > cfg.max_steps)
            throw StepFailure("step budget exhausted on a path segment");
        h = std::min(h, 1.0 - sigma);
        std::array<Mat2c, 7> k;
        k[0] = rhs(m, dir, kap(sigma));
        {
            const double w[] = {a21};
            k[1] = rhs(axpy({m}, h, k, w, 1).m, dir, kap(sigma + c2 * h));
        }
        {
            const double w[] = {a31, a32};
            k[2] = rhs(axpy({m}, h, k, w, 2).m, dir, kap(sigma + c3 * h));
        }
        {
            const double w[] = {a41, a42, a43};
            k[3] = rhs(axpy({m}, h, k, w, 3).m, dir, kap(sigma + c4 * h));
        }
        {
            const double w[] = {a51, a52, a53, a54};
            k[4] = rhs(axpy({m}, h, k, w, 4).m, dir, kap(sigma + c5 * h));
        }
        {
            const double w[] = {a61, a62, a63, a64, a65};
            k[5] = rhs(axpy({m}, h, k, w, 5).m, dir, kap(sigma + h));
        }
        Mat2c m5;
        {
            const double w[] = {b1, 0.0, b3, b4, b5, b6};
            m5 = axpy({m}, h, k, w, 6).m;
        }
        k[6] = rhs(m5, dir, kap(sigma + h));
        // embedded error estimate
        double err = 0.0;
        {
            const double w[] = {e1, 0.0, e3, e4, e5, e6, e7};
            Mat2c diff{};
            for (int j = 0; j < 7; ++j) {
                if (w[j] == 0.0) continue;
                for (int i = 0; i < 4; ++i)
                    diff[static_cast<std::size_t>(i)] += h * w[j] * k[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            }
            err = state_norm(diff) / std::max(1.0, state_norm(m5));
        }
        if (err <= cfg.tol) {
            m = m5;
            sigma += h;
        }
        const double grow = err > 0.0 ? 0.9 * std::pow(cfg.tol / err, 0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
        h = std::min(h, h_cap);
        if (h < h_min) throw StepFailure("step size underflow; tolerance unreachable");
    }
    return m;
}

void check_path(const PathSpec& path, const OdeConfig& cfg)
{
    if (path.vertices.size() < 2) throw Error("path needs at least two vertices");
    for (const cplx& v : path.vertices) {
        const double im = cfg.lower_half_plane ? -std::imag(v) : std::imag(v);
        if (im < cfg.im_floor)
            throw PathTooLow("path vertex below the imaginary-part floor");
    }
    for (std::size_t i = 1; i < path.vertices.size(); ++i)
        if (path.vertices[i] == path.vertices[i - 1])
            throw Error("consecutive path vertices coincide");
}

}  // namespace

TransportResult transport(cplx b, const PathSpec& path, cplx y0, cplx y0p, const OdeConfig& cfg)
{
    check_path(path, cfg);
    if (cfg.lower_half_plane) {
        // The reflected coefficient is the conjugate-symmetric extension, so
        // w(tau) = conj(y(conj tau)) turns the lower-half-plane problem into
        // the upper one with conjugated data.
        OdeConfig up = cfg;
        up.lower_half_plane = false;
        PathSpec mirrored;
        mirrored.max_step = path.max_step;
        for (const cplx& v : path.vertices) mirrored.vertices.push_back(std::conj(v));
        TransportResult r = transport(std::conj(b), mirrored, std::conj(y0), std::conj(y0p), up);
        for (cplx& v : r.transfer) v = std::conj(v);
        r.y = std::conj(r.y);
        r.yp = std::conj(r.yp);
        return r;
    }
    Mat2c m{1.0, 0.0, 0.0, 1.0};
    long steps = 0;
    for (std::size_t i = 1; i < path.vertices.size(); ++i)
        m = mat_mul(
            segment_transfer(b, path.vertices[i - 1], path.vertices[i], path.max_step, cfg, steps),
            m);
    TransportResult res;
    res.transfer = m;
    res.y = m[0] * y0 + m[1] * y0p;
    res.yp = m[2] * y0 + m[3] * y0p;
    res.wronskian_drift = std::abs(mat_det(m) - 1.0);
    res.steps = steps;
    return res;
}

namespace {

cosets::PSLMat generator_matrix(Generator gen)
{
    switch (gen) {
        case Generator::A: return cosets::mat_A();
        case Generator::B: return cosets::mat_B();
        case Generator::Comm: {
            const auto& A = cosets::mat_A();
            const auto& B = cosets::mat_B();
            return A * B * A.inverse() * B.inverse();  // [[-1,0],[-6,-1]] up to sign
        }
    }
    throw Error("unknown generator");
}

}  // namespace

MonodromyResult monodromy(cplx b, Generator gen, cplx basepoint, const OdeConfig& cfg)
{
    if (cfg.lower_half_plane) {
        OdeConfig up = cfg;
        up.lower_half_plane = false;
        MonodromyResult r = monodromy(std::conj(b), gen, std::conj(basepoint), up);
        for (cplx& v : r.matrix) v = std::conj(v);
        return r;
    }
    if (std::imag(basepoint) < 0.5) throw Error("monodromy basepoint needs Im tau >= 0.5");

    const cosets::PSLMat gm = generator_matrix(gen);
    const double a = static_cast<double>(gm.a), bb = static_cast<double>(gm.b),
                 c = static_cast<double>(gm.c), d = static_cast<double>(gm.d);
    const cplx target = (a * basepoint + bb) / (c * basepoint + d);

    PathSpec path;
    path.vertices = {basepoint, target};
    TransportResult tr = transport(b, path, cplx(1.0, 0.0), cplx(0.0, 0.0), cfg);

    // ytilde(tau) = (c tau + d) y(gamma tau):
    //   ytilde(tau0)  = j y(gamma tau0)
    //   ytilde'(tau0) = c y(gamma tau0) + j^{-1} y'(gamma tau0),  j = c tau0 + d
    const cplx j = c * basepoint + d;
    const Mat2c E{j, 0.0, c, 1.0 / j};

    MonodromyResult res;
    res.matrix = mat_mul(E, tr.transfer);
    res.wronskian_drift = tr.wronskian_drift;
    return res;
}

std::vector<MonodromyRecord> trace_scan(const std::vector<cplx>& b_grid, cplx basepoint,
                                        const OdeConfig& cfg)
{
    if (b_grid.empty()) throw Error("empty scan grid");
    std::vector<MonodromyRecord> records;
    records.reserve(b_grid.size());
    for (const cplx& b : b_grid) {
        MonodromyRecord rec;
        rec.b = b;
        rec.basepoint = basepoint;
        try {
            MonodromyResult ma = monodromy(b, Generator::A, basepoint, cfg);
            MonodromyResult mb = monodromy(b, Generator::B, basepoint, cfg);
            MonodromyResult mc = monodromy(b, Generator::Comm, basepoint, cfg);
            rec.trace_A = mat_trace(ma.matrix);
            rec.trace_B = mat_trace(mb.matrix);
            rec.trace_comm = mat_trace(mc.matrix);
            rec.wronskian_drift = std::max({ma.wronskian_drift, mb.wronskian_drift,
                                            mc.wronskian_drift});
            rec.valid = true;
            rec.parabolic_candidate = std::abs(rec.trace_comm - 2.0) < cfg.parabolic_band ||
                                      std::abs(rec.trace_comm + 2.0) < cfg.parabolic_band;
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace etabridge::ode
