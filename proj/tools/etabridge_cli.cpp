// Command-line surface: exact q-expansions, the identity suites, the lattice
// decomposition, coset/genus data, E8 shell counts and the accessory
// parameter trace scan.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "etabridge/cosets.hpp"
#include "etabridge/detrng.hpp"
#include "etabridge/modforms.hpp"
#include "etabridge/numeric.hpp"
#include "etabridge/ode.hpp"
#include "etabridge/q8lattice.hpp"
#include "etabridge/qseries.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

using json = nlohmann::ordered_json;
using namespace etabridge;
using num::cplx;

namespace {

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

json scalar_json(const Scalar& s)
{
    json j;
    j["rational"] = mpq_str(s.r());
    j["pi_pow"] = s.a();
    j["sqrt3_pow"] = s.b();
    j["cbrt2_pow"] = s.c();
    j["zeta12_pow"] = s.d();
    return j;
}

json series_json(const FracSeries& s)
{
    json terms = json::array();
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        if (s.coeffs()[i] == 0) continue;
        json term;
        term["exp24"] = s.lead() + static_cast<long>(i);
        term["coeff"] = mpq_str(s.coeffs()[i]);
        terms.push_back(term);
    }
    json j;
    j["lead24"] = s.lead();
    j["order24"] = s.order();
    j["terms"] = terms;
    return j;
}

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json cplx_json(cplx z)
{
    json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

struct RunConfig {
    long order = 72;
    double tol_numeric = 1e-8;
    long box = 40;
    double im_floor = 0.5;
    std::uint64_t seed = 20240601;
};

int cmd_series(const std::string& form, const RunConfig& cfg)
{
    auto id = forms::FormId::parse(form);
    if (!id) {
        std::cerr << "unknown form '" << form << "'\n";
        return 2;
    }
    PrefixedSeries p = forms::build_form(*id, cfg.order);
    json out;
    out["form"] = id->name();
    out["order"] = cfg.order;
    out["scalar"] = scalar_json(p.scalar());
    out["series"] = series_json(p.series());
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify_exact(const RunConfig& cfg, bool inject_fault)
{
    json out;
    out["suite"] = "exact";
    out["order"] = cfg.order;
    json items = json::array();
    bool all_pass = true;
    for (forms::IdentityId id : forms::exact_suite()) {
        forms::IdentityReport rep = forms::verify_identity(id, cfg.order);
        if (inject_fault && id == forms::IdentityId::E8Sum) {
            // deliberately perturb one coefficient to exercise the failure path
            const long U = 24 * cfg.order + 1;
            FracSeries lhs = series_add(
                series_add(forms::build_form(forms::FormId::theta_pow8(2), cfg.order).to_plain(),
                           forms::build_form(forms::FormId::theta_pow8(3), cfg.order).to_plain()),
                forms::build_form(forms::FormId::theta_pow8(4), cfg.order).to_plain());
            lhs = series_add(lhs, FracSeries::monomial(1, 24 * 5, U));
            FracSeries rhs =
                series_scale(2, forms::build_form(forms::FormId::theta_e8(), cfg.order).to_plain());
            rep.mismatch = first_mismatch(lhs, rhs);
            rep.pass = !rep.mismatch.has_value();
        }
        json item;
        item["identity"] = forms::identity_name(id);
        item["pass"] = rep.pass;
        item["checked_through_24ths"] = rep.checked_units;
        if (rep.mismatch) {
            item["first_mismatch"] = {{"exp24", rep.mismatch->exp_units},
                                      {"lhs", mpq_str(rep.mismatch->lhs)},
                                      {"rhs", mpq_str(rep.mismatch->rhs)}};
        }
        items.push_back(item);
        all_pass = all_pass && rep.pass;
        std::cerr << (rep.pass ? "pass" : "FAIL") << "  " << forms::identity_name(id) << "\n";
    }
    out["identities"] = items;
    out["pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_verify_numeric(const RunConfig& cfg)
{
    json out;
    out["suite"] = "numeric";
    out["seed"] = cfg.seed;
    json items = json::array();
    bool all_pass = true;
    auto push = [&](const std::string& name, double residual, double tol) {
        json item;
        item["check"] = name;
        item["residual"] = residual;
        item["tol"] = tol;
        const bool ok = residual < tol;
        item["pass"] = ok;
        items.push_back(item);
        all_pass = all_pass && ok;
        std::cerr << (ok ? "pass" : "FAIL") << "  " << name << "  residual " << fmt_double(residual)
                  << "\n";
    };

    DetRng rng(cfg.seed);

    // eigenvalue table at seeded points: j_g^{-k} f(g tau) = lambda f(tau)
    double worst_eigen = 0.0;
    for (const forms::GRule& rule : forms::registered_g_rules()) {
        for (int i = 0; i < 5; ++i) {
            cplx tau = rng.tau(1.0, 1.8);
            cplx gt = -1.0 / (tau + 1.0);
            cplx jg = -(tau + 1.0);
            cplx lhs = std::pow(jg, -rule.weight) * num::eval_form(rule.id, gt, cfg.order);
            if (rule.theta_orbit) {
                // theta3^8 -> theta4^8 -> theta2^8 -> theta3^8
                int next = rule.id.arg == 3 ? 4 : (rule.id.arg == 4 ? 2 : 3);
                cplx rhs = num::eval_form(forms::FormId::theta_pow8(next), tau, cfg.order);
                worst_eigen = std::max(worst_eigen, std::abs(lhs - rhs) / std::abs(rhs));
            } else {
                cplx rhs = num::eval_scalar(rule.lambda) * num::eval_form(rule.id, tau, cfg.order);
                worst_eigen = std::max(worst_eigen, std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
    }
    push("g-eigenvalue-table", worst_eigen, cfg.tol_numeric);

    // weierstrass on L0
    const num::Lattice& L0 = num::l0_lattice();
    double worst_de = 0.0;
    for (int i = 0; i < 20; ++i) {
        double a = rng.uniform(0.08, 0.92), b = rng.uniform(0.08, 0.92);
        if (std::abs(a - 0.5) < 0.05 && std::abs(b - 0.5) < 0.05) continue;
        cplx z = a * L0.omega1 + b * L0.omega2;
        num::WpValue w = num::wp_eval(z, L0);
        cplx res = w.p_prime * w.p_prime - (4.0 * std::pow(w.p, 3) - 1.0);
        worst_de = std::max(worst_de, std::abs(res) / (1.0 + std::abs(4.0 * std::pow(w.p, 3))));
    }
    push("wp-differential-equation", worst_de, cfg.tol_numeric);

    // roundtrip residuals and the bridge constant
    double worst_r1 = 0.0, worst_r2 = 0.0, worst_spread = 0.0;
    cplx ratio0;
    for (int i = 0; i < 10; ++i) {
        cplx tau = rng.tau(1.0, 2.0);
        num::RoundtripReport rep = num::roundtrip_check(tau, cfg.order);
        worst_r1 = std::max(worst_r1, rep.r1);
        worst_r2 = std::max(worst_r2, rep.r2);
        if (i == 0)
            ratio0 = rep.bridge_ratio;
        else
            worst_spread = std::max(worst_spread,
                                    std::abs(rep.bridge_ratio - ratio0) / std::abs(ratio0));
    }
    push("roundtrip-r1", worst_r1, cfg.tol_numeric);
    push("roundtrip-r2", worst_r2, cfg.tol_numeric);
    push("bridge-ratio-spread", worst_spread, 1e-6);

    out["bridge_ratio"] = cplx_json(ratio0);
    out["checks"] = items;
    out["pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg, const std::string& style_name)
{
    q8::Style style = q8::Style::I;
    if (style_name == "I")
        style = q8::Style::I;
    else if (style_name == "II")
        style = q8::Style::II;
    else if (style_name == "III")
        style = q8::Style::III;
    else {
        std::cerr << "unknown style '" << style_name << "'\n";
        return 2;
    }
    q8::DecompositionReport rep = q8::verify_decomposition(cfg.box);
    json out;
    out["box_half_width"] = rep.box_half_width;
    out["pass"] = rep.pass;
    json classes = json::array();
    for (int k = 1; k <= 8; ++k) {
        q8::SublatticeRealization r = q8::realization(style, k);
        json cj;
        cj["k"] = k;
        auto [s, t] = q8::class_labels()[static_cast<std::size_t>(k - 1)];
        cj["label"] = {s, t};
        cj["count"] = rep.class_counts[static_cast<std::size_t>(k - 1)];
        cj["style"] = q8::style_name(style);
        cj["translate"] = {r.translate.x, r.translate.y};
        cj["basis"] = {{r.basis[0].x, r.basis[0].y}, {r.basis[1].x, r.basis[1].y}};
        cj["halfpoint"] = {r.halfpoint.x, r.halfpoint.y};
        classes.push_back(cj);
    }
    out["classes"] = classes;
    if (!rep.failures.empty()) out["failures"] = rep.failures;
    std::cout << out.dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_cosets(const std::string& group)
{
    auto id = cosets::parse_subgroup(group);
    if (!id) {
        std::cerr << "unknown group '" << group << "' (use gamma-prime, gamma2, gamma-c, "
                     "gamma-ns3-plus)\n";
        return 2;
    }
    cosets::CosetTable t = cosets::coset_enumerate(*id);
    cosets::CurveData cd = cosets::curve_data(t);
    json out;
    out["group"] = cosets::subgroup_name(*id);
    out["index"] = cd.index;
    out["genus"] = cd.genus;
    out["e2"] = cd.e2;
    out["e3"] = cd.e3;
    out["cusp_widths"] = cd.cusp_widths;
    json reps = json::array();
    for (const auto& r : t.reps) reps.push_back(r.str());
    out["coset_reps"] = reps;
    out["perm_S"] = t.perm_S.cycle_str();
    out["perm_T"] = t.perm_T.cycle_str();
    out["perm_g"] = t.perm_g.cycle_str();
    if (cd.index == 6) {
        auto [mu, sigma] = cosets::millington_perms(*id, cosets::labeling_s1());
        out["millington_mu"] = mu.cycle_str();
        out["millington_sigma"] = sigma.cycle_str();
        out["millington_mu_sigma"] = mu.after(sigma).cycle_str();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_e8(long max_m)
{
    auto r = q8::e8_count(static_cast<int>(max_m));
    json out;
    out["max_m"] = max_m;
    out["r"] = r;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_scan(const RunConfig& cfg, double re0, double re1, long nx, double im0, double im1,
             long ny, cplx basepoint)
{
    std::vector<cplx> grid;
    for (long i = 0; i < nx; ++i) {
        for (long j = 0; j < ny; ++j) {
            double re = nx == 1 ? re0 : re0 + (re1 - re0) * static_cast<double>(i) /
                                                  static_cast<double>(nx - 1);
            double im = ny == 1 ? im0 : im0 + (im1 - im0) * static_cast<double>(j) /
                                                  static_cast<double>(ny - 1);
            grid.emplace_back(re, im);
        }
    }
    ode::OdeConfig ocfg;
    ocfg.im_floor = std::min(0.001, cfg.im_floor);
    auto records = ode::trace_scan(grid, basepoint, ocfg);
    std::printf(
        "b_re,b_im,trace_a_re,trace_a_im,trace_b_re,trace_b_im,trace_comm_re,trace_comm_im,"
        "wronskian_drift,parabolic,valid,error\n");
    for (const auto& rec : records) {
        std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%.3e,%d,%d,%s\n", fmt_double(rec.b.real()).c_str(),
                    fmt_double(rec.b.imag()).c_str(), fmt_double(rec.trace_A.real()).c_str(),
                    fmt_double(rec.trace_A.imag()).c_str(), fmt_double(rec.trace_B.real()).c_str(),
                    fmt_double(rec.trace_B.imag()).c_str(),
                    fmt_double(rec.trace_comm.real()).c_str(),
                    fmt_double(rec.trace_comm.imag()).c_str(), rec.wronskian_drift,
                    rec.parabolic_candidate ? 1 : 0, rec.valid ? 1 : 0, rec.error.c_str());
    }
    for (const auto& rec : records)
        if (!rec.valid) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact modular-form identities, hexagonal lattice decompositions and "
                 "punctured-torus monodromy"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("ETABRIDGE_ORDER")) cfg.order = std::atol(env);
    app.add_option("--order", cfg.order, "truncation order in full q powers")
        ->check(CLI::Range(2L, 4000L));
    app.add_option("--tol-numeric", cfg.tol_numeric, "numeric residual tolerance");
    app.add_option("--box", cfg.box, "half width of the lattice test box");
    app.add_option("--im-floor", cfg.im_floor, "imaginary part floor for paths");
    app.add_option("--seed", cfg.seed, "seed for the deterministic test points");

    auto* series = app.add_subcommand("series", "print the exact q-expansion of a form");
    std::string form_name;
    series->add_option("form", form_name, "form name (eta, e4, u, t, theta3, jay, ...)")
        ->required();

    auto* verify = app.add_subcommand("verify", "run an identity or residual suite");
    std::string suite = "exact";
    bool inject_fault = false;
    verify->add_option("--suite", suite, "exact | numeric")->required();
    verify->add_flag("--inject-fault", inject_fault,
                     "perturb one coefficient to exercise the failure path");

    auto* decompose = app.add_subcommand("decompose", "verify the 8-class decomposition");
    std::string style = "I";
    decompose->add_option("--style", style, "realization style: I, II or III");

    auto* cosets_cmd = app.add_subcommand("cosets", "coset table, genus and cusp data");
    std::string group;
    cosets_cmd->add_option("--group", group, "gamma-prime | gamma2 | gamma-c | gamma-ns3-plus")
        ->required();

    auto* e8 = app.add_subcommand("e8", "E8 shell counts r(m)");
    long max_m = 12;
    e8->add_option("--max-m", max_m, "largest m")->check(CLI::Range(0L, 64L));

    auto* scan = app.add_subcommand("scan-lame", "trace scan over the accessory parameter b");
    double re0 = -0.1, re1 = 0.1, im0 = -0.1, im1 = 0.1;
    long nx = 5, ny = 5;
    double bp_re = 0.0, bp_im = 2.0;
    scan->add_option("--re-min", re0);
    scan->add_option("--re-max", re1);
    scan->add_option("--nx", nx)->check(CLI::Range(1L, 512L));
    scan->add_option("--im-min", im0);
    scan->add_option("--im-max", im1);
    scan->add_option("--ny", ny)->check(CLI::Range(1L, 512L));
    scan->add_option("--basepoint-re", bp_re);
    scan->add_option("--basepoint-im", bp_im);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed()) return cmd_series(form_name, cfg);
        if (verify->parsed()) {
            if (suite == "exact") return cmd_verify_exact(cfg, inject_fault);
            if (suite == "numeric") return cmd_verify_numeric(cfg);
            std::cerr << "unknown suite '" << suite << "'\n";
            return 2;
        }
        if (decompose->parsed()) return cmd_decompose(cfg, style);
        if (cosets_cmd->parsed()) return cmd_cosets(group);
        if (e8->parsed()) return cmd_e8(max_m);
        if (scan->parsed()) return cmd_scan(cfg, re0, re1, nx, im0, im1, ny, cplx(bp_re, bp_im));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
