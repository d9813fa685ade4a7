#include "etabridge/modforms.hpp"

#include "etabridge/q8lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace etabridge::forms {

namespace {

// sieve of sigma_k(n) for n = 1..m
std::vector<mpz_class> divisor_power_sums(long m, unsigned k)
{
    std::vector<mpz_class> s(static_cast<std::size_t>(m + 1));
    for (long d = 1; d <= m; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        for (long n = d; n <= m; n += d) s[static_cast<std::size_t>(n)] += dk;
    }
    return s;
}

long lead_units(FormId id)
{
    switch (id.tag) {
        case FormTag::Eta: return 1;
        case FormTag::EtaPow: return id.arg;
        case FormTag::E2:
        case FormTag::E4:
        case FormTag::E6:
        case FormTag::ThetaE8: return 0;
        case FormTag::Delta: return 24;
        case FormTag::LittleJ:
        case FormTag::Jay: return -24;
        case FormTag::U:
        case FormTag::G2L:
        case FormTag::InvEta8: return -8;
        case FormTag::Tt:
        case FormTag::G3L: return -12;
        case FormTag::ThetaNull: return id.arg == 2 ? 3 : 0;
        case FormTag::ThetaNullPow8: return id.arg == 2 ? 24 : 0;
    }
    throw Error("unknown form tag");
}

FracSeries plain_form(FormId id, long units);

FracSeries eta_units(long units)
{
    // pentagonal number theorem: eta = sum_{k in Z} (-1)^k q^{(6k+1)^2/24}
    std::vector<mpq_class> c(static_cast<std::size_t>(std::max<long>(0, units - 1)));
    for (long k = 0;; ++k) {
        bool hit = false;
        for (long sgn : {1L, -1L}) {
            long kk = sgn > 0 ? k : -k;
            if (sgn < 0 && k == 0) continue;
            long e = (6 * kk + 1) * (6 * kk + 1);
            if (e < units) {
                c[static_cast<std::size_t>(e - 1)] = (k % 2 == 0) ? 1 : -1;
                hit = true;
            }
        }
        if (!hit && (6 * k + 1) * (6 * k + 1) >= units) break;
    }
    return FracSeries(1, std::move(c), units);
}

FracSeries eisenstein_units(int which, long units)
{
    long m = (units - 1) / 24;
    unsigned k = which == 2 ? 1u : (which == 4 ? 3u : 5u);
    long factor = which == 2 ? -24 : (which == 4 ? 240 : -504);
    auto sig = divisor_power_sums(m, k);
    std::vector<mpq_class> c(static_cast<std::size_t>(24 * m + 1));
    c[0] = 1;
    for (long n = 1; n <= m; ++n)
        c[static_cast<std::size_t>(24 * n)] = mpq_class(factor * sig[static_cast<std::size_t>(n)]);
    return series_truncate(FracSeries(0, std::move(c), 24 * m + 1), units);
}

FracSeries theta_units(int l, long units)
{
    if (l < 2 || l > 4) throw Error("theta index must be 2, 3 or 4");
    std::vector<std::pair<long, mpq_class>> terms;
    if (l == 2) {
        for (long n = 0;; ++n) {
            long e = 3 * (2 * n + 1) * (2 * n + 1);
            if (e >= units) break;
            terms.emplace_back(e, 2);
        }
        if (terms.empty()) throw OrderTooSmall();
        std::vector<mpq_class> c(static_cast<std::size_t>(terms.back().first - 3 + 1));
        for (auto& [e, v] : terms) c[static_cast<std::size_t>(e - 3)] = v;
        return FracSeries(3, std::move(c), units);
    }
    std::vector<mpq_class> c(1, mpq_class(1));
    for (long n = 1;; ++n) {
        long e = 12 * n * n;
        if (e >= units) break;
        c.resize(static_cast<std::size_t>(e + 1));
        c[static_cast<std::size_t>(e)] = (l == 3 || n % 2 == 0) ? 2 : -2;
    }
    return FracSeries(0, std::move(c), units);
}

FracSeries inv_eta_pow_units(int k, long units)
{
    return series_inv(plain_form(FormId::eta_pow(k), units + 2 * k));
}

FracSeries u_series_units(long units)
{
    // E4/eta^8, lead -1/3
    return series_mul(plain_form(FormId::e4(), units + 8), inv_eta_pow_units(8, units));
}

FracSeries t_series_units(long units)
{
    // E6/eta^12, lead -1/2
    return series_mul(plain_form(FormId::e6(), units + 12), inv_eta_pow_units(12, units));
}

FracSeries build_plain_uncached(FormId id, long units)
{
    switch (id.tag) {
        case FormTag::Eta:
            return eta_units(units);
        case FormTag::EtaPow: {
            if (id.arg <= 0) throw Error("eta power must be positive");
            FracSeries eta = plain_form(FormId::eta(), units);
            return series_truncate(series_pow(eta, static_cast<unsigned long>(id.arg)), units);
        }
        case FormTag::E2: return eisenstein_units(2, units);
        case FormTag::E4: return eisenstein_units(4, units);
        case FormTag::E6: return eisenstein_units(6, units);
        case FormTag::Delta: return plain_form(FormId::eta_pow(24), units);
        case FormTag::LittleJ: {
            FracSeries e43 = series_pow(plain_form(FormId::e4(), units + 24), 3);
            FracSeries invd = series_inv(plain_form(FormId::delta(), units + 48));
            return series_truncate(series_mul(e43, invd), units);
        }
        case FormTag::Jay:
            return series_scale(mpq_class(1, 1728), plain_form(FormId::little_j(), units));
        case FormTag::U:
        case FormTag::G2L:
            return series_truncate(u_series_units(units), units);
        case FormTag::Tt:
        case FormTag::G3L:
            return series_truncate(t_series_units(units), units);
        case FormTag::ThetaNull: return theta_units(id.arg, units);
        case FormTag::ThetaNullPow8: {
            FracSeries th = plain_form(FormId::theta(id.arg), units);
            return series_truncate(series_pow(th, 8), units);
        }
        case FormTag::ThetaE8: {
            long m = (units - 1) / 24;
            auto r = e8_series_coefficients(m);
            std::vector<mpq_class> c(static_cast<std::size_t>(24 * m + 1));
            for (long n = 0; n <= m; ++n)
                c[static_cast<std::size_t>(24 * n)] = mpq_class(r[static_cast<std::size_t>(n)]);
            return series_truncate(FracSeries(0, std::move(c), 24 * m + 1), units);
        }
        case FormTag::InvEta8: return inv_eta_pow_units(8, units);
    }
    throw Error("unknown form tag");
}

std::mutex g_cache_mutex;
std::map<std::tuple<int, int, long>, FracSeries> g_cache;

FracSeries plain_form(FormId id, long units)
{
    if (units <= lead_units(id)) throw OrderTooSmall();
    std::tuple<int, int, long> key{static_cast<int>(id.tag), id.arg, units};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    FracSeries s = build_plain_uncached(id, units);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.emplace(key, std::move(s)).first->second;
}

Scalar form_scalar(FormId id)
{
    switch (id.tag) {
        case FormTag::U: return Scalar(mpq_class(1, 24), 0, 0, 1, 0);   // 2^{1/3}/24 = 2^{-2/3}/12
        case FormTag::Tt:
        case FormTag::G3L: return Scalar(mpq_class(1, 72), 0, 1, 0, 0);  // sqrt3/72 = 1/(24 sqrt3)
        case FormTag::G2L: return Scalar::rational(mpq_class(1, 4));
        default: return Scalar::one();
    }
}

long units_of(long order_q) { return 24 * order_q + 1; }

}  // namespace

PrefixedSeries build_form(FormId id, long order_q)
{
    if (order_q < 0) throw OrderTooSmall();
    return PrefixedSeries(form_scalar(id), plain_form(id, units_of(order_q)));
}

void clear_form_cache()
{
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

std::vector<mpz_class> e8_series_coefficients(long m_max)
{
    auto sig3 = divisor_power_sums(m_max, 3);
    std::vector<mpz_class> r(static_cast<std::size_t>(m_max + 1));
    r[0] = 1;
    for (long m = 1; m <= m_max; ++m) r[static_cast<std::size_t>(m)] = 240 * sig3[static_cast<std::size_t>(m)];
    return r;
}

std::vector<mpz_class> p8_coefficients(long n_max)
{
    auto sig1 = divisor_power_sums(n_max, 1);
    std::vector<mpz_class> p(static_cast<std::size_t>(n_max + 1));
    p[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        mpz_class acc(0);
        for (long k = 1; k <= n; ++k)
            acc += sig1[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n - k)];
        acc *= 8;
        mpz_class q, rem;
        mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        if (rem != 0) throw Error("p8 recurrence produced a non-integer");
        p[static_cast<std::size_t>(n)] = q;
    }
    return p;
}

// ---------------------------------------------------------------------------
// identities

std::string identity_name(IdentityId id)
{
    switch (id) {
        case IdentityId::Discriminant: return "discriminant";
        case IdentityId::E8Sum: return "e8-sum";
        case IdentityId::CurveE: return "curve-e";
        case IdentityId::Ramanujan4: return "ramanujan4";
        case IdentityId::XiBridge: return "xi-bridge";
        case IdentityId::P8Convolution: return "p8-convolution";
        case IdentityId::JacobiQuartic: return "jacobi-quartic";
        case IdentityId::ThetaE8CrossCheck: return "theta-e8-crosscheck";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(const std::string& name)
{
    for (IdentityId id : {IdentityId::Discriminant, IdentityId::E8Sum, IdentityId::CurveE,
                          IdentityId::Ramanujan4, IdentityId::XiBridge, IdentityId::P8Convolution,
                          IdentityId::JacobiQuartic, IdentityId::ThetaE8CrossCheck})
        if (identity_name(id) == name) return id;
    return std::nullopt;
}

namespace {

IdentityReport compare_series(IdentityId id, long order_q, const FracSeries& lhs,
                              const FracSeries& rhs, const std::string& detail)
{
    long target = units_of(order_q);
    if (std::min(lhs.order(), rhs.order()) < target)
        throw Error("identity operands were built too short for the requested order");
    IdentityReport rep;
    rep.id = id;
    rep.order_q = order_q;
    rep.checked_units = target;
    rep.detail = detail;
    auto mm = first_mismatch(series_truncate(lhs, target), series_truncate(rhs, target));
    rep.pass = !mm.has_value();
    rep.mismatch = mm;
    return rep;
}

}  // namespace

IdentityReport verify_identity(IdentityId id, long order_q)
{
    if (order_q < 2) throw Error("identity checks need order >= 2 full q-powers");
    const long U = units_of(order_q);
    switch (id) {
        case IdentityId::Discriminant: {
            FracSeries e4 = plain_form(FormId::e4(), U);
            FracSeries e6 = plain_form(FormId::e6(), U);
            FracSeries lhs = series_sub(series_pow(e4, 3), series_pow(e6, 2));
            FracSeries rhs = series_scale(1728, plain_form(FormId::delta(), U));
            return compare_series(id, order_q, lhs, rhs, "E4^3 - E6^2 = 1728 eta^24");
        }
        case IdentityId::E8Sum: {
            FracSeries lhs = series_add(
                series_add(plain_form(FormId::theta_pow8(2), U), plain_form(FormId::theta_pow8(3), U)),
                plain_form(FormId::theta_pow8(4), U));
            FracSeries rhs = series_scale(2, plain_form(FormId::theta_e8(), U));
            return compare_series(id, order_q, lhs, rhs,
                                  "theta2^8 + theta3^8 + theta4^8 = 2 Theta_E8");
        }
        case IdentityId::JacobiQuartic: {
            FracSeries lhs = series_add(series_pow(plain_form(FormId::theta(2), U), 4),
                                        series_pow(plain_form(FormId::theta(4), U), 4));
            FracSeries rhs = series_pow(plain_form(FormId::theta(3), U), 4);
            return compare_series(id, order_q, lhs, rhs, "theta2^4 + theta4^4 = theta3^4");
        }
        case IdentityId::Ramanujan4: {
            FracSeries lhs = series_theta_deriv(plain_form(FormId::e4(), U));
            FracSeries rhs = series_scale(
                mpq_class(1, 3),
                series_sub(series_mul(plain_form(FormId::e2(), U), plain_form(FormId::e4(), U)),
                           plain_form(FormId::e6(), U)));
            return compare_series(id, order_q, lhs, rhs, "theta_q(E4) = (E2 E4 - E6)/3");
        }
        case IdentityId::XiBridge: {
            FracSeries f = u_series_units(U + 8);
            FracSeries lhs = series_mul(plain_form(FormId::eta_pow(8), U + 8), series_theta_deriv(f));
            FracSeries rhs = series_scale(mpq_class(-1, 3), plain_form(FormId::e6(), U));
            return compare_series(id, order_q, lhs, rhs, "eta^8 theta_q(E4/eta^8) = -E6/3");
        }
        case IdentityId::CurveE: {
            PrefixedSeries u(form_scalar(FormId::u()), u_series_units(U + 16));
            PrefixedSeries t(form_scalar(FormId::t()), t_series_units(U + 12));
            FracSeries u3 = u.pow(3).to_plain();  // throws ScalarMismatch on a wrong branch
            FracSeries t2 = t.pow(2).to_plain();
            FracSeries lhs = series_sub(series_scale(4, u3), t2);
            return compare_series(id, order_q, lhs, FracSeries::one(), "4u^3 - t^2 = 1");
        }
        case IdentityId::P8Convolution: {
            FracSeries f = u_series_units(U);
            auto r = e8_series_coefficients(order_q);
            auto p8 = p8_coefficients(order_q);
            IdentityReport rep;
            rep.id = id;
            rep.order_q = order_q;
            rep.checked_units = 24 * order_q - 8 + 1;
            rep.detail = "sum r_E8(m) p8(n-m) = [q^{n-1/3}] E4/eta^8";
            rep.pass = true;
            for (long n = 0; n <= order_q; ++n) {
                mpz_class conv(0);
                for (long m = 0; m <= n; ++m)
                    conv += r[static_cast<std::size_t>(m)] * p8[static_cast<std::size_t>(n - m)];
                mpq_class expect(conv);
                mpq_class got = f.coeff_at(24 * n - 8);
                if (expect != got) {
                    rep.pass = false;
                    rep.mismatch = Mismatch{24 * n - 8, expect, got};
                    break;
                }
            }
            return rep;
        }
        case IdentityId::ThetaE8CrossCheck: {
            long k = std::min<long>(order_q, 16);
            auto formula = e8_series_coefficients(k);
            auto shells = q8::e8_count(static_cast<int>(k));
            IdentityReport rep;
            rep.id = id;
            rep.order_q = order_q;
            rep.checked_units = 24 * k + 1;
            rep.detail = "240 sigma_3(m) matches the E8 shell counts";
            rep.pass = true;
            for (long m = 0; m <= k; ++m) {
                mpq_class expect(formula[static_cast<std::size_t>(m)]);
                mpq_class got(static_cast<long>(shells[static_cast<std::size_t>(m)]));
                if (expect != got) {
                    rep.pass = false;
                    rep.mismatch = Mismatch{24 * m, expect, got};
                    break;
                }
            }
            return rep;
        }
    }
    throw Error("unknown identity");
}

const std::vector<IdentityId>& exact_suite()
{
    static const std::vector<IdentityId> suite{
        IdentityId::Discriminant, IdentityId::E8Sum,         IdentityId::CurveE,
        IdentityId::Ramanujan4,   IdentityId::XiBridge,      IdentityId::P8Convolution,
    };
    return suite;
}

// ---------------------------------------------------------------------------
// Hecke table

FormProduct::FormProduct(std::initializer_list<FormId> fs) : factors(fs)
{
    std::sort(factors.begin(), factors.end());
}

FormProduct::FormProduct(std::vector<FormId> fs) : factors(std::move(fs))
{
    std::sort(factors.begin(), factors.end());
}

std::string FormProduct::name() const
{
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i].name();
    }
    return s;
}

namespace {

std::optional<GRule> rule_for(FormId id)
{
    const Scalar one = Scalar::one();
    const Scalar rho = Scalar::zeta12_pow(4);
    const Scalar rho2 = Scalar::zeta12_pow(8);
    switch (id.tag) {
        case FormTag::E4: return GRule{id, 4, false, one};
        case FormTag::E6: return GRule{id, 6, false, one};
        case FormTag::Delta: return GRule{id, 12, false, one};
        case FormTag::LittleJ:
        case FormTag::Jay: return GRule{id, 0, false, one};
        case FormTag::U:
        case FormTag::G2L: return GRule{id, 0, false, rho2};
        case FormTag::Tt:
        case FormTag::G3L: return GRule{id, 0, false, one};
        case FormTag::ThetaE8: return GRule{id, 4, false, one};
        case FormTag::InvEta8: return GRule{id, -4, false, rho2};
        case FormTag::EtaPow: {
            if (id.arg % 2 != 0) return std::nullopt;  // half-integral weight
            long m = id.arg / 2;
            // j_g^{-m} eta^{2m}(g tau) = rho^m eta^{2m}(tau)
            return GRule{id, static_cast<int>(m), false, rho.pow(m)};
        }
        case FormTag::ThetaNullPow8: return GRule{id, 4, true, one};
        default: return std::nullopt;
    }
}

int theta_orbit_next(int l)
{
    // f |-> j_g^{-4} f(g tau) maps theta3^8 -> theta4^8 -> theta2^8 -> theta3^8
    switch (l) {
        case 3: return 4;
        case 4: return 2;
        case 2: return 3;
    }
    throw Error("bad theta index");
}

}  // namespace

std::vector<GRule> registered_g_rules()
{
    std::vector<GRule> rules;
    for (FormId id : {FormId::e4(), FormId::e6(), FormId::delta(), FormId::little_j(),
                      FormId::u(), FormId::t(), FormId::g2l(), FormId::g3l(),
                      FormId::theta_e8(), FormId::inv_eta8(), FormId::eta_pow(4),
                      FormId::eta_pow(8), FormId::eta_pow(12), FormId::theta_pow8(2),
                      FormId::theta_pow8(3), FormId::theta_pow8(4)})
        rules.push_back(*rule_for(id));
    return rules;
}

std::vector<HeckeTerm> hecke_t_g(const FormProduct& f, int weight)
{
    if (f.factors.empty()) throw NoTransformationRule("empty product");
    int total_weight = 0;
    Scalar lambda = Scalar::one();
    bool has_orbit = false;
    for (FormId id : f.factors) {
        auto rule = rule_for(id);
        if (!rule)
            throw NoTransformationRule("no <g>-transformation rule for " + id.name());
        total_weight += rule->weight;
        if (rule->theta_orbit)
            has_orbit = true;
        else
            lambda = lambda * rule->lambda;
    }
    if (total_weight != weight)
        throw NoTransformationRule("operator weight " + std::to_string(weight) +
                                   " does not match the intrinsic weight " +
                                   std::to_string(total_weight) + " of " + f.name());
    if (!has_orbit) {
        // sum_{r=1..3} lambda^r: 3 when lambda = 1, else 0 (lambda^3 = 1)
        if (lambda == Scalar::one()) return {HeckeTerm{Scalar::rational(3), f}};
        if (lambda.pow(3) == Scalar::one()) return {};
        throw Error("eigenvalue is not a cube root of unity");
    }
    std::vector<HeckeTerm> terms;
    for (int r = 1; r <= 3; ++r) {
        std::vector<FormId> fs;
        fs.reserve(f.factors.size());
        for (FormId id : f.factors) {
            if (id.tag == FormTag::ThetaNullPow8) {
                int l = id.arg;
                for (int i = 0; i < r; ++i) l = theta_orbit_next(l);
                fs.push_back(FormId::theta_pow8(l));
            } else {
                fs.push_back(id);
            }
        }
        terms.push_back(HeckeTerm{lambda.pow(r), FormProduct(std::move(fs))});
    }
    std::sort(terms.begin(), terms.end(),
              [](const HeckeTerm& a, const HeckeTerm& b) { return a.product < b.product; });
    return terms;
}

std::vector<HeckeTerm> hecke_t_g(FormId id, int weight)
{
    return hecke_t_g(FormProduct{id}, weight);
}

PrefixedSeries expand_product(const FormProduct& p, long order_q)
{
    PrefixedSeries acc(Scalar::one(), FracSeries::one());
    for (FormId id : p.factors) acc = acc * build_form(id, order_q + 2);
    return PrefixedSeries(acc.scalar(), series_truncate(acc.series(), units_of(order_q)));
}

PrefixedSeries expand_terms(const std::vector<HeckeTerm>& terms, long order_q)
{
    PrefixedSeries acc(Scalar::one(), FracSeries::zero(units_of(order_q)));
    for (const auto& term : terms) acc = acc + expand_product(term.product, order_q).scale(term.coeff);
    return acc;
}

// ---------------------------------------------------------------------------
// translate eigenvalue

TranslatePhase translate_eigenvalue(FormId id)
{
    FracSeries s = plain_form(id, units_of(6));
    if (s.is_zero()) throw Error("zero series has no translation phase");
    long res = ((s.lead() % 24) + 24) % 24;
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        if (s.coeffs()[i] == 0) continue;
        long e = s.lead() + static_cast<long>(i);
        if (((e % 24) + 24) % 24 != res) throw MixedResidues();
    }
    return TranslatePhase{static_cast<int>(res)};
}

Scalar TranslatePhase::as_scalar() const
{
    if (k24 % 2 != 0)
        throw Error("phase is a primitive 24th root of unity, outside the zeta12 powers");
    return Scalar::zeta12_pow(k24 / 2);
}

std::complex<double> TranslatePhase::value() const
{
    double arg = 2.0 * M_PI * static_cast<double>(k24) / 24.0;
    return {std::cos(arg), std::sin(arg)};
}

// ---------------------------------------------------------------------------
// names

std::string FormId::name() const
{
    switch (tag) {
        case FormTag::Eta: return "eta";
        case FormTag::EtaPow: return "eta-pow-" + std::to_string(arg);
        case FormTag::E2: return "e2";
        case FormTag::E4: return "e4";
        case FormTag::E6: return "e6";
        case FormTag::Delta: return "delta";
        case FormTag::LittleJ: return "little-j";
        case FormTag::Jay: return "jay";
        case FormTag::U: return "u";
        case FormTag::Tt: return "t";
        case FormTag::G2L: return "g2l";
        case FormTag::G3L: return "g3l";
        case FormTag::ThetaNull: return "theta" + std::to_string(arg);
        case FormTag::ThetaNullPow8: return "theta" + std::to_string(arg) + "-pow8";
        case FormTag::ThetaE8: return "theta-e8";
        case FormTag::InvEta8: return "inv-eta8";
    }
    return "?";
}

std::optional<FormId> FormId::parse(const std::string& name)
{
    for (const FormId& id : all_basic())
        if (id.name() == name) return id;
    const std::string prefix = "eta-pow-";
    if (name.rfind(prefix, 0) == 0) {
        try {
            int k = std::stoi(name.substr(prefix.size()));
            if (k > 0 && k <= 48) return FormId::eta_pow(k);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

const std::vector<FormId>& FormId::all_basic()
{
    static const std::vector<FormId> ids{
        FormId::eta(),        FormId::eta_pow(8),   FormId::eta_pow(12), FormId::eta_pow(24),
        FormId::e2(),         FormId::e4(),         FormId::e6(),        FormId::delta(),
        FormId::little_j(),   FormId::jay(),        FormId::u(),         FormId::t(),
        FormId::g2l(),        FormId::g3l(),        FormId::theta(2),    FormId::theta(3),
        FormId::theta(4),     FormId::theta_pow8(2), FormId::theta_pow8(3),
        FormId::theta_pow8(4), FormId::theta_e8(),  FormId::inv_eta8(),
    };
    return ids;
}

}  // namespace etabridge::forms
