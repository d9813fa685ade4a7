#ifndef ETABRIDGE_MODFORMS_HPP
#define ETABRIDGE_MODFORMS_HPP

// Builders for the named q-expansions and the exact identity suite.
//
// Every expansion is in q = e^{2 pi i tau} on the (1/24)Z exponent grid.
// Theta constants use exponents n^2/2 and (2n+1)^2/8, so the classical nome
// never appears as a separate variable.  Public orders are counted in full
// q-powers; builders pad internally so a request for order N yields a series
// that is exact through q^N.

#include "etabridge/qseries.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace etabridge::forms {

struct OrderTooSmall : Error {
    OrderTooSmall() : Error("truncation order does not reach the leading term") {}
};
struct NoTransformationRule : Error {
    using Error::Error;
};
struct MixedResidues : Error {
    MixedResidues() : Error("exponents span several residue classes mod 1") {}
};

enum class FormTag {
    Eta,
    EtaPow,
    E2,
    E4,
    E6,
    Delta,
    LittleJ,   // q^{-1} + 744 + 196884 q + ...
    Jay,       // LittleJ / 1728
    U,         // 2^{1/3}/24 * E4/eta^8
    Tt,        // sqrt3/72 * E6/eta^12
    G2L,       // E4/(4 eta^8)
    G3L,       // sqrt3/72 * E6/eta^12
    ThetaNull,     // arg l in {2,3,4}
    ThetaNullPow8, // arg l in {2,3,4}
    ThetaE8,
    InvEta8,
};

struct FormId {
    FormTag tag;
    int arg = 0;

    static FormId eta() { return {FormTag::Eta}; }
    static FormId eta_pow(int k) { return {FormTag::EtaPow, k}; }
    static FormId e2() { return {FormTag::E2}; }
    static FormId e4() { return {FormTag::E4}; }
    static FormId e6() { return {FormTag::E6}; }
    static FormId delta() { return {FormTag::Delta}; }
    static FormId little_j() { return {FormTag::LittleJ}; }
    static FormId jay() { return {FormTag::Jay}; }
    static FormId u() { return {FormTag::U}; }
    static FormId t() { return {FormTag::Tt}; }
    static FormId g2l() { return {FormTag::G2L}; }
    static FormId g3l() { return {FormTag::G3L}; }
    static FormId theta(int l) { return {FormTag::ThetaNull, l}; }
    static FormId theta_pow8(int l) { return {FormTag::ThetaNullPow8, l}; }
    static FormId theta_e8() { return {FormTag::ThetaE8}; }
    static FormId inv_eta8() { return {FormTag::InvEta8}; }

    bool operator==(const FormId& o) const { return tag == o.tag && arg == o.arg; }
    bool operator<(const FormId& o) const
    {
        return tag != o.tag ? tag < o.tag : arg < o.arg;
    }

    std::string name() const;
    static std::optional<FormId> parse(const std::string& name);
    static const std::vector<FormId>& all_basic();  // one of each tag (arg'd: eta^8, theta3, ...)
};

// order_q counts full q-powers: the result is exact through q^{order_q},
// truncated at 24*(order_q+1) grid units.
PrefixedSeries build_form(FormId id, long order_q);
void clear_form_cache();

// r_{E8}(m) = 1, 240 sigma_3(m); the generating coefficients of Theta_{E8}.
std::vector<mpz_class> e8_series_coefficients(long m_max);
// 8-colored partition numbers from the recurrence n p8(n) = 8 sum sigma1(k) p8(n-k).
std::vector<mpz_class> p8_coefficients(long n_max);

enum class IdentityId {
    Discriminant,      // E4^3 - E6^2 = 1728 eta^24
    E8Sum,             // theta2^8 + theta3^8 + theta4^8 = 2 Theta_{E8}
    CurveE,            // 4u^3 - t^2 = 1 after exact scalar cancellation
    Ramanujan4,        // theta_q(E4) = (E2 E4 - E6)/3
    XiBridge,          // eta^8 theta_q(E4/eta^8) = -E6/3
    P8Convolution,     // sum r(m) p8(n-m) = coefficient of q^{n-1/3} in E4/eta^8
    JacobiQuartic,     // theta2^4 + theta4^4 = theta3^4
    ThetaE8CrossCheck, // sigma3 coefficients match the lattice-shell counts
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);

struct IdentityReport {
    IdentityId id;
    bool pass = false;
    long order_q = 0;
    long checked_units = 0;  // coefficients verified for all exponents < this
    std::optional<Mismatch> mismatch;
    std::string detail;
};

// Exact check of one identity through q^{order_q}; order_q >= 2.
IdentityReport verify_identity(IdentityId id, long order_q);
// The six identities of the canonical exact suite, in report order.
const std::vector<IdentityId>& exact_suite();

// ---------------------------------------------------------------------------
// Hecke-type average over the order-3 element g = ST (g tau = -1/(tau+1)).
//
// T_{<g>,k} f = sum_{r=1..3} j_{g^r}^{-k} f(g^r tau).  The action is table
// driven: registered eigenforms carry the root of unity lambda with
// j_g^{-k} f(g tau) = lambda f(tau); the theta eighth powers are permuted
// along the 3-cycle theta3 -> theta4 -> theta2 -> theta3.

struct FormProduct {
    std::vector<FormId> factors;  // kept sorted
    FormProduct() = default;
    FormProduct(std::initializer_list<FormId> fs);
    explicit FormProduct(std::vector<FormId> fs);
    bool operator==(const FormProduct& o) const { return factors == o.factors; }
    bool operator<(const FormProduct& o) const { return factors < o.factors; }
    std::string name() const;
};

struct HeckeTerm {
    Scalar coeff;
    FormProduct product;
};

std::vector<HeckeTerm> hecke_t_g(const FormProduct& f, int weight);
std::vector<HeckeTerm> hecke_t_g(FormId id, int weight);
// Series expansion of a formal sum, for cross-checks.
PrefixedSeries expand_terms(const std::vector<HeckeTerm>& terms, long order_q);
PrefixedSeries expand_product(const FormProduct& p, long order_q);

struct GRule {
    FormId id;
    int weight;
    bool theta_orbit;  // true for the permuted theta eighth powers
    Scalar lambda;     // eigenvalue when theta_orbit is false
};
// The registered table, for numeric validation.
std::vector<GRule> registered_g_rules();

// ---------------------------------------------------------------------------
// Behaviour under tau -> tau+1: q^{e} picks up e^{2 pi i e}.  Defined when
// all exponents of the expansion share one residue class mod 1.

struct TranslatePhase {
    int k24 = 0;  // phase e^{2 pi i k24/24}
    Scalar as_scalar() const;  // requires k24 even (a zeta12 power)
    std::complex<double> value() const;
};

TranslatePhase translate_eigenvalue(FormId id);

}  // namespace etabridge::forms

#endif
