#include "etabridge/cosets.hpp"

#include "etabridge/q8lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace etabridge::cosets {

PSLMat::PSLMat(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_)
{
    if (a * d - b * c != 1) throw Error("matrix determinant must be 1");
    long lead = a != 0 ? a : (b != 0 ? b : (c != 0 ? c : d));
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
}

PSLMat PSLMat::operator*(const PSLMat& o) const
{
    return PSLMat(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

PSLMat PSLMat::inverse() const { return PSLMat(d, -b, -c, a); }

std::string PSLMat::str() const
{
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

const PSLMat& mat_S()
{
    static const PSLMat m(0, 1, -1, 0);
    return m;
}
const PSLMat& mat_T()
{
    static const PSLMat m(1, 1, 0, 1);
    return m;
}
const PSLMat& mat_g()
{
    static const PSLMat m = mat_S() * mat_T();
    return m;
}
const PSLMat& mat_A()
{
    static const PSLMat m(1, 1, 1, 2);
    return m;
}
const PSLMat& mat_B()
{
    static const PSLMat m(1, -1, -1, 2);
    return m;
}

std::string subgroup_name(SubgroupId id)
{
    switch (id) {
        case SubgroupId::GammaPrime: return "gamma-prime";
        case SubgroupId::Gamma2: return "gamma2";
        case SubgroupId::GammaC: return "gamma-c";
        case SubgroupId::GammaNsPlus3: return "gamma-ns3-plus";
    }
    return "?";
}

std::optional<SubgroupId> parse_subgroup(const std::string& name)
{
    for (SubgroupId id : {SubgroupId::GammaPrime, SubgroupId::Gamma2, SubgroupId::GammaC,
                          SubgroupId::GammaNsPlus3})
        if (subgroup_name(id) == name) return id;
    return std::nullopt;
}

namespace {

std::array<int, 4> mod_reduce(const PSLMat& m, int p)
{
    auto r = [p](long x) { return static_cast<int>(((x % p) + p) % p); };
    return {r(m.a), r(m.b), r(m.c), r(m.d)};
}

bool in_c3_mod2(const PSLMat& m)
{
    // C3 inside SL_2(2): {I, r2(g), r2(g^2)}
    static const std::array<std::array<int, 4>, 3> c3{{
        {1, 0, 0, 1},
        {0, 1, 1, 1},  // g = [[0,1],[-1,-1]] mod 2
        {1, 1, 1, 0},  // g^2 = [[-1,-1],[1,0]] mod 2
    }};
    auto r = mod_reduce(m, 2);
    return std::find(c3.begin(), c3.end(), r) != c3.end();
}

bool in_q8_mod3(const PSLMat& m)
{
    // Q8 is closed under negation, so the projective sign is harmless.
    auto r = mod_reduce(m, 3);
    const auto& mats = q8::q8_matrices();
    return std::find(mats.begin(), mats.end(), r) != mats.end();
}

}  // namespace

bool is_member(SubgroupId id, const PSLMat& m)
{
    switch (id) {
        case SubgroupId::Gamma2: {
            auto r = mod_reduce(m, 2);
            return r == std::array<int, 4>{1, 0, 0, 1};
        }
        case SubgroupId::GammaC: return in_c3_mod2(m);
        case SubgroupId::GammaNsPlus3: return in_q8_mod3(m);
        case SubgroupId::GammaPrime:
            // intersection predicate: indices 2 and 3 are coprime and the
            // commutator subgroup sits in both with index 6
            return in_c3_mod2(m) && in_q8_mod3(m);
    }
    return false;
}

Perm Perm::after(const Perm& first) const
{
    Perm p;
    p.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        p.map[i] = map[static_cast<std::size_t>(first.map[i])];
    return p;
}

int Perm::fixed_points() const
{
    int n = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] == static_cast<int>(i)) ++n;
    return n;
}

std::vector<std::vector<int>> Perm::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(map.size(), false);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = static_cast<int>(i);
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cyc.push_back(j);
            j = map[static_cast<std::size_t>(j)];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_lengths() const
{
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::string Perm::cycle_str() const
{
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << " ";
            os << c[i];
        }
        os << ")";
    }
    if (!any) os << "id";
    return os.str();
}

namespace {

int coset_of(SubgroupId id, const std::vector<PSLMat>& reps, const PSLMat& m)
{
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (is_member(id, reps[i].inverse() * m)) return static_cast<int>(i);
    return -1;
}

Perm action_of(SubgroupId id, const std::vector<PSLMat>& reps, const PSLMat& gamma)
{
    Perm p;
    p.map.resize(reps.size());
    std::vector<bool> hit(reps.size(), false);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        int j = coset_of(id, reps, gamma * reps[i]);
        if (j < 0) throw InconsistentTable("left action leaves the coset list");
        p.map[i] = j;
        hit[static_cast<std::size_t>(j)] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw InconsistentTable("generator action is not a permutation");
    return p;
}

}  // namespace

CosetTable coset_enumerate(SubgroupId id)
{
    std::vector<PSLMat> reps{PSLMat()};
    std::vector<PSLMat> queue{PSLMat()};
    while (!queue.empty()) {
        PSLMat cur = queue.back();
        queue.pop_back();
        for (const PSLMat* gen : {&mat_S(), &mat_T()}) {
            PSLMat next = *gen * cur;
            if (coset_of(id, reps, next) < 0) {
                reps.push_back(next);
                queue.push_back(next);
            }
        }
        if (reps.size() > 64) throw InconsistentTable("coset enumeration did not close");
    }
    CosetTable t;
    t.id = id;
    t.reps = reps;
    t.perm_S = action_of(id, reps, mat_S());
    t.perm_T = action_of(id, reps, mat_T());
    t.perm_g = action_of(id, reps, mat_g());
    // left action is a homomorphism: perm_g = perm_S after perm_T
    if (!(t.perm_g == t.perm_S.after(t.perm_T)))
        throw InconsistentTable("perm_g is not perm_S o perm_T");
    return t;
}

CurveData curve_data(const CosetTable& t)
{
    CurveData cd;
    cd.index = static_cast<int>(t.reps.size());
    cd.e2 = t.perm_S.fixed_points();
    cd.e3 = t.perm_g.fixed_points();
    cd.cusp_widths = t.perm_T.cycle_lengths();
    const int cusps = static_cast<int>(cd.cusp_widths.size());
    const int twelve_genus = 12 + cd.index - 3 * cd.e2 - 4 * cd.e3 - 6 * cusps;
    if (twelve_genus % 12 != 0 || twelve_genus < 0)
        throw InconsistentTable("Riemann-Hurwitz count is not a nonnegative integer");
    cd.genus = twelve_genus / 12;
    return cd;
}

std::pair<Perm, Perm> millington_perms(SubgroupId id, const std::vector<PSLMat>& labeling)
{
    // transversal: pairwise inequivalent and of full index
    for (std::size_t i = 0; i < labeling.size(); ++i)
        for (std::size_t j = i + 1; j < labeling.size(); ++j)
            if (is_member(id, labeling[i].inverse() * labeling[j]))
                throw NotATransversal("two labels lie in the same coset");
    CosetTable t = coset_enumerate(id);
    if (labeling.size() != t.reps.size())
        throw NotATransversal("labeling does not have full index");
    return {action_of(id, labeling, mat_S()), action_of(id, labeling, mat_g())};
}

const std::vector<PSLMat>& labeling_s1()
{
    static const std::vector<PSLMat> s1 = [] {
        const PSLMat I;
        const PSLMat& T = mat_T();
        const PSLMat& g = mat_g();
        return std::vector<PSLMat>{I, T, g * g, T * g * g, g, T * g};
    }();
    return s1;
}

std::array<std::complex<double>, 2> chi_rep_diag(long k)
{
    const long kk = ((k % 6) + 6) % 6;
    const double arg = 2.0 * M_PI * static_cast<double>(kk) / 3.0;
    return {std::complex<double>(kk % 2 == 0 ? 1.0 : -1.0, 0.0),
            std::complex<double>(std::cos(arg), std::sin(arg))};
}

}  // namespace etabridge::cosets
