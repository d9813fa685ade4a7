#ifndef ETABRIDGE_COSETS_HPP
#define ETABRIDGE_COSETS_HPP

// Membership, coset enumeration, Millington permutations and genus/cusp data
// for the four subgroups of the projective modular group used here.
//
// Everything is projective: matrices carry a canonical sign (first nonzero of
// (a,b,c,d) positive), so M and -M are structurally equal.
//
// Convention: cosets are left cosets rep*H and generators act by left
// multiplication, rep -> gamma*rep.  With this convention and the labeling
// {I, T, g^2, Tg^2, g, Tg} <-> {0..5} the classical cycle shapes for the
// commutator subgroup and Gamma(2) come out in their standard printed form;
// the composition perm(S) after perm(g) is the action of Sg = T (mod sign),
// whose cycles are the cusp widths.

#include "etabridge/qseries.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace etabridge::cosets {

struct InconsistentTable : Error {
    using Error::Error;
};
struct NotATransversal : Error {
    using Error::Error;
};

struct PSLMat {
    long a = 1, b = 0, c = 0, d = 1;
    PSLMat() = default;
    PSLMat(long a_, long b_, long c_, long d_);

    PSLMat operator*(const PSLMat& o) const;
    PSLMat inverse() const;
    bool operator==(const PSLMat& o) const
    {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const PSLMat& o) const { return !(*this == o); }
    std::string str() const;
};

// generators and named elements
const PSLMat& mat_S();
const PSLMat& mat_T();
const PSLMat& mat_g();   // ST
const PSLMat& mat_A();   // [S, T^{-1}] = [[1,1],[1,2]]
const PSLMat& mat_B();   // [S, T]      = [[1,-1],[-1,2]]

enum class SubgroupId { GammaPrime, Gamma2, GammaC, GammaNsPlus3 };
std::string subgroup_name(SubgroupId id);
std::optional<SubgroupId> parse_subgroup(const std::string& name);

bool is_member(SubgroupId id, const PSLMat& m);

struct Perm {
    std::vector<int> map;  // map[i] = image of i
    int size() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
    Perm after(const Perm& first) const;  // this(first(i))
    int fixed_points() const;
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> cycle_lengths() const;  // sorted descending
    std::string cycle_str() const;
    bool operator==(const Perm& o) const { return map == o.map; }
};

struct CosetTable {
    SubgroupId id;
    std::vector<PSLMat> reps;
    Perm perm_S, perm_T, perm_g;
};

CosetTable coset_enumerate(SubgroupId id);

struct CurveData {
    int index = 0;
    int genus = 0;
    int e2 = 0;
    int e3 = 0;
    std::vector<int> cusp_widths;  // sorted descending
};

CurveData curve_data(const CosetTable& t);

// mu = action of S, sigma = action of g on the given transversal.
std::pair<Perm, Perm> millington_perms(SubgroupId id, const std::vector<PSLMat>& labeling);

// the paper's labeling {I, T, g^2, Tg^2, g, Tg}
const std::vector<PSLMat>& labeling_s1();

// chi(T)^k = diag((-1)^k, rho^k)
std::array<std::complex<double>, 2> chi_rep_diag(long k);

}  // namespace etabridge::cosets

#endif
