#ifndef ETABRIDGE_Q8LATTICE_HPP
#define ETABRIDGE_Q8LATTICE_HPP

// The quaternion group Q8 realized in SL_2(3), the induced 8-class
// decomposition of the hexagonal lattice Z^2 ~ L0, its three
// sublattice-with-half-point realizations, and the E8 shell counting oracle.
//
// Group elements are indexed 1..8 in the order
//   {I, beta, beta^2, beta^3, beta*alpha, alpha^3, alpha*beta, alpha}
// and lattice points are integer pairs (m, n) standing for m*omega1 + n*omega2.

#include "etabridge/qseries.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace etabridge::q8 {

struct BadClassIndex : Error {
    BadClassIndex() : Error("class index must lie in 1..8") {}
};
struct BudgetExceeded : Error {
    BudgetExceeded() : Error("E8 enumeration budget is m <= 64") {}
};

struct Q8Elem {
    int index = 1;  // 1..8
    bool operator==(const Q8Elem& o) const { return index == o.index; }
    bool operator!=(const Q8Elem& o) const { return index != o.index; }
    std::string name() const;
};

// 2x2 matrices over F_3, row major (a, b, c, d), one per group element.
using MatF3 = std::array<int, 4>;
const std::array<MatF3, 8>& q8_matrices();

Q8Elem q8_mul(Q8Elem a, Q8Elem b);
Q8Elem q8_inv(Q8Elem a);
// central element of order two (beta^2 = alpha^2 = -I)
inline Q8Elem q8_sigma_of(Q8Elem a) { return q8_mul(Q8Elem{3}, a); }

// image of A^m B^n under the mod-3 homomorphism: beta^m (beta alpha)^n
Q8Elem r3_of_pair(long m, long n);

struct DecompClass {
    int k = 1;       // 1..8
    int s = 0;       // label, s in Z_4
    int t = 0;       // label, t in Z_2
};

// the unique class with (m,n) = (s,t) or (s+2,t+2) mod 4
DecompClass class_of_point(long m, long n);
// the label table row (s_k, t_k) for k = 1..8
const std::array<std::pair<int, int>, 8>& class_labels();

// integer vector in the (omega1, omega2) basis
struct GridVec {
    long x = 0, y = 0;
    bool operator==(const GridVec& o) const { return x == o.x && y == o.y; }
    GridVec operator+(const GridVec& o) const { return {x + o.x, y + o.y}; }
    GridVec operator-(const GridVec& o) const { return {x - o.x, y - o.y}; }
    std::complex<double> embed(std::complex<double> omega1, std::complex<double> omega2) const
    {
        return static_cast<double>(x) * omega1 + static_cast<double>(y) * omega2;
    }
};

enum class Style { I, II, III };
std::string style_name(Style s);

// One of the three realizations of the class-k subset: the coset
// translate + {0, halfpoint} + span_Z(basis), with everything exact in the
// (omega1, omega2) coordinates.
struct SublatticeRealization {
    Style style;
    int k;
    GridVec translate;              // s_k omega1 + t_k omega2
    std::array<GridVec, 2> basis;   // spans a 4-dilate of L0
    GridVec halfpoint;              // a half-period of the basis lattice

    bool contains(GridVec p) const;
    std::vector<GridVec> points_in_box(long box_half_width) const;
};

SublatticeRealization realization(Style style, int k);

struct DecompositionReport {
    bool pass = false;
    long box_half_width = 0;
    std::array<long, 8> class_counts{};
    std::vector<std::string> failures;
};

// Checks, on the box [-B,B]^2: the 8 classes partition the grid; the r3 image
// lands on q_k / sigma q_k according to the two coset patterns; the minimal
// nonnegative labels reproduce the fixed table; the three realization styles
// carve out identical point sets.
DecompositionReport verify_decomposition(long box_half_width);

// Number of E8 vectors with |x|^2 = 2m for m = 0..m_max (m_max <= 64).
std::vector<long long> e8_count(int m_max);

}  // namespace etabridge::q8

#endif
