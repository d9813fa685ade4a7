#include "etabridge/q8lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace etabridge::q8 {

namespace {

constexpr std::array<MatF3, 8> kMatrices{{
    {1, 0, 0, 1},  // q1 = I
    {1, 1, 1, 2},  // q2 = beta
    {2, 0, 0, 2},  // q3 = beta^2 = alpha^2 = -I
    {2, 2, 2, 1},  // q4 = beta^3
    {1, 2, 2, 2},  // q5 = beta alpha
    {0, 1, 2, 0},  // q6 = alpha^3
    {2, 1, 1, 1},  // q7 = alpha beta
    {0, 2, 1, 0},  // q8 = alpha
}};

MatF3 mat_mul(const MatF3& a, const MatF3& b)
{
    return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
}

int index_of(const MatF3& m)
{
    for (int i = 0; i < 8; ++i)
        if (kMatrices[static_cast<std::size_t>(i)] == m) return i + 1;
    throw Error("matrix is not a Q8 representative");
}

// Cayley table built once from the matrix representatives.
const std::array<std::array<int, 8>, 8>& cayley()
{
    static const std::array<std::array<int, 8>, 8> table = [] {
        std::array<std::array<int, 8>, 8> t{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    index_of(mat_mul(kMatrices[static_cast<std::size_t>(i)],
                                     kMatrices[static_cast<std::size_t>(j)]));
        return t;
    }();
    return table;
}

int check_index(int k)
{
    if (k < 1 || k > 8) throw BadClassIndex();
    return k;
}

long floor_mod(long x, long m)
{
    long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

const std::array<MatF3, 8>& q8_matrices() { return kMatrices; }

std::string Q8Elem::name() const
{
    static const char* names[8] = {"I", "b", "b2", "b3", "ba", "a3", "ab", "a"};
    return names[index - 1];
}

Q8Elem q8_mul(Q8Elem a, Q8Elem b)
{
    check_index(a.index);
    check_index(b.index);
    return Q8Elem{cayley()[static_cast<std::size_t>(a.index - 1)][static_cast<std::size_t>(b.index - 1)]};
}

Q8Elem q8_inv(Q8Elem a)
{
    check_index(a.index);
    for (int j = 1; j <= 8; ++j)
        if (q8_mul(a, Q8Elem{j}) == Q8Elem{1}) return Q8Elem{j};
    throw Error("unreachable");
}

Q8Elem r3_of_pair(long m, long n)
{
    // beta^m (beta alpha)^n, well defined mod 4 in each argument
    static const std::array<Q8Elem, 4> beta_pow = [] {
        std::array<Q8Elem, 4> p{};
        p[0] = Q8Elem{1};
        for (int i = 1; i < 4; ++i) p[static_cast<std::size_t>(i)] = q8_mul(p[static_cast<std::size_t>(i - 1)], Q8Elem{2});
        return p;
    }();
    static const std::array<Q8Elem, 4> ba_pow = [] {
        std::array<Q8Elem, 4> p{};
        p[0] = Q8Elem{1};
        for (int i = 1; i < 4; ++i) p[static_cast<std::size_t>(i)] = q8_mul(p[static_cast<std::size_t>(i - 1)], Q8Elem{5});
        return p;
    }();
    return q8_mul(beta_pow[static_cast<std::size_t>(floor_mod(m, 4))],
                  ba_pow[static_cast<std::size_t>(floor_mod(n, 4))]);
}

const std::array<std::pair<int, int>, 8>& class_labels()
{
    static const std::array<std::pair<int, int>, 8> labels{{
        {0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1},
    }};
    return labels;
}

DecompClass class_of_point(long m, long n)
{
    int mm = static_cast<int>(floor_mod(m, 4));
    int nn = static_cast<int>(floor_mod(n, 4));
    const auto& labels = class_labels();
    for (int k = 1; k <= 8; ++k) {
        auto [s, t] = labels[static_cast<std::size_t>(k - 1)];
        if ((mm == s && nn == t) || (mm == (s + 2) % 4 && nn == (t + 2) % 4))
            return DecompClass{k, s, t};
    }
    throw Error("mod-4 residue not covered by any class");  // unreachable: classes tile Z^2
}

std::string style_name(Style s)
{
    switch (s) {
        case Style::I: return "I";
        case Style::II: return "II";
        case Style::III: return "III";
    }
    return "?";
}

SublatticeRealization realization(Style style, int k)
{
    check_index(k);
    auto [s, t] = class_labels()[static_cast<std::size_t>(k - 1)];
    SublatticeRealization r;
    r.style = style;
    r.k = k;
    r.translate = GridVec{s, t};
    // Lambda3 = [4w1, 4w2]; Lambda4 = g Lambda3 = [4w2, -4w1-4w2];
    // Lambda2 = g^2 Lambda3 = [-4w1-4w2, 4w1].  The paper's half-points are
    // kept literally; they agree modulo the basis lattice.
    switch (style) {
        case Style::I:
            r.basis = {GridVec{4, 0}, GridVec{0, 4}};
            r.halfpoint = GridVec{2, 2};  // (w1^3 + w2^3)/2
            break;
        case Style::II:
            r.basis = {GridVec{0, 4}, GridVec{-4, -4}};
            r.halfpoint = GridVec{-2, -2};  // w2^4/2
            break;
        case Style::III:
            r.basis = {GridVec{-4, -4}, GridVec{4, 0}};
            r.halfpoint = GridVec{-2, -2};  // w1^2/2
            break;
    }
    return r;
}

bool SublatticeRealization::contains(GridVec p) const
{
    // p in translate + {0, halfpoint} + Z basis[0] + Z basis[1]
    long det = basis[0].x * basis[1].y - basis[0].y * basis[1].x;
    for (GridVec shift : {GridVec{0, 0}, halfpoint}) {
        GridVec d = p - translate - shift;
        long mx = d.x * basis[1].y - d.y * basis[1].x;   // det * coefficient of basis[0]
        long my = basis[0].x * d.y - basis[0].y * d.x;   // det * coefficient of basis[1]
        if (mx % det == 0 && my % det == 0) return true;
    }
    return false;
}

std::vector<GridVec> SublatticeRealization::points_in_box(long b) const
{
    std::vector<GridVec> pts;
    for (long m = -b; m <= b; ++m)
        for (long n = -b; n <= b; ++n)
            if (contains(GridVec{m, n})) pts.push_back(GridVec{m, n});
    return pts;
}

DecompositionReport verify_decomposition(long box_half_width)
{
    DecompositionReport rep;
    rep.box_half_width = box_half_width;
    rep.pass = true;
    auto fail = [&rep](const std::string& msg) {
        rep.pass = false;
        if (rep.failures.size() < 32) rep.failures.push_back(msg);
    };
    if (box_half_width < 8) fail("box_half_width must be at least 8");

    const auto& labels = class_labels();

    // (c) minimal nonnegative labels reproduce the table: over s in [0,4),
    // t in [0,2) the map (s,t) -> r3 is a bijection matching row k.
    for (int k = 1; k <= 8; ++k) {
        auto [s, t] = labels[static_cast<std::size_t>(k - 1)];
        bool found = false;
        for (int ss = 0; ss < 4 && !found; ++ss)
            for (int tt = 0; tt < 2 && !found; ++tt)
                if (r3_of_pair(ss, tt) == Q8Elem{k}) {
                    found = true;
                    if (ss != s || tt != t) {
                        std::ostringstream os;
                        os << "minimal label of q" << k << " is (" << ss << "," << tt
                           << "), table says (" << s << "," << t << ")";
                        fail(os.str());
                    }
                }
        if (!found) fail("q" + std::to_string(k) + " not reached by any minimal label");
    }

    const long B = box_half_width;
    for (long m = -B; m <= B; ++m) {
        for (long n = -B; n <= B; ++n) {
            // (a) exactly one class
            int hits = 0;
            int k_found = 0;
            for (int k = 1; k <= 8; ++k) {
                auto [s, t] = labels[static_cast<std::size_t>(k - 1)];
                long dm = floor_mod(m - s, 4), dn = floor_mod(n - t, 4);
                if ((dm == 0 && dn == 0) || (dm == 2 && dn == 2)) {
                    ++hits;
                    k_found = k;
                }
            }
            if (hits != 1) {
                std::ostringstream os;
                os << "(" << m << "," << n << ") belongs to " << hits << " classes";
                fail(os.str());
                continue;
            }
            DecompClass cls = class_of_point(m, n);
            if (cls.k != k_found) fail("class_of_point disagrees with the direct pattern scan");
            rep.class_counts[static_cast<std::size_t>(cls.k - 1)] += 1;

            // (b) sigma pairing: the (s,t)/(s+2,t+2) pattern maps to q_k, the
            // (s+2,t)/(s,t+2) pattern of the same k maps to sigma q_k.
            Q8Elem img = r3_of_pair(m, n);
            for (int k = 1; k <= 8; ++k) {
                auto [s, t] = labels[static_cast<std::size_t>(k - 1)];
                long dm = floor_mod(m - s, 4), dn = floor_mod(n - t, 4);
                if ((dm == 0 && dn == 0) || (dm == 2 && dn == 2)) {
                    if (img != Q8Elem{k}) {
                        std::ostringstream os;
                        os << "r3(" << m << "," << n << ") = " << img.name() << ", expected q"
                           << k;
                        fail(os.str());
                    }
                } else if ((dm == 2 && dn == 0) || (dm == 0 && dn == 2)) {
                    Q8Elem expect = q8_sigma_of(Q8Elem{k});
                    if (img != expect) {
                        std::ostringstream os;
                        os << "r3(" << m << "," << n << ") = " << img.name()
                           << ", expected sigma q" << k << " = " << expect.name();
                        fail(os.str());
                    }
                }
            }
        }
    }

    // equal density up to boundary effects
    const long total = (2 * B + 1) * (2 * B + 1);
    for (int k = 1; k <= 8; ++k) {
        double frac = static_cast<double>(rep.class_counts[static_cast<std::size_t>(k - 1)]) /
                      static_cast<double>(total);
        if (std::abs(frac - 0.125) > 2.0 / static_cast<double>(B))
            fail("class q" + std::to_string(k) + " density is off: " + std::to_string(frac));
    }

    // styles I/II/III carve out the same point sets
    for (int k = 1; k <= 8; ++k) {
        auto p1 = realization(Style::I, k).points_in_box(B);
        auto p2 = realization(Style::II, k).points_in_box(B);
        auto p3 = realization(Style::III, k).points_in_box(B);
        if (!(p1 == p2 && p2 == p3))
            fail("realization styles disagree for k = " + std::to_string(k));
        for (const GridVec& p : p1)
            if (class_of_point(p.x, p.y).k != k)
                fail("realization of class " + std::to_string(k) + " contains a foreign point");
        long expected = rep.class_counts[static_cast<std::size_t>(k - 1)];
        if (static_cast<long>(p1.size()) != expected)
            fail("realization of class " + std::to_string(k) + " misses points");
    }

    return rep;
}

std::vector<long long> e8_count(int m_max)
{
    if (m_max < 0) throw Error("m_max must be nonnegative");
    if (m_max > 64) throw BudgetExceeded();
    // Work with doubled coordinates y = 2x: either all even or all odd, with
    // sum(y) = 0 mod 4 and |y|^2 = 8m.  Meet in the middle over two blocks of
    // four coordinates, aggregated by (norm, sum mod 4).
    const long norm_cap = 8L * m_max;
    auto half_counts = [norm_cap](bool odd) {
        // map (norm, sum mod 4) -> count over 4-vectors of the given parity
        std::map<std::pair<long, int>, long long> counts;
        long bound = 0;
        while (bound * bound <= norm_cap) ++bound;
        std::array<long, 4> y{};
        auto rec = [&](auto&& self, int pos, long norm, long sum) -> void {
            if (norm > norm_cap) return;
            if (pos == 4) {
                counts[{norm, static_cast<int>(((sum % 4) + 4) % 4)}] += 1;
                return;
            }
            for (long v = odd ? 1 : 0; v <= bound; v += 2) {
                long n2 = norm + v * v;
                if (n2 > norm_cap) break;
                if (v == 0) {
                    y[static_cast<std::size_t>(pos)] = 0;
                    self(self, pos + 1, n2, sum);
                } else {
                    for (long s : {v, -v}) {
                        y[static_cast<std::size_t>(pos)] = s;
                        self(self, pos + 1, n2, sum + s);
                    }
                }
            }
        };
        rec(rec, 0, 0, 0);
        return counts;
    };

    std::vector<long long> r(static_cast<std::size_t>(m_max + 1), 0);
    for (bool odd : {false, true}) {
        auto counts = half_counts(odd);
        for (const auto& [key1, c1] : counts) {
            for (const auto& [key2, c2] : counts) {
                long norm = key1.first + key2.first;
                if (norm > norm_cap || norm % 8 != 0) continue;
                if ((key1.second + key2.second) % 4 != 0) continue;
                r[static_cast<std::size_t>(norm / 8)] += c1 * c2;
            }
        }
    }
    return r;
}

}  // namespace etabridge::q8
