#ifndef ETABRIDGE_DETRNG_HPP
#define ETABRIDGE_DETRNG_HPP

// Seeded random points with platform-independent output.  mt19937_64 has a
// pinned bit stream; the float mapping below avoids the implementation
// defined behaviour of std::uniform_real_distribution so that a fixed seed
// gives byte-identical results everywhere.

#include <complex>
#include <cstdint>
#include <random>

namespace etabridge {

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi)
    {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // test points in the upper half-plane, away from the boundary arcs
    std::complex<double> tau(double im_min = 1.0, double im_max = 2.0)
    {
        double re = uniform(-0.45, 0.45);
        double im = uniform(im_min, im_max);
        return {re, im};
    }

    std::complex<double> box(double lo, double hi)
    {
        double re = uniform(lo, hi);
        double im = uniform(lo, hi);
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace etabridge

#endif
