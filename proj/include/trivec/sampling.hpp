// sampling.hpp — seeded, reproducible random sources: Gaussian draws built
// on the raw mt19937_64 stream, Haar-distributed unitaries, and the state
// families used throughout the test suites.  Entropy is always generated at
// binary64 resolution; extended-precision callers get the same numbers
// converted exactly, with orthonormalization redone at full precision.
#pragma once

#include <cstdint>
#include <random>

#include "trivec/exterior.hpp"
#include "trivec/linalg.hpp"
#include "trivec/state.hpp"
#include "trivec/types.hpp"

namespace trivec {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform on (0,1), 53-bit resolution, never exactly 0 or 1
    double uniform() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53;
    }

    // standard normal via Box-Muller, spare value cached
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

template <class R>
cx<R> gaussian_cx(Rng& rng) {
    const R re = scalar_traits<R>::from_double(rng.gaussian());
    const R im = scalar_traits<R>::from_double(rng.gaussian());
    return cx<R>(re, im);
}

// ---------------------------------------------------------------------------
// Haar unitaries: complex Ginibre + modified Gram-Schmidt.  MGS leaves a
// positive upper-triangular factor, which is exactly the phase convention
// that makes the Q factor Haar-distributed.  The Gram-Schmidt pass runs in
// the target scalar, so extended-precision matrices are unitary to full
// working precision.
// ---------------------------------------------------------------------------

template <class R>
Mat<cx<R>> haar_unitary(Rng& rng, int n = kDim) {
    Mat<cx<R>> m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = gaussian_cx<R>(rng);
    mgs_orthonormalize(m);
    return m;
}

template <class R>
Mat<cx<R>> haar_unitary_seeded(std::uint64_t seed, int n = kDim) {
    Rng rng(seed);
    return haar_unitary<R>(rng, n);
}

// ---------------------------------------------------------------------------
// State families
// ---------------------------------------------------------------------------

// uniform on the unit sphere of the 20-dimensional coefficient space
template <class R>
State<R> random_state(Rng& rng) {
    State<R> s;
    for (auto& v : s.xi) v = gaussian_cx<R>(rng);
    return normalized(s);
}

template <class R>
State<R> random_state_seeded(std::uint64_t seed) {
    Rng rng(seed);
    return random_state<R>(rng);
}

// real amplitudes only (the time-reversal-symmetric family)
template <class R>
State<R> random_real_state(Rng& rng) {
    State<R> s;
    for (auto& v : s.xi) v = cx<R>(scalar_traits<R>::from_double(rng.gaussian()), R(0));
    return normalized(s);
}

template <class R>
QubitState<R> random_qubit_state(Rng& rng) {
    QubitState<R> q;
    for (auto& v : q.t) v = gaussian_cx<R>(rng);
    return normalized(q);
}

// random member of the five-coefficient subspace, coordinates real Gaussian
// (signs unrestricted), unit norm
template <class R>
W6Point<R> random_w6_point(Rng& rng) {
    using std::sqrt;
    W6Point<R> p;
    p.a = scalar_traits<R>::from_double(rng.gaussian());
    p.b = scalar_traits<R>::from_double(rng.gaussian());
    p.c = scalar_traits<R>::from_double(rng.gaussian());
    p.d = scalar_traits<R>::from_double(rng.gaussian());
    p.x = scalar_traits<R>::from_double(rng.gaussian());
    p.y = scalar_traits<R>::from_double(rng.gaussian());
    R n = R(sqrt(p.norm2()));
    if (n == R(0)) fail("ZeroState", "degenerate random draw");
    p.a /= n; p.b /= n; p.c /= n; p.d /= n; p.x /= n; p.y /= n;
    return p;
}

}  // namespace trivec
