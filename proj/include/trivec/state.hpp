// state.hpp — the three state representations:
//   State<R>       three-fermion pure state in wedge^3 C^6 (20 amplitudes)
//   QubitState<R>  three-qubit pure state (8 amplitudes)
//   W6Point<R>     the 5-term normal form a e235 + b e145 + c e136 + d e246 + z e135
#pragma once

#include <array>
#include <cmath>

#include "trivec/basis.hpp"
#include "trivec/types.hpp"

namespace trivec {

template <class R>
struct State {
    // Lexicographic triple order; amp(i,j,k) handles permuted/signed access.
    std::array<cx<R>, kTriples> xi{};

    [[nodiscard]] cx<R> amp(int i, int j, int k) const {
        SignedIndex s = triple_slot(i, j, k);
        if (s.index < 0) return cx<R>();
        cx<R> v = xi[static_cast<size_t>(s.index)];
        return (s.sign > 0) ? v : -v;
    }

    // Adds v to the amplitude of the (sign-adjusted) ordered triple.
    void add(int i, int j, int k, const cx<R>& v) {
        SignedIndex s = triple_slot(i, j, k);
        if (s.index < 0) return;
        xi[static_cast<size_t>(s.index)] += (s.sign > 0) ? v : -v;
    }

    [[nodiscard]] R norm2() const {
        R n(0);
        for (const auto& a : xi) n += trivec::norm2(a);
        return n;
    }

    [[nodiscard]] R norm() const {
        using std::sqrt;
        return R(sqrt(norm2()));
    }

    State& operator+=(const State& o) {
        for (int n = 0; n < kTriples; ++n) xi[n] += o.xi[n];
        return *this;
    }
    State& operator-=(const State& o) {
        for (int n = 0; n < kTriples; ++n) xi[n] -= o.xi[n];
        return *this;
    }
    State& operator*=(const cx<R>& s) {
        for (auto& a : xi) a *= s;
        return *this;
    }
    State& operator*=(const R& s) {
        for (auto& a : xi) a *= s;
        return *this;
    }
};

template <class R> State<R> operator+(State<R> a, const State<R>& b) { return a += b; }
template <class R> State<R> operator-(State<R> a, const State<R>& b) { return a -= b; }
template <class R> State<R> operator*(State<R> a, const cx<R>& s) { return a *= s; }
template <class R> State<R> operator*(const cx<R>& s, State<R> a) { return a *= s; }
template <class R> State<R> operator*(State<R> a, const R& s) { return a *= s; }

template <class R>
State<R> conj(const State<R>& s) {
    State<R> r;
    for (int n = 0; n < kTriples; ++n) r.xi[n] = conj(s.xi[n]);
    return r;
}

// e_{ijk} basis state (unit amplitude at the ordered triple).
template <class R>
State<R> basis_state(int i, int j, int k) {
    State<R> s;
    s.add(i, j, k, cx<R>(R(1), R(0)));
    return s;
}

template <class R>
State<R> normalized(const State<R>& s) {
    R n = s.norm();
    if (n == R(0)) fail("ZeroState", "cannot normalize the zero state");
    State<R> r = s;
    r *= R(R(1) / n);
    return r;
}

// ---------------------------------------------------------------------------
// Three-qubit states
// ---------------------------------------------------------------------------

template <class R>
struct QubitState {
    std::array<cx<R>, 8> t{};  // t[(i<<2)|(j<<1)|k] = amplitude of |ijk>

    [[nodiscard]] cx<R>& amp(int i, int j, int k) {
        return t[static_cast<size_t>((i << 2) | (j << 1) | k)];
    }
    [[nodiscard]] const cx<R>& amp(int i, int j, int k) const {
        return t[static_cast<size_t>((i << 2) | (j << 1) | k)];
    }

    [[nodiscard]] R norm2() const {
        R n(0);
        for (const auto& a : t) n += trivec::norm2(a);
        return n;
    }

    [[nodiscard]] R norm() const {
        using std::sqrt;
        return R(sqrt(norm2()));
    }
};

template <class R>
QubitState<R> conj(const QubitState<R>& s) {
    QubitState<R> r;
    for (int n = 0; n < 8; ++n) r.t[n] = conj(s.t[n]);
    return r;
}

template <class R>
QubitState<R> normalized(const QubitState<R>& s) {
    R n = s.norm();
    if (n == R(0)) fail("ZeroState", "cannot normalize the zero state");
    QubitState<R> r = s;
    for (auto& a : r.t) a /= n;
    return r;
}

// ---------------------------------------------------------------------------
// W6 normal-form points
// ---------------------------------------------------------------------------

// Coordinates (a,b,c,d,x,y) with z = x + iy; the corresponding state is
// a e235 + b e145 + c e136 + d e246 + z e135.
template <class R>
struct W6Point {
    R a{}, b{}, c{}, d{}, x{}, y{};

    [[nodiscard]] R z2() const { return x * x + y * y; }
    [[nodiscard]] R s1() const { return a * a + b * b + c * c; }
    [[nodiscard]] R s2() const { return a * a * b * b + b * b * c * c + c * c * a * a; }
    [[nodiscard]] R s3() const { return a * a * b * b * c * c; }
    [[nodiscard]] R norm2() const { return s1() + d * d + z2(); }

    [[nodiscard]] State<R> state() const {
        State<R> s;
        s.add(2, 3, 5, cx<R>(a, R(0)));
        s.add(1, 4, 5, cx<R>(b, R(0)));
        s.add(1, 3, 6, cx<R>(c, R(0)));
        s.add(2, 4, 6, cx<R>(d, R(0)));
        s.add(1, 3, 5, cx<R>(x, y));
        return s;
    }
};

template <class R>
W6Point<R> make_w6(R a, R b, R c, R d, R x, R y) {
    return W6Point<R>{a, b, c, d, x, y};
}

// Extracts W6 coordinates from a state supported on the five normal-form
// triples; amplitudes elsewhere must vanish within tol * norm.
template <class R>
W6Point<R> w6_from_state(const State<R>& s, const R& tol) {
    using std::sqrt;
    static constexpr int kSlots[5][3] = {
        {2, 3, 5}, {1, 4, 5}, {1, 3, 6}, {2, 4, 6}, {1, 3, 5}};
    R scale = s.norm();
    State<R> rest = s;
    cx<R> v[5];
    for (int n = 0; n < 5; ++n) {
        v[n] = s.amp(kSlots[n][0], kSlots[n][1], kSlots[n][2]);
        rest.add(kSlots[n][0], kSlots[n][1], kSlots[n][2], -v[n]);
    }
    if (rest.norm() > tol * scale)
        fail("Inconsistent", "state is not in W6 normal form");
    for (int n = 0; n < 4; ++n) {
        using std::abs;
        if (abs(v[n].im) > tol * scale)
            fail("Inconsistent", "normal-form coefficient has a nonreal phase");
    }
    return W6Point<R>{v[0].re, v[1].re, v[2].re, v[3].re, v[4].re, v[4].im};
}

}  // namespace trivec
