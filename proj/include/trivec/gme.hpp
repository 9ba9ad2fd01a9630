#pragma once

// Geometric measure of entanglement: maximum overlap of a three-fermion
// state with decomposable unit 3-vectors (and the product-state variant for
// qubit states), via alternating maximization with exact per-factor updates,
// plus the closed-form single-angle problem for five-coordinate points.

#include <array>
#include <cmath>
#include <cstdint>

#include "exterior.hpp"
#include "sampling.hpp"
#include "state.hpp"

namespace trivec {

template <typename R>
using Vec2 = std::array<cx<R>, 2>;

// ---------------------------------------------------------------------------
// Small vector helpers (Eigen-free so extended precision works)
// ---------------------------------------------------------------------------

namespace detail {

template <typename R, std::size_t N>
cx<R> dot_c(const std::array<cx<R>, N>& u, const std::array<cx<R>, N>& v) {
    cx<R> s{};
    for (std::size_t i = 0; i < N; ++i) s += conj(u[i]) * v[i];
    return s;
}

template <typename R, std::size_t N>
R norm_c(const std::array<cx<R>, N>& u) {
    R s{};
    for (const auto& e : u) s += norm2(e);
    using std::sqrt;
    return R(sqrt(s));
}

template <typename R, std::size_t N>
void scale_c(std::array<cx<R>, N>& u, const cx<R>& f) {
    for (auto& e : u) e = e * f;
}

// u -= <v,u> v  (remove the component of u along the unit vector v)
template <typename R, std::size_t N>
void reject_c(std::array<cx<R>, N>& u, const std::array<cx<R>, N>& v) {
    const cx<R> c = dot_c(v, u);
    for (std::size_t i = 0; i < N; ++i) u[i] -= c * v[i];
}

template <typename R, std::size_t N>
void normalize_c(std::array<cx<R>, N>& u) {
    const R n = norm_c(u);
    if (n > R(0)) scale_c(u, cx<R>(R(1) / n, R(0)));
}

template <typename R, std::size_t N>
std::array<cx<R>, N> random_unit(Rng& rng) {
    std::array<cx<R>, N> u;
    for (;;) {
        for (auto& e : u) e = gaussian_cx<R>(rng);
        if (norm_c(u) > R(1e-30)) {
            normalize_c(u);
            return u;
        }
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fermionic overlap maximization
// ---------------------------------------------------------------------------

// Contraction of the sign-extended amplitudes with two of the three wedge
// factors: slot = which factor is left open (0, 1, or 2); u and v occupy the
// remaining slots in increasing slot order.  The returned vector w satisfies
// <u_0 ^ u_1 ^ u_2 | psi> = <(open factor), w>.
template <typename R>
Vec6<R> wedge_contract_pair(const State<R>& psi, int slot, const Vec6<R>& u,
                            const Vec6<R>& v) {
    Vec6<R> w{};
    cx<R> outer[6][6];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) outer[i][j] = conj(u[i]) * conj(v[j]);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            if (b == a) continue;
            for (int c = 1; c <= 6; ++c) {
                if (c == a || c == b) continue;
                const SignedIndex si = triple_slot(a, b, c);
                const cx<R> amp = psi.xi[si.index] * R(si.sign);
                if (slot == 0)
                    w[a - 1] += outer[b - 1][c - 1] * amp;
                else if (slot == 1)
                    w[b - 1] += outer[a - 1][c - 1] * amp;
                else
                    w[c - 1] += outer[a - 1][b - 1] * amp;
            }
        }
    return w;
}

template <typename R>
struct MuResult {
    R mu = R(0);
    std::array<Vec6<R>, 3> maximizer{};  // orthonormal; overlap real nonnegative
    int starts_used = 0;
    int iterations = 0;    // sweeps used by the winning start
    bool converged = false;
    bool monotone = true;  // no sweep lowered the objective beyond rounding
    R stationarity = R(0);  // max over factors of sin(angle to its own update)
};

namespace detail {

// Slots occupied by the other two factors, in increasing order, per open slot.
inline constexpr int kPairLo[3] = {1, 0, 0};
inline constexpr int kPairHi[3] = {2, 2, 1};

// One alternating-maximization run from a given orthonormal triple.  Each
// factor update is the exact maximizer given the other two: the contraction,
// projected on their orthogonal complement and normalized.
template <typename R>
R ascend(const State<R>& psi, std::array<Vec6<R>, 3>& t, double tol, int max_sweeps,
         int& sweeps, bool& converged, bool& monotone) {
    R obj = R(0);
    converged = false;
    for (sweeps = 0; sweeps < max_sweeps; ++sweeps) {
        const R prev = obj;
        for (int s = 0; s < 3; ++s) {
            Vec6<R> w = wedge_contract_pair(psi, s, t[kPairLo[s]], t[kPairHi[s]]);
            reject_c(w, t[kPairLo[s]]);
            reject_c(w, t[kPairHi[s]]);
            const R n = norm_c(w);
            if (n > R(1e-280)) {
                scale_c(w, cx<R>(R(1) / n, R(0)));
                t[s] = w;
                obj = n;
            }
        }
        // full re-orthonormalization once per sweep to stop rounding drift
        normalize_c(t[0]);
        reject_c(t[1], t[0]);
        normalize_c(t[1]);
        reject_c(t[2], t[0]);
        reject_c(t[2], t[1]);
        normalize_c(t[2]);
        if (obj < prev - R(tol) * (R(1) + obj)) monotone = false;
        if (obj - prev < R(tol) * (R(1) + obj)) {
            converged = true;
            ++sweeps;
            break;
        }
    }
    return obj;
}

}  // namespace detail

// Maximum overlap with decomposable unit 3-vectors, by alternating
// maximization over `starts` seeded random restarts plus the twenty
// coordinate triples.
template <typename R>
MuResult<R> mu_general(const State<R>& psi, int starts = 32, double tol = 1e-12,
                       std::uint64_t seed = 0x6eed6eedULL, int max_sweeps = 500) {
    if (psi.norm2() == R(0)) fail("ZeroState", "overlap maximization of the zero state");
    MuResult<R> best;
    auto run = [&](std::array<Vec6<R>, 3> t) {
        int sweeps = 0;
        bool conv = false, mono = true;
        const R val = detail::ascend(psi, t, tol, max_sweeps, sweeps, conv, mono);
        ++best.starts_used;
        best.monotone = best.monotone && mono;
        if (val > best.mu) {
            best.mu = val;
            best.maximizer = t;
            best.iterations = sweeps;
            best.converged = conv;
        }
    };
    for (const Triple& tr : kTripleList) {
        std::array<Vec6<R>, 3> t{};
        t[0][tr.i - 1] = cx<R>(R(1), R(0));
        t[1][tr.j - 1] = cx<R>(R(1), R(0));
        t[2][tr.k - 1] = cx<R>(R(1), R(0));
        run(t);
    }
    for (int s = 0; s < starts; ++s) {
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(s + 1));
        std::array<Vec6<R>, 3> t;
        t[0] = detail::random_unit<R, 6>(rng);
        t[1] = detail::random_unit<R, 6>(rng);
        detail::reject_c(t[1], t[0]);
        detail::normalize_c(t[1]);
        t[2] = detail::random_unit<R, 6>(rng);
        detail::reject_c(t[2], t[0]);
        detail::reject_c(t[2], t[1]);
        detail::normalize_c(t[2]);
        run(t);
    }
    // Phase gauge: rotate the third factor so the overlap is real nonnegative,
    // then record how close the triple is to a joint fixed point.
    {
        auto& t = best.maximizer;
        const Vec6<R> w = wedge_contract_pair(psi, 2, t[0], t[1]);
        const cx<R> o = detail::dot_c(t[2], w);
        const R mod = abs(o);
        if (mod > R(0)) detail::scale_c(t[2], o * cx<R>(R(1) / mod, R(0)));
        R worst = R(0);
        for (int s = 0; s < 3; ++s) {
            Vec6<R> ws = wedge_contract_pair(psi, s, t[detail::kPairLo[s]],
                                             t[detail::kPairHi[s]]);
            detail::reject_c(ws, t[detail::kPairLo[s]]);
            detail::reject_c(ws, t[detail::kPairHi[s]]);
            const R n = detail::norm_c(ws);
            if (n > R(0)) {
                const R cosang = abs(detail::dot_c(t[s], ws)) / n;
                const R s2 = R(1) - cosang * cosang;
                if (s2 > R(0)) {
                    using std::sqrt;
                    const R sinang = R(sqrt(s2));
                    if (sinang > worst) worst = sinang;
                }
            }
        }
        best.stationarity = worst;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Qubit (product-state) overlap maximization
// ---------------------------------------------------------------------------

template <typename R>
struct QubitMuResult {
    R mu = R(0);
    std::array<Vec2<R>, 3> maximizer{};
    int starts_used = 0;
    int iterations = 0;
    bool converged = false;
    bool monotone = true;
    R stationarity = R(0);
};

namespace detail {

// Top singular pair of a 2x2 complex matrix; fills unit left/right vectors.
template <typename R>
R top_singular(const cx<R> b[2][2], Vec2<R>& left, Vec2<R>& right) {
    using std::sqrt;
    const cx<R> h01 = conj(b[0][0]) * b[0][1] + conj(b[1][0]) * b[1][1];
    const R h00 = norm2(b[0][0]) + norm2(b[1][0]);
    const R h11 = norm2(b[0][1]) + norm2(b[1][1]);
    const R mid = (h00 + h11) / R(2);
    const R rad = R(sqrt((h00 - h11) * (h00 - h11) / R(4) + norm2(h01)));
    const R lam = mid + rad;  // largest eigenvalue of B^dagger B
    const R r0 = lam - h00, r1 = lam - h11;
    Vec2<R> v;
    if (r1 * r1 >= r0 * r0)
        v = {cx<R>(r1, R(0)), conj(h01)};
    else
        v = {h01, cx<R>(r0, R(0))};
    if (norm_c(v) == R(0)) v = {cx<R>(R(1), R(0)), cx<R>()};
    normalize_c(v);
    right = v;
    left = {b[0][0] * v[0] + b[0][1] * v[1], b[1][0] * v[0] + b[1][1] * v[1]};
    if (norm_c(left) > R(0))
        normalize_c(left);
    else
        left = {cx<R>(R(1), R(0)), cx<R>()};
    return lam > R(0) ? R(sqrt(lam)) : R(0);
}

// Contraction of a qubit state over two sites; open = remaining site, u and v
// occupy the other two sites in increasing site order.
template <typename R>
Vec2<R> qubit_contract(const QubitState<R>& phi, int open, const Vec2<R>& u,
                       const Vec2<R>& v) {
    Vec2<R> w{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const cx<R>& amp = phi.amp(i, j, k);
                if (open == 0)
                    w[i] += conj(u[j]) * conj(v[k]) * amp;
                else if (open == 1)
                    w[j] += conj(u[i]) * conj(v[k]) * amp;
                else
                    w[k] += conj(u[i]) * conj(v[j]) * amp;
            }
    return w;
}

}  // namespace detail

// Maximum overlap with product states, alternating between the closed-form
// joint update of the first two factors (top singular pair of the one-site
// contraction) and the exact third-factor update.
template <typename R>
QubitMuResult<R> mu_sov(const QubitState<R>& phi, int starts = 32, double tol = 1e-12,
                        std::uint64_t seed = 0x6eed6eedULL, int max_sweeps = 500) {
    R n2 = R(0);
    for (const auto& e : phi.t) n2 += norm2(e);
    if (n2 == R(0)) fail("ZeroState", "overlap maximization of the zero state");
    QubitMuResult<R> best;
    auto run = [&](Vec2<R> u3) {
        Vec2<R> u1{cx<R>(R(1), R(0)), cx<R>()};
        Vec2<R> u2 = u1;
        R obj = R(0);
        bool conv = false, mono = true;
        int sweeps = 0;
        for (; sweeps < max_sweeps; ++sweeps) {
            const R prev = obj;
            cx<R> b[2][2];
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    b[i][j] = cx<R>();
                    for (int k = 0; k < 2; ++k) b[i][j] += phi.amp(i, j, k) * conj(u3[k]);
                }
            Vec2<R> left, right;
            const R sg = detail::top_singular<R>(b, left, right);
            if (sg > R(0)) {
                u1 = left;
                u2 = {conj(right[0]), conj(right[1])};
                obj = sg;
            }
            Vec2<R> w = detail::qubit_contract(phi, 2, u1, u2);
            const R nw = detail::norm_c(w);
            if (nw > R(1e-280)) {
                detail::scale_c(w, cx<R>(R(1) / nw, R(0)));
                u3 = w;
                obj = nw;
            }
            if (obj < prev - R(tol) * (R(1) + obj)) mono = false;
            if (obj - prev < R(tol) * (R(1) + obj)) {
                conv = true;
                ++sweeps;
                break;
            }
        }
        ++best.starts_used;
        best.monotone = best.monotone && mono;
        if (obj > best.mu) {
            best.mu = obj;
            best.maximizer = {u1, u2, u3};
            best.iterations = sweeps;
            best.converged = conv;
        }
    };
    run(Vec2<R>{cx<R>(R(1), R(0)), cx<R>()});
    run(Vec2<R>{cx<R>(), cx<R>(R(1), R(0))});
    for (int s = 0; s < starts; ++s) {
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(s + 1));
        run(detail::random_unit<R, 2>(rng));
    }
    // phase gauge and stationarity at the winner
    {
        auto& m = best.maximizer;
        const Vec2<R> w = detail::qubit_contract(phi, 2, m[0], m[1]);
        const cx<R> o = detail::dot_c(m[2], w);
        const R mod = abs(o);
        if (mod > R(0)) detail::scale_c(m[2], o * cx<R>(R(1) / mod, R(0)));
        R worst = R(0);
        for (int s = 0; s < 3; ++s) {
            const Vec2<R> ws = detail::qubit_contract(phi, s, m[s == 0 ? 1 : 0],
                                                      m[s == 2 ? 1 : 2]);
            const R n = detail::norm_c(ws);
            if (n > R(0)) {
                const R cosang = abs(detail::dot_c(m[s], ws)) / n;
                const R s2 = R(1) - cosang * cosang;
                if (s2 > R(0)) {
                    using std::sqrt;
                    const R sinang = R(sqrt(s2));
                    if (sinang > worst) worst = sinang;
                }
            }
        }
        best.stationarity = worst;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Closed-form single-angle problem for five-coordinate points
// ---------------------------------------------------------------------------

// For the state of a five-coordinate point, maximizing over the first two
// factors in closed form leaves one unit vector u3 = (cos t, sin t e^{is}):
//   value(t, s) = (P + sqrt(P^2 - 4|Q|^2)) / 2  with
//   P = |conj(z) xi + c eta|^2 + (a^2 + b^2) xi^2 + d^2 |eta|^2,
//   Q = ab xi^2 - d conj(z) xi eta - cd eta^2,
// and mu^2 is its maximum.  Dense grid, then derivative-free pattern-search
// polish (the objective has kinks where the square-root argument vanishes).
template <typename R>
R mu_w6(const W6Point<R>& p) {
    using std::acos;
    using std::cos;
    using std::sin;
    using std::sqrt;
    const cx<R> zc(p.x, -p.y);
    const R a2b2 = p.a * p.a + p.b * p.b;
    const R d2 = p.d * p.d;
    const R ab = p.a * p.b;
    const R cd = p.c * p.d;
    auto value = [&](const R& t, const R& s) {
        const R xi = R(cos(t));
        const R em = R(sin(t));
        const cx<R> eta(em * R(cos(s)), em * R(sin(s)));
        const cx<R> top = zc * xi + eta * p.c;
        const R P = norm2(top) + a2b2 * xi * xi + d2 * em * em;
        const cx<R> Q = cx<R>(ab * xi * xi, R(0)) - zc * eta * (p.d * xi) - eta * eta * cd;
        R disc = P * P - R(4) * norm2(Q);
        if (disc < R(0)) disc = R(0);
        return (P + R(sqrt(disc))) / R(2);
    };
    const R pi = R(acos(R(-1)));
    const int n = 64;
    R best = R(0), bt = R(0), bs = R(0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j) {
            const R t = (pi / R(2)) * R(i) / R(n);
            const R s = (R(2) * pi) * R(j) / R(n);
            const R v = value(t, s);
            if (v > best) {
                best = v;
                bt = t;
                bs = s;
            }
        }
    R ht = (pi / R(2)) / R(n);
    R hs = (R(2) * pi) / R(n);
    for (int round = 0; round < 200; ++round) {
        bool moved = false;
        const R cand[4][2] = {{bt + ht, bs}, {bt - ht, bs}, {bt, bs + hs}, {bt, bs - hs}};
        for (const auto& c : cand) {
            const R v = value(c[0], c[1]);
            if (v > best) {
                best = v;
                bt = c[0];
                bs = c[1];
                moved = true;
            }
        }
        if (!moved) {
            ht /= R(2);
            hs /= R(2);
            if (ht < R(1e-12)) break;
        }
    }
    return R(sqrt(best));
}

// ---------------------------------------------------------------------------
// Geometric measures
// ---------------------------------------------------------------------------

template <typename R>
struct GmeResult {
    R mu = R(0);
    R gme = R(0);
    bool input_was_normalized = true;
};

template <typename R>
GmeResult<R> gme(const State<R>& psi, int starts = 32, double tol = 1e-12,
                 std::uint64_t seed = 0x6eed6eedULL) {
    using std::abs;
    using std::sqrt;
    const R n2 = psi.norm2();
    if (n2 == R(0)) fail("ZeroState", "geometric measure of the zero state");
    GmeResult<R> g;
    g.input_was_normalized = abs(n2 - R(1)) < R(1e-12);
    State<R> unit = psi;
    const R inv = R(1) / R(sqrt(n2));
    for (auto& e : unit.xi) e = e * inv;
    g.mu = mu_general(unit, starts, tol, seed).mu;
    g.gme = R(1) - g.mu * g.mu;
    return g;
}

template <typename R>
GmeResult<R> gme(const QubitState<R>& phi, int starts = 32, double tol = 1e-12,
                 std::uint64_t seed = 0x6eed6eedULL) {
    using std::abs;
    using std::sqrt;
    R n2 = R(0);
    for (const auto& e : phi.t) n2 += norm2(e);
    if (n2 == R(0)) fail("ZeroState", "geometric measure of the zero state");
    GmeResult<R> g;
    g.input_was_normalized = abs(n2 - R(1)) < R(1e-12);
    QubitState<R> unit = phi;
    const R inv = R(1) / R(sqrt(n2));
    for (auto& e : unit.t) e = e * inv;
    g.mu = mu_sov(unit, starts, tol, seed).mu;
    g.gme = R(1) - g.mu * g.mu;
    return g;
}

}  // namespace trivec
