#pragma once

// Canonical-form reconstruction.  Recovers the five-coordinate representative
// of a state's local-unitary orbit directly from its invariant values: the
// squared dominant coordinate is a root of a degree-8 polynomial in the first
// six invariants, and the remaining coordinates follow by back-substitution.
// Also provides the three-qubit version (representative with coordinate roles
// matched to the input sites) and an explicit local-unitary witness.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detail/dsq_poly.hpp"
#include "exterior.hpp"
#include "gme.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "rdm.hpp"
#include "region.hpp"
#include "state.hpp"
#include "types.hpp"

namespace trivec {

// ---------------------------------------------------------------------------
// Polynomial layer
// ---------------------------------------------------------------------------

// Degree-8 polynomial in t = d^2 satisfied by the squared dominant coordinate
// of every unit five-coordinate state, as a function of the first six
// invariant values (the first of which must be 1).  Coefficients low-to-high.
template <class R>
struct DsqPoly {
    std::array<R, 9> c{};

    [[nodiscard]] R eval(const R& t) const {
        R v{};
        for (int k = 8; k >= 0; --k) v = v * t + c[static_cast<size_t>(k)];
        return v;
    }

    // largest coefficient magnitude; the natural residual scale
    [[nodiscard]] R scale() const {
        using std::abs;
        R m{};
        for (const auto& e : c) {
            const R a = R(abs(e));
            if (a > m) m = a;
        }
        return m;
    }

    [[nodiscard]] std::vector<R> coeffs() const { return {c.begin(), c.end()}; }
};

template <class R>
DsqPoly<R> dsq_polynomial(const std::array<R, 7>& m) {
    DsqPoly<R> p;
    p.c = detail::dsq_poly_coefficients<R>(m);
    return p;
}

// The two auxiliary polynomials in s = |z|^2 at fixed t = d^2 obtained by
// eliminating the remaining coordinates from the invariant system.  Their
// common root at t = d^2 is |z|^2, and their resultant in s equals
// -2^4 3^5 t^12 times the degree-8 polynomial above.  Coefficients
// low-to-high in s.
template <class R>
std::array<R, 4> zsq_cubic(const std::array<R, 7>& m, const R& t) {
    const R M2 = m[1], M3 = m[2], M4 = m[3], M5 = m[4];
    const R t2 = t * t, t3 = t2 * t, t4 = t2 * t2, t5 = t4 * t;
    std::array<R, 4> q{};
    q[3] = R(3) * t2;
    q[2] = R(9) * (R(2) * t - R(1)) * t2;
    q[1] = R(6) * (R(1) - R(2) * M2) * t2 + R(2) * (M2 - R(2) * M3) * t - R(3) * M5;
    q[0] = R(-96) * t5 + R(144) * t4 - R(48) * (R(1) + M2) * t3 +
           R(16) * (R(2) * M2 - M3) * t2 +
           R(2) * (R(2) * M3 + R(3) * M2 * M2 - M2 - R(12) * M4 - R(6) * M5) * t +
           R(3) * M5;
    return q;
}

template <class R>
std::array<R, 5> zsq_quartic(const std::array<R, 7>& m, const R& t) {
    const R M2 = m[1], M3 = m[2], M5 = m[4], M6 = m[5];
    const R t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    const R t5 = t4 * t, t6 = t4 * t2, t7 = t6 * t, t8 = t4 * t4;
    std::array<R, 5> r{};
    r[4] = R(27) * t4;
    r[3] = R(36) * t3 * (R(8) * t2 - R(4) * t + M2);
    r[2] = R(6) * t2 *
           (R(144) * t4 - R(144) * t3 + R(6) * t2 * (R(7) + R(4) * M2) -
            R(4) * t * (R(4) * M2 + M3) - R(3) * M5);
    r[1] = R(12) * t * (R(4) * t2 - R(2) * t + M2) *
           (R(6) * t2 * (R(1) - R(2) * M2) + R(2) * t * (M2 - R(2) * M3) - R(3) * M5);
    r[0] = R(-2304) * t8 + R(4608) * t7 - R(576) * (R(5) + R(4) * M2) * t6 +
           R(192) * (R(3) + R(16) * M2 - R(2) * M3) * t5 +
           R(96) * (R(4) * M3 - R(11) * M2 - R(6) * M2 * M2 - R(3) * M5) * t4 +
           R(48) * (M2 - R(2) * M3 + R(8) * M2 * M2 + R(6) * M5 - R(4) * M2 * M3) * t3 +
           R(4) * (R(16) * M2 * M3 - R(7) * M2 * M2 - R(18) * M5 - R(36) * M2 * M5 -
                   R(4) * M3 * M3 - R(144) * M6) *
               t2 +
           R(24) * (R(2) * M2 - M3) * M5 * t - R(9) * M5 * M5;
    return r;
}

// ---------------------------------------------------------------------------
// Reconstruction result
// ---------------------------------------------------------------------------

// How the dominant coordinate was selected.
enum class DSource { LargestRoot, MuCrossCheck };

inline const char* d_source_name(DSource s) {
    return s == DSource::LargestRoot ? "largest_root" : "mu_cross_check";
}

template <class R>
struct CanonicalResult {
    W6Point<R> point{};
    OrbitCase<R> orbit{};
    DSource d_source = DSource::LargestRoot;
    bool escalated = false;       // binary64 input rerun in extended precision
    bool y_sign_resolved = true;  // false: degree-12 invariant below the sign floor
    std::map<std::string, R> residuals;  // f_at_d2, g_at_z2, invariant_match, f_scale
};

struct CanonOptions {
    int mu_starts = 16;        // restarts for the overlap maximizer
    double mu_band = 1e-4;     // tolerated |d - mu| before distrusting the root
    double match_tol = 1e-8;   // invariant-match residual triggering escalation
    double region_tol = 1e-7;  // membership/classification band
    bool escalate = true;      // allow the extended-precision rerun
    std::uint64_t seed = 0x6eed6eedULL;
};

// ---------------------------------------------------------------------------
// Precision conversions
// ---------------------------------------------------------------------------

inline State<mp50> widen(const State<double>& s) {
    State<mp50> w;
    for (size_t n = 0; n < s.xi.size(); ++n)
        w.xi[n] = cx<mp50>(mp50(s.xi[n].re), mp50(s.xi[n].im));
    return w;
}

inline W6Point<double> narrow(const W6Point<mp50>& p) {
    auto d = [](const mp50& v) { return scalar_traits<mp50>::to_double(v); };
    return W6Point<double>{d(p.a), d(p.b), d(p.c), d(p.d), d(p.x), d(p.y)};
}

namespace detail {

inline CanonicalResult<double> narrow_result(const CanonicalResult<mp50>& r) {
    CanonicalResult<double> o;
    o.point = narrow(r.point);
    o.orbit.tag = r.orbit.tag;
    o.orbit.partner = narrow(r.orbit.partner);
    o.orbit.radius = scalar_traits<mp50>::to_double(r.orbit.radius);
    o.d_source = r.d_source;
    o.y_sign_resolved = r.y_sign_resolved;
    for (const auto& [k, v] : r.residuals) o.residuals[k] = scalar_traits<mp50>::to_double(v);
    return o;
}

// ---------------------------------------------------------------------------
// Scalar-dependent guard bands
// ---------------------------------------------------------------------------

template <class R>
struct canon_tols {
    // negative squares within this of zero are round-off, beyond it a defect;
    // sized for the worst case of a triple root of the side-coordinate cubic
    // at zero, where coefficient round-off enters the roots by its cube root
    static constexpr double clamp = scalar_traits<R>::is_double ? 1e-4 : 1e-14;
    // below this, a*b*c*d is treated as zero and z is made real by convention
    static constexpr double axis = scalar_traits<R>::is_double ? 1e-8 : 1e-24;
    // smallest predicted degree-12 invariant that still carries a sign
    static constexpr double sign_floor = scalar_traits<R>::is_double ? 2e-12 : 1e-45;
    // coefficient scale below which the degree-8 polynomial counts as zero
    static constexpr double poly_floor = scalar_traits<R>::is_double ? 1e-6 : 1e-30;
    // scaled |f(d^2)| above which the root is ambiguous (a multiple root keeps
    // derivative-based refinement from reaching the precision floor)
    static constexpr double root_residual = scalar_traits<R>::is_double ? 1e-10 : 1e-35;
    // an unreadable sign on an imaginary part below this cannot move a round
    // trip by more than the reconstruction tolerance
    static constexpr double y_floor = scalar_traits<R>::is_double ? 1e-7 : 1e-22;
    // largest acceptable conditioning-limited point error before the binary64
    // result is distrusted
    static constexpr double uncertainty = 1e-7;
};

template <class R>
R clamp_square(R v, const char* what) {
    if (v < R(0)) {
        if (scalar_traits<R>::to_double(v) < -canon_tols<R>::clamp)
            fail("Inconsistent", std::string("negative squared quantity beyond round-off: ") + what);
        v = R(0);
    }
    return v;
}

// Extra alternating sweeps on an orthonormal triple, driven by the fixed-point
// residual instead of objective improvement (the objective is quadratically
// flat around the optimum, so an objective-based stop leaves the factors
// about sqrt(tol) away from the true maximizer).
template <class R>
R refine_triple(const State<R>& psi, std::array<Vec6<R>, 3>& t, double target, int budget) {
    using std::sqrt;
    R worst = R(1);
    for (int it = 0; it < budget; ++it) {
        worst = R(0);
        for (int s = 0; s < 3; ++s) {
            Vec6<R> w = wedge_contract_pair(psi, s, t[kPairLo[s]], t[kPairHi[s]]);
            reject_c(w, t[kPairLo[s]]);
            reject_c(w, t[kPairHi[s]]);
            const R n = norm_c(w);
            if (n > R(1e-280)) {
                scale_c(w, cx<R>(R(1) / n, R(0)));
                R cosang = abs(dot_c(t[s], w));
                if (cosang > R(1)) cosang = R(1);
                R sin2 = R(1) - cosang * cosang;
                if (sin2 < R(0)) sin2 = R(0);
                const R sinang = R(sqrt(sin2));
                if (sinang > worst) worst = sinang;
                t[s] = w;
            }
        }
        if (scalar_traits<R>::to_double(worst) < target) break;
    }
    return worst;
}

// Same idea for the per-site product maximizer of a qubit state.
template <class R>
R refine_product(const QubitState<R>& phi, std::array<Vec2<R>, 3>& m, double target,
                 int budget) {
    using std::sqrt;
    R worst = R(1);
    for (int it = 0; it < budget; ++it) {
        worst = R(0);
        for (int s = 0; s < 3; ++s) {
            Vec2<R> w = qubit_contract(phi, s, m[s == 0 ? 1 : 0], m[s == 2 ? 1 : 2]);
            const R n = norm_c(w);
            if (n > R(1e-280)) {
                scale_c(w, cx<R>(R(1) / n, R(0)));
                R cosang = abs(dot_c(m[s], w));
                if (cosang > R(1)) cosang = R(1);
                R sin2 = R(1) - cosang * cosang;
                if (sin2 < R(0)) sin2 = R(0);
                const R sinang = R(sqrt(sin2));
                if (sinang > worst) worst = sinang;
                m[s] = w;
            }
        }
        if (scalar_traits<R>::to_double(worst) < target) break;
    }
    return worst;
}

// Overlap optimum polished to a joint fixed point of the factor updates.
template <class R>
R refined_mu(const State<R>& unit, const CanonOptions& opt) {
    MuResult<R> mr = mu_general(unit, opt.mu_starts, 1e-12, opt.seed);
    const double target = scalar_traits<R>::is_double ? 1e-11 : 1e-24;
    refine_triple(unit, mr.maximizer, target, scalar_traits<R>::is_double ? 300 : 600);
    const State<R> prod = wedge3(mr.maximizer[0], mr.maximizer[1], mr.maximizer[2]);
    return abs(inner(prod, unit));
}

// In-place Gaussian elimination with partial pivoting on a 6x6 system.
template <class R>
bool solve6(std::array<std::array<R, 6>, 6>& A, std::array<R, 6>& b) {
    using std::abs;
    using std::swap;
    for (int col = 0; col < 6; ++col) {
        int piv = col;
        R best = R(abs(A[static_cast<size_t>(col)][static_cast<size_t>(col)]));
        for (int r = col + 1; r < 6; ++r) {
            const R v = R(abs(A[static_cast<size_t>(r)][static_cast<size_t>(col)]));
            if (v > best) { best = v; piv = r; }
        }
        if (!(best > R(0))) return false;
        if (piv != col) {
            swap(A[static_cast<size_t>(piv)], A[static_cast<size_t>(col)]);
            swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(col)]);
        }
        const R inv = R(1) / A[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int r = col + 1; r < 6; ++r) {
            const R f = A[static_cast<size_t>(r)][static_cast<size_t>(col)] * inv;
            if (f == R(0)) continue;
            for (int j = col; j < 6; ++j)
                A[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * A[static_cast<size_t>(col)][static_cast<size_t>(j)];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    for (int r = 5; r >= 0; --r) {
        R s = b[static_cast<size_t>(r)];
        for (int j = r + 1; j < 6; ++j)
            s -= A[static_cast<size_t>(r)][static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(r)] = s / A[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }
    return true;
}

// Gauss-Newton polish of a reconstructed point against the measured invariant
// values (unit norm plus the six nontrivial invariants).  The algebraic chain
// loses several digits near multiple roots of its intermediate cubics; fitting
// the point directly to the invariant system restores accuracy to the
// conditioning limit of the working precision.  Steps are taken in full and
// the best iterate kept: near a nearly-degenerate pair of side coordinates
// the residual must rise transiently before it can collapse, so a monotone
// line search would freeze the iteration at its starting point.  Returns an
// estimate of the reconstruction uncertainty: the invariant measurement noise
// divided by the smallest singular value of the final Jacobian.
template <class R>
R polish_point(W6Point<R>& p, const std::array<R, 7>& m, int iters) {
    using std::abs;
    using std::sqrt;
    auto to_pt = [](const std::array<R, 6>& v) {
        return W6Point<R>{v[0], v[1], v[2], v[3], v[4], v[5]};
    };
    auto resid = [&](const std::array<R, 6>& v, std::array<R, 7>& F) {
        const W6Point<R> q = to_pt(v);
        const W6Invariants<R> w = w6_invariants(q);
        F[0] = q.norm2() - R(1);
        for (size_t k = 1; k < 7; ++k) F[k] = w.m[k] - m[k];
    };
    auto norm_of = [](const std::array<R, 7>& F) {
        R s{};
        for (const auto& v : F) s += v * v;
        using std::sqrt;
        return R(sqrt(s));
    };
    const R h = R(scalar_traits<R>::is_double ? 1e-6 : 1e-17);
    const double f_floor = scalar_traits<R>::is_double ? 1e-15 : 1e-45;
    const double noise = scalar_traits<R>::is_double ? 1e-14 : 1e-46;
    std::array<R, 6> v{p.a, p.b, p.c, p.d, p.x, p.y};
    std::array<R, 7> F{};
    resid(v, F);
    R fn = norm_of(F);
    std::array<R, 6> best_v = v;
    R best_fn = fn;
    R sigma_min{};
    std::array<std::array<R, 6>, 6> A{};
    for (int it = 0; it < iters; ++it) {
        std::array<std::array<R, 6>, 7> J{};
        for (size_t j = 0; j < 6; ++j) {
            std::array<R, 6> vp = v, vm = v;
            vp[j] += h;
            vm[j] -= h;
            std::array<R, 7> Fp{}, Fm{};
            resid(vp, Fp);
            resid(vm, Fm);
            for (size_t i = 0; i < 7; ++i)
                J[i][j] = (Fp[i] - Fm[i]) / (R(2) * h);
        }
        // normal equations with a ridge tied to the diagonal scale
        std::array<R, 6> g{};
        R diag_max{};
        for (size_t r = 0; r < 6; ++r) {
            for (size_t c2 = 0; c2 < 6; ++c2) {
                R s{};
                for (size_t i = 0; i < 7; ++i) s += J[i][r] * J[i][c2];
                A[r][c2] = s;
            }
            R s{};
            for (size_t i = 0; i < 7; ++i) s += J[i][r] * F[i];
            g[r] = s;
            if (A[r][r] > diag_max) diag_max = A[r][r];
        }
        if (!(diag_max > R(0))) break;
        const R ridge = diag_max * R(scalar_traits<R>::is_double ? 1e-14 : 1e-40);
        std::array<std::array<R, 6>, 6> Ar = A;
        for (size_t r = 0; r < 6; ++r) Ar[r][r] += ridge;
        if (!solve6(Ar, g)) break;
        // smallest singular value of J from inverse iteration on the normal
        // matrix (the solved system doubles as the first inverse-power step)
        {
            std::array<R, 6> z{};
            R zn{};
            for (size_t j = 0; j < 6; ++j) zn += g[j] * g[j];
            zn = R(sqrt(zn));
            if (zn > R(0)) {
                for (size_t j = 0; j < 6; ++j) z[j] = g[j] / zn;
                R growth{};
                for (int pw = 0; pw < 3; ++pw) {
                    std::array<std::array<R, 6>, 6> Az = A;
                    for (size_t r = 0; r < 6; ++r) Az[r][r] += ridge;
                    std::array<R, 6> w = z;
                    if (!solve6(Az, w)) break;
                    R wn{};
                    for (size_t j = 0; j < 6; ++j) wn += w[j] * w[j];
                    wn = R(sqrt(wn));
                    if (!(wn > R(0))) break;
                    growth = wn;
                    for (size_t j = 0; j < 6; ++j) z[j] = w[j] / wn;
                }
                if (growth > R(0)) sigma_min = R(1) / R(sqrt(growth));
            }
        }
        // full step, capped to keep rank-deficient directions harmless
        R cap(1);
        for (size_t j = 0; j < 6; ++j) {
            const R mag = R(abs(g[j]));
            if (mag * cap > R(0.05)) cap = R(0.05) / mag;
        }
        std::array<R, 6> vt = v;
        for (size_t j = 0; j < 6; ++j) vt[j] -= cap * g[j];
        if (!(vt[3] > R(0))) break;  // the dominant coordinate stays positive
        R step{};
        for (size_t j = 0; j < 6; ++j) {
            const R mag = R(abs(cap * g[j]));
            if (mag > step) step = mag;
        }
        v = vt;
        resid(v, F);
        fn = norm_of(F);
        if (fn < best_fn) {
            best_fn = fn;
            best_v = v;
        } else if (scalar_traits<R>::to_double(fn) >
                   1e6 * scalar_traits<R>::to_double(best_fn) + 1.0) {
            break;  // runaway; keep the best iterate
        }
        if (scalar_traits<R>::to_double(fn) < f_floor ||
            scalar_traits<R>::to_double(step) < 1e2 * noise)
            break;
    }
    v = best_v;
    // the invariants are blind to the ordering convention; restore it
    using std::swap;
    if (v[0] < v[1]) swap(v[0], v[1]);
    if (v[1] < v[2]) swap(v[1], v[2]);
    if (v[0] < v[1]) swap(v[0], v[1]);
    p = to_pt(v);
    if (!(sigma_min > R(0))) return R(1);  // no usable curvature information
    return R(noise) / sigma_min;
}

// ---------------------------------------------------------------------------
// Reconstruction pipeline (one precision)
// ---------------------------------------------------------------------------

template <class R>
CanonicalResult<R> canonicalize_impl(const State<R>& unit, const CanonOptions& opt) {
    using std::abs;
    using std::sqrt;
    using tols = canon_tols<R>;
    const R one(1);

    std::array<R, 7> m = fermion_invariants(unit).m;
    m[0] = one;  // unit norm by construction; pin the scale exactly

    CanonicalResult<R> out;
    const DsqPoly<R> f = dsq_polynomial(m);
    const R fscale = f.scale();
    out.residuals["f_scale"] = fscale;

    const R mu = refined_mu(unit, opt);

    // dominant coordinate: largest admissible real root, cross-checked
    R d2{};
    bool from_root = false;
    if (scalar_traits<R>::to_double(fscale) > tols::poly_floor) {
        std::vector<double> cd(9);
        for (size_t k = 0; k < 9; ++k)
            cd[k] = scalar_traits<R>::to_double(f.c[k] / fscale);
        for (const RealRoot& rt : real_roots(cd, 1e-6)) {
            if (rt.value > -1e-6 && rt.value < 1.0 + 1e-6) {
                d2 = scalar_traits<R>::from_double(rt.value);
                from_root = true;
                break;  // sorted decreasingly: first admissible is the largest
            }
        }
        if (from_root && !scalar_traits<R>::is_double) {
            std::vector<R> cr(9);
            for (size_t k = 0; k < 9; ++k) cr[k] = f.c[k] / fscale;
            d2 = polish_root(cr, d2, 8);
        }
        if (from_root) {
            if (d2 > one) d2 = one;
            if (!(d2 > R(0))) from_root = false;
        }
        // a root whose residual stays far above the precision floor was not
        // actually resolved (multiple root); treat the selection as ambiguous
        if (from_root &&
            scalar_traits<R>::to_double(abs(f.eval(d2)) / fscale) > tols::root_residual)
            from_root = false;
    }
    R d{};
    if (from_root) {
        d = R(sqrt(d2));
        if (abs(d - mu) > R(opt.mu_band)) from_root = false;
    }
    if (!from_root) {
        d = mu;
        d2 = mu * mu;
        out.d_source = DSource::MuCrossCheck;
    }
    if (!(d > R(0))) fail("Inconsistent", "dominant coordinate came out nonpositive");
    out.residuals["f_at_d2"] =
        scalar_traits<R>::to_double(fscale) > 0 ? abs(f.eval(d2)) / fscale : R(0);

    // squared modulus of the complex coordinate: largest root of the cubic
    const std::array<R, 4> q = zsq_cubic(m, d2);
    const std::array<R, 3> zr = cubic_roots_all_real(q[2] / q[3], q[1] / q[3], q[0] / q[3]);
    const R z2 = clamp_square(zr[0], "complex-coordinate modulus");
    {
        R qs = one;
        for (const auto& e : q) {
            const R a = R(abs(e));
            if (a > qs) qs = a;
        }
        const R gval = ((q[3] * z2 + q[2]) * z2 + q[1]) * z2 + q[0];
        out.residuals["g_at_z2"] = abs(gval) / qs;
    }

    // elementary symmetric functions of a^2, b^2, c^2 by back-substitution
    const R d4 = d2 * d2, d6 = d4 * d2, d8 = d4 * d4;
    const R s1v = one - d2 - z2;
    const R s2v = (R(2) * d4 - (R(2) + z2) * d2 + m[1]) / R(2);
    const R s3v = (R(24) * d8 - R(12) * (R(2) + z2) * d6 +
                   R(3) * (R(4) * m[1] + R(2) * z2 - z2 * z2) * d4 +
                   R(2) * (R(2) * m[2] - m[1]) * d2 + R(3) * m[4]) /
                  (R(24) * d2);

    const std::array<R, 3> u = cubic_roots_all_real(-s1v, s2v, -s3v);
    const R a = R(sqrt(clamp_square(u[0], "largest side coordinate")));
    const R b = R(sqrt(clamp_square(u[1], "middle side coordinate")));
    const R c = R(sqrt(clamp_square(u[2], "smallest side coordinate")));

    // split |z|^2 into the two real coordinates
    const R abcd = a * b * c * d;
    R x{}, y{};
    if (scalar_traits<R>::to_double(abcd) <= tols::axis) {
        // a side coordinate vanishes: z is real by convention
        x = R(sqrt(z2));
    } else {
        const R w = ((s2v + s1v * d2) - R(6) * s3v - R(6) * s2v * d2 - m[2]) / (R(6) * abcd);
        x = R(sqrt(clamp_square((z2 + w) / R(2), "real part of the complex coordinate")));
        const R yabs =
            R(sqrt(clamp_square((z2 - w) / R(2), "imaginary part of the complex coordinate")));
        y = yabs;
        if (yabs > R(0)) {
            // the degree-12 invariant carries the sign of y when it is resolvable
            const R phi = w6_phi(W6Point<R>{a, b, c, d, x, yabs});
            const R predicted = abcd * x * yabs * R(abs(phi));
            if (scalar_traits<R>::to_double(predicted) > tols::sign_floor) {
                if (m[6] * phi < R(0)) y = -yabs;
            } else if (scalar_traits<R>::to_double(yabs) > tols::y_floor) {
                // too close to the conjugate-pair stratum to read the sign at
                // this precision; the caller may escalate (on the stratum both
                // signs represent the orbit and the nonnegative one is kept)
                out.y_sign_resolved = false;
            }
        }
    }

    W6Point<R> pt{a, b, c, d, x, y};
    out.residuals["point_uncertainty"] = polish_point(pt, m, 16);
    out.point = pt;

    // clamping discards mass; a point that drifted off the sphere is a defect
    // of this precision level, not a malformed input
    if (abs(out.point.norm2() - one) > R(1e2 * opt.region_tol))
        fail("Inconsistent", "reconstructed point drifted off the unit sphere");

    // verification residual: the seven invariants of the reconstruction
    {
        const W6Invariants<R> win = w6_invariants(out.point);
        R worst{};
        for (size_t k = 0; k < 7; ++k) {
            R scale = R(abs(m[k]));
            if (scale < one) scale = one;
            const R diff = R(abs(win.m[k] - m[k])) / scale;
            if (diff > worst) worst = diff;
        }
        out.residuals["invariant_match"] = worst;
    }

    if (!in_delta(out.point, opt.region_tol).in_region)
        fail("Inconsistent", "reconstructed point fell outside the canonical region");
    out.orbit = orbit_case(out.point, opt.region_tol);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Canonicalization
// ---------------------------------------------------------------------------

template <class R>
CanonicalResult<R> canonicalize(const State<R>& psi, const CanonOptions& opt = {}) {
    if (!(psi.norm2() > R(0))) fail("ZeroState", "the zero state has no canonical form");
    const State<R> unit = normalized(psi);
    if constexpr (scalar_traits<R>::is_double) {
        CanonicalResult<double> r;
        bool ok = false;
        try {
            r = detail::canonicalize_impl(unit, opt);
            ok = r.residuals.at("invariant_match") <= opt.match_tol && r.y_sign_resolved &&
                 r.residuals.at("point_uncertainty") <=
                     detail::canon_tols<double>::uncertainty;
        } catch (const domain_error& e) {
            if (e.name() != "Inconsistent") throw;
        }
        if (ok) return r;
        if (!opt.escalate)
            fail("Inconsistent", "invariant-match residual above tolerance in binary64");
        // renormalize after widening: the binary64 unit norm is off by ~1e-16,
        // which the reconstruction would otherwise see as an inconsistency
        CanonicalResult<mp50> rw = detail::canonicalize_impl(normalized(widen(unit)), opt);
        if (scalar_traits<mp50>::to_double(rw.residuals.at("invariant_match")) > opt.match_tol)
            fail("Inconsistent", "invariant-match residual survives extended precision");
        CanonicalResult<double> out = detail::narrow_result(rw);
        out.escalated = true;
        return out;
    } else {
        CanonicalResult<R> r = detail::canonicalize_impl(unit, opt);
        if (scalar_traits<R>::to_double(r.residuals.at("invariant_match")) > opt.match_tol)
            fail("Inconsistent", "invariant-match residual above tolerance");
        return r;
    }
}

// ---------------------------------------------------------------------------
// Qubit local maps
// ---------------------------------------------------------------------------

template <class R>
using Mat2 = std::array<std::array<cx<R>, 2>, 2>;  // row-major 2x2

template <class R>
Mat2<R> mat2_mul(const Mat2<R>& a, const Mat2<R>& b) {
    Mat2<R> r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    return r;
}

template <class R>
QubitState<R> apply_local(const QubitState<R>& s, int site, const Mat2<R>& g) {
    QubitState<R> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int idx[3] = {i, j, k};
                const int mth = idx[site];
                const cx<R>& amp = s.amp(i, j, k);
                for (int nth = 0; nth < 2; ++nth) {
                    idx[site] = nth;
                    r.amp(idx[0], idx[1], idx[2]) +=
                        g[static_cast<size_t>(nth)][static_cast<size_t>(mth)] * amp;
                }
            }
    return r;
}

template <class R>
QubitState<R> apply_locals(const QubitState<R>& s, const std::array<Mat2<R>, 3>& g) {
    return apply_local(apply_local(apply_local(s, 0, g[0]), 1, g[1]), 2, g[2]);
}

// Site relabeling: new site n carries what old site q[n] carried.
template <class R>
QubitState<R> permute_sites(const QubitState<R>& s, const std::array<int, 3>& q) {
    QubitState<R> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const int idx[3] = {i, j, k};
                r.amp(idx[q[0]], idx[q[1]], idx[q[2]]) = s.amp(i, j, k);
            }
    return r;
}

inline constexpr int kSitePerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// ---------------------------------------------------------------------------
// Qubit canonical form
// ---------------------------------------------------------------------------

template <class R>
struct QubitCanonicalResult {
    W6Point<R> point{};                 // coordinate roles matched to the input sites
    std::array<int, 3> sigma{0, 1, 2};  // point coordinate n = ordered coordinate sigma[n]
    CanonicalResult<R> fermionic{};     // ordered representative and its diagnostics
    R q_residual{};                     // worst site-purity mismatch over the three sites
};

template <class R>
QubitCanonicalResult<R> qubit_canonicalize(const QubitState<R>& phi,
                                           const CanonOptions& opt = {}) {
    if (!(phi.norm2() > R(0))) fail("ZeroState", "the zero state has no canonical form");
    const QubitState<R> unit = normalized(phi);

    QubitCanonicalResult<R> out;
    out.fermionic = canonicalize(sov_embed(unit), opt);
    const W6Point<R>& p = out.fermionic.point;

    // place the side coordinates so the three site purities match the input
    const QubitInvariants<R> qin = qubit_invariants(unit);
    const std::array<R, 3> vals{p.a, p.b, p.c};
    R best(-1);
    for (const auto& pm : kSitePerms) {
        QubitState<R> cand;
        cand.amp(1, 0, 0) = cx<R>(vals[static_cast<size_t>(pm[0])], R(0));
        cand.amp(0, 1, 0) = cx<R>(vals[static_cast<size_t>(pm[1])], R(0));
        cand.amp(0, 0, 1) = cx<R>(vals[static_cast<size_t>(pm[2])], R(0));
        cand.amp(1, 1, 1) = cx<R>(p.d, R(0));
        cand.amp(0, 0, 0) = cx<R>(p.x, p.y);
        const QubitInvariants<R> qc = qubit_invariants(cand);
        R worst{};
        for (int k = 2; k <= 4; ++k) {
            const R diff = abs_diff(qin.Q(k), qc.Q(k));
            if (diff > worst) worst = diff;
        }
        if (best < R(0) || worst < best) {  // strict: earlier permutations win ties
            best = worst;
            out.sigma = {pm[0], pm[1], pm[2]};
            out.point = W6Point<R>{vals[static_cast<size_t>(pm[0])],
                                   vals[static_cast<size_t>(pm[1])],
                                   vals[static_cast<size_t>(pm[2])], p.d, p.x, p.y};
        }
    }
    out.q_residual = best;
    return out;
}

// ---------------------------------------------------------------------------
// Explicit qubit witness
// ---------------------------------------------------------------------------

template <class R>
struct QubitWitness {
    std::array<Mat2<R>, 3> locals{};  // applied per input site first ...
    std::array<int, 3> perm{0, 1, 2};  // ... then new site n takes old site perm[n]
    W6Point<R> point{};                // coordinates of the state reached
    R mu{};                            // overlap optimum (the dominant coordinate)
    R residual{};                      // distance from the reached state to point's state
};

// Applies a witness to a state (locals first, then the site relabeling).
template <class R>
QubitState<R> apply_witness(const QubitWitness<R>& w, const QubitState<R>& s) {
    return permute_sites(apply_locals(s, w.locals), w.perm);
}

template <class R>
QubitWitness<R> qubit_witness(const QubitState<R>& phi, const CanonOptions& opt = {}) {
    using std::abs;
    using std::atan2;
    using std::cos;
    using std::sin;
    using std::sqrt;
    if (!(phi.norm2() > R(0))) fail("ZeroState", "the zero state has no canonical form");
    const QubitState<R> unit = normalized(phi);

    // product maximizer, polished to a joint fixed point of the site updates
    QubitMuResult<R> mr = mu_sov(unit, opt.mu_starts, 1e-12, opt.seed);
    R stat = detail::refine_product(unit, mr.maximizer, 1e-11, 800);
    if (!mr.converged || scalar_traits<R>::to_double(stat) > 1e-7) {
        mr = mu_sov(unit, opt.mu_starts * 4, 1e-13, opt.seed ^ 0x5bd1e995ULL);
        stat = detail::refine_product(unit, mr.maximizer, 1e-11, 1600);
        if (!mr.converged || scalar_traits<R>::to_double(stat) > 1e-6)
            fail("OptimizerFailed", "product-overlap maximizer did not reach a fixed point");
    }
    std::array<Vec2<R>, 3> mxr = mr.maximizer;
    {
        // gauge the third factor so the overlap is real nonnegative
        const Vec2<R> w = detail::qubit_contract(unit, 2, mxr[0], mxr[1]);
        const cx<R> o = detail::dot_c(mxr[2], w);
        const R mod = abs(o);
        if (mod > R(0)) detail::scale_c(mxr[2], o * cx<R>(R(1) / mod, R(0)));
    }

    QubitWitness<R> out;
    // per-site rotation sending the maximizing factor to the upper level
    for (size_t s = 0; s < 3; ++s) {
        out.locals[s][0][0] = -mxr[s][1];
        out.locals[s][0][1] = mxr[s][0];
        out.locals[s][1][0] = conj(mxr[s][0]);
        out.locals[s][1][1] = conj(mxr[s][1]);
    }
    QubitState<R> cur = apply_locals(unit, out.locals);

    // a diagonal phase at the current site s folds onto the original site
    // perm[s] (the relabeling commutes past per-site maps by reindexing them)
    auto apply_diag = [&](int site, const cx<R>& ph0) {
        Mat2<R> dg{};
        dg[0][0] = ph0;
        dg[1][1] = cx<R>(R(1), R(0));
        cur = apply_local(cur, site, dg);
        const size_t home = static_cast<size_t>(out.perm[static_cast<size_t>(site)]);
        out.locals[home] = mat2_mul(dg, out.locals[home]);
    };
    auto unit_phase = [](const R& ang) { return cx<R>(R(cos(ang)), R(sin(ang))); };

    // rotate the three weight-one amplitudes onto the nonnegative real axis
    auto phase_of = [&](int i, int j, int k) {
        const cx<R>& t = cur.amp(i, j, k);
        if (abs(t) <= R(1e-13)) return R(0);  // free phase: leave untouched
        return R(atan2(t.im, t.re));
    };
    const R p0 = phase_of(1, 0, 0), p1 = phase_of(0, 1, 0), p2 = phase_of(0, 0, 1);
    apply_diag(0, unit_phase((p0 - p1 - p2) / R(2)));
    apply_diag(1, unit_phase((p1 - p0 - p2) / R(2)));
    apply_diag(2, unit_phase((p2 - p0 - p1) / R(2)));

    // sort the weight-one amplitudes decreasingly by relabeling sites
    {
        const R v[3] = {cur.amp(1, 0, 0).re, cur.amp(0, 1, 0).re, cur.amp(0, 0, 1).re};
        for (const auto& pm : kSitePerms) {
            if (v[pm[0]] >= v[pm[1]] && v[pm[1]] >= v[pm[2]]) {
                out.perm = {pm[0], pm[1], pm[2]};
                break;
            }
        }
        cur = permute_sites(cur, out.perm);
    }

    // conventions on the complex coordinate
    if (abs(cur.amp(0, 0, 1)) <= R(1e-8)) {
        // smallest side coordinate vanishes: rotate z onto the real axis
        // (the pattern (delta, delta, -delta) leaves the other amplitudes alone)
        const cx<R> z = cur.amp(0, 0, 0);
        if (abs(z) > R(1e-13)) {
            const R delta = -R(atan2(z.im, z.re));
            apply_diag(0, unit_phase(delta));
            apply_diag(1, unit_phase(delta));
            apply_diag(2, unit_phase(-delta));
        }
    } else {
        // flipping the sign of the lower level at every site negates z only
        const R xv = cur.amp(0, 0, 0).re, yv = cur.amp(0, 0, 0).im;
        if (xv < R(-1e-9) || (abs(xv) <= R(1e-9) && yv < R(0))) {
            const cx<R> minus(R(-1), R(0));
            apply_diag(0, minus);
            apply_diag(1, minus);
            apply_diag(2, minus);
        }
        // when x > 0 and y < 0 with the boundary invariant vanishing, the
        // construction reaches the conjugate partner of the same orbit; the
        // point reported is the one actually reached
    }

    auto pos = [](const R& v) { return v > R(0) ? v : R(0); };
    out.point = W6Point<R>{pos(cur.amp(1, 0, 0).re), pos(cur.amp(0, 1, 0).re),
                           pos(cur.amp(0, 0, 1).re), cur.amp(1, 1, 1).re,
                           cur.amp(0, 0, 0).re,      cur.amp(0, 0, 0).im};
    out.mu = mr.mu;

    QubitState<R> ideal;
    ideal.amp(1, 0, 0) = cx<R>(out.point.a, R(0));
    ideal.amp(0, 1, 0) = cx<R>(out.point.b, R(0));
    ideal.amp(0, 0, 1) = cx<R>(out.point.c, R(0));
    ideal.amp(1, 1, 1) = cx<R>(out.point.d, R(0));
    ideal.amp(0, 0, 0) = cx<R>(out.point.x, out.point.y);
    R r2{};
    for (size_t n = 0; n < 8; ++n) r2 += norm2(cur.t[n] - ideal.t[n]);
    out.residual = R(sqrt(r2));
    return out;
}

}  // namespace trivec
