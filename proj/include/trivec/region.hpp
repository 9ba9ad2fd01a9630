#pragma once

// Membership, boundary, and fiber geometry for the canonical region of
// five-coordinate points (a,b,c,d,z), its four-real-coordinate projection,
// and the unordered variant used on the qubit side; plus the classifier for
// how a local-unitary orbit meets the region.

#include <cmath>
#include <cstdint>
#include <vector>

#include "invariants.hpp"
#include "sampling.hpp"

namespace trivec {

// ---------------------------------------------------------------------------
// Inequality bookkeeping
// ---------------------------------------------------------------------------

// Every membership predicate reports one signed slack per defining
// inequality (nonnegative slack = satisfied).  The ids below name the
// polynomial by its role:
//   cubic_balance : d(d^2 - s1) - 2abc                    (degree 3)
//   cubic_floor   : 2abc - d(1 - 2d^2)                    (degree 3, unit sphere)
//   phase_budget  : cubic_balance * cubic_floor - 4abcd x^2  (degree 6)
//   block_gap     : a^2 b^2 + c^2 d^2 + d^2 (2d^2 - 1)    (degree 4, unit sphere)
//   phase_quad    : 2 block_gap (d^2-s1) - x^2(ab+cd)^2 - y^2(ab-cd)^2
//   ball          : 1 - s1 - d^2  (projection only)
enum class Ineq {
    OrderAB,
    OrderBC,
    ANonneg,
    BNonneg,
    CNonneg,
    XNonneg,
    DPositive,
    Ball,
    BlockGap,
    CubicBalance,
    PhaseQuad,
    PhaseBudget,
    CubicFloor,
};

inline const char* ineq_name(Ineq q) {
    switch (q) {
        case Ineq::OrderAB: return "a_ge_b";
        case Ineq::OrderBC: return "b_ge_c";
        case Ineq::ANonneg: return "a_nonneg";
        case Ineq::BNonneg: return "b_nonneg";
        case Ineq::CNonneg: return "c_nonneg";
        case Ineq::XNonneg: return "x_nonneg";
        case Ineq::DPositive: return "d_positive";
        case Ineq::Ball: return "ball";
        case Ineq::BlockGap: return "block_gap";
        case Ineq::CubicBalance: return "cubic_balance";
        case Ineq::PhaseQuad: return "phase_quad";
        case Ineq::PhaseBudget: return "phase_budget";
        case Ineq::CubicFloor: return "cubic_floor";
    }
    return "unknown";
}

// Polynomial degree of each slack, used to scale the zero band so that a
// product of several coordinates is not declared "tight" more eagerly than
// a single coordinate.
inline int ineq_degree(Ineq q) {
    switch (q) {
        case Ineq::OrderAB:
        case Ineq::OrderBC:
        case Ineq::ANonneg:
        case Ineq::BNonneg:
        case Ineq::CNonneg:
        case Ineq::XNonneg:
        case Ineq::DPositive: return 1;
        case Ineq::Ball: return 2;
        case Ineq::CubicBalance:
        case Ineq::CubicFloor: return 3;
        case Ineq::BlockGap: return 4;
        case Ineq::PhaseQuad:
        case Ineq::PhaseBudget: return 6;
    }
    return 1;
}

template <typename R>
struct Slack {
    Ineq id;
    R value;       // signed slack; >= 0 means satisfied (for strict: > 0)
    bool strict;   // strict inequalities (d > 0) admit no boundary
};

template <typename R>
struct RegionVerdict {
    bool in_region = false;
    bool on_boundary = false;  // in_region and some non-strict slack ~ 0
    std::vector<Slack<R>> margins;
    std::vector<Ineq> violated;

    R margin(Ineq q) const {
        for (const auto& s : margins)
            if (s.id == q) return s.value;
        fail("Inconsistent", "margin queried for an inequality the verdict does not track");
    }
    bool violates_only(Ineq q) const {
        return violated.size() == 1 && violated.front() == q;
    }
};

// Default zero band for slacks; multiplied by ||p||^degree per inequality.
inline constexpr double kRegionTol = 1e-9;

namespace detail {

template <typename R>
RegionVerdict<R> judge(std::vector<Slack<R>>&& slacks, R nrm, double tol) {
    RegionVerdict<R> v;
    v.margins = std::move(slacks);
    v.in_region = true;
    bool tight = false;
    for (const auto& s : v.margins) {
        R band = R(tol);
        for (int k = 0; k < ineq_degree(s.id); ++k) band = band * nrm;
        const bool bad = s.strict ? !(s.value > band) : (s.value < -band);
        if (bad) {
            v.in_region = false;
            v.violated.push_back(s.id);
        } else if (!s.strict && s.value <= band) {
            tight = true;
        }
    }
    v.on_boundary = v.in_region && tight;
    return v;
}

template <typename R>
void require_unit(const W6Point<R>& p, double tol, const char* what) {
    using std::abs;
    if (abs(p.norm2() - R(1)) > R(tol))
        fail("NotNormalized", what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Membership tests
// ---------------------------------------------------------------------------

// Minimal defining system of the canonical region on the unit sphere:
//   a >= b >= c >= 0,  x >= 0,  d > 0,
//   d(d^2 - s1) - 2abc >= 0,
//   2abc - d(1 - 2d^2) >= 0,
//   4abcd x^2 <= (d(d^2 - s1) - 2abc)(2abc - d(1 - 2d^2)).
template <typename R>
RegionVerdict<R> in_delta(const W6Point<R>& p, double tol = kRegionTol) {
    detail::require_unit(p, 1e2 * tol, "region membership requires a unit-sphere point");
    const R s1 = p.s1();
    const R balance = p.d * (p.d * p.d - s1) - R(2) * p.a * p.b * p.c;
    const R floor_ = R(2) * p.a * p.b * p.c - p.d * (R(1) - R(2) * p.d * p.d);
    const R budget = balance * floor_ - R(4) * p.a * p.b * p.c * p.d * p.x * p.x;
    std::vector<Slack<R>> s{
        {Ineq::OrderAB, p.a - p.b, false},
        {Ineq::OrderBC, p.b - p.c, false},
        {Ineq::CNonneg, p.c, false},
        {Ineq::XNonneg, p.x, false},
        {Ineq::DPositive, p.d, true},
        {Ineq::CubicBalance, balance, false},
        {Ineq::CubicFloor, floor_, false},
        {Ineq::PhaseBudget, budget, false},
    };
    return detail::judge(std::move(s), R(1), tol);
}

// Full four-inequality system (independent of the minimal one; the two agree
// on unit-sphere points and serve as mutual cross-checks):
//   a^2 b^2 + c^2 d^2 + d^2(2d^2 - 1) >= 0,
//   d(d^2 - s1) - 2abc >= 0,
//   2(a^2b^2 + c^2d^2 + d^2(2d^2-1))(d^2 - s1) - x^2(ab+cd)^2 - y^2(ab-cd)^2 >= 0,
//   d^2(2d^2 - 1)(d^2 - s1) - 2abcd(x^2 - y^2) - 4 s3 >= 0.
template <typename R>
RegionVerdict<R> in_delta_full(const W6Point<R>& p, double tol = kRegionTol) {
    detail::require_unit(p, 1e2 * tol, "region membership requires a unit-sphere point");
    const R s1 = p.s1();
    const R d2 = p.d * p.d;
    const R abc = p.a * p.b * p.c;
    const R gap = p.a * p.a * p.b * p.b + p.c * p.c * d2 + d2 * (R(2) * d2 - R(1));
    const R balance = p.d * (d2 - s1) - R(2) * abc;
    const R ab_cd = p.a * p.b + p.c * p.d;
    const R ab_mcd = p.a * p.b - p.c * p.d;
    const R quad = R(2) * gap * (d2 - s1) - p.x * p.x * ab_cd * ab_cd -
                   p.y * p.y * ab_mcd * ab_mcd;
    const R budget = d2 * (R(2) * d2 - R(1)) * (d2 - s1) -
                     R(2) * abc * p.d * (p.x * p.x - p.y * p.y) - R(4) * p.s3();
    std::vector<Slack<R>> s{
        {Ineq::OrderAB, p.a - p.b, false},
        {Ineq::OrderBC, p.b - p.c, false},
        {Ineq::CNonneg, p.c, false},
        {Ineq::XNonneg, p.x, false},
        {Ineq::DPositive, p.d, true},
        {Ineq::BlockGap, gap, false},
        {Ineq::CubicBalance, balance, false},
        {Ineq::PhaseQuad, quad, false},
        {Ineq::PhaseBudget, budget, false},
    };
    return detail::judge(std::move(s), R(1), tol);
}

// Boundary test for members: p lies on the boundary exactly when the product
// c * x * (a-b) * (b-c) * Phi vanishes.  The membership hypothesis cannot be
// dropped: points outside the region can make the product positive.
template <typename R>
bool on_boundary(const W6Point<R>& p, double tol = kRegionTol) {
    using std::abs;
    if (abs(p.norm2() - R(1)) > R(1e2 * tol))
        fail("NotInDelta", "boundary test requires a member, and members lie on the unit sphere");
    const RegionVerdict<R> v = in_delta(p, tol);
    if (!v.in_region)
        fail("NotInDelta", "boundary test is only meaningful for members of the canonical region");
    using std::abs;
    const R product =
        p.c * p.x * (p.a - p.b) * (p.b - p.c) * w6_phi(p);
    return abs(product) <= R(tol);  // degree-10 product of a unit point
}

// Projection of the canonical region to (a,b,c,d):
//   a >= b >= c >= 0, d > 0, s1 + d^2 <= 1, cubic_balance >= 0, cubic_floor >= 0.
template <typename R>
RegionVerdict<R> in_delta_prime(R a, R b, R c, R d, double tol = kRegionTol) {
    const R s1 = a * a + b * b + c * c;
    const R balance = d * (d * d - s1) - R(2) * a * b * c;
    const R floor_ = R(2) * a * b * c - d * (R(1) - R(2) * d * d);
    std::vector<Slack<R>> s{
        {Ineq::OrderAB, a - b, false},
        {Ineq::OrderBC, b - c, false},
        {Ineq::CNonneg, c, false},
        {Ineq::DPositive, d, true},
        {Ineq::Ball, R(1) - s1 - d * d, false},
        {Ineq::CubicBalance, balance, false},
        {Ineq::CubicFloor, floor_, false},
    };
    return detail::judge(std::move(s), R(1), tol);
}

// ---------------------------------------------------------------------------
// Fibers over the projection
// ---------------------------------------------------------------------------

// The fiber over (a,b,c,d) consists of the sphere points (a,b,c,d,z) in the
// region; z ranges over the semicircle |z| = r, Re z >= 0 with
// r = sqrt(1 - s1 - d^2).  Either the whole semicircle belongs to the region
// or exactly the arc with 0 <= Re z <= x_max does.
template <typename R>
struct Fiber {
    bool full = true;  // whole semicircle (degenerate single point when r = 0)
    R r = R(0);        // radius of the semicircle
    R x_max = R(0);    // largest admissible Re z (equals r when full)
};

template <typename R>
Fiber<R> fiber(R a, R b, R c, R d, double tol = kRegionTol) {
    const RegionVerdict<R> v = in_delta_prime(a, b, c, d, tol);
    if (!v.in_region)
        fail("NotInDeltaPrime", "fiber requested over a point outside the projected region");
    using std::sqrt;
    const R s1 = a * a + b * b + c * c;
    R r2 = R(1) - s1 - d * d;
    if (r2 < R(0)) r2 = R(0);
    Fiber<R> f;
    f.r = sqrt(r2);
    f.x_max = f.r;
    if (c <= R(tol) || f.r == R(0)) return f;  // constant along the fiber
    // Value of Phi at the real end z = r of the semicircle.
    const W6Point<R> end{a, b, c, d, f.r, R(0)};
    if (w6_phi(end) >= R(0)) return f;  // whole semicircle admissible
    // Otherwise the admissible arc ends where Phi vanishes:
    //   4abcd x^2 = (d(d^2-s1) - 2abc)(2abc + d(2d^2-1)).
    const R balance = d * (d * d - s1) - R(2) * a * b * c;
    const R floor_ = R(2) * a * b * c + d * (R(2) * d * d - R(1));
    R x2 = balance * floor_ / (R(4) * a * b * c * d);
    if (x2 < R(0)) x2 = R(0);
    f.full = false;
    f.x_max = sqrt(x2);
    return f;
}

// ---------------------------------------------------------------------------
// Orbit intersection classifier
// ---------------------------------------------------------------------------

// How the local-unitary orbit of a member meets the canonical region:
//   Unique        one point, c x Phi > 0 (all interior points and some boundary)
//   UniqueReal    one point, c > 0, y = 0, x Phi = 0
//   UniqueAxis    one point, c = z = 0
//   Pair          two points {(a,b,c,d,z), (a,b,c,d,conj z)}, c > 0, y != 0, x Phi = 0
//   Semicircle    the whole semicircle c = 0, |z| = r > 0
enum class OrbitTag { Unique, UniqueReal, UniqueAxis, Pair, Semicircle };

inline const char* orbit_tag_name(OrbitTag t) {
    switch (t) {
        case OrbitTag::Unique: return "unique";
        case OrbitTag::UniqueReal: return "unique_real";
        case OrbitTag::UniqueAxis: return "unique_axis";
        case OrbitTag::Pair: return "pair";
        case OrbitTag::Semicircle: return "semicircle";
    }
    return "unknown";
}

template <typename R>
struct OrbitCase {
    OrbitTag tag = OrbitTag::Unique;
    W6Point<R> partner{};  // conjugate partner (Pair only)
    R radius = R(0);       // semicircle radius (Semicircle only)
};

// Ties between nearly-degenerate cases resolve most-degenerate-first:
// UniqueAxis, then Semicircle, then UniqueReal, then Pair, then Unique.
template <typename R>
OrbitCase<R> orbit_case(const W6Point<R>& p, double tol = kRegionTol) {
    using std::abs;
    using std::sqrt;
    if (abs(p.norm2() - R(1)) > R(1e2 * tol))
        fail("NotInDelta", "orbit classification requires a member, and members lie on the unit sphere");
    const RegionVerdict<R> v = in_delta(p, tol);
    if (!v.in_region)
        fail("NotInDelta", "orbit classification is only defined for members of the canonical region");
    const R band = R(tol);
    const R phi = w6_phi(p);
    const R zmod = sqrt(p.z2());
    OrbitCase<R> oc;
    if (p.c <= band && zmod <= band) {
        oc.tag = OrbitTag::UniqueAxis;
    } else if (p.c <= band) {
        oc.tag = OrbitTag::Semicircle;
        oc.radius = zmod;
    } else if (abs(p.x * phi) <= band && abs(p.y) <= band) {
        oc.tag = OrbitTag::UniqueReal;
    } else if (abs(p.x * phi) <= band) {
        oc.tag = OrbitTag::Pair;
        oc.partner = W6Point<R>{p.a, p.b, p.c, p.d, p.x, -p.y};
    } else {
        oc.tag = OrbitTag::Unique;
    }
    return oc;
}

// ---------------------------------------------------------------------------
// Unordered variant (qubit-side region)
// ---------------------------------------------------------------------------

// Same inequalities with the ordering a >= b >= c dropped (the union of the
// six coordinate permutations of the canonical region); boundary is flagged
// by the product a b c x Phi.
template <typename R>
RegionVerdict<R> in_theta(const W6Point<R>& p, double tol = kRegionTol) {
    detail::require_unit(p, 1e2 * tol, "region membership requires a unit-sphere point");
    const R s1 = p.s1();
    const R balance = p.d * (p.d * p.d - s1) - R(2) * p.a * p.b * p.c;
    const R floor_ = R(2) * p.a * p.b * p.c - p.d * (R(1) - R(2) * p.d * p.d);
    const R budget = balance * floor_ - R(4) * p.a * p.b * p.c * p.d * p.x * p.x;
    std::vector<Slack<R>> s{
        {Ineq::ANonneg, p.a, false},
        {Ineq::BNonneg, p.b, false},
        {Ineq::CNonneg, p.c, false},
        {Ineq::XNonneg, p.x, false},
        {Ineq::DPositive, p.d, true},
        {Ineq::CubicBalance, balance, false},
        {Ineq::CubicFloor, floor_, false},
        {Ineq::PhaseBudget, budget, false},
    };
    RegionVerdict<R> verdict = detail::judge(std::move(s), R(1), tol);
    if (verdict.in_region) {
        using std::abs;
        const R product = p.a * p.b * p.c * p.x * w6_phi(p);
        verdict.on_boundary = abs(product) <= R(tol);
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Sampling and the d-floor check
// ---------------------------------------------------------------------------

// Rejection sampler: uniform sphere points folded into the patch
// a >= b >= c >= 0, x >= 0, pre-filtered by the proven floor d >= 2/3, then
// accepted on membership.  The sign of y is left free.
template <typename R>
W6Point<R> sample_delta(Rng& rng, double tol = kRegionTol) {
    for (int attempt = 0; attempt < 2'000'000; ++attempt) {
        R g[6];
        R n2 = R(0);
        for (auto& v : g) {
            v = R(rng.gaussian());
            n2 += v * v;
        }
        using std::abs;
        using std::sqrt;
        if (n2 == R(0)) continue;
        const R inv = R(1) / sqrt(n2);
        for (auto& v : g) v *= inv;
        R abc[3] = {abs(g[0]), abs(g[1]), abs(g[2])};
        if (abc[0] < abc[1]) std::swap(abc[0], abc[1]);
        if (abc[1] < abc[2]) std::swap(abc[1], abc[2]);
        if (abc[0] < abc[1]) std::swap(abc[0], abc[1]);
        const W6Point<R> p{abc[0], abc[1], abc[2], abs(g[3]), abs(g[4]), g[5]};
        if (p.d < R(2) / R(3)) continue;
        if (in_delta(p, tol).in_region) return p;
    }
    fail("OptimizerFailed", "region sampler exhausted its rejection budget");
}

template <typename R>
W6Point<R> sample_delta_seeded(std::uint64_t seed, double tol = kRegionTol) {
    Rng rng(seed);
    return sample_delta<R>(rng, tol);
}

struct MinDReport {
    double min_d = 1.0;
    int samples = 0;
    bool minimizers_in_region = false;  // (1/3,1/3,1/3,2/3, z = +-i sqrt(2)/3)
    bool top_in_region = false;         // (0,0,0,1,0), the d = 1 end
    bool ok = false;                    // min_d >= 2/3 - 1e-9 and both witnesses pass
};

inline MinDReport min_d_check(int samples = 100000, std::uint64_t seed = 0x5eedD317aULL) {
    Rng rng(seed);
    MinDReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i)
        rep.min_d = std::min(rep.min_d, sample_delta<double>(rng).d);
    const double t = 1.0 / 3.0;
    const double s2 = std::sqrt(2.0) / 3.0;
    const W6Point<double> lo_plus{t, t, t, 2 * t, 0.0, s2};
    const W6Point<double> lo_minus{t, t, t, 2 * t, 0.0, -s2};
    rep.minimizers_in_region =
        in_delta(lo_plus).in_region && in_delta(lo_minus).in_region;
    rep.top_in_region = in_delta(W6Point<double>{0, 0, 0, 1, 0, 0}).in_region;
    rep.ok = rep.min_d >= 2.0 / 3.0 - 1e-9 && rep.minimizers_in_region && rep.top_in_region;
    return rep;
}

}  // namespace trivec
