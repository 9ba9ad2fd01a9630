// invariants.hpp — the seven local-unitary invariants M1..M7 of a
// three-fermion state, the auxiliary scalars F (bidegree (4,0)) and J
// (bidegree (1,3)), their closed-form restrictions to the five-coefficient
// subspace, the qubit invariants Q1..Q7 with the symmetric generator tuple,
// and the equivalence / classification predicates built on them.
//
// F and J are defined through contraction patterns fixed up to one scalar
// by their bidegrees.  The scalars were calibrated once against the
// subspace restrictions and froze to exact rationals:
//   F = tr(K²)/864,   J = −(1/36)·Σ ψ_{ijk}·(K(ψ̄)·ψ̄)_{ijk},
// where K(ψ̄) acts on ψ̄ as a derivation.  calibration_check() re-derives
// both factors at runtime and rejects the build if they drift.
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "trivec/exterior.hpp"
#include "trivec/rdm.hpp"
#include "trivec/sampling.hpp"
#include "trivec/state.hpp"
#include "trivec/types.hpp"

namespace trivec {

// homogeneity degrees: M_k(λψ) = |λ|^{2 deg_k} M_k(ψ)
inline constexpr std::array<int, 7> kInvariantDegree = {1, 2, 3, 4, 4, 6, 6};

template <class R>
R abs_diff(const R& u, const R& v) {
    using std::abs;
    return R(abs(u - v));
}

// ---------------------------------------------------------------------------
// F and J
// ---------------------------------------------------------------------------

// action of a 6x6 matrix on a 3-vector as a derivation (one factor at a time)
template <class R>
State<R> derivation_action(const Mat<cx<R>>& x, const State<R>& chi) {
    State<R> out;
    for (int slot = 0; slot < kTriples; ++slot) {
        const Triple t = kTripleList[static_cast<size_t>(slot)];
        cx<R> acc{};
        for (int m = 1; m <= kDim; ++m) {
            acc += x(t.i - 1, m - 1) * chi.amp(m, t.j, t.k);
            acc += x(t.j - 1, m - 1) * chi.amp(t.i, m, t.k);
            acc += x(t.k - 1, m - 1) * chi.amp(t.i, t.j, m);
        }
        out.xi[static_cast<size_t>(slot)] = acc;
    }
    return out;
}

template <class R>
cx<R> invariant_F(const State<R>& psi) {
    Mat<cx<R>> k = epsilon_contract_K(psi);
    return (k * k).trace() / R(864);
}

template <class R>
cx<R> invariant_J(const State<R>& psi) {
    const State<R> pb = conj(psi);
    const Mat<cx<R>> kbar = epsilon_contract_K(pb);
    const State<R> chi = derivation_action(kbar, pb);
    cx<R> acc{};
    for (int n = 0; n < kTriples; ++n)
        acc += psi.xi[static_cast<size_t>(n)] * chi.xi[static_cast<size_t>(n)];
    return acc / R(-36);
}

// ---------------------------------------------------------------------------
// The full invariant set
// ---------------------------------------------------------------------------

template <class R>
struct FermionInvariants {
    std::array<R, 7> m{};  // M1..M7
    cx<R> f{}, j{};
    R j_sq{};  // |J|²
    R re_h{};  // Re(F J²)
    R h_sq{};  // |F J²|²

    [[nodiscard]] const R& M(int k) const { return m[static_cast<size_t>(k - 1)]; }
};

template <class R>
FermionInvariants<R> fermion_invariants(const State<R>& psi) {
    FermionInvariants<R> inv;
    const R m1 = psi.norm2();
    const Mat<cx<R>> rho1 = rdm1(psi);
    const Mat<cx<R>> rho1sq = rho1 * rho1;
    const R t2 = rho1sq.trace().re;
    const R t4 = (rho1sq * rho1sq).trace().re;
    const R t6 = (rho1sq * rho1sq * rho1sq).trace().re;

    const R m2 = (R(3) / R(2)) * (m1 * m1 - R(3) * t2);

    const Mat<cx<R>> rho12 = rdm2(psi);
    const Mat<cx<R>> mixed = partial_trace2(rho12 * rho12);
    const R m3 = R(3) * m1 * (m1 * m1 - m2) - R(27) * (rho1 * mixed).trace().re;

    const R m4 =
        (R(3) * m1 * m1 * m1 * m1 + R(2) * m2 * m2 - R(4) * m1 * m1 * m2 - R(81) * t4) / R(4);
    const R m1sq = m1 * m1;
    const R m6 = (R(3) * m1sq * m1sq * m1sq - R(6) * m1sq * m1sq * m2 + R(9) * m1sq * m2 * m2 -
                  R(18) * m1sq * m4 - R(2) * m2 * m2 * m2 + R(6) * m2 * m4 - R(729) * t6) /
                 R(6);

    inv.f = invariant_F(psi);
    inv.j = invariant_J(psi);
    const R m5 = norm2(inv.f);
    const cx<R> h = inv.f * inv.j * inv.j;
    const R m7 = -h.im / R(8);

    inv.m = {m1, m2, m3, m4, m5, m6, m7};
    inv.j_sq = norm2(inv.j);
    inv.re_h = h.re;
    inv.h_sq = norm2(h);
    return inv;
}

// ---------------------------------------------------------------------------
// Closed-form restrictions to the five-coefficient subspace
// ---------------------------------------------------------------------------

template <class R>
struct W6Invariants {
    std::array<R, 7> m{};
    R phi{};       // Φ(a,b,c,d,z)
    cx<R> f{}, j{};  // the restricted F and J

    [[nodiscard]] const R& M(int k) const { return m[static_cast<size_t>(k - 1)]; }
};

template <class R>
R w6_phi(const W6Point<R>& p) {
    const R s1 = p.s1(), s3 = p.s3(), z2 = p.z2(), d2 = p.d * p.d;
    const R abc = p.a * p.b * p.c;
    return d2 * (d2 - s1) * (d2 - s1 - z2) -
           R(2) * abc * p.d * (p.x * p.x - p.y * p.y) - R(4) * s3;
}

template <class R>
W6Invariants<R> w6_invariants(const W6Point<R>& p) {
    W6Invariants<R> inv;
    const R s1 = p.s1(), s2 = p.s2(), s3 = p.s3();
    const R z2 = p.z2(), d2 = p.d * p.d, d4 = d2 * d2, d6 = d4 * d2;
    const R abc = p.a * p.b * p.c;
    const R xy2 = p.x * p.x - p.y * p.y;
    const cx<R> z(p.x, p.y);

    const R m1 = s1 + d2 + z2;
    const R m2 = R(2) * (s2 + s1 * d2) + R(3) * d2 * z2;
    const R m3 = m1 * (s2 + s1 * d2) - R(6) * (s3 + abc * p.d * xy2 + s2 * d2);
    const R m4 = s1 * s3 + s2 * s2 + R(3) * (s1 * s2 - s3) * d2 +
                 R(4) * (s2 + s1 * d2) * d2 * z2 + (s1 * s1 + s2 + R(3) * z2 * z2) * d4;
    const R m5 = d2 * (R(16) * s3 + R(8) * abc * p.d * xy2 + d2 * z2 * z2);
    const R m6 = (s1 * s2 - s3) * (d6 + s1 * d4 + s2 * d2 + s3 + R(3) * d4 * z2) +
                 (s1 * s3 + s2 * s2) * d2 * z2 + R(2) * s2 * d4 * z2 * z2 +
                 (s1 * s1 + s2 + R(2) * s1 * z2 + z2 * z2) * d6 * z2;
    inv.phi = w6_phi(p);
    const R m7 = abc * p.d * p.x * p.y * inv.phi;

    inv.m = {m1, m2, m3, m4, m5, m6, m7};
    inv.f = cx<R>(p.d) * (cx<R>(R(4) * abc) + cx<R>(p.d) * z * z);
    inv.j = cx<R>(R(2) * abc) * z + cx<R>(p.d) * conj(z) * (m1 - R(2) * d2);
    return inv;
}

// restriction of J to the seven-dimensional slice where the fourth
// coordinate is complex
template <class R>
cx<R> w7_j_restriction(const R& a, const R& b, const R& c, const cx<R>& w, const cx<R>& z) {
    const R m1 = a * a + b * b + c * c + norm2(w) + norm2(z);
    return cx<R>(R(2) * a * b * c) * z + conj(w) * conj(z) * (m1 - R(2) * norm2(w));
}

// the corresponding state builders
template <class R>
State<R> w7_state(const R& a, const R& b, const R& c, const cx<R>& w, const cx<R>& z) {
    State<R> s;
    s.add(2, 3, 5, cx<R>(a));
    s.add(1, 4, 5, cx<R>(b));
    s.add(1, 3, 6, cx<R>(c));
    s.add(2, 4, 6, w);
    s.add(1, 3, 5, z);
    return s;
}

// ---------------------------------------------------------------------------
// Exact identity suite
// ---------------------------------------------------------------------------

// Residuals are scaled by the matching power of M1, so they are relative for
// non-unit states and absolute for unit ones.
template <class R>
struct IdentityReport {
    R inv_j2;        // |J|² against its polynomial in M1..M5
    R reh;           // the Re(FJ²) identity
    R syzygy;        // the single relation tying M7² to M1..M6
    R m5_f;          // M5 − |F|²
    R nonneg_slack;  // max(0, −(M1M2−2M3)) relative
};

template <class R>
IdentityReport<R> identity_suite(const FermionInvariants<R>& v) {
    using std::pow;
    IdentityReport<R> rep{};
    const R m1 = v.M(1), m2 = v.M(2), m3 = v.M(3), m4 = v.M(4), m5 = v.M(5), m6 = v.M(6),
            m7 = v.M(7);
    const R scale = m1 > R(0) ? m1 : R(1);
    const R s4 = pow(scale, 4), s6 = pow(scale, 6), s12 = pow(scale, 12);

    const R a = m1 * m2 - R(2) * m3;
    rep.inv_j2 = abs_diff(v.j_sq, a * m1 / R(3) + m2 * m2 - R(4) * m4 - m5) / s4;

    const R reh_rhs =
        a * a + R(18) * m2 * (m2 * m2 - R(4) * m4 - m5) + R(9) * m1 * m1 * m5 + R(144) * m6;
    rep.reh = abs_diff(R(18) * v.re_h, reh_rhs) / s6;

    const R syz_lhs = R(20736) * m7 * m7;  // 12⁴
    const R inner = m1 * a + R(3) * m2 * m2 - R(12) * m4 - R(3) * m5;
    rep.syzygy = abs_diff(syz_lhs, R(36) * m5 * inner * inner - reh_rhs * reh_rhs) / s12;

    rep.m5_f = abs_diff(m5, norm2(v.f)) / s4;
    rep.nonneg_slack = a < R(0) ? -a / (scale * scale * scale) : R(0);
    return rep;
}

template <class R>
IdentityReport<R> identity_suite(const State<R>& psi) {
    return identity_suite(fermion_invariants(psi));
}

// ---------------------------------------------------------------------------
// Finite-difference cross-checks (gradients over the 40 real coordinates)
// ---------------------------------------------------------------------------

template <class R>
struct GradientReport {
    R m3_residual;  // against (3/2)M1M2 − (1/8)‖∇M2‖²
    R m5_residual;  // against (1/18)(10M2² + 8M1M3 − 24M4 − ∇M2·∇M3)
};

namespace detail {

template <class R, class Fn>
std::array<R, 40> fd_gradient(const State<R>& psi, Fn&& f, const R& h) {
    std::array<R, 40> g{};
    State<R> work = psi;
    for (int n = 0; n < kTriples; ++n) {
        for (int part = 0; part < 2; ++part) {
            R& slot = part == 0 ? work.xi[static_cast<size_t>(n)].re
                                : work.xi[static_cast<size_t>(n)].im;
            const R saved = slot;
            slot = saved + h;
            const R up = f(work);
            slot = saved - h;
            const R dn = f(work);
            slot = saved;
            g[static_cast<size_t>(2 * n + part)] = (up - dn) / (R(2) * h);
        }
    }
    return g;
}

}  // namespace detail

template <class R>
GradientReport<R> gradient_crosschecks(const State<R>& psi) {
    using std::cbrt;
    using std::sqrt;
    GradientReport<R> rep{};
    const R nrm = psi.norm();
    if (nrm == R(0)) return rep;

    const R h = R(cbrt(scalar_traits<R>::epsilon())) * nrm;
    auto eval_m2 = [](const State<R>& s) {
        const R m1 = s.norm2();
        const Mat<cx<R>> r1 = rdm1(s);
        return (R(3) / R(2)) * (m1 * m1 - R(3) * (r1 * r1).trace().re);
    };
    auto eval_m3 = [](const State<R>& s) {
        const R m1 = s.norm2();
        const Mat<cx<R>> r1 = rdm1(s);
        const R m2 = (R(3) / R(2)) * (m1 * m1 - R(3) * (r1 * r1).trace().re);
        const Mat<cx<R>> r12 = rdm2(s);
        return R(3) * m1 * (m1 * m1 - m2) -
               R(27) * (r1 * partial_trace2(r12 * r12)).trace().re;
    };

    const auto g2 = detail::fd_gradient(psi, eval_m2, h);
    const auto g3 = detail::fd_gradient(psi, eval_m3, h);
    R g2sq(0), g2g3(0);
    for (int n = 0; n < 40; ++n) {
        g2sq += g2[static_cast<size_t>(n)] * g2[static_cast<size_t>(n)];
        g2g3 += g2[static_cast<size_t>(n)] * g3[static_cast<size_t>(n)];
    }

    const FermionInvariants<R> v = fermion_invariants(psi);
    rep.m3_residual = abs_diff(v.M(3), (R(3) / R(2)) * v.M(1) * v.M(2) - g2sq / R(8));
    rep.m5_residual = abs_diff(
        v.M(5), (R(10) * v.M(2) * v.M(2) + R(8) * v.M(1) * v.M(3) - R(24) * v.M(4) - g2g3) /
                    R(18));
    return rep;
}

// ---------------------------------------------------------------------------
// Equivalence and classification
// ---------------------------------------------------------------------------

enum class SloccType { Separable, Biseparable, W, GHZ };

inline const char* to_string(SloccType t) {
    switch (t) {
        case SloccType::Separable: return "separable";
        case SloccType::Biseparable: return "biseparable";
        case SloccType::W: return "W";
        case SloccType::GHZ: return "GHZ";
    }
    return "?";
}

// true iff all seven invariants of the normalized states agree within tol
template <class R>
bool lu_equivalent(const State<R>& a, const State<R>& b, const R& tol = R(1e-9)) {
    const FermionInvariants<R> va = fermion_invariants(normalized(a));
    const FermionInvariants<R> vb = fermion_invariants(normalized(b));
    for (int k = 1; k <= 7; ++k)
        if (abs_diff(va.M(k), vb.M(k)) > tol) return false;
    return true;
}

// degree-aware zero test: |q| < 10⁻⁸ · M1^deg
template <class R>
bool invariant_is_zero(const R& q, const R& m1, int deg) {
    using std::abs;
    using std::pow;
    return R(abs(q)) < R(1e-8) * R(pow(m1, deg));
}

template <class R>
SloccType slocc_type(const State<R>& psi) {
    const R m1 = psi.norm2();
    if (m1 == R(0)) fail("ZeroState", "cannot classify the zero state");
    const FermionInvariants<R> v = fermion_invariants(psi);
    const R gap = v.M(1) * v.M(2) - R(2) * v.M(3);
    if (!invariant_is_zero(v.M(5), m1, 4)) return SloccType::GHZ;
    if (!invariant_is_zero(gap, m1, 3)) return SloccType::W;
    if (!invariant_is_zero(v.M(2), m1, 2)) return SloccType::Biseparable;
    return SloccType::Separable;
}

// a state is quasi-real (LU-equivalent to its conjugate) iff M7 vanishes
template <class R>
bool quasi_real(const State<R>& psi, const R& tol = R(1e-10)) {
    using std::pow;
    const R m1 = psi.norm2();
    const FermionInvariants<R> v = fermion_invariants(psi);
    return abs_diff(v.M(7), R(0)) <= tol * R(pow(m1, 6));
}

// ---------------------------------------------------------------------------
// Qubit invariants
// ---------------------------------------------------------------------------

template <class R>
struct QubitInvariants {
    std::array<R, 7> q{};    // Q1..Q7
    cx<R> hdet{};            // Cayley hyperdeterminant
    std::array<R, 7> sym{};  // (Q1, Q2+Q3+Q4, Q5, Q2Q3+Q2Q4+Q3Q4, Q6, Q2Q3Q4, Q7)

    [[nodiscard]] const R& Q(int k) const { return q[static_cast<size_t>(k - 1)]; }
};

// degrees of the symmetric generator tuple in |λ|²
inline constexpr std::array<int, 7> kSymGeneratorDegree = {1, 2, 3, 4, 4, 6, 6};

template <class R>
cx<R> hyperdeterminant(const QubitState<R>& s) {
    auto t = [&s](int i, int j, int k) { return s.amp(i, j, k); };
    const cx<R> t000 = t(0, 0, 0), t001 = t(0, 0, 1), t010 = t(0, 1, 0), t011 = t(0, 1, 1),
                t100 = t(1, 0, 0), t101 = t(1, 0, 1), t110 = t(1, 1, 0), t111 = t(1, 1, 1);
    return t000 * t000 * t111 * t111 + t001 * t001 * t110 * t110 +
           t010 * t010 * t101 * t101 + t011 * t011 * t100 * t100 -
           R(2) * (t000 * t001 * t110 * t111 + t000 * t010 * t101 * t111 +
                   t000 * t011 * t100 * t111 + t001 * t010 * t101 * t110 +
                   t001 * t011 * t110 * t100 + t010 * t011 * t101 * t100) +
           R(4) * (t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111);
}

namespace detail {

template <class R>
Mat<cx<R>> kron2(const Mat<cx<R>>& a, const Mat<cx<R>>& b) {
    Mat<cx<R>> m(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

}  // namespace detail

template <class R>
QubitInvariants<R> qubit_invariants(const QubitState<R>& phi) {
    QubitInvariants<R> inv;
    const QubitRdms<R> r = qubit_rdms(phi);
    const R q1 = phi.norm2();
    const R q2 = (r.a * r.a).trace().re;
    const R q3 = (r.b * r.b).trace().re;
    const R q4 = (r.c * r.c).trace().re;
    const R q5 = (detail::kron2(r.a, r.b) * r.ab).trace().re +
                 (detail::kron2(r.b, r.c) * r.bc).trace().re +
                 (detail::kron2(r.a, r.c) * r.ac).trace().re;
    inv.hdet = hyperdeterminant(phi);
    const R q6 = norm2(inv.hdet);
    const FermionInvariants<R> fv = fermion_invariants(sov_embed(phi));
    const R q7 = R(8) * fv.M(7);
    inv.q = {q1, q2, q3, q4, q5, q6, q7};
    inv.sym = {q1,
               q2 + q3 + q4,
               q5,
               q2 * q3 + q2 * q4 + q3 * q4,
               q6,
               q2 * q3 * q4,
               q7};
    return inv;
}

// equality of the seven symmetric generators after normalization
template <class R>
bool g_equivalent(const QubitState<R>& a, const QubitState<R>& b, const R& tol = R(1e-9)) {
    const QubitInvariants<R> va = qubit_invariants(normalized(a));
    const QubitInvariants<R> vb = qubit_invariants(normalized(b));
    for (int k = 0; k < 7; ++k)
        if (abs_diff(va.sym[static_cast<size_t>(k)], vb.sym[static_cast<size_t>(k)]) > tol)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Jacobian independence witness (binary64)
// ---------------------------------------------------------------------------

// smallest/largest singular-value ratio of the Jacobian of (M'1..M'6) at a
// coordinate point, via central differences
inline double w6_jacobian_sv_ratio(const W6Point<double>& p) {
    // The ratio is only scale-meaningful at a unit vector: row k of the
    // Jacobian rescales by lambda^(2*deg_k - 1) under p -> lambda*p, so any
    // large point drives sigma6/sigma1 to zero regardless of rank.
    const double nrm = std::sqrt(p.norm2());
    if (!(nrm > 0.0)) fail("ZeroState", "jacobian requested at the zero point");
    const W6Point<double> p0{p.a / nrm, p.b / nrm, p.c / nrm,
                             p.d / nrm, p.x / nrm, p.y / nrm};
    const double h = std::cbrt(scalar_traits<double>::epsilon());
    Eigen::MatrixXd jac(6, 6);
    for (int col = 0; col < 6; ++col) {
        W6Point<double> up = p0, dn = p0;
        double* fields_up[6] = {&up.a, &up.b, &up.c, &up.d, &up.x, &up.y};
        double* fields_dn[6] = {&dn.a, &dn.b, &dn.c, &dn.d, &dn.x, &dn.y};
        *fields_up[col] += h;
        *fields_dn[col] -= h;
        const W6Invariants<double> vu = w6_invariants(up), vd = w6_invariants(dn);
        for (int row = 0; row < 6; ++row)
            jac(row, col) = (vu.m[static_cast<size_t>(row)] - vd.m[static_cast<size_t>(row)]) /
                            (2.0 * h);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    return sv(5) / sv(0);
}

// ---------------------------------------------------------------------------
// Calibration self-check
// ---------------------------------------------------------------------------

// Re-derives the two frozen contraction scalars by least squares on
// deterministic subspace samples; throws CalibrationFailed if either the
// fitted value or a fresh-point residual drifts.
inline void calibration_check(int fresh_points = 1000, double tol = 1e-10) {
    Rng rng(0x5eedCA11Bu);
    auto w6_sample = [&rng]() {
        W6Point<double> p = random_w6_point<double>(rng);
        return p;
    };

    // least squares for kappa_F: tr(K²) = (1/kappa_F)·F′, fit r = Σ t·f̄ / Σ |f|²
    cxd num_f{}, num_j{};
    double den_f = 0, den_j = 0;
    for (int n = 0; n < 20; ++n) {
        const W6Point<double> p = w6_sample();
        const State<double> psi = p.state();
        const Mat<cxd> k = epsilon_contract_K(psi);
        const cxd trk2 = (k * k).trace();
        const cxd fp = w6_invariants(p).f;
        num_f += trk2 * conj(fp);
        den_f += norm2(fp);

        const double a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
        const cxd w = gaussian_cx<double>(rng), z = gaussian_cx<double>(rng);
        const State<double> psi7 = w7_state(a, b, c, w, z);
        const State<double> pb = conj(psi7);
        const State<double> chi = derivation_action(epsilon_contract_K(pb), pb);
        cxd raw{};
        for (int t = 0; t < kTriples; ++t) raw += psi7.xi[static_cast<size_t>(t)] * chi.xi[static_cast<size_t>(t)];
        const cxd jp = w7_j_restriction(a, b, c, w, z);
        num_j += raw * conj(jp);
        den_j += norm2(jp);
    }
    const cxd ratio_f = num_f / den_f;  // expect 864
    const cxd ratio_j = num_j / den_j;  // expect −36
    if (abs(ratio_f - cxd(864.0)) > 1e-8 || abs(ratio_j - cxd(-36.0)) > 1e-8)
        fail("CalibrationFailed", "contraction scalars drifted from their frozen values");

    for (int n = 0; n < fresh_points; ++n) {
        const W6Point<double> p = w6_sample();
        const State<double> psi = p.state();
        const W6Invariants<double> w = w6_invariants(p);
        const double scale = std::pow(psi.norm2(), 2);
        if (abs(invariant_F(psi) - w.f) > tol * std::max(1.0, scale) ||
            abs(invariant_J(psi) - w.j) > tol * std::max(1.0, scale))
            fail("CalibrationFailed", "restriction residual above tolerance on fresh samples");
    }
}

}  // namespace trivec
