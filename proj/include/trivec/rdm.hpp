// rdm.hpp — one- and two-body reduced density matrices of a three-fermion
// state, the closed-form block structure on the five-coefficient subspace,
// qubit partial traces, and the occupation-spectrum pairing diagnostic.
//
// Normalization: every RDM returned here has trace ‖ψ‖².  The trace-3
// convention (3·ρ₁) appears only inside spectrum_pairing_check, whose pairing
// statement is native to that scaling.
#pragma once

#include <algorithm>
#include <vector>

#include "trivec/basis.hpp"
#include "trivec/linalg.hpp"
#include "trivec/state.hpp"
#include "trivec/types.hpp"

namespace trivec {

// sign-extended read of a pair-indexed Hermitian matrix (rows/cols over i<j)
template <class R>
cx<R> pair_entry(const Mat<cx<R>>& m, int a, int b, int a2, int b2) {
    const SignedIndex r = pair_slot(a, b), c = pair_slot(a2, b2);
    if (r.index < 0 || c.index < 0) return cx<R>{};
    cx<R> v = m(r.index, c.index);
    return (r.sign * c.sign < 0) ? -v : v;
}

// ρ₁(a,a') = (1/3) Σ_{b<c} ψ̂_{abc} ψ̂*_{a'bc}; trace ‖ψ‖².
template <class R>
Mat<cx<R>> rdm1(const State<R>& psi) {
    Mat<cx<R>> rho(kDim, kDim);
    const R third = R(1) / R(3);
    for (int a = 1; a <= kDim; ++a)
        for (int a2 = a; a2 <= kDim; ++a2) {
            cx<R> acc{};
            for (const Pair& p : kPairList) acc += psi.amp(a, p.i, p.j) * conj(psi.amp(a2, p.i, p.j));
            acc *= third;
            rho(a - 1, a2 - 1) = acc;
            if (a2 != a) rho(a2 - 1, a - 1) = conj(acc);
        }
    return rho;
}

// ρ₁₂((ab),(a'b')) = (1/3) Σ_c ψ̂_{abc} ψ̂*_{a'b'c} over ordered pairs; trace ‖ψ‖².
template <class R>
Mat<cx<R>> rdm2(const State<R>& psi) {
    Mat<cx<R>> rho(kPairs, kPairs);
    const R third = R(1) / R(3);
    for (int r = 0; r < kPairs; ++r) {
        const Pair pr = kPairList[static_cast<size_t>(r)];
        for (int c = r; c < kPairs; ++c) {
            const Pair pc = kPairList[static_cast<size_t>(c)];
            cx<R> acc{};
            for (int m = 1; m <= kDim; ++m) acc += psi.amp(pr.i, pr.j, m) * conj(psi.amp(pc.i, pc.j, m));
            acc *= third;
            rho(r, c) = acc;
            if (c != r) rho(c, r) = conj(acc);
        }
    }
    return rho;
}

// Contraction of a pair-indexed operator over its second slot:
// out(a,a') = (1/2) Σ_b B̂((a,b),(a',b)).  Maps rdm2 to rdm1 exactly.
template <class R>
Mat<cx<R>> partial_trace2(const Mat<cx<R>>& b) {
    Mat<cx<R>> out(kDim, kDim);
    const R half = R(1) / R(2);
    for (int a = 1; a <= kDim; ++a)
        for (int a2 = 1; a2 <= kDim; ++a2) {
            cx<R> acc{};
            for (int m = 1; m <= kDim; ++m) acc += pair_entry(b, a, m, a2, m);
            out(a - 1, a2 - 1) = acc * half;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form structure on the five-coefficient subspace
// ---------------------------------------------------------------------------

template <class R>
struct W6Blocks {
    Mat<cx<R>> ra, rb, rc;           // 2x2 blocks of 3·ρ₁ (each unit trace)
    R da, db, dc;                    // their determinants
    Mat<cx<R>> pair_ab, pair_ac, pair_bc;  // 4x4 blocks of 3·ρ₁₂
};

template <class R>
W6Blocks<R> w6_blocks(const W6Point<R>& p) {
    const cx<R> z(p.x, p.y);
    const cx<R> zs = conj(z);
    const R z2 = p.z2(), a = p.a, b = p.b, c = p.c, d = p.d;

    W6Blocks<R> w{Mat<cx<R>>(2, 2), Mat<cx<R>>(2, 2), Mat<cx<R>>(2, 2),
                  R(0), R(0), R(0),
                  Mat<cx<R>>(4, 4), Mat<cx<R>>(4, 4), Mat<cx<R>>(4, 4)};

    auto fill2 = [&z, &zs](Mat<cx<R>>& m, R top, R coef, R bottom) {
        m(0, 0) = cx<R>(top, R(0));
        m(0, 1) = z * coef;
        m(1, 0) = zs * coef;
        m(1, 1) = cx<R>(bottom, R(0));
    };
    fill2(w.ra, b * b + c * c + z2, a, a * a + d * d);
    fill2(w.rb, c * c + a * a + z2, b, b * b + d * d);
    fill2(w.rc, a * a + b * b + z2, c, c * c + d * d);
    w.da = (b * b + c * c) * (a * a + d * d) + d * d * z2;
    w.db = (c * c + a * a) * (b * b + d * d) + d * d * z2;
    w.dc = (a * a + b * b) * (c * c + d * d) + d * d * z2;

    // 4x4 blocks in the pair bases {(1,3),(1,4),(2,3),(2,4)},
    // {(1,5),(1,6),(2,5),(2,6)}, {(3,5),(3,6),(4,5),(4,6)}
    auto fill4 = [&z, &zs](Mat<cx<R>>& m, R diag0, R u, R v, R uv, R dd, R cross) {
        m(0, 0) = cx<R>(diag0, R(0));
        m(0, 1) = z * u;
        m(0, 2) = z * v;
        m(0, 3) = cx<R>(cross, R(0));
        m(1, 0) = zs * u;
        m(1, 1) = cx<R>(u * u, R(0));
        m(1, 2) = cx<R>(uv, R(0));
        m(2, 0) = zs * v;
        m(2, 1) = cx<R>(uv, R(0));
        m(2, 2) = cx<R>(v * v, R(0));
        m(3, 0) = cx<R>(cross, R(0));
        m(3, 3) = cx<R>(dd, R(0));
    };
    fill4(w.pair_ab, c * c + z2, b, a, a * b, d * d, c * d);
    fill4(w.pair_ac, b * b + z2, c, a, a * c, d * d, b * d);
    fill4(w.pair_bc, a * a + z2, c, b, b * c, d * d, a * d);
    return w;
}

// max_i |λ_i + λ_{7−i} − ‖ψ‖²| for the trace-3-scaled occupation spectrum
// sorted decreasingly (binary64 only; diagnostic, not a production path).
inline double spectrum_pairing_check(const State<double>& psi) {
    Mat<cxd> rho = rdm1(psi);
    rho *= 3.0;
    std::vector<double> ev = hermitian_eigenvalues(rho);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    const double n2 = psi.norm2();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        worst = std::max(worst, std::abs(ev[static_cast<size_t>(i)] +
                                         ev[static_cast<size_t>(5 - i)] - n2));
    return worst;
}

// ---------------------------------------------------------------------------
// Qubit partial traces
// ---------------------------------------------------------------------------

template <class R>
struct QubitRdms {
    Mat<cx<R>> a, b, c;     // 2x2 single-site matrices
    Mat<cx<R>> ab, ac, bc;  // 4x4 two-site matrices, row-major |ij>
};

template <class R>
QubitRdms<R> qubit_rdms(const QubitState<R>& q) {
    QubitRdms<R> out{Mat<cx<R>>(2, 2), Mat<cx<R>>(2, 2), Mat<cx<R>>(2, 2),
                     Mat<cx<R>>(4, 4), Mat<cx<R>>(4, 4), Mat<cx<R>>(4, 4)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const cx<R> v = q.amp(i, j, k);
                for (int i2 = 0; i2 < 2; ++i2)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int k2 = 0; k2 < 2; ++k2) {
                            const cx<R> w = v * conj(q.amp(i2, j2, k2));
                            if (j == j2 && k == k2) out.a(i, i2) += w;
                            if (i == i2 && k == k2) out.b(j, j2) += w;
                            if (i == i2 && j == j2) out.c(k, k2) += w;
                            if (k == k2) out.ab(2 * i + j, 2 * i2 + j2) += w;
                            if (j == j2) out.ac(2 * i + k, 2 * i2 + k2) += w;
                            if (i == i2) out.bc(2 * j + k, 2 * j2 + k2) += w;
                        }
            }
    return out;
}

}  // namespace trivec
