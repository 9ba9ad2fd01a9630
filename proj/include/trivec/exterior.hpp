// exterior.hpp — the representation layer for 3-vectors in C^6: wedge
// products, Hermitian inner products, the induced action of U(6) on the
// 20-dimensional coefficient space, the qubit <-> separated-orbital
// correspondence, the qubit-permutation matrices in U(6), and the
// Levi-Civita contraction K used by the invariant module.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "trivec/basis.hpp"
#include "trivec/linalg.hpp"
#include "trivec/state.hpp"
#include "trivec/types.hpp"

namespace trivec {

template <class R>
using Vec6 = std::array<cx<R>, kDim>;

// ---------------------------------------------------------------------------
// wedge3 / inner
// ---------------------------------------------------------------------------

// v1 ∧ v2 ∧ v3; linearly dependent inputs give the zero state.
template <class R>
State<R> wedge3(const Vec6<R>& v1, const Vec6<R>& v2, const Vec6<R>& v3) {
    State<R> s;
    for (int slot = 0; slot < kTriples; ++slot) {
        const Triple t = kTripleList[static_cast<size_t>(slot)];
        const int i = t.i - 1, j = t.j - 1, k = t.k - 1;
        // 3x3 minor with rows (v1,v2,v3), columns (i,j,k)
        s.xi[static_cast<size_t>(slot)] =
            v1[i] * (v2[j] * v3[k] - v2[k] * v3[j]) -
            v1[j] * (v2[i] * v3[k] - v2[k] * v3[i]) +
            v1[k] * (v2[i] * v3[j] - v2[j] * v3[i]);
    }
    return s;
}

// Hermitian inner product, conjugate-linear in the first argument.
template <class R>
cx<R> inner(const State<R>& a, const State<R>& b) {
    cx<R> s{};
    for (int n = 0; n < kTriples; ++n)
        s += conj(a.xi[static_cast<size_t>(n)]) * b.xi[static_cast<size_t>(n)];
    return s;
}

template <class R>
cx<R> inner(const QubitState<R>& a, const QubitState<R>& b) {
    cx<R> s{};
    for (int n = 0; n < 8; ++n) s += conj(a.t[static_cast<size_t>(n)]) * b.t[static_cast<size_t>(n)];
    return s;
}

// ---------------------------------------------------------------------------
// Induced action of GL(6) on the coefficient space
// ---------------------------------------------------------------------------

// 20x20 matrix of 3x3 minors: row (i<j<k), column (l<m<n) holds
// det A[{i,j,k},{l,m,n}].  Applying it to coefficients implements
// A v1 ∧ A v2 ∧ A v3 on wedges.
template <class R>
Mat<cx<R>> compound3(const Mat<cx<R>>& a) {
    Mat<cx<R>> m(kTriples, kTriples);
    for (int row = 0; row < kTriples; ++row) {
        const Triple r = kTripleList[static_cast<size_t>(row)];
        const int i = r.i - 1, j = r.j - 1, k = r.k - 1;
        for (int col = 0; col < kTriples; ++col) {
            const Triple c = kTripleList[static_cast<size_t>(col)];
            const int l = c.i - 1, mm = c.j - 1, n = c.k - 1;
            m(row, col) = a(i, l) * (a(j, mm) * a(k, n) - a(j, n) * a(k, mm)) -
                          a(i, mm) * (a(j, l) * a(k, n) - a(j, n) * a(k, l)) +
                          a(i, n) * (a(j, l) * a(k, mm) - a(j, mm) * a(k, l));
        }
    }
    return m;
}

template <class R>
R unitarity_defect(const Mat<cx<R>>& u) {
    Mat<cx<R>> g = adjoint(u) * u;
    for (int i = 0; i < g.rows(); ++i) g(i, i) -= cx<R>(R(1), R(0));
    return frobenius_norm(g);
}

template <class R>
R default_unitary_tol() {
    return scalar_traits<R>::epsilon() * R(1e6);
}

// Applies the induced action of a unitary U on modes.  Rejects matrices
// whose unitarity defect exceeds tol.
template <class R>
State<R> apply_unitary(const Mat<cx<R>>& u, const State<R>& psi,
                       const R& tol = default_unitary_tol<R>()) {
    if (u.rows() != kDim || u.cols() != kDim) fail("NotUnitary", "matrix must be 6x6");
    if (unitarity_defect(u) > tol) fail("NotUnitary", "matrix fails the unitarity tolerance");
    Mat<cx<R>> c = compound3(u);
    State<R> out;
    for (int row = 0; row < kTriples; ++row) {
        cx<R> acc{};
        for (int col = 0; col < kTriples; ++col) acc += c(row, col) * psi.xi[static_cast<size_t>(col)];
        out.xi[static_cast<size_t>(row)] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Qubit <-> separated-orbital correspondence
// ---------------------------------------------------------------------------

// |ijk> maps to e_{i+1} ∧ e_{j+3} ∧ e_{k+5}; the image spans the eight
// triples taking one mode from each of {1,2}, {3,4}, {5,6}.
template <class R>
State<R> sov_embed(const QubitState<R>& q) {
    State<R> s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                s.xi[static_cast<size_t>(triple_index(i + 1, j + 3, k + 5))] = q.amp(i, j, k);
    return s;
}

// Inverse of sov_embed; rejects states with weight outside the image
// subspace above tol·‖ψ‖.
template <class R>
QubitState<R> sov_extract(const State<R>& s, const R& tol = R(1e-10)) {
    std::array<bool, kTriples> used{};
    QubitState<R> q;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int slot = triple_index(i + 1, j + 3, k + 5);
                used[static_cast<size_t>(slot)] = true;
                q.amp(i, j, k) = s.xi[static_cast<size_t>(slot)];
            }
    const R scale = s.norm();
    for (int n = 0; n < kTriples; ++n)
        if (!used[static_cast<size_t>(n)] && abs(s.xi[static_cast<size_t>(n)]) > tol * scale)
            fail("NotSOV", "amplitude outside the one-orbital-per-site subspace");
    return q;
}

// Local unitary action (uA ⊗ uB ⊗ uC) on a three-qubit state; each factor 2x2.
template <class R>
QubitState<R> apply_local_unitary(const Mat<cx<R>>& ua, const Mat<cx<R>>& ub,
                                  const Mat<cx<R>>& uc, const QubitState<R>& q) {
    QubitState<R> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                cx<R> acc{};
                for (int l = 0; l < 2; ++l)
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n)
                            acc += ua(i, l) * ub(j, m) * uc(k, n) * q.amp(l, m, n);
                out.amp(i, j, k) = acc;
            }
    return out;
}

// Permutes the qubit slots: new site s carries the content of old site
// perm_inverse(s).  perm maps old slot -> new slot, entries a permutation
// of {0,1,2}.
template <class R>
QubitState<R> qubit_permute(const QubitState<R>& q, const std::array<int, 3>& perm) {
    QubitState<R> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int bits[3] = {i, j, k};
                int nb[3] = {0, 0, 0};
                for (int s = 0; s < 3; ++s) nb[perm[static_cast<size_t>(s)]] = bits[s];
                out.amp(nb[0], nb[1], nb[2]) = q.amp(i, j, k);
            }
    return out;
}

inline int perm_sign(const std::array<int, 3>& perm) {
    int inv = 0;
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            if (perm[static_cast<size_t>(s)] > perm[static_cast<size_t>(t)]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// The 6x6 unitary whose induced action realizes the qubit permutation perm
// on the separated-orbital subspace: mode block of site s (coordinates
// 2s+1, 2s+2) is sent to the block of site perm[s], scaled by sign(perm).
// The sign keeps every matrix in SU(6) and makes perm -> matrix a group
// homomorphism.
template <class R>
Mat<cx<R>> s3_matrix(const std::array<int, 3>& perm) {
    Mat<cx<R>> m(kDim, kDim);
    const R sign = perm_sign(perm) > 0 ? R(1) : R(-1);
    for (int s = 0; s < 3; ++s) {
        int dst = perm[static_cast<size_t>(s)];
        m(2 * dst, 2 * s) = cx<R>(sign, R(0));
        m(2 * dst + 1, 2 * s + 1) = cx<R>(sign, R(0));
    }
    return m;
}

inline constexpr std::array<std::array<int, 3>, 6> kS3Elements = {{
    {0, 1, 2},  // identity
    {1, 2, 0},  // 3-cycle
    {2, 0, 1},  // inverse 3-cycle
    {1, 0, 2},  // swap first two sites
    {0, 2, 1},  // swap last two sites
    {2, 1, 0},  // swap outer sites
}};

// ---------------------------------------------------------------------------
// Full antisymmetric embedding tensor
// ---------------------------------------------------------------------------

// T[a][b][c] = sign-extended coefficient / sqrt(6), flattened row-major over
// 1-based (a,b,c).  The 1/sqrt(6) makes the embedding an isometry.
template <class R>
std::array<cx<R>, 216> embed_to_tensor(const State<R>& s) {
    using std::sqrt;
    std::array<cx<R>, 216> t{};
    const R inv_r6 = R(1) / R(sqrt(R(6)));
    for (int a = 1; a <= kDim; ++a)
        for (int b = 1; b <= kDim; ++b)
            for (int c = 1; c <= kDim; ++c) {
                const SignedIndex si = triple_slot(a, b, c);
                if (si.index < 0) continue;
                cx<R> v = s.xi[static_cast<size_t>(si.index)] * inv_r6;
                if (si.sign < 0) v = -v;
                t[static_cast<size_t>(((a - 1) * kDim + (b - 1)) * kDim + (c - 1))] = v;
            }
    return t;
}

// ---------------------------------------------------------------------------
// Levi-Civita contraction K
// ---------------------------------------------------------------------------

// K[i][j] = Σ ψ̂_{iab} ψ̂_{cde} ε_{jabcde}, the traceless 6x6 matrix underlying
// the quartic invariant.  For fixed j only permutations of the complementary
// five indices contribute.
template <class R>
Mat<cx<R>> epsilon_contract_K(const State<R>& psi) {
    Mat<cx<R>> k(kDim, kDim);
    const auto& eps = detail::epsilon6_table();
    auto xihat = [&psi](int a, int b, int c) -> cx<R> {
        const SignedIndex si = triple_slot(a, b, c);
        if (si.index < 0) return cx<R>{};
        cx<R> v = psi.xi[static_cast<size_t>(si.index)];
        return si.sign < 0 ? -v : v;
    };
    for (int j = 1; j <= kDim; ++j) {
        int rest[5];
        int n = 0;
        for (int m = 1; m <= kDim; ++m)
            if (m != j) rest[n++] = m;
        std::array<int, 5> idx = {0, 1, 2, 3, 4};
        // iterate over the 120 permutations of the complement of {j}
        std::sort(idx.begin(), idx.end());
        do {
            const int a = rest[idx[0]], b = rest[idx[1]], c = rest[idx[2]], d = rest[idx[3]],
                      e = rest[idx[4]];
            const int sgn = eps[static_cast<size_t>(
                ((((((j - 1) * 6 + (a - 1)) * 6 + (b - 1)) * 6 + (c - 1)) * 6 + (d - 1)) * 6 +
                 (e - 1)))];
            if (sgn == 0) continue;
            const cx<R> tail = xihat(c, d, e) * R(static_cast<double>(sgn));
            for (int i = 1; i <= kDim; ++i) {
                cx<R> head = xihat(i, a, b);
                if (head.re == R(0) && head.im == R(0)) continue;
                k(i - 1, j - 1) += head * tail;
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return k;
}

}  // namespace trivec
