#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "trivec/exterior.hpp"
#include "trivec/sampling.hpp"

using namespace trivec;
using C = cxd;
using S = State<double>;

namespace {

S w6_state(double a, double b, double c, double d, C z) {
    S s;
    s.add(2, 3, 5, C(a));
    s.add(1, 4, 5, C(b));
    s.add(1, 3, 6, C(c));
    s.add(2, 4, 6, C(d));
    s.add(1, 3, 5, z);
    return s;
}


// the library reports domain failures through one exception type carrying a
// stable name; grab that name for assertions
template <class F>
std::string thrown_name(F&& f) {
    try {
        f();
    } catch (const domain_error& e) {
        return e.name();
    }
    return "";
}

}  // namespace

TEST_CASE("levi-civita symbol on six indices") {
    CHECK(epsilon6(1, 2, 3, 4, 5, 6) == 1);
    CHECK(epsilon6(2, 1, 3, 4, 5, 6) == -1);
    CHECK(epsilon6(1, 1, 3, 4, 5, 6) == 0);
    CHECK(epsilon6(6, 5, 4, 3, 2, 1) == -1);  // 15 transpositions
    CHECK(epsilon6(2, 3, 1, 4, 5, 6) == 1);
}

TEST_CASE("signed amplitude access is antisymmetric") {
    Rng rng(21);
    S psi = random_state<double>(rng);
    // swapping any two slots flips the sign; a repeated slot reads zero
    CHECK(abs(psi.amp(1, 2, 3) + psi.amp(2, 1, 3)) == 0.0);
    CHECK(abs(psi.amp(4, 2, 6) + psi.amp(4, 6, 2)) == 0.0);
    CHECK(abs(psi.amp(3, 5, 3)) == 0.0);
    // cyclic rotation preserves the value
    CHECK(abs(psi.amp(2, 4, 5) - psi.amp(4, 5, 2)) == 0.0);
}

TEST_CASE("wedge of three vectors transforms equivariantly") {
    Rng rng(12345);
    Vec6<double> v1{}, v2{}, v3{};
    for (int i = 0; i < 6; ++i) {
        v1[i] = gaussian_cx<double>(rng);
        v2[i] = gaussian_cx<double>(rng);
        v3[i] = gaussian_cx<double>(rng);
    }
    Mat<C> u = haar_unitary<double>(rng);
    S lhs = apply_unitary(u, wedge3(v1, v2, v3));
    Vec6<double> u1{}, u2{}, u3{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            u1[i] += u(i, j) * v1[j];
            u2[i] += u(i, j) * v2[j];
            u3[i] += u(i, j) * v3[j];
        }
    lhs -= wedge3(u1, u2, u3);
    CHECK(lhs.norm() < 1e-13);
}

TEST_CASE("wedge vanishes on linearly dependent vectors") {
    Rng rng(7);
    Vec6<double> v1{}, v2{};
    for (int i = 0; i < 6; ++i) {
        v1[i] = gaussian_cx<double>(rng);
        v2[i] = gaussian_cx<double>(rng);
    }
    Vec6<double> v3{};
    for (int i = 0; i < 6; ++i) v3[i] = v1[i] * C(0.3) + v2[i] * C(-1.7);
    CHECK(wedge3(v1, v2, v3).norm() < 1e-14);
}

TEST_CASE("unitary action preserves norm and composes") {
    Rng rng(99);
    S psi = random_state<double>(rng);
    Mat<C> u = haar_unitary<double>(rng), v = haar_unitary<double>(rng);
    S a = apply_unitary(u, apply_unitary(v, psi));
    S b = apply_unitary(u * v, psi);
    b -= a;
    CHECK(b.norm() < 1e-13);
    CHECK(apply_unitary(u, psi).norm() == Catch::Approx(psi.norm()).margin(1e-13));
}

TEST_CASE("non-unitary matrix is rejected") {
    Rng rng(5);
    S psi = random_state<double>(rng);
    Mat<C> m = haar_unitary<double>(rng);
    m(0, 0) += C(0.1);
    CHECK(thrown_name([&] { apply_unitary(m, psi); }) == "NotUnitary");
}

TEST_CASE("permutation matrices of the residue classes") {
    Mat<C> sig = s3_matrix<double>({1, 2, 0});  // 3-cycle on the class labels
    Mat<C> tau = s3_matrix<double>({1, 0, 2});  // transposition
    Mat<C> s3 = sig * sig * sig, t2 = tau * tau;
    double r1 = 0, r2 = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            r1 += abs(s3(i, j) - C(i == j ? 1.0 : 0.0));
            r2 += abs(t2(i, j) - C(i == j ? 1.0 : 0.0));
        }
    CHECK(r1 < 1e-15);
    CHECK(r2 < 1e-15);
    // both are special-unitary: the 3-cycle genuinely permutes, the
    // transposition carries a compensating sign
    CHECK(abs(determinant(sig) - C(1.0)) < 1e-14);
    CHECK(abs(determinant(tau) - C(1.0)) < 1e-14);

    // action on the five-coordinate family: (a,b,c) permute, d and z are fixed
    S st = w6_state(0.3, 0.5, -0.2, 0.7, C(0.1, 0.4));
    S ds = apply_unitary(sig, st);
    ds -= w6_state(-0.2, 0.3, 0.5, 0.7, C(0.1, 0.4));
    S dt = apply_unitary(tau, st);
    dt -= w6_state(0.5, 0.3, -0.2, 0.7, C(0.1, 0.4));
    CHECK(ds.norm() < 1e-14);
    CHECK(dt.norm() < 1e-14);
}

TEST_CASE("epsilon contraction is traceless and equivariant") {
    Rng rng(31337);
    S psi = random_state<double>(rng);
    Mat<C> k = epsilon_contract_K(psi);
    CHECK(abs(k.trace()) < 1e-14);

    Mat<C> u = haar_unitary<double>(rng);
    Mat<C> lhs = epsilon_contract_K(apply_unitary(u, psi));
    Mat<C> rhs = u * k * adjoint(u);
    rhs *= determinant(u);
    lhs -= rhs;
    CHECK(frobenius_norm(lhs) < 1e-13);
}

TEST_CASE("single-occupancy embedding round trip") {
    Rng rng(17);
    QubitState<double> q = random_qubit_state<double>(rng);
    S s = sov_embed(q);
    CHECK(s.norm() == Catch::Approx(q.norm()).margin(1e-15));
    QubitState<double> back = sov_extract(s);
    double diff = 0;
    for (int b = 0; b < 8; ++b) diff = std::max(diff, abs(back.t[(size_t)b] - q.t[(size_t)b]));
    CHECK(diff < 1e-15);
}

TEST_CASE("extraction rejects states outside the single-occupancy subspace") {
    Rng rng(18);
    S psi = random_state<double>(rng);  // generic: has support off the subspace
    CHECK(thrown_name([&] { sov_extract(psi); }) == "NotSOV");
}

TEST_CASE("local unitaries commute with the embedding") {
    Rng rng(23);
    QubitState<double> q = random_qubit_state<double>(rng);
    Mat<C> ua = haar_unitary<double>(rng, 2), ub = haar_unitary<double>(rng, 2),
           uc = haar_unitary<double>(rng, 2);
    QubitState<double> ql = apply_local_unitary(ua, ub, uc, q);
    // assemble the block-diagonal 6x6 carrier of (ua, ub, uc)
    Mat<C> u(6, 6);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            u(0 + r, 0 + c) = ua(r, c);
            u(2 + r, 2 + c) = ub(r, c);
            u(4 + r, 4 + c) = uc(r, c);
        }
    S lhs = sov_embed(ql);
    S rhs = apply_unitary(u, sov_embed(q));
    rhs -= lhs;
    CHECK(rhs.norm() < 1e-14);
}

TEST_CASE("qubit site permutation matches the corpus matrices") {
    Rng rng(29);
    QubitState<double> q = random_qubit_state<double>(rng);
    for (const auto& perm : kS3Elements) {
        QubitState<double> qp = qubit_permute(q, perm);
        S lhs = sov_embed(qp);
        S rhs = apply_unitary(s3_matrix<double>(perm), sov_embed(q));
        rhs -= lhs;
        // the carrier matrices are special-unitary, so odd permutations act
        // with a compensating sign on the embedded vector
        S rhs2 = apply_unitary(s3_matrix<double>(perm), sov_embed(q));
        rhs2 += lhs;
        CHECK(std::min(rhs.norm(), rhs2.norm()) < 1e-14);
    }
}

TEST_CASE("tensor embedding is an isometry up to the antisymmetry factor") {
    Rng rng(41);
    S psi = random_state<double>(rng);
    std::array<C, 216> t = embed_to_tensor(psi);
    double n2 = 0;
    for (const C& e : t) n2 += norm2(e);
    CHECK(std::sqrt(n2) == Catch::Approx(psi.norm()).margin(1e-13));
}
