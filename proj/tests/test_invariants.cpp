#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "trivec/invariants.hpp"

using namespace trivec;
using C = cxd;

TEST_CASE("closed-form and contraction paths agree at the symmetric point") {
    const double r3 = 1.0 / 3.0;
    W6Point<double> p{r3, r3, r3, 2 * r3, 0.0, std::sqrt(2.0) / 3.0};
    W6Invariants<double> wv = w6_invariants(p);
    FermionInvariants<double> fv = fermion_invariants(p.state());

    const double expect[7] = {1.0,       2.0 / 3.0, 1.0 / 9.0, 4.0 / 27.0,
                              0.0,       8.0 / 729.0, 0.0};
    for (int k = 1; k <= 7; ++k) {
        CAPTURE(k);
        CHECK(std::abs(wv.M(k) - expect[k - 1]) < 1e-12);
        CHECK(std::abs(fv.M(k) - expect[k - 1]) < 1e-12);
    }
    CHECK(std::abs(wv.phi) < 1e-13);
}

TEST_CASE("restriction formulas agree with the full contraction path") {
    Rng rng(777);
    double worst = 0;
    for (int n = 0; n < 40; ++n) {
        W6Point<double> p = random_w6_point<double>(rng);
        W6Invariants<double> wv = w6_invariants(p);
        FermionInvariants<double> fv = fermion_invariants(p.state());
        for (int k = 1; k <= 7; ++k) worst = std::max(worst, std::abs(wv.M(k) - fv.M(k)));
        worst = std::max(worst, abs(wv.f - fv.f));
        worst = std::max(worst, abs(wv.j - fv.j));
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("polynomial identities hold on random states") {
    Rng rng(778);
    double w1 = 0, w2 = 0, w3 = 0, w4 = 0, w5 = 0;
    for (int n = 0; n < 40; ++n) {
        IdentityReport<double> rep = identity_suite(random_state<double>(rng));
        w1 = std::max(w1, rep.inv_j2);
        w2 = std::max(w2, rep.reh);
        w3 = std::max(w3, rep.syzygy);
        w4 = std::max(w4, rep.m5_f);
        w5 = std::max(w5, rep.nonneg_slack);
    }
    CHECK(w1 < 1e-12);
    CHECK(w2 < 1e-12);
    CHECK(w3 < 1e-12);
    CHECK(w4 < 1e-12);
    CHECK(w5 == 0.0);
}

TEST_CASE("gradient cross-checks of the contraction tables") {
    Rng rng(779);
    GradientReport<double> g = gradient_crosschecks(random_state<double>(rng));
    CHECK(g.m3_residual < 1e-10);
    CHECK(g.m5_residual < 1e-10);
}

TEST_CASE("entanglement classes of the standard representatives") {
    State<double> sep = basis_state<double>(2, 4, 6);
    State<double> bis = basis_state<double>(2, 3, 5);
    bis += basis_state<double>(2, 4, 6);
    State<double> wst = basis_state<double>(2, 3, 5);
    wst += basis_state<double>(1, 4, 5);
    wst += basis_state<double>(1, 3, 6);
    State<double> ghz = basis_state<double>(1, 3, 5);
    ghz += basis_state<double>(2, 4, 6);

    CHECK(slocc_type(sep) == SloccType::Separable);
    CHECK(slocc_type(bis) == SloccType::Biseparable);
    CHECK(slocc_type(wst) == SloccType::W);
    CHECK(slocc_type(ghz) == SloccType::GHZ);
    CHECK(std::string(to_string(slocc_type(ghz))) == "GHZ");
}

TEST_CASE("a generic state is of maximal class") {
    Rng rng(780);
    for (int n = 0; n < 20; ++n)
        CHECK(slocc_type(random_state<double>(rng)) == SloccType::GHZ);
}

TEST_CASE("qubit invariants match the embedded fermionic ones") {
    Rng rng(781);
    double w6q = 0, w7q = 0;
    for (int n = 0; n < 30; ++n) {
        QubitState<double> phi = random_qubit_state<double>(rng);
        QubitInvariants<double> qv = qubit_invariants(phi);
        FermionInvariants<double> fv = fermion_invariants(sov_embed(phi));
        w6q = std::max(w6q, std::abs(qv.Q(6) - fv.M(5)));
        w7q = std::max(w7q, std::abs(qv.Q(7) - 8 * fv.M(7)));
    }
    CHECK(w6q < 1e-13);
    CHECK(w7q < 1e-13);
}

TEST_CASE("qubit invariants restricted to the five-coordinate family") {
    Rng rng(782);
    W6Point<double> p = random_w6_point<double>(rng);
    QubitState<double> phi;
    phi.amp(1, 0, 0) = C(p.a);
    phi.amp(0, 1, 0) = C(p.b);
    phi.amp(0, 0, 1) = C(p.c);
    phi.amp(1, 1, 1) = C(p.d);
    phi.amp(0, 0, 0) = C(p.x, p.y);
    QubitInvariants<double> qv = qubit_invariants(phi);

    const double a = p.a, b = p.b, c = p.c, d = p.d;
    const double s1 = p.s1(), s2 = p.s2(), z2 = p.z2();
    const double q2r =
        std::pow(a * a + d * d, 2) + std::pow(b * b + c * c, 2) + 2 * s1 * z2 + z2 * z2;
    const double a4 = a * a * a * a + b * b * b * b + c * c * c * c;
    const double a6 = std::pow(a, 6) + std::pow(b, 6) + std::pow(c, 6) + std::pow(d, 6);
    const double q5r = 3 * z2 * z2 * z2 + 9 * s1 * z2 * z2 +
                       (9 * a4 + 11 * s2 + 2 * s1 * d * d) * z2 +
                       6 * a * b * c * d * (p.x * p.x - p.y * p.y) + 3 * a6 +
                       2 * s1 * std::pow(d, 4) + 2 * a4 * d * d + 3 * s2 * d * d + 2 * s1 * s2 -
                       3 * p.s3();
    CHECK(std::abs(qv.Q(2) - q2r) < 1e-13);
    CHECK(std::abs(qv.Q(5) - q5r) < 1e-13);
}

TEST_CASE("invariants scale by their degree under dilation") {
    Rng rng(783);
    State<double> psi = random_state<double>(rng);
    FermionInvariants<double> v1 = fermion_invariants(psi);
    State<double> scaled = psi;
    scaled *= C(1.7, -0.4);
    FermionInvariants<double> v2 = fermion_invariants(scaled);
    const double lam = norm2(C(1.7, -0.4));
    for (int k = 1; k <= 7; ++k) {
        CAPTURE(k);
        const double rel = std::abs(v2.M(k) - std::pow(lam, kInvariantDegree[k - 1]) * v1.M(k)) /
                           std::max(1.0, std::abs(v2.M(k)));
        CHECK(rel < 1e-12);
    }
}

TEST_CASE("invariants are unchanged by one-particle unitaries") {
    Rng rng(784);
    State<double> psi = normalized(random_state<double>(rng));
    FermionInvariants<double> v1 = fermion_invariants(psi);
    FermionInvariants<double> v2 = fermion_invariants(apply_unitary(haar_unitary<double>(rng), psi));
    for (int k = 1; k <= 7; ++k) {
        CAPTURE(k);
        CHECK(std::abs(v1.M(k) - v2.M(k)) < 1e-12);
    }
}

TEST_CASE("conjugation fixes the first six invariants and flips the seventh") {
    Rng rng(785);
    State<double> psi = normalized(random_state<double>(rng));
    FermionInvariants<double> v1 = fermion_invariants(psi);
    FermionInvariants<double> v3 = fermion_invariants(conj(psi));
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(std::abs(v1.M(k) - v3.M(k)) < 1e-13);
    }
    CHECK(std::abs(v1.M(7) + v3.M(7)) < 1e-14);
    CHECK(std::abs(v1.M(7)) > 1e-8);  // generically nonzero, so the flip is observed
}

TEST_CASE("independence of the first six invariants at the witness point") {
    W6Point<double> p{1, 2, 3, 4, 1, 1};
    CHECK(w6_jacobian_sv_ratio(p) > 1e-6);
}

TEST_CASE("contraction constants calibrate against closed forms") {
    CHECK_NOTHROW(calibration_check());
}

TEST_CASE("real states have vanishing seventh invariant") {
    Rng rng(786);
    for (int n = 0; n < 10; ++n) {
        State<double> psi = normalized(random_real_state<double>(rng));
        CHECK(std::abs(fermion_invariants(psi).M(7)) < 1e-14);
        CHECK(quasi_real(psi));
    }
}

TEST_CASE("unitary images are recognized as equivalent") {
    Rng rng(787);
    State<double> psi = normalized(random_state<double>(rng));
    State<double> rot = apply_unitary(haar_unitary<double>(rng), psi);
    CHECK(lu_equivalent(psi, rot));
    CHECK_FALSE(lu_equivalent(psi, normalized(random_state<double>(rng))));
}

TEST_CASE("qubit equivalence covers local unitaries and site swaps") {
    Rng rng(788);
    QubitState<double> phi = normalized(random_qubit_state<double>(rng));
    Mat<C> ua = haar_unitary<double>(rng, 2), ub = haar_unitary<double>(rng, 2),
           uc = haar_unitary<double>(rng, 2);
    QubitState<double> moved = qubit_permute(apply_local_unitary(ua, ub, uc, phi), {2, 0, 1});
    CHECK(g_equivalent(phi, moved));
    CHECK_FALSE(g_equivalent(phi, normalized(random_qubit_state<double>(rng))));
}
