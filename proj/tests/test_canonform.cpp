#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "trivec/canonform.hpp"
#include "trivec/sampling.hpp"

using namespace trivec;
using C = cxd;

namespace {

double point_diff(const W6Point<double>& p, const W6Point<double>& q) {
    double m = 0;
    for (double v : {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d, p.x - q.x, p.y - q.y})
        m = std::max(m, std::abs(v));
    return m;
}

W6Point<mp50> widen_renorm(const W6Point<double>& pd) {
    using std::sqrt;
    W6Point<mp50> p{mp50(pd.a), mp50(pd.b), mp50(pd.c), mp50(pd.d), mp50(pd.x), mp50(pd.y)};
    const mp50 n = sqrt(p.norm2());
    return {p.a / n, p.b / n, p.c / n, p.d / n, p.x / n, p.y / n};
}

}  // namespace

TEST_CASE("axis and semicircle representatives are recovered exactly") {
    State<double> e246 = basis_state<double>(2, 4, 6);
    CanonicalResult<double> r = canonicalize(e246);
    CHECK(point_diff(r.point, {0, 0, 0, 1, 0, 0}) < 1e-9);
    CHECK(r.orbit.tag == OrbitTag::UniqueAxis);

    State<double> ghz = basis_state<double>(1, 3, 5);
    ghz += basis_state<double>(2, 4, 6);
    ghz *= C(std::sqrt(0.5), 0);
    CanonicalResult<double> rg = canonicalize(ghz);
    CHECK(point_diff(rg.point, {0, 0, 0, std::sqrt(0.5), std::sqrt(0.5), 0}) < 1e-7);
    CHECK(rg.orbit.tag == OrbitTag::Semicircle);
}

TEST_CASE("the reconstruction polynomial collapses on the degenerate strata") {
    // at these invariant vectors every coefficient of the degree-8 polynomial
    // vanishes, and the solver must fall back to the overlap cross-check
    std::array<double, 7> m{1, 0, 0, 0, 0, 0, 0};
    DsqPoly<double> f = dsq_polynomial(m);
    CHECK(f.scale() < 1e-12);
    CHECK(std::abs(zsq_cubic(m, 1.0)[0]) < 1e-12);

    State<double> e246 = basis_state<double>(2, 4, 6);
    CHECK(canonicalize(e246).d_source == DSource::MuCrossCheck);
}

TEST_CASE("rotated region members are recovered componentwise") {
    double worst = 0, worst_match = 0;
    for (int i = 0; i < 60; ++i) {
        W6Point<double> p = sample_delta_seeded<double>(9000 + (std::uint64_t)i);
        Mat<C> u = haar_unitary_seeded<double>(17000 + (std::uint64_t)i);
        CanonicalResult<double> r = canonicalize(apply_unitary(u, p.state()));
        worst = std::max(worst, point_diff(r.point, p));
        worst_match = std::max(worst_match, r.residuals.at("invariant_match"));
    }
    CHECK(worst < 1e-6);
    CHECK(worst_match < 1e-8);
}

TEST_CASE("extended-precision recovery reaches twenty digits") {
    using std::abs;
    mp50 worst(0);
    for (int i = 0; i < 2; ++i) {
        W6Point<mp50> pw = widen_renorm(sample_delta_seeded<double>(9000 + (std::uint64_t)i));
        Mat<cx<mp50>> uw = haar_unitary_seeded<mp50>(17000 + (std::uint64_t)i);
        CanonicalResult<mp50> r = canonicalize(apply_unitary(uw, pw.state()));
        for (mp50 v : {r.point.a - pw.a, r.point.b - pw.b, r.point.c - pw.c, r.point.d - pw.d,
                       r.point.x - pw.x, r.point.y - pw.y})
            if (abs(v) > worst) worst = abs(v);
    }
    CHECK(worst < mp50(1e-20));
}

TEST_CASE("canonicalization is idempotent and orbit-faithful") {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        State<double> psi = random_state_seeded<double>(31000 + (std::uint64_t)i);
        CanonicalResult<double> r = canonicalize(psi);
        CanonicalResult<double> r2 = canonicalize(r.point.state());
        worst = std::max(worst, point_diff(r.point, r2.point));
        CHECK(lu_equivalent(psi, r.point.state(), 1e-8));
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("the derivative factors through the multiple-root criterion") {
    // verified in extended precision: the integer coefficient tables amplify
    // invariant round-off far beyond a binary64 comparison near cancellation
    using std::abs;
    using std::sqrt;
    double worst_rel = 0, worst_zero = 0;
    auto check_point = [&](const W6Point<double>& pd) {
        W6Point<mp50> p = widen_renorm(pd);
        std::array<mp50, 7> mv = w6_invariants(p).m;
        mv[0] = mp50(1);
        DsqPoly<mp50> f = dsq_polynomial(mv);
        auto dc = poly_derivative(f.coeffs());
        const mp50 d2 = p.d * p.d;
        const mp50 lhs = poly_eval(dc, d2);
        const mp50 s1 = p.s1(), s3 = p.s3();
        const mp50 core = d2 * (d2 - s1) * (d2 - s1) - mp50(4) * s3;
        const mp50 abcd = p.a * p.b * p.c * p.d;
        const mp50 rhs = mp50(256 * 243) * abcd * abcd * (d2 - p.a * p.a) * (d2 - p.b * p.b) *
                         (d2 - p.c * p.c) * core * core * core * w6_phi(p);
        if (f.scale() < mp50(1e-25)) {
            // collapsed stratum: the identity degenerates to 0 = 0 and the
            // factored side must collapse with it
            worst_zero = std::max(worst_zero, abs(rhs).convert_to<double>());
            return;
        }
        mp50 scale = f.scale();
        if (abs(rhs) > scale) scale = abs(rhs);
        worst_rel = std::max(worst_rel, ((abs(lhs - rhs)) / scale).convert_to<double>());
    };
    for (int i = 0; i < 30; ++i) check_point(sample_delta_seeded<double>(5000 + (std::uint64_t)i));
    for (int i = 0; i < 8; ++i) {
        W6Point<double> p = sample_delta_seeded<double>(6000 + (std::uint64_t)i);
        p.x = std::sqrt(p.x * p.x + p.y * p.y);
        p.y = 0;
        check_point(p);  // real z
        W6Point<double> q = sample_delta_seeded<double>(6100 + (std::uint64_t)i);
        q.x = 0;
        check_point(q);  // imaginary z (widen_renorm rescales)
    }
    check_point({1.0 / 3, 1.0 / 3, 1.0 / 3, 2.0 / 3, 0, std::sqrt(2.0) / 3});
    CHECK(worst_rel < 1e-30);
    CHECK(worst_zero < 1e-40);
}

TEST_CASE("the eliminant matches the numeric resultant") {
    Rng rng(777);
    double worst = 0;
    for (int trial = 0; trial < 8; ++trial) {
        std::array<double, 7> m{1, 0, 0, 0, 0, 0, 0};
        for (int k = 1; k < 6; ++k) m[k] = 2.0 * rng.uniform() - 1.0;
        const double t = 0.05 + 0.9 * rng.uniform();
        auto g = zsq_cubic(m, t);
        auto h = zsq_quartic(m, t);
        Mat<double> s(7, 7);
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) s(r, c) = 0;
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k <= 3; ++k) s(r, r + 3 - k) = g[(size_t)k];
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k <= 4; ++k) s(4 + r, r + 4 - k) = h[(size_t)k];
        const double res = determinant_real(s);
        const double target = -16.0 * 243.0 * std::pow(t, 12) * dsq_polynomial(m).eval(t);
        const double scale = std::max({std::abs(res), std::abs(target), 1.0});
        worst = std::max(worst, std::abs(res - target) / scale);
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("qubit canonical form of the standard states") {
    QubitState<double> w;
    w.amp(0, 0, 1) = w.amp(0, 1, 0) = w.amp(1, 0, 0) = C(1 / std::sqrt(3.0), 0);
    QubitCanonicalResult<double> r = qubit_canonicalize(w);
    const W6Point<double> target{1.0 / 3, 1.0 / 3, 1.0 / 3, 2.0 / 3, 0, std::sqrt(2.0) / 3};
    CHECK(point_diff(r.point, target) < 1e-6);
    CHECK((r.sigma[0] == 0 && r.sigma[1] == 1 && r.sigma[2] == 2));

    QubitState<double> ghz;
    ghz.amp(0, 0, 0) = ghz.amp(1, 1, 1) = C(std::sqrt(0.5), 0);
    QubitCanonicalResult<double> rg = qubit_canonicalize(ghz);
    CHECK(point_diff(rg.point, {0, 0, 0, std::sqrt(0.5), std::sqrt(0.5), 0}) < 1e-7);

    // entanglement measure agrees with the canonical coordinate
    GmeResult<double> ge = gme(ghz);
    CHECK(std::abs(ge.gme - (1 - rg.point.d * rg.point.d)) < 1e-7);
}

TEST_CASE("site purities are matched through the canonical permutation") {
    Rng rng(4242);
    double worst = 0;
    for (int i = 0; i < 15; ++i)
        worst = std::max(worst, qubit_canonicalize(random_qubit_state<double>(rng)).q_residual);
    CHECK(worst < 1e-8);
}

TEST_CASE("the witness transformation reaches the reported point") {
    Rng rng(31337);
    double worst_res = 0, worst_pt = 0, worst_unit = 0, worst_map = 0;
    for (int i = 0; i < 25; ++i) {
        QubitState<double> phi = random_qubit_state<double>(rng);
        QubitWitness<double> w = qubit_witness(phi);
        worst_res = std::max(worst_res, w.residual);
        // the witness reports the ordered canonical point, not the
        // site-permuted one
        worst_pt = std::max(worst_pt, point_diff(w.point, qubit_canonicalize(phi).fermionic.point));
        for (const auto& g : w.locals) {
            const C r00 = g[0][0] * conj(g[0][0]) + g[0][1] * conj(g[0][1]);
            const C r11 = g[1][0] * conj(g[1][0]) + g[1][1] * conj(g[1][1]);
            const C r01 = g[0][0] * conj(g[1][0]) + g[0][1] * conj(g[1][1]);
            worst_unit =
                std::max({worst_unit, std::abs(r00.re - 1), std::abs(r11.re - 1), abs(r01)});
        }
        QubitState<double> mapped = apply_witness(w, normalized(phi));
        QubitState<double> ideal;
        ideal.amp(1, 0, 0) = C(w.point.a, 0);
        ideal.amp(0, 1, 0) = C(w.point.b, 0);
        ideal.amp(0, 0, 1) = C(w.point.c, 0);
        ideal.amp(1, 1, 1) = C(w.point.d, 0);
        ideal.amp(0, 0, 0) = C(w.point.x, w.point.y);
        double r2 = 0;
        for (int n = 0; n < 8; ++n) r2 += norm2(mapped.t[(size_t)n] - ideal.t[(size_t)n]);
        worst_map = std::max(worst_map, std::sqrt(r2));
    }
    CHECK(worst_res < 5e-8);
    CHECK(worst_map < 5e-8);
    CHECK(worst_pt < 1e-6);
    CHECK(worst_unit < 1e-12);
}

TEST_CASE("already-canonical qubit states are witness fixed points") {
    double worst = 0;
    for (int i = 0; i < 8; ++i) {
        W6Point<double> p = sample_delta_seeded<double>(777000 + (std::uint64_t)i);
        QubitState<double> phi;
        phi.amp(1, 0, 0) = C(p.a, 0);
        phi.amp(0, 1, 0) = C(p.b, 0);
        phi.amp(0, 0, 1) = C(p.c, 0);
        phi.amp(1, 1, 1) = C(p.d, 0);
        phi.amp(0, 0, 0) = C(p.x, p.y);
        QubitWitness<double> w = qubit_witness(phi);
        worst = std::max({worst, point_diff(w.point, p), w.residual});
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("the canonical point does not depend on the unitary frame") {
    double worst = 0;
    for (int i = 0; i < 8; ++i) {
        State<double> psi = random_state_seeded<double>(91000 + (std::uint64_t)i);
        CanonicalResult<double> r1 = canonicalize(psi);
        Mat<C> u = haar_unitary_seeded<double>(92000 + (std::uint64_t)i);
        CanonicalResult<double> r2 = canonicalize(apply_unitary(u, psi));
        worst = std::max(worst, point_diff(r1.point, r2.point));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("conjugation mirrors the canonical phase") {
    State<double> psi = random_state_seeded<double>(55001);
    CanonicalResult<double> r1 = canonicalize(psi);
    CanonicalResult<double> r2 = canonicalize(conj(psi));
    CHECK(std::abs(r1.point.y + r2.point.y) < 1e-6);
    CHECK(std::abs(r1.point.x - r2.point.x) < 1e-6);
    CHECK(std::abs(r1.point.d - r2.point.d) < 1e-6);
}

TEST_CASE("real states canonicalize to a real phase or a conjugate pair") {
    for (int i = 0; i < 10; ++i) {
        Rng rng(66000 + (std::uint64_t)i);
        State<double> psi = normalized(random_real_state<double>(rng));
        CanonicalResult<double> r = canonicalize(psi);
        const bool real_phase = std::abs(r.point.y) < 1e-6;
        const bool pair = r.orbit.tag == OrbitTag::Pair;
        CHECK((real_phase || pair));
    }
}

TEST_CASE("the zero state cannot be canonicalized") {
    bool threw = false;
    try {
        canonicalize(State<double>{});
    } catch (const domain_error& e) {
        threw = (e.name() == "ZeroState");
    }
    CHECK(threw);
}
