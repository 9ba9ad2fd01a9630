#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "trivec/region.hpp"

using namespace trivec;
using P = W6Point<double>;

namespace {

const P kInterior{8 / 15.0, 4 / 15.0, 2 / 15.0, 11 / 15.0, 2 / 15.0, 4 / 15.0};

}  // namespace

TEST_CASE("interior witness satisfies every inequality strictly") {
    RegionVerdict<double> v = in_delta(kInterior);
    CHECK(v.in_region);
    CHECK_FALSE(v.on_boundary);
    for (const auto& s : v.margins) {
        CAPTURE(ineq_name(s.id));
        CHECK(s.value > 1e-6);
    }
}

TEST_CASE("each boundary witness violates exactly one inequality") {
    const double r73 = std::sqrt(73.0);
    const double r3 = std::sqrt(3.0);
    const P w_d{3 / 5.0, 0.0, 0.0, 0.0, 4 / 5.0, 0.0};
    const P w_bal{1 / 2.0, 1 / 2.0, 1 / 2.0, 1 / 2.0, 0.0, 0.0};
    const P w_floor{1 / r3, 0.0, 0.0, 1 / r3, 1 / r3, 0.0};
    const P w_budget{4 / r73, 2 / r73, 2 / r73, 6 / r73, 2 / r73, 3 / r73};

    CHECK(in_delta(w_d).violates_only(Ineq::DPositive));
    CHECK(in_delta(w_bal).violates_only(Ineq::CubicBalance));
    CHECK(in_delta(w_floor).violates_only(Ineq::CubicFloor));
    CHECK(in_delta(w_budget).violates_only(Ineq::PhaseBudget));
}

TEST_CASE("distinguished points sit on the boundary") {
    const double t = 1 / 3.0;
    const P wpoint{t, t, t, 2 * t, 0.0, std::sqrt(2.0) / 3.0};
    RegionVerdict<double> vw = in_delta(wpoint);
    CHECK(vw.in_region);
    CHECK(vw.on_boundary);
    CHECK(in_delta_full(wpoint).in_region);

    const double h = 1 / std::sqrt(2.0);
    const P ghz{0, 0, 0, h, h, 0};
    RegionVerdict<double> vg = in_delta(ghz);
    CHECK(vg.in_region);
    CHECK(vg.on_boundary);
    CHECK(std::abs(vg.margin(Ineq::CubicFloor)) < 1e-12);
}

TEST_CASE("simplified and full inequality systems agree off the boundary bands") {
    Rng rng(2026);
    int checked = 0, agree = 0;
    for (int it = 0; it < 3000; ++it) {
        double g[6], n2 = 0;
        for (auto& x : g) {
            x = rng.gaussian();
            n2 += x * x;
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& x : g) x *= inv;
        double abc[3] = {std::fabs(g[0]), std::fabs(g[1]), std::fabs(g[2])};
        std::sort(abc, abc + 3);
        const P p{abc[2], abc[1], abc[0], std::fabs(g[3]), std::fabs(g[4]), g[5]};
        const RegionVerdict<double> va = in_delta(p), vb = in_delta_full(p);
        bool band = false;
        for (const auto& s : va.margins) band = band || std::fabs(s.value) < 1e-8;
        for (const auto& s : vb.margins) band = band || std::fabs(s.value) < 1e-8;
        if (band) continue;
        ++checked;
        if (va.in_region == vb.in_region) ++agree;
    }
    CHECK(checked > 1000);
    CHECK(agree == checked);
}

TEST_CASE("boundary predicate rejects non-members") {
    CHECK_FALSE(on_boundary(kInterior));
    const double h = 1 / std::sqrt(2.0);
    CHECK(on_boundary(P{0, 0, 0, h, h, 0}));
    // a point outside the region has no boundary verdict
    const double r285 = std::sqrt(285.0);
    const P outside{12 / r285, 6 / r285, 4 / r285, 9 / r285, 2 / r285, 2 / r285};
    bool threw = false;
    try {
        on_boundary(outside);
    } catch (const domain_error& e) {
        threw = (e.name() == "NotInDelta");
    }
    CHECK(threw);
}

TEST_CASE("samples are members and obey the d floor") {
    Rng rng(99);
    double mind = 1.0;
    bool all_member = true, all_strong = true;
    for (int i = 0; i < 800; ++i) {
        const P p = sample_delta<double>(rng);
        mind = std::min(mind, p.d);
        all_member = all_member && in_delta_full(p).in_region;
        all_strong = all_strong && (2 * p.a * p.b * p.c + p.d * (2 * p.d * p.d - 1) >= -1e-12);
    }
    CHECK(all_member);
    CHECK(all_strong);
    CHECK(mind >= 2.0 / 3.0 - 1e-9);
}

TEST_CASE("renormalized midpoints of members stay inside") {
    Rng rng(100);
    for (int i = 0; i < 100; ++i) {
        const P p = sample_delta<double>(rng), q = sample_delta<double>(rng);
        const double tt = rng.uniform();
        double m[6] = {tt * p.a + (1 - tt) * q.a, tt * p.b + (1 - tt) * q.b,
                       tt * p.c + (1 - tt) * q.c, tt * p.d + (1 - tt) * q.d,
                       tt * p.x + (1 - tt) * q.x, tt * p.y + (1 - tt) * q.y};
        double n2 = 0;
        for (double u : m) n2 += u * u;
        const double inv = 1.0 / std::sqrt(n2);
        const P mid{m[0] * inv, m[1] * inv, m[2] * inv, m[3] * inv, m[4] * inv, m[5] * inv};
        CHECK(in_delta(mid, 1e-7).in_region);
    }
}

TEST_CASE("phase fibers are full circles or arcs with a consistent cutoff") {
    Rng rng(101);
    int arcs = 0, fulls = 0;
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        const P p = sample_delta<double>(rng);
        const auto f = fiber(p.a, p.b, p.c, p.d);
        const double r = f.r;
        auto lift = [&](double xx) {
            const double yy = std::sqrt(std::max(0.0, r * r - xx * xx));
            return P{p.a, p.b, p.c, p.d, xx, yy};
        };
        if (f.full) {
            ++fulls;
            if (r > 0)
                ok = ok && in_delta(lift(r), 1e-7).in_region && in_delta(lift(0.0), 1e-7).in_region;
        } else {
            ++arcs;
            ok = ok && f.x_max < r;
            ok = ok && in_delta(lift(0.0), 1e-7).in_region;
            ok = ok && in_delta(lift(f.x_max * (1 - 1e-9)), 1e-7).in_region;
            if (f.x_max < r - 1e-5) ok = ok && !in_delta(lift(0.5 * (f.x_max + r)), 1e-7).in_region;
        }
    }
    CHECK(ok);
    CHECK(arcs > 0);
    CHECK(fulls > 0);
}

TEST_CASE("orbit multiplicity cases") {
    const double t = 1 / 3.0;
    const P wpoint{t, t, t, 2 * t, 0.0, std::sqrt(2.0) / 3.0};
    const double h = 1 / std::sqrt(2.0);
    const P ghz{0, 0, 0, h, h, 0};
    const P axis{0, 0, 0, 1, 0, 0};
    const P real_pair{t, t, t, std::sqrt(2.0 / 3.0), 0, 0};

    OrbitCase<double> oc1 = orbit_case(kInterior);
    CHECK(oc1.tag == OrbitTag::Unique);

    OrbitCase<double> oc2 = orbit_case(wpoint);
    CHECK(oc2.tag == OrbitTag::Pair);
    CHECK(oc2.partner.y == Catch::Approx(-wpoint.y).margin(1e-14));
    CHECK(oc2.partner.x == Catch::Approx(wpoint.x).margin(1e-14));

    OrbitCase<double> oc3 = orbit_case(ghz);
    CHECK(oc3.tag == OrbitTag::Semicircle);
    CHECK(oc3.radius == Catch::Approx(h).margin(1e-14));

    CHECK(orbit_case(axis).tag == OrbitTag::UniqueAxis);
    CHECK(orbit_case(real_pair).tag == OrbitTag::UniqueReal);

    CHECK(std::string(orbit_tag_name(OrbitTag::Unique)) == "unique");
    CHECK(std::string(orbit_tag_name(OrbitTag::Semicircle)) == "semicircle");
}

TEST_CASE("the enclosing symmetric region contains the canonical one") {
    Rng rng(102);
    for (int i = 0; i < 150; ++i) {
        const P p = sample_delta<double>(rng);
        CHECK(in_theta(p).in_region);
        // coordinate permutations leave the symmetric region
        const P perm{p.c, p.a, p.b, p.d, p.x, p.y};
        const P perm2{p.b, p.a, p.c, p.d, p.x, p.y};
        CHECK(in_theta(perm).in_region);
        CHECK(in_theta(perm2).in_region);
    }
    RegionVerdict<double> vt = in_theta(P{0, 0, 0, 1, 0, 0});
    CHECK(vt.in_region);
    CHECK(vt.on_boundary);
}

TEST_CASE("numerical floor search confirms the d bound") {
    const auto rep = min_d_check(5000, 5);
    CHECK(rep.ok);
    CHECK(rep.min_d >= 2.0 / 3.0 - 1e-9);
}

TEST_CASE("seeded sampler is reproducible") {
    const P p1 = sample_delta_seeded<double>(424242);
    const P p2 = sample_delta_seeded<double>(424242);
    CHECK(p1.a == p2.a);
    CHECK(p1.y == p2.y);
    CHECK(in_delta(p1).in_region);
}
