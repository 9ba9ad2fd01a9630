#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "trivec/rdm.hpp"
#include "trivec/sampling.hpp"

using namespace trivec;
using C = cxd;

TEST_CASE("one-body matrix is a unit-trace positive contraction") {
    Rng rng(404);
    State<double> psi = normalized(random_state<double>(rng));
    Mat<C> r = rdm1(psi);
    CHECK(std::abs(r.trace().re - 1.0) < 1e-14);
    CHECK(std::abs(r.trace().im) < 1e-15);
    // hermiticity
    Mat<C> h = r;
    h -= adjoint(r);
    CHECK(frobenius_norm(h) < 1e-15);
}

TEST_CASE("two-body matrix traces down to the one-body matrix") {
    Rng rng(405);
    State<double> psi = normalized(random_state<double>(rng));
    Mat<C> lhs = partial_trace2(rdm2(psi));
    lhs -= rdm1(psi);
    CHECK(frobenius_norm(lhs) < 1e-14);
}

TEST_CASE("one-body spectrum pairs to unity") {
    Rng rng(406);
    double worst = 0;
    for (int n = 0; n < 25; ++n)
        worst = std::max(worst, spectrum_pairing_check(normalized(random_state<double>(rng))));
    CHECK(worst < 1e-12);
}

TEST_CASE("five-coordinate family block structure") {
    Rng rng(407);
    W6Point<double> p = random_w6_point<double>(rng);
    W6Blocks<double> blocks = w6_blocks(p);

    // the 2x2 one-body blocks agree with the full one-body matrix (which
    // carries a 1/3 occupancy normalization)
    Mat<C> r = rdm1(p.state());
    r *= 3.0;
    const Mat<C>* bl[3] = {&blocks.ra, &blocks.rb, &blocks.rc};
    double worst = 0;
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                worst = std::max(worst, abs(r(2 * s + i, 2 * s + j) - (*bl[s])(i, j)));
    CHECK(worst < 1e-14);

    // off-diagonal one-body entries between different mode pairs vanish
    double off = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i / 2 != j / 2) off = std::max(off, abs(r(i, j)));
    CHECK(off < 1e-15);

    // a 4x4 two-body block sits inside the full two-body matrix
    Mat<C> r12 = rdm2(p.state());
    r12 *= 3.0;
    int idx[4] = {pair_index(1, 3), pair_index(1, 4), pair_index(2, 3), pair_index(2, 4)};
    double wb = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            wb = std::max(wb, abs(r12(idx[i], idx[j]) - blocks.pair_ab(i, j)));
    CHECK(wb < 1e-14);
}

TEST_CASE("reduced matrices are unitarily covariant") {
    Rng rng(408);
    State<double> psi = normalized(random_state<double>(rng));
    Mat<C> u = haar_unitary<double>(rng);
    Mat<C> lhs = rdm1(apply_unitary(u, psi));
    Mat<C> rhs = u * rdm1(psi) * adjoint(u);
    lhs -= rhs;
    CHECK(frobenius_norm(lhs) < 1e-14);
}
