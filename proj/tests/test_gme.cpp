#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "trivec/gme.hpp"
#include "trivec/region.hpp"

using namespace trivec;
using std::abs;

namespace {

// brute-force product-state overlap maximization over C^6 x C^6 x C^6 for a
// flattened 216-entry tensor, with no antisymmetry constraint — an
// independent check of the tensor-embedding normalization
double mu_product_tensor(const std::array<cxd, 216>& T, int starts, std::uint64_t seed) {
    auto contract = [&](int open, const Vec6<double>& u, const Vec6<double>& v) {
        Vec6<double> w{};
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c) {
                    const cxd& amp = T[(a * 6 + b) * 6 + c];
                    if (open == 0)
                        w[a] += conj(u[b]) * conj(v[c]) * amp;
                    else if (open == 1)
                        w[b] += conj(u[a]) * conj(v[c]) * amp;
                    else
                        w[c] += conj(u[a]) * conj(v[b]) * amp;
                }
        return w;
    };
    double best = 0.0;
    for (int s = 0; s < starts; ++s) {
        Rng rng(seed + 77777ULL * (std::uint64_t)(s + 1));
        Vec6<double> u = detail::random_unit<double, 6>(rng);
        Vec6<double> v = detail::random_unit<double, 6>(rng);
        Vec6<double> w = detail::random_unit<double, 6>(rng);
        double obj = 0.0;
        for (int it = 0; it < 500; ++it) {
            const double prev = obj;
            Vec6<double> nu = contract(0, v, w);
            double n = detail::norm_c(nu);
            if (n > 1e-280) {
                detail::scale_c(nu, cxd(1.0 / n, 0.0));
                u = nu;
                obj = n;
            }
            Vec6<double> nv = contract(1, u, w);
            n = detail::norm_c(nv);
            if (n > 1e-280) {
                detail::scale_c(nv, cxd(1.0 / n, 0.0));
                v = nv;
                obj = n;
            }
            Vec6<double> nw = contract(2, u, v);
            n = detail::norm_c(nw);
            if (n > 1e-280) {
                detail::scale_c(nw, cxd(1.0 / n, 0.0));
                w = nw;
                obj = n;
            }
            if (obj - prev < 1e-13 * (1.0 + obj)) break;
        }
        best = std::max(best, obj);
    }
    return best;
}

}  // namespace

TEST_CASE("a single coordinate triple is exactly decomposable") {
    State<double> psi = basis_state<double>(2, 4, 6);
    MuResult<double> r = mu_general(psi);
    CHECK(abs(r.mu - 1.0) < 1e-12);
    CHECK(r.converged);
    CHECK(r.monotone);
    CHECK(r.stationarity < 1e-8);
    // the reported maximizer actually reaches the overlap
    State<double> dec = wedge3(r.maximizer[0], r.maximizer[1], r.maximizer[2]);
    CHECK(abs(abs(inner(dec, psi)) - 1.0) < 1e-10);
}

TEST_CASE("balanced two-triple superposition overlaps at one over root two") {
    State<double> psi = basis_state<double>(1, 3, 5);
    psi += basis_state<double>(2, 4, 6);
    psi *= cxd(1.0 / std::sqrt(2.0), 0.0);
    CHECK(abs(mu_general(psi).mu - 1.0 / std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("the symmetric boundary point attains the global minimum") {
    const double t = 1.0 / 3.0;
    W6Point<double> p{t, t, t, 2 * t, 0.0, std::sqrt(2.0) / 3.0};
    CHECK(abs(mu_general(p.state()).mu - 2.0 / 3.0) < 1e-10);
    CHECK(abs(mu_w6(p) - 2.0 / 3.0) < 1e-10);
}

TEST_CASE("qubit and fermionic optimizers agree on embedded states") {
    Rng rng(404);
    double worst = 0.0;
    for (int k = 0; k < 40; ++k) {
        QubitState<double> q = normalized(random_qubit_state<double>(rng));
        QubitMuResult<double> a = mu_sov(q, 16);
        MuResult<double> b = mu_general(sov_embed(q), 16);
        worst = std::max(worst, abs(a.mu - b.mu));
        CHECK(a.monotone);
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("the overlap equals the last coordinate on region members") {
    Rng rng(505);
    double w1 = 0.0, w2 = 0.0;
    for (int k = 0; k < 25; ++k) {
        W6Point<double> p = sample_delta<double>(rng);
        w1 = std::max(w1, abs(mu_w6(p) - p.d));
        if (k < 8) w2 = std::max(w2, abs(mu_general(p.state(), 16).mu - p.d));
    }
    CHECK(w1 < 1e-9);
    CHECK(w2 < 1e-7);
}

TEST_CASE("the overlap is invariant under one-particle rotations") {
    Rng rng(606);
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
        State<double> psi = normalized(random_state<double>(rng));
        State<double> rot = apply_unitary(haar_unitary<double>(rng), psi);
        worst = std::max(worst, abs(mu_general(psi, 16).mu - mu_general(rot, 16).mu));
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("no state falls below the two-thirds floor") {
    Rng rng(707);
    double lo = 2.0;
    for (int k = 0; k < 500; ++k)
        lo = std::min(lo, mu_general(normalized(random_state<double>(rng)), 8).mu);
    CHECK(lo >= 2.0 / 3.0 - 1e-6);
}

TEST_CASE("the optimizer is stable under more restarts") {
    Rng rng(808);
    State<double> psi = normalized(random_state<double>(rng));
    CHECK(abs(mu_general(psi, 32).mu - mu_general(psi, 64).mu) < 1e-8);
}

TEST_CASE("the overlap is subadditive under superposition") {
    Rng rng(909);
    for (int k = 0; k < 10; ++k) {
        State<double> a = normalized(random_state<double>(rng));
        State<double> b = normalized(random_state<double>(rng));
        const double t = 0.25 + 0.5 * (k / 10.0);
        State<double> r;
        for (size_t i = 0; i < a.xi.size(); ++i) r.xi[i] = a.xi[i] * t + b.xi[i] * (1.0 - t);
        if (r.norm2() < 1e-12) continue;
        const double lhs = mu_general(r, 8).mu;  // scales with the norm
        const double rhs = t * mu_general(a, 8).mu + (1.0 - t) * mu_general(b, 8).mu;
        CHECK(lhs <= rhs + 1e-9);
    }
}

TEST_CASE("tensor embedding scales the product overlap by one over root six") {
    Rng rng(1010);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
        State<double> psi = normalized(random_state<double>(rng));
        const double mu = mu_general(psi, 16).mu;
        const double mt = mu_product_tensor(embed_to_tensor(psi), 24, 99ULL + (std::uint64_t)k);
        worst = std::max(worst, abs(mt - mu / std::sqrt(6.0)));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("the wrapper normalizes, reports, and rejects the zero state") {
    State<double> psi;
    psi.xi[(size_t)triple_index(1, 3, 5)] = cxd(2.0, 0.0);
    GmeResult<double> g = gme(psi);
    CHECK_FALSE(g.input_was_normalized);
    CHECK(abs(g.mu - 1.0) < 1e-10);
    CHECK(abs(g.gme) < 1e-10);

    QubitState<double> q;
    q.amp(0, 0, 0) = cxd(1.0 / std::sqrt(2.0), 0.0);
    q.amp(1, 1, 1) = cxd(1.0 / std::sqrt(2.0), 0.0);
    GmeResult<double> gq = gme(q);
    CHECK(abs(gq.mu - 1.0 / std::sqrt(2.0)) < 1e-10);
    CHECK(abs(gq.gme - 0.5) < 1e-10);

    bool threw = false;
    try {
        State<double> z;
        gme(z);
    } catch (const domain_error& e) {
        threw = (e.name() == "ZeroState");
    }
    CHECK(threw);
}
