#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torusknot/hypergeometric.hpp"
#include "torusknot/triangle_group.hpp"
#include "torusknot/uniformizer.hpp"

using namespace tk;

TEST_CASE("oracle values are frozen") {
    // j(2i) = 66^3 and j(i) = 1728.
    CHECK(std::abs(oracle::kleinJ({0, 2}) - 287496.0) < 1e-6 * 287496.0);
    CHECK(std::abs(oracle::kleinJ({0, 1}) - 1728.0) < 1e-9 * 1728.0);
    CHECK(std::abs(oracle::kleinJ({0.5, std::sqrt(3.0) / 2})) < 1e-8);
    // 1728 Delta = E4^3 - E6^2.
    cplx z{0.1, 1.2};
    cplx e4 = oracle::E4(z), e6 = oracle::E6(z);
    CHECK(std::abs(1728.0 * oracle::Delta(z) - (e4 * e4 * e4 - e6 * e6)) < 1e-12);
    CHECK(oracle::cubicRoot() == doctest::Approx(0.7548776662466927).epsilon(1e-15));
}

TEST_CASE("Gauss hypergeometric function") {
    CHECK(std::abs(hypergeometric2F1(0.3, 0.7, 1.2, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(hypergeometric2F1(1, 1, 2, 0.5) - (-std::log(0.5) / 0.5)) < 1e-14);
    CHECK(std::abs(hypergeometric2F1(1, 1, 2, -3.0) - std::log(4.0) / 3.0) < 1e-13);
    // (1 - t)^-a for b = c.
    cplx t{0.4, 0.7};
    CHECK(std::abs(hypergeometric2F1(0.25, 1.5, 1.5, t) - std::pow(1.0 - t, -0.25)) < 1e-13);
    // Far from the origin, beyond the disc of convergence.
    cplx far{-8, 3};
    CHECK(std::abs(hypergeometric2F1(0.25, 1.5, 1.5, far) - std::pow(1.0 - far, -0.25)) < 1e-12);
    // Real parameters commute with conjugation.
    cplx v = hypergeometric2F1(0.1, 0.35, 0.8, t), w = hypergeometric2F1(0.1, 0.35, 0.8, std::conj(t));
    CHECK(std::abs(v - std::conj(w)) < 1e-14);

    // The derivative against a central difference.
    ValueDeriv vd = hypergeometric2F1WithDerivative(0.1, 0.35, 0.8, t);
    const double h = 1e-5;
    cplx fd = (hypergeometric2F1(0.1, 0.35, 0.8, t + h) - hypergeometric2F1(0.1, 0.35, 0.8, t - h)) / (2 * h);
    CHECK(std::abs(vd.df - fd) < 1e-8);

    CHECK(digamma(1.0) == doctest::Approx(-0.57721566490153286).epsilon(1e-14));
    CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214235).epsilon(1e-14));
}

TEST_CASE("Schwarz map") {
    TriangleGroupData G = buildGroup(2, 3);
    Uniformizer U(G);
    CHECK(U.schwarzMap(0.0) == G.a);
    CHECK(U.schwarzMap(1.0) == G.b);
    CHECK(std::abs(U.schwarzMap(1e-14) - G.a) < 1e-6);
    CHECK(std::abs(U.schwarzMap(1.0 - 1e-14) - G.b) < 1e-4);
    CHECK(std::abs(U.schwarzMap(-165.375) - cplx(0, 2)) < 1e-6);
    CHECK(U.chartOverlapError() < 1e-10);
    CHECK(U.worstCoverageRatio() < 0.9);
}

TEST_CASE("theta for the modular group against the j-invariant") {
    TriangleGroupData G = buildGroup(2, 3);
    Uniformizer U(G);
    const cplx ref = 1.0 - oracle::kleinJ({0, 2}) / 1728.0;
    ThetaValue tv = U.theta({0, 2});
    CHECK(std::abs(tv.value - ref) < 1e-6 * std::abs(ref));
    CHECK(tv.value.real() == doctest::Approx(-165.375).epsilon(1e-9));

    std::mt19937_64 rng(6);
    for (int k = 0; k < 10; ++k) {
        cplx z = samplePointD1(G, rng, 2.5);
        cplx want = 1.0 - oracle::kleinJ(z) / 1728.0;
        CHECK(std::abs(U.theta(z).value - want) < 1e-8 * (1 + std::abs(want)));
    }
}

TEST_CASE("theta normalization and invariance") {
    std::mt19937_64 rng(12);
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
        TriangleGroupData G = buildGroup(p, q);
        Uniformizer U(G);
        CHECK(std::abs(U.theta(G.a).value) < 1e-9);
        CHECK(std::abs(U.theta(G.b).value - 1.0) < 1e-9);
        CHECK(std::abs(U.theta(G.a).derivative) < 1e-6);
        for (int k = 0; k < 50; ++k) {
            cplx z = samplePointD1(G, rng);
            cplx t0 = U.theta(z).value;
            CHECK(std::abs(U.theta(act(G.gamma0(), z)).value - t0) < 1e-8 * (1 + std::abs(t0)));
        }
        // theta'(gz) g'(z) = theta'(z).
        std::uniform_int_distribution<int> pick(0, 3);
        const Moebius gens[] = {G.A0, G.B0, G.A0.inverse(), G.B0.inverse()};
        for (int k = 0; k < 20; ++k) {
            cplx z = samplePointD1(G, rng);
            Moebius g = gens[pick(rng)] * gens[pick(rng)];
            cplx d0 = U.theta(z).derivative, d1 = U.theta(act(g, z)).derivative;
            CHECK(std::abs(d1 * derivative(g, z) - d0) < 1e-7 * std::abs(d0));
        }
    }

    TriangleGroupData G = buildGroup(2, 5);
    Uniformizer U(G);
    const cplx z{1, 2};
    const double h = 1e-5;
    cplx fd = (U.theta(z + h).value - U.theta(z - h).value) / (2 * h);
    CHECK(std::abs(fd - U.theta(z).derivative) < 1e-5 * std::abs(fd));

    // The reducing word carries the reduced point back to z.
    ThetaValue tv = U.theta({7.3, 0.2});
    CHECK(std::abs(act(G.matrixOf(tv.word), tv.reducedPoint) - cplx(7.3, 0.2)) < 1e-9);
}
