#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torusknot/knot_map.hpp"

using namespace tk;

TEST_CASE("radial projection") {
    KnotMapConfig C = unitConfig(2, 3);
    KnotSample s1 = radialProject(C, 1.0, 0.0);
    CHECK(std::abs(s1.z1 - 1.0) < 1e-15);
    CHECK(s1.lambda == doctest::Approx(1));

    KnotSample s2 = radialProject(C, 2.0, 0.0);
    CHECK(s2.lambda == doctest::Approx(std::pow(4.0, -0.25)).epsilon(1e-14));
    CHECK(std::abs(s2.z1 - 1.0) < 1e-14);
    CHECK(std::abs(s2.z2) == 0);
    CHECK_THROWS(radialProject(C, 0.0, 0.0));
    CHECK(std::abs(curveF(C, 0.0, 0.0)) == 0);

    std::mt19937_64 rng(2);
    std::normal_distribution<double> n(0, 2);
    std::uniform_real_distribution<double> lam(0.1, 10), tt(0, 1);
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        KnotMapConfig K = unitConfig(p, q);
        for (int k = 0; k < 50; ++k) {
            cplx z1{n(rng), n(rng)}, z2{n(rng), n(rng)};
            KnotSample s = radialProject(K, z1, z2);
            CHECK(std::abs(std::norm(s.z1) + std::norm(s.z2) - 1) < 1e-10);

            // Invariant along R+ orbits, idempotent on the sphere.
            auto [w1, w2] = weightedScale(K, lam(rng), z1, z2);
            KnotSample s3 = radialProject(K, w1, w2);
            CHECK(std::abs(s3.z1 - s.z1) + std::abs(s3.z2 - s.z2) < 1e-12);
            KnotSample s4 = radialProject(K, s.z1, s.z2);
            CHECK(std::abs(s4.z1 - s.z1) + std::abs(s4.z2 - s.z2) < 1e-13);

            // The curve equation scales by lambda^{pq/r}.
            double l = lam(rng);
            auto [v1, v2] = weightedScale(K, l, z1, z2);
            cplx f0 = curveF(K, z1, z2), f1 = curveF(K, v1, v2);
            CHECK(std::abs(f1 - std::pow(l, double(p * q) / K.r) * f0) < 1e-12 * std::abs(f1));

            // Commutes with the circle action.
            double t = tt(rng);
            auto [h1, h2] = seifertFlow(p, q, t, z1, z2);
            KnotSample sh = radialProject(K, h1, h2);
            auto [e1, e2] = seifertFlow(p, q, t, s.z1, s.z2);
            CHECK(std::abs(sh.z1 - e1) + std::abs(sh.z2 - e2) < 1e-12);
        }
    }
}

TEST_CASE("knot points") {
    const double a1 = oracle::cubicRoot();
    CHECK(knotRadius(2, 3) == doctest::Approx(a1).epsilon(1e-15));
    KnotSample k0 = knotPoint(2, 3, 0);
    CHECK(std::abs(k0.z1 - a1) < 1e-15);
    CHECK(std::abs(k0.z2 - cplx(0, std::pow(a1, 1.5))) < 1e-15);

    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {5, 7}})
        for (double t : {0.0, 0.1, 0.25, 0.5, 0.77}) {
            KnotSample s = knotPoint(p, q, t), s1 = knotPoint(p, q, t + 1);
            CHECK(std::abs(std::norm(s.z1) + std::norm(s.z2) - 1) < 1e-12);
            CHECK(std::abs(s.fValue) < 1e-12);
            CHECK(std::abs(s.z1 - s1.z1) + std::abs(s.z2 - s1.z2) < 1e-12);
            CHECK(s.onSphere);
        }
}

TEST_CASE("Seifert flow") {
    const cplx z1{0.3, 0.4}, z2{-0.2, 0.8};
    for (double t : {0.0, 1.0}) {
        auto [w1, w2] = seifertFlow(2, 5, t, z1, z2);
        CHECK(w1 == z1);
        CHECK(w2 == z2);
    }
    // h_{1/q} fixes the circle z1 = 0.
    auto [w1, w2] = seifertFlow(2, 5, 1.0 / 5, 0.0, cplx(0.6, 0.8));
    CHECK(std::abs(w1) == 0);
    CHECK(std::abs(w2 - cplx(0.6, 0.8)) < 1e-15);
}

TEST_CASE("lens data") {
    LensData l23 = lensData(2, 3);
    CHECK(l23.r == 1);
    CHECK(l23.lensParam == 0);
    CHECK(l23.periodic);

    LensData l25 = lensData(2, 5);
    CHECK(l25.r == 3);
    CHECK(l25.lensParam == 1);
    CHECK(l25.periodic);
    CHECK(l25.fixedPointFree);
    CHECK(l25.phase1 == Rational(2, 3));
    CHECK(l25.phase2 == Rational(2, 3));

    for (auto [p, q] : {std::pair{3, 4}, {3, 5}, {4, 7}}) {
        LensData L = lensData(p, q);
        CHECK(L.r == p * q - p - q);
        CHECK(L.periodic);
        CHECK(L.fixedPointFree);
        CHECK(L.lensParam >= 0);
        CHECK(L.lensParam < L.r);
    }
    CHECK_THROWS(lensData(4, 6));
}

TEST_CASE("psi and the sphere section") {
    FormEvaluator E(buildGroup(2, 5));
    RelationConstants rc = fitRelationConstants(E);
    KnotMapConfig C = fittedConfig(E, rc);
    CHECK((C.convention == CurveConvention::Fitted));
    CHECK_THROWS(psi(unitConfig(2, 5), {{0, 2}, {}}));

    const auto& G = E.group();
    std::mt19937_64 rng(40);
    for (int k = 0; k < 10; ++k) {
        TangentPoint pt{samplePointD1(G, rng), {0.3, 1.0}};
        auto [w1, w2] = psi(C, pt);
        cplx omegaInf = E.evalForm(FormTag::Inf, pt);
        CHECK(std::abs(curveF(C, w1, w2) - omegaInf) < 1e-8 * std::abs(omegaInf));

        TangentPoint moved = actTangent(represent(power(alphaPow(G.p), G.r), G), pt);
        auto [v1, v2] = psi(C, moved);
        CHECK(std::abs(v1 - w1) + std::abs(v2 - w2) < 1e-10 * (std::abs(w1) + std::abs(w2)));

        for (const auto& g : subgroupGrGenerators(G)) {
            auto [u1, u2] = psi(C, actTangent(represent(g, G), pt));
            CHECK(std::abs(u1 - w1) + std::abs(u2 - w2) < 1e-8 * (std::abs(w1) + std::abs(w2)));
        }
    }

    Report rep = matchSphereSection(C, 40, 3);
    CHECK(rep.allPass());
}
