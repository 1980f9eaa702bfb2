#include <doctest.h>

#include <random>

#include "torusknot/knot_group.hpp"
#include "torusknot/moebius.hpp"
#include "torusknot/triangle_group.hpp"

using namespace tk;

namespace {

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

LiftedMoebius randomLift(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2, 2), ang(-kPi, kPi), h(0.2, 3);
    double y = h(rng), x = u(rng), th = ang(rng), s = std::sqrt(y);
    Moebius move{s, x / s, 0, 1 / s};
    Moebius rot{std::cos(th), std::sin(th), -std::sin(th), std::cos(th)};
    std::uniform_int_distribution<int> m(-3, 3);
    return {move * rot, m(rng)};
}

}  // namespace

TEST_CASE("act on the upper half-plane") {
    CHECK(close(act(Moebius::identity(), {0, 2}), {0, 2}));
    CHECK(close(act({0, -1, 1, 0}, {0, 1}), {0, 1}));
    CHECK(close(act({1, 1, 0, 1}, {0.3, 2}), {1.3, 2}));
    CHECK_THROWS_AS(act(Moebius::identity(), {1, 0}), std::domain_error);
    CHECK_THROWS_AS(act(Moebius::identity(), {1, -1}), std::domain_error);
    CHECK_THROWS_AS(Moebius::make(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("classification") {
    auto e = classify({0, 1, -1, 0});
    REQUIRE(std::holds_alternative<Elliptic>(e));
    CHECK(std::get<Elliptic>(e).angle == doctest::Approx(kPi));
    CHECK(close(std::get<Elliptic>(e).fixedPoint, {0, 1}));

    auto par = classify({1, 2.5, 0, 1});
    REQUIRE(std::holds_alternative<Parabolic>(par));
    CHECK(std::get<Parabolic>(par).atInfinity);

    CHECK(std::holds_alternative<Hyperbolic>(classify({2, 0, 0, 0.5})));
    CHECK_THROWS(classify(Moebius::identity()));

    // Rotation by 2 pi / p about the vertex a.
    for (auto [p, q] : {std::pair{3, 4}, {2, 5}, {5, 7}}) {
        TriangleGroupData G = buildGroup(p, q);
        auto c = classify(G.A0);
        REQUIRE(std::holds_alternative<Elliptic>(c));
        CHECK(std::get<Elliptic>(c).angle == doctest::Approx(kTwoPi / p));
        CHECK(close(std::get<Elliptic>(c).fixedPoint, G.a, 1e-12));
    }
}

TEST_CASE("lift composition") {
    const LiftedMoebius id = LiftedMoebius::identity(), c = LiftedMoebius::center();
    std::mt19937_64 rng(3);
    LiftedMoebius g = randomLift(rng);
    CHECK(sameLift(liftCompose(id, g), g, 1e-14));
    CHECK(sameLift(liftCompose(g, id), g, 1e-14));

    // c^2 rotates tangent vectors by 4 pi everywhere.
    LiftedMoebius c2 = liftCompose(c, c);
    for (cplx z : {cplx(0, 1), cplx(-3, 0.1), cplx(7, 20)}) {
        LogNonzero d = liftedDerivative(c2, z);
        CHECK(d.logMod == doctest::Approx(0).epsilon(1e-14));
        CHECK(d.arg == doctest::Approx(4 * kPi));
    }

    TriangleGroupData G = buildGroup(2, 3);
    CHECK(sameLift(liftPower(alphaLift(G), 2), c, 1e-12));
    CHECK(sameLift(liftPower(betaLift(G), 3), c, 1e-12));
}

TEST_CASE("lifted derivative") {
    for (cplx z : {cplx(0, 1), cplx(2, 0.5)}) {
        LogNonzero d0 = liftedDerivative(LiftedMoebius::identity(), z);
        CHECK(d0.logMod == 0);
        CHECK(d0.arg == 0);
        LogNonzero dc = liftedDerivative(LiftedMoebius::center(), z);
        CHECK(dc.logMod == doctest::Approx(0).epsilon(1e-15));
        CHECK(dc.arg == doctest::Approx(kTwoPi));
    }
    // The alpha lift for p = 2 rotates by pi at its fixed point i.
    TriangleGroupData G = buildGroup(2, 3);
    LogNonzero da = liftedDerivative(alphaLift(G), {0, 1});
    CHECK(da.logMod == doctest::Approx(0).epsilon(1e-14));
    CHECK(da.arg == doctest::Approx(kPi));
}

TEST_CASE("tangent action") {
    TangentPoint pt{{0, 1}, {0, 0}};
    TangentPoint same = actTangent(LiftedMoebius::identity(), pt);
    CHECK(same.z == pt.z);
    CHECK(same.w.arg == 0);
    TangentPoint turned = actTangent(LiftedMoebius::center(), pt);
    CHECK(close(turned.z, {0, 1}));
    CHECK(turned.w.arg == doctest::Approx(kTwoPi));

    // Composition of actions agrees with the action of the composite.
    std::mt19937_64 rng(11);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        LiftedMoebius g1 = randomLift(rng), g2 = randomLift(rng);
        TangentPoint p0{{std::uniform_real_distribution<double>(-1, 1)(rng), 1.5}, {0.3, -0.7}};
        TangentPoint lhs = actTangent(g2, actTangent(g1, p0));
        TangentPoint rhs = actTangent(liftCompose(g2, g1), p0);
        worst = std::max({worst, std::abs(lhs.z - rhs.z), std::abs(lhs.w.logMod - rhs.w.logMod),
                          std::abs(lhs.w.arg - rhs.w.arg)});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("lift inverse") {
    const LiftedMoebius id = LiftedMoebius::identity();
    CHECK(sameLift(liftInverse(id), id, 0));
    LogNonzero d = liftedDerivative(liftInverse(LiftedMoebius::center()), {0, 1});
    CHECK(d.arg == doctest::Approx(-kTwoPi));

    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        LiftedMoebius g = randomLift(rng);
        LiftedMoebius e1 = liftCompose(g, liftInverse(g)), e2 = liftCompose(liftInverse(g), g);
        CHECK(e1.branch == 0);
        CHECK(e2.branch == 0);
        CHECK(isPlusMinusIdentity(e1.mat, 1e-10));
        CHECK(e1.mat.a > 0);
    }
}

TEST_CASE("branch integers are stable on the negative real axis") {
    // Powers landing exactly on -I must keep the centre's branch.
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}}) {
        TriangleGroupData G = buildGroup(p, q);
        CHECK(liftPower(alphaLift(G), p).branch == LiftedMoebius::center().branch);
        CHECK(liftPower(betaLift(G), q).branch == LiftedMoebius::center().branch);
        CHECK(liftPower(alphaLift(G), 2 * p).branch == liftCompose(LiftedMoebius::center(), LiftedMoebius::center()).branch);
    }
}
