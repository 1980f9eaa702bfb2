#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torusknot/forms.hpp"
#include "torusknot/suites.hpp"

using namespace tk;

namespace {

double spread(const std::vector<cplx>& v) {
    double s = 0;
    for (cplx x : v) s = std::max(s, std::abs(x / v.front() - 1.0));
    return s;
}

}  // namespace

TEST_CASE("modular forms for (2,3) are proportional to E4, E6 and Delta") {
    FormEvaluator E(buildGroup(2, 3));
    std::mt19937_64 rng(21);
    std::vector<cplx> rb, ra, rinf;
    for (int k = 0; k < 10; ++k) {
        cplx z = samplePointD1(E.group(), rng, 2.5);
        auto f = E.evalAll(z);
        ra.push_back(f[0] / oracle::E6(z));
        rb.push_back(f[1] / oracle::E4(z));
        rinf.push_back(f[2] / oracle::Delta(z));
    }
    CHECK(spread(ra) < 1e-6);
    CHECK(spread(rb) < 1e-6);
    CHECK(spread(rinf) < 1e-6);
}

TEST_CASE("zeros and values") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        FormEvaluator E(buildGroup(p, q));
        const auto& G = E.group();
        CHECK(std::abs(E.evalF(FormTag::A, G.a)) == 0);
        CHECK(std::abs(E.evalF(FormTag::B, G.b)) == 0);
        std::mt19937_64 rng(p * 10 + q);
        for (int k = 0; k < 100; ++k) CHECK(std::abs(E.evalF(FormTag::Inf, samplePointD1(G, rng))) > 0);
        CHECK(E.degree(FormTag::A) * Rational(p) == E.degree(FormTag::Inf));
        CHECK(E.degree(FormTag::B) * Rational(q) == E.degree(FormTag::Inf));
        CHECK(E.degree(FormTag::Inf) == G.ko);
    }

    FormEvaluator E(buildGroup(2, 5));
    CHECK(E.radicandResidual(FormTag::A, {1, 2}) < 1e-8);
    CHECK(E.radicandResidual(FormTag::B, {1, 2}) < 1e-8);
    CHECK(E.radicandResidual(FormTag::Inf, {1, 2}) < 1e-8);
    for (FormTag t : kAllTags) {
        TangentPoint pt{{0.2, 1.4}, {0, 0}};
        CHECK(std::abs(E.evalForm(t, pt) - E.evalF(t, pt.z)) < 1e-14 * std::abs(E.evalF(t, pt.z)));
    }
    CHECK((parseFormTag("inf") == FormTag::Inf));
    CHECK(toString(FormTag::B) == "b");
    CHECK_THROWS(parseFormTag("c"));
    CHECK_THROWS_AS(E.evalF(FormTag::A, {0, -1}), std::domain_error);
}

TEST_CASE("automorphy with characters") {
    FormEvaluator E(buildGroup(2, 5));
    const auto& G = E.group();
    std::mt19937_64 rng(31);
    TangentPoint pt{samplePointD1(G, rng), {0.2, 0.4}};
    CHECK(E.automorphyResidual(FormTag::A, GroupWord{}, pt) == 0);

    // Central subgroup c^r acts trivially.
    GroupWord cr = power(alphaPow(G.p), G.r);
    for (FormTag t : kAllTags) {
        cplx f0 = E.evalForm(t, pt), f1 = E.evalForm(t, actTangent(represent(cr, G), pt));
        CHECK(std::abs(f1 - f0) < 1e-10 * std::abs(f0));
    }

    // alpha picks up chi_o(alpha) on f_inf.
    GroupWord alpha = alphaPow(1);
    cplx f0 = E.evalForm(FormTag::Inf, pt), f1 = E.evalForm(FormTag::Inf, actTangent(represent(alpha, G), pt));
    CHECK(std::abs(f1 - E.character(FormTag::Inf)(alpha, 2, 5) * f0) < 1e-8 * std::abs(f0));

    // x picks up chi_a(x) = e^{4 pi i / 3} on f_a.
    GroupWord x = distinguishedX(G);
    CHECK(std::abs(E.character(FormTag::A)(x, 2, 5) - std::polar(1.0, 4 * kPi / 3)) < 1e-15);
    for (int k = 0; k < 20; ++k) {
        TangentPoint p{samplePointD1(G, rng), {0.1 * k, -0.3 * k}};
        CHECK(E.automorphyResidual(FormTag::A, x, p) < 1e-7);
    }

    FormEvaluator E23(buildGroup(2, 3));
    for (int k = 0; k < 20; ++k) {
        TangentPoint p{samplePointD1(E23.group(), rng), {0.0, 0.5}};
        CHECK(E23.automorphyResidual(FormTag::Inf, alpha, p) < 1e-7);
    }

    // Words of length up to 8 for all three forms.
    for (const auto& w : randomWords(rng, 10, 8))
        for (FormTag t : kAllTags) CHECK(E.automorphyResidual(t, w, pt) < 1e-7);
}

TEST_CASE("relation constants") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        FormEvaluator E(buildGroup(p, q));
        RelationConstants rc = fitRelationConstants(E, 0, 100);
        CHECK(rc.worstResidual < 1e-7);
        CHECK(std::abs(rc.ca) > 1e-12);
        CHECK(std::abs(rc.cb) > 1e-12);
    }
}

TEST_CASE("winding numbers and degree identities") {
    auto unitCircle = circleContour(0, 1, 64);
    CHECK(windingNumber([](cplx z) { return z * z * z; }, unitCircle, 256) == 3);
    CHECK(windingNumber([](cplx z) { return z - 2.0; }, unitCircle, 256) == 0);

    FormEvaluator E(buildGroup(2, 5));
    const auto& G = E.group();
    const auto& U = E.uniformizer();
    CHECK(windingNumber([&](cplx z) { return U.theta(z).value; }, circleContour(G.a, 0.05), 64) == G.p);
    CHECK(windingNumber([&](cplx z) { return U.theta(z).value - 1.0; }, circleContour(G.b, 0.05), 64) == G.q);
    CHECK(windingNumber([&](cplx z) { return E.evalF(FormTag::A, z); }, circleContour(G.a, 0.05), 64) == 1);

    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) CHECK(verifyDegreeIdentity(E, i, j).allPass());

    FormGrid grid = buildFormGrid(E, 30);
    Report rep = verifyDegreeIdentity(E, cplx(0.8, 0.3), cplx(-0.4, 1.1), &grid);
    CHECK(rep.allPass());
}
