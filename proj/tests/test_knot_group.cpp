#include <doctest.h>

#include <random>
#include <set>

#include "torusknot/knot_group.hpp"
#include "torusknot/suites.hpp"
#include "torusknot/triangle_group.hpp"

using namespace tk;

TEST_CASE("word parsing and printing") {
    GroupWord w = parseWord("a^2 b^-3 a");
    REQUIRE(w.letters.size() == 3);
    CHECK((w.letters[0] == Letter{Gen::A, 2}));
    CHECK((w.letters[1] == Letter{Gen::B, -3}));
    CHECK(w.length() == 6);
    CHECK(toString(w) == "a^2 b^-3 a");
    CHECK(parseWord("a a b^0 a^-2").empty());
    CHECK(parseWord("").empty());
    CHECK_THROWS(parseWord("c"));
    CHECK_THROWS(parseWord("a^"));
    CHECK(toString(inverse(w)) == "a^-1 b^3 a^-2");
    CHECK(toString(commutator(alphaPow(1), betaPow(1))) == "a b a^-1 b^-1");
    CHECK(power(w, 0).empty());
}

TEST_CASE("normal forms") {
    NormalForm n1 = normalForm(parseWord("a^2 b^-3"), 2, 3);
    CHECK(n1.isIdentity());

    NormalForm n2 = normalForm(parseWord("b a^3"), 2, 3);
    CHECK(n2.m == 1);
    CHECK((n2.syllables == std::vector<Syllable>{{Gen::B, 1}, {Gen::A, 1}}));

    // a^-1 = c^-1 a and b^-1 = c^-1 b^4, so [a, b] = c^-2 a b a b^4; the degree
    // of the commutator is 0 = -2 * 10 + (5 + 2 + 5 + 8).
    NormalForm n3 = normalForm(commutator(alphaPow(1), betaPow(1)), 2, 5);
    CHECK(n3.m == -2);
    CHECK((n3.syllables == std::vector<Syllable>{{Gen::A, 1}, {Gen::B, 1}, {Gen::A, 1}, {Gen::B, 4}}));

    CHECK((multiply(centralPower(2), centralPower(-5), 2, 3) == centralPower(-3)));

    std::mt19937_64 rng(2);
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        for (const auto& u : randomWords(rng, 200, 12)) {
            NormalForm nu = normalForm(u, p, q);
            CHECK(multiply(nu, inverse(nu, p, q), p, q).isIdentity());
            CHECK((multiply(NormalForm{}, nu, p, q) == nu));
            CHECK((normalForm(toWord(nu, p, q), p, q) == nu));
        }
    }
}

TEST_CASE("abelian degree and the subgroups G_r") {
    TriangleGroupData G23 = buildGroup(2, 3), G25 = buildGroup(2, 5);
    CHECK(G23.q1 == 1);
    CHECK(G23.p1 == -1);
    CHECK(abelianDegree(distinguishedX(G23), 2, 3) == 1);
    CHECK(abelianDegree(alphaPow(2), 2, 3) == 6);
    CHECK(abelianDegree(betaPow(3), 2, 3) == 6);

    std::mt19937_64 rng(4);
    auto words = randomWords(rng, 40, 6);
    for (std::size_t k = 0; k + 1 < words.size(); k += 2)
        CHECK(abelianDegree(commutator(words[k], words[k + 1]), 3, 5) == 0);

    for (const auto& w : words) CHECK(isInSubgroupGr(w, 2, 3, 1));
    CHECK_FALSE(isInSubgroupGr(alphaPow(1), 2, 5, 3));
    CHECK(isInSubgroupGr(alphaPow(3), 2, 5, 3));
    for (const auto& xi : commutatorGenerators(G25, CommutatorFamily::Xi)) CHECK(isInSubgroupGr(xi, 2, 5, 3));
    CHECK_THROWS(isInSubgroupGr(alphaPow(1), 2, 5, 5));

    auto reps1 = cosetRepresentatives(G23, 1);
    REQUIRE(reps1.size() == 1);
    CHECK(reps1[0].empty());

    for (auto [p, q, r] : {std::tuple{2, 5, 3}, {3, 4, 5}}) {
        TriangleGroupData G = buildGroup(p, q);
        CHECK(G.r == r);
        auto reps = cosetRepresentatives(G, r);
        REQUIRE(reps.size() == std::size_t(r));
        std::set<long long> residues;
        for (const auto& w : reps) residues.insert(((abelianDegree(w, p, q) % r) + r) % r);
        CHECK(residues.size() == std::size_t(r));
    }

    // The G_r generators have degree divisible by r, and one has degree exactly r.
    for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}, {4, 7}}) {
        TriangleGroupData G = buildGroup(p, q);
        bool exact = false;
        for (const auto& g : subgroupGrGenerators(G)) {
            CHECK(isInSubgroupGr(g, p, q, G.r));
            exact = exact || abelianDegree(g, p, q) == G.r;
        }
        CHECK(exact);
    }
}

TEST_CASE("characters") {
    StandardCharacters c23 = standardCharacters(2, 3);
    CHECK(c23.o.t.numerator() == 0);
    CHECK(c23.o.order() == 1);

    TriangleGroupData G = buildGroup(2, 5);
    StandardCharacters c25 = standardCharacters(2, 5, G.p1, G.q1);
    CHECK(c25.a.t == Rational(2, 3));
    CHECK(c25.a.order() == 3);
    cplx ax = c25.a(distinguishedX(G), 2, 5);
    CHECK(std::abs(ax - std::polar(1.0, kTwoPi * 2 / 3)) < 1e-15);

    // The other Bezout pair gives the same characters mod 1.
    for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}, {5, 7}}) {
        TriangleGroupData H = buildGroup(p, q);
        StandardCharacters s1 = standardCharacters(p, q, H.p1, H.q1);
        StandardCharacters s2 = standardCharacters(p, q, H.p1 + q, H.q1 - p);
        for (long long deg : {1, 2, 7, -3}) {
            CHECK(s1.o.rotation(deg) == s2.o.rotation(deg));
            CHECK(s1.a.rotation(deg) == s2.a.rotation(deg));
            CHECK(s1.b.rotation(deg) == s2.b.rotation(deg));
        }
        CHECK(s1.a.order() == H.r);
        CHECK(s1.b.order() == H.r);
    }

    CHECK(characterKernelEqualsG(2, 3, 4).allPass());
    CHECK(characterKernelEqualsG(2, 5, 6).allPass());
    CHECK(characterKernelEqualsG(3, 4, 5).allPass());
}

TEST_CASE("commutator generators and conjugation identities") {
    TriangleGroupData G23 = buildGroup(2, 3), G34 = buildGroup(3, 4);
    auto xi = commutatorGenerators(G23, CommutatorFamily::Xi);
    REQUIRE(xi.size() == 2);
    CHECK(sameElement(xi[0], commutator(alphaPow(1), betaPow(1)), 2, 3));
    CHECK(sameElement(xi[1], commutator(alphaPow(1), betaPow(2)), 2, 3));
    auto eta = commutatorGenerators(G34, CommutatorFamily::Eta);
    CHECK(eta.size() == 6);
    for (const auto& w : eta) CHECK(abelianDegree(w, 3, 4) == 0);

    CHECK(sameElement(alphaPow(1) * xiWord(1, 1) * alphaPow(-1), xiWord(2, 1) * inverse(xiWord(1, 1)), 3, 4));
    for (int p = 2; p <= 7; ++p)
        for (int q = p + 1; q <= 7; ++q)
            if (std::gcd(p, q) == 1) CHECK(conjugationIdentityCheck(buildGroup(p, q)).allPass());
}

TEST_CASE("faithful representation") {
    TriangleGroupData G = buildGroup(2, 3);
    CHECK(sameLift(represent(GroupWord{}, G), LiftedMoebius::identity(), 0));
    LiftedMoebius ap = represent(alphaPow(2), G);
    CHECK(isPlusMinusIdentity(ap.mat, 1e-12));
    CHECK(liftedDerivative(ap, {0.4, 1.3}).arg == doctest::Approx(kTwoPi));

    std::mt19937_64 rng(9);
    for (auto [p, q] : {std::pair{2, 3}, {3, 5}}) {
        TriangleGroupData H = buildGroup(p, q);
        for (const auto& w : randomWords(rng, 500, 10)) {
            LiftedMoebius direct = represent(w, H), viaNormal = represent(toWord(normalForm(w, p, q), p, q), H);
            CHECK(direct.branch == viaNormal.branch);
            double s = std::max({1.0, std::abs(direct.mat.a), std::abs(direct.mat.b), std::abs(direct.mat.c),
                                 std::abs(direct.mat.d)});
            CHECK(std::abs(direct.mat.a - viaNormal.mat.a) / s < 1e-10);
            CHECK(std::abs(direct.mat.c - viaNormal.mat.c) / s < 1e-10);
        }
    }
}
