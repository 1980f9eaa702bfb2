#include <doctest.h>

#include <limits>
#include <random>

#include "torusknot/record.hpp"
#include "torusknot/suites.hpp"

using namespace tk;

TEST_CASE("complex and matrix records round-trip exactly") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int k = 0; k < 200; ++k) {
        cplx z{u(rng) * 1e-7, u(rng)};
        CHECK(complexFromRecord(parseRecord(printRecord(toRecord(z)))) == z);
        Moebius g{u(rng), u(rng), u(rng), u(rng)};
        Moebius h = moebiusFromRecord(parseRecord(printRecord(toRecord(g))));
        CHECK(h.a == g.a);
        CHECK(h.b == g.b);
        CHECK(h.c == g.c);
        CHECK(h.d == g.d);
        LiftedMoebius l{g, static_cast<long long>(u(rng))};
        LiftedMoebius m = liftFromRecord(parseRecord(printRecord(toRecord(l))));
        CHECK(sameLift(l, m, 0));
    }
    Record lr = toRecord(LiftedMoebius::center());
    CHECK(lr.contains("m"));
    CHECK(lr["m"] == -1);
    CHECK(rationalFromRecord(parseRecord(printRecord(toRecord(Rational(-10, 4))))) == Rational(-5, 2));
    CHECK(toRecord(Rational(10, 3)) == "10/3");
}

TEST_CASE("emitted records round-trip") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        Record info = groupInfoRecord(buildGroup(p, q));
        CHECK(parseRecord(printRecord(info)) == info);
        CHECK(info["r"] == p * q - p - q);
    }
    Record lens = toRecord(lensData(2, 5));
    CHECK(lens["r"] == 3);
    CHECK(lens["lensParam"] == 1);

    Record k = toRecord(knotPoint(3, 5, 0.3));
    CHECK(parseRecord(printRecord(k)) == k);

    Report rep;
    rep.add("residual", 1.2345678901234567e-9, 1e-8);
    rep.addBool("flag", false);
    Record rr = toRecord(rep);
    CHECK(rr["pass"] == false);
    CHECK(parseRecord(printRecord(rr)) == rr);
    CHECK(rr["checks"][0]["measured"].get<double>() == 1.2345678901234567e-9);

    // Key order is insertion order.
    std::string text = printRecord(groupInfoRecord(buildGroup(2, 3)));
    CHECK(text.find("\"p\"") < text.find("\"q\""));
    CHECK(text.find("\"q\"") < text.find("\"vertices\""));
}

TEST_CASE("text rendering") {
    Record r;
    r["name"] = "x";
    r["z"] = toRecord(cplx(-0.0, -2));
    std::string t = printText(r);
    CHECK(t == "name: x\nz: 0 - 2i\n");
}

TEST_CASE("suite tolerance override") {
    Report rep;
    rep.add("small", 1e-5, 1e-8);
    rep.addBool("flag", false);
    Report loose = loosen(rep, 1e-3);
    CHECK(loose.checks[0].pass);
    CHECK(loose.checks[0].threshold == 1e-3);
    CHECK_FALSE(loose.checks[1].pass);
}
