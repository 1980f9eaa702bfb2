#include "torusknot/record.hpp"

#include <sstream>

#include "torusknot/knot_group.hpp"

namespace tk {

Record toRecord(cplx z) {
    Record r;
    r["re"] = z.real();
    r["im"] = z.imag();
    return r;
}

cplx complexFromRecord(const Record& r) { return {r.at("re").get<double>(), r.at("im").get<double>()}; }

Record toRecord(const Moebius& g) {
    Record r;
    r["a"] = g.a;
    r["b"] = g.b;
    r["c"] = g.c;
    r["d"] = g.d;
    return r;
}

Moebius moebiusFromRecord(const Record& r) {
    return {r.at("a").get<double>(), r.at("b").get<double>(), r.at("c").get<double>(), r.at("d").get<double>()};
}

Record toRecord(const LiftedMoebius& g) {
    Record r = toRecord(g.mat);
    r["m"] = g.branch;
    return r;
}

LiftedMoebius liftFromRecord(const Record& r) { return {moebiusFromRecord(r), r.at("m").get<long long>()}; }

Record toRecord(const Rational& x) {
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Rational rationalFromRecord(const Record& r) {
    std::string s = r.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Record toRecord(const Report& rep) {
    Record r;
    r["pass"] = rep.allPass();
    r["checks"] = Record::array();
    for (const auto& c : rep.checks) {
        Record e;
        e["name"] = c.name;
        e["measured"] = c.measured;
        e["threshold"] = c.threshold;
        e["pass"] = c.pass;
        r["checks"].push_back(e);
    }
    return r;
}

Record toRecord(const ThetaValue& tv) {
    Record r;
    r["theta"] = toRecord(tv.value);
    r["thetaPrime"] = toRecord(tv.derivative);
    r["reducedPoint"] = toRecord(tv.reducedPoint);
    r["word"] = toString(tv.word);
    return r;
}

Record toRecord(const KnotSample& s) {
    Record r;
    r["z1"] = toRecord(s.z1);
    r["z2"] = toRecord(s.z2);
    r["onSphere"] = s.onSphere;
    r["f"] = toRecord(s.fValue);
    r["lambda"] = s.lambda;
    return r;
}

Record toRecord(const LensData& L) {
    Record r;
    r["r"] = L.r;
    r["lensParam"] = L.lensParam;
    r["phases"] = {toRecord(L.phase1), toRecord(L.phase2)};
    r["periodic"] = L.periodic;
    r["fixedPointFree"] = L.fixedPointFree;
    return r;
}

Record groupInfoRecord(const TriangleGroupData& G) {
    Record r;
    r["p"] = G.p;
    r["q"] = G.q;
    r["r"] = G.r;
    r["ko"] = toRecord(G.ko);
    r["lambda"] = G.lambda;
    r["p1"] = G.p1;
    r["q1"] = G.q1;
    r["vertices"]["a"] = toRecord(G.a);
    r["vertices"]["b"] = toRecord(G.b);
    r["vertices"]["bPrime"] = toRecord(G.bPrime());
    r["vertices"]["d"] = toRecord(cplx(0, 0));
    r["vertices"]["cusp"] = "infinity";
    r["matrices"]["A0"] = toRecord(G.A0);
    r["matrices"]["B0"] = toRecord(G.B0);
    r["matrices"]["gamma0"] = toRecord(G.gamma0());
    StandardCharacters ch = standardCharacters(G.p, G.q, G.p1, G.q1);
    r["characters"]["t_o"] = toRecord(ch.o.t);
    r["characters"]["t_a"] = toRecord(ch.a.t);
    r["characters"]["t_b"] = toRecord(ch.b.t);
    r["lens"] = toRecord(lensData(G.p, G.q));
    return r;
}

std::string printRecord(const Record& r) { return r.dump(2); }

Record parseRecord(const std::string& text) { return Record::parse(text); }

namespace {

void renderText(const Record& r, const std::string& indent, std::ostringstream& out) {
    for (auto it = r.begin(); it != r.end(); ++it) {
        const std::string key = r.is_object() ? it.key() : "-";
        const std::string sep = r.is_object() ? ": " : " ";
        const Record& v = it.value();
        if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im")) {
            cplx z = complexFromRecord(v);
            std::ostringstream num;
            num.precision(17);
            num << z.real() + 0.0 << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
            out << indent << key << sep << num.str() << "\n";
        } else if (v.is_structured()) {
            out << indent << key << (r.is_object() ? ":" : "") << "\n";
            renderText(v, indent + "  ", out);
        } else if (v.is_string()) {
            out << indent << key << sep << v.get<std::string>() << "\n";
        } else {
            out << indent << key << sep << v.dump() << "\n";
        }
    }
}

}  // namespace

std::string printText(const Record& r) {
    std::ostringstream out;
    renderText(r, "", out);
    return out.str();
}

}  // namespace tk
