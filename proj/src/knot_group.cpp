#include "torusknot/knot_group.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tk {

namespace {

long long floorDiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Incremental rewriting: syllables are kept reduced, the center collects in m.
struct Normalizer {
    int p, q;
    NormalForm nf;

    void push(Gen g, long long e) {
        long long order = g == Gen::A ? p : q;
        if (!nf.syllables.empty() && nf.syllables.back().gen == g) {
            e += nf.syllables.back().exp;
            nf.syllables.pop_back();
        }
        long long k = floorDiv(e, order);
        nf.m += k;
        e -= k * order;
        if (e != 0) nf.syllables.push_back({g, static_cast<int>(e)});
    }
};

}  // namespace

NormalForm normalForm(const GroupWord& w, int p, int q) {
    Normalizer n{p, q, {}};
    for (const auto& l : w.letters) n.push(l.gen, l.exp);
    return n.nf;
}

NormalForm multiply(const NormalForm& u, const NormalForm& v, int p, int q) {
    Normalizer n{p, q, u};
    n.nf.m += v.m;
    for (const auto& s : v.syllables) n.push(s.gen, s.exp);
    return n.nf;
}

NormalForm inverse(const NormalForm& u, int p, int q) {
    Normalizer n{p, q, {}};
    n.nf.m = -u.m;
    for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it) n.push(it->gen, -it->exp);
    return n.nf;
}

NormalForm centralPower(long long m) { return NormalForm{m, {}}; }

GroupWord toWord(const NormalForm& u, int p, int) {
    GroupWord w = alphaPow(u.m * p);
    for (const auto& s : u.syllables) w.push(s.gen, s.exp);
    return w;
}

std::string toString(const NormalForm& u) {
    std::string s = "c^" + std::to_string(u.m);
    if (u.syllables.empty()) return s;
    s += " \xC2\xB7";
    for (const auto& syl : u.syllables) {
        s += ' ';
        s += syl.gen == Gen::A ? 'a' : 'b';
        s += "^" + std::to_string(syl.exp);
    }
    return s;
}

bool sameElement(const GroupWord& u, const GroupWord& v, int p, int q) {
    return normalForm(u, p, q) == normalForm(v, p, q);
}

long long abelianDegree(const GroupWord& w, int p, int q) {
    long long deg = 0;
    for (const auto& l : w.letters) deg += (l.gen == Gen::A ? q : p) * l.exp;
    return deg;
}

GroupWord distinguishedX(const TriangleGroupData& G) { return alphaPow(G.q1) * betaPow(G.p1); }

bool isInSubgroupGr(const GroupWord& w, int p, int q, long long r) {
    if (r < 1 || std::gcd(r, static_cast<long long>(p) * q) != 1)
        throw std::invalid_argument("isInSubgroupGr: r must be positive and coprime to pq");
    long long deg = abelianDegree(w, p, q);
    return ((deg % r) + r) % r == 0;
}

std::vector<GroupWord> cosetRepresentatives(const TriangleGroupData& G, long long r) {
    if (r < 1 || std::gcd(r, static_cast<long long>(G.p) * G.q) != 1)
        throw std::invalid_argument("cosetRepresentatives: r must be positive and coprime to pq");
    GroupWord x = distinguishedX(G);
    std::vector<GroupWord> reps;
    std::vector<bool> hit(static_cast<std::size_t>(r), false);
    for (long long k = 0; k < r; ++k) {
        GroupWord w = power(x, k);
        long long residue = ((abelianDegree(w, G.p, G.q) % r) + r) % r;
        if (hit[static_cast<std::size_t>(residue)]) throw std::logic_error("cosetRepresentatives: repeated coset");
        hit[static_cast<std::size_t>(residue)] = true;
        reps.push_back(w);
    }
    return reps;
}

Rational reduceMod1(Rational x) {
    long long fl = floorDiv(x.numerator(), x.denominator());
    return x - Rational(fl);
}

Rational Character::rotation(long long degree) const { return reduceMod1(t * degree); }

cplx Character::value(long long degree) const {
    Rational rot = rotation(degree);
    return std::polar(1.0, kTwoPi * boost::rational_cast<double>(rot));
}

StandardCharacters standardCharacters(int p, int q, long long p1, long long q1) {
    if (p * p1 + q * q1 != 1) throw std::invalid_argument("standardCharacters: p*p1 + q*q1 must be 1");
    long long r = static_cast<long long>(p) * q - p - q;
    StandardCharacters s;
    s.o.t = reduceMod1(Rational(1, r));
    s.a.t = reduceMod1(Rational(1, p * r) + Rational(q1, p));
    s.b.t = reduceMod1(Rational(1, q * r) + Rational(p1, q));
    return s;
}

StandardCharacters standardCharacters(int p, int q) {
    TriangleGroupData G = buildGroup(p, q);
    return standardCharacters(p, q, G.p1, G.q1);
}

std::vector<GroupWord> allWords(int maxLen) {
    std::vector<GroupWord> out{GroupWord{}};
    std::vector<GroupWord> frontier{GroupWord{}};
    const Letter letters[] = {{Gen::A, 1}, {Gen::A, -1}, {Gen::B, 1}, {Gen::B, -1}};
    for (int len = 1; len <= maxLen; ++len) {
        std::vector<GroupWord> next;
        for (const auto& w : frontier)
            for (const auto& l : letters) {
                if (!w.empty() && w.letters.back().gen == l.gen && (w.letters.back().exp > 0) != (l.exp > 0)) continue;
                GroupWord nw = w;
                nw.push(l.gen, l.exp);
                next.push_back(nw);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

Report characterKernelEqualsG(int p, int q, int maxLen) {
    TriangleGroupData G = buildGroup(p, q);
    StandardCharacters ch = standardCharacters(p, q);
    std::vector<GroupWord> words = allWords(maxLen);
    for (const auto& w : cosetRepresentatives(G, G.r)) words.push_back(w);
    long long mismatches = 0;
    for (const auto& w : words) {
        long long deg = abelianDegree(w, p, q);
        bool inA = ch.a.rotation(deg).numerator() == 0;
        bool inB = ch.b.rotation(deg).numerator() == 0;
        bool inG = isInSubgroupGr(w, p, q, G.r);
        if (inA != inG || inB != inG) ++mismatches;
    }
    Report rep;
    rep.add("kernel(chi_a) = kernel(chi_b) = G_r mismatches over " + std::to_string(words.size()) + " words",
            double(mismatches), 0.0);
    return rep;
}

LiftedMoebius alphaLift(const TriangleGroupData& G) { return {G.A0, 0}; }
LiftedMoebius betaLift(const TriangleGroupData& G) { return {G.B0, 0}; }

LiftedMoebius represent(const GroupWord& w, const TriangleGroupData& G) {
    LiftedMoebius A = alphaLift(G), B = betaLift(G);
    LiftedMoebius Ai = liftInverse(A), Bi = liftInverse(B);
    LiftedMoebius out = LiftedMoebius::identity();
    for (const auto& l : w.letters) {
        const LiftedMoebius& step = l.gen == Gen::A ? (l.exp > 0 ? A : Ai) : (l.exp > 0 ? B : Bi);
        for (long long k = 0; k < std::llabs(l.exp); ++k) out = liftCompose(out, step);
    }
    return out;
}

}  // namespace tk
