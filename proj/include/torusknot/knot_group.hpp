#pragma once

#include <string>
#include <vector>

#include "torusknot/moebius.hpp"
#include "torusknot/report.hpp"
#include "torusknot/triangle_group.hpp"
#include "torusknot/word.hpp"

namespace tk {

struct Syllable {
    Gen gen;
    int exp;  // 1..p-1 for alpha, 1..q-1 for beta
    bool operator==(const Syllable&) const = default;
};

// c^m followed by alternating syllables, c = alpha^p = beta^q.
struct NormalForm {
    long long m = 0;
    std::vector<Syllable> syllables;

    bool isIdentity() const { return m == 0 && syllables.empty(); }
    bool operator==(const NormalForm&) const = default;
};

NormalForm normalForm(const GroupWord& w, int p, int q);
NormalForm multiply(const NormalForm& u, const NormalForm& v, int p, int q);
NormalForm inverse(const NormalForm& u, int p, int q);
NormalForm centralPower(long long m);
GroupWord toWord(const NormalForm& u, int p, int q);
std::string toString(const NormalForm& u);
bool sameElement(const GroupWord& u, const GroupWord& v, int p, int q);

long long abelianDegree(const GroupWord& w, int p, int q);
// x = alpha^q1 beta^p1, the degree-one element.
GroupWord distinguishedX(const TriangleGroupData& G);
bool isInSubgroupGr(const GroupWord& w, int p, int q, long long r);
// Commutator generators together with one element of degree r; they generate G_r.
std::vector<GroupWord> subgroupGrGenerators(const TriangleGroupData& G);
std::vector<GroupWord> cosetRepresentatives(const TriangleGroupData& G, long long r);

// Homomorphism to U(1) given by its rotation number at x.
struct Character {
    Rational t;

    Rational rotation(long long degree) const;  // t*degree reduced into [0,1)
    cplx value(long long degree) const;
    cplx operator()(const GroupWord& w, int p, int q) const { return value(abelianDegree(w, p, q)); }
    long long order() const { return t.denominator(); }
};

Rational reduceMod1(Rational x);

struct StandardCharacters {
    Character o, a, b;
};

StandardCharacters standardCharacters(int p, int q);
StandardCharacters standardCharacters(int p, int q, long long p1, long long q1);

// Every freely reduced word of length <= maxLen in alpha^+-1, beta^+-1.
std::vector<GroupWord> allWords(int maxLen);

Report characterKernelEqualsG(int p, int q, int maxLen = 6);

LiftedMoebius alphaLift(const TriangleGroupData& G);
LiftedMoebius betaLift(const TriangleGroupData& G);
LiftedMoebius represent(const GroupWord& w, const TriangleGroupData& G);

}  // namespace tk
