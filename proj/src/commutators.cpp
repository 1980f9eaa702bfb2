#include <stdexcept>
#include <string>

#include "torusknot/knot_group.hpp"
#include "torusknot/triangle_group.hpp"

namespace tk {

GroupWord xiWord(long long i, long long j) { return commutator(alphaPow(i), betaPow(j)); }

GroupWord etaWord(long long k, long long j) {
    return alphaPow(k) * commutator(alphaPow(1), betaPow(j)) * alphaPow(-k);
}

std::vector<GroupWord> commutatorGenerators(const TriangleGroupData& G, CommutatorFamily family) {
    std::vector<GroupWord> out;
    if (family == CommutatorFamily::Xi) {
        for (int i = 1; i < G.p; ++i)
            for (int j = 1; j < G.q; ++j) out.push_back(xiWord(i, j));
    } else {
        for (int k = 0; k <= G.p - 2; ++k)
            for (int j = 1; j < G.q; ++j) out.push_back(etaWord(k, j));
    }
    return out;
}

std::vector<GroupWord> subgroupGrGenerators(const TriangleGroupData& G) {
    auto out = commutatorGenerators(G, CommutatorFamily::Xi);
    // alpha^(p-1) beta^-1 has degree q(p-1) - p = r; with the commutator
    // subgroup it generates G_r, and it stays short unlike x^r.
    GroupWord top = alphaPow(G.p - 1) * betaPow(-1);
    if (abelianDegree(top, G.p, G.q) != G.r) throw std::logic_error("subgroupGrGenerators: degree mismatch");
    out.push_back(top);
    return out;
}

Report conjugationIdentityCheck(const TriangleGroupData& G) {
    const int p = G.p, q = G.q;
    Report rep;
    auto tag = [](const char* what, long long i, long long j) {
        return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (int i = 1; i <= p - 2; ++i) {
        for (int j = 1; j <= q - 2; ++j) {
            GroupWord lhsA = alphaPow(1) * xiWord(i, j) * alphaPow(-1);
            GroupWord rhsA = xiWord(i + 1, j) * inverse(xiWord(1, j));
            rep.addBool(tag("alpha-conjugation", i, j), sameElement(lhsA, rhsA, p, q));
            GroupWord lhsB = betaPow(1) * xiWord(i, j) * betaPow(-1);
            GroupWord rhsB = inverse(xiWord(i, 1)) * xiWord(i, j + 1);
            rep.addBool(tag("beta-conjugation", i, j), sameElement(lhsB, rhsB, p, q));
        }
    }
    for (int i = 1; i <= p - 1; ++i) {
        for (int j = 1; j <= q - 1; ++j) {
            GroupWord prod;
            for (int k = i - 1; k >= 0; --k) prod.append(etaWord(k, j));
            rep.addBool(tag("eta-telescoping", i, j), sameElement(prod, xiWord(i, j), p, q));
        }
    }
    for (int j = 1; j <= q - 1; ++j) {
        GroupWord prod;
        for (int k = p - 1; k >= 0; --k) prod.append(etaWord(k, j));
        rep.addBool(tag("eta-cycle", p - 1, j), normalForm(prod, p, q).isIdentity());
    }
    return rep;
}

}  // namespace tk
