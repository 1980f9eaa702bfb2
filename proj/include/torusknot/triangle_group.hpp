#pragma once

#include <boost/rational.hpp>
#include <random>
#include <string>
#include <vector>

#include "torusknot/moebius.hpp"
#include "torusknot/report.hpp"
#include "torusknot/word.hpp"

namespace tk {

using Rational = boost::rational<long long>;

struct TriangleGroupData {
    int p = 0, q = 0;
    long long r = 0;   // pq - p - q
    Rational ko;       // pq / r
    double lambda = 0; // cusp width
    long long p1 = 0, q1 = 0;  // p*p1 + q*q1 = 1, 0 < q1 < p
    double cosP = 0, sinP = 0, cosQ = 0, sinQ = 0;
    cplx a, b;          // elliptic vertices; d = 0 and the cusp at infinity are implicit
    Moebius A0, B0;

    cplx bPrime() const { return {-2.0 * cosP - cosQ, sinQ}; }  // image of b under A0
    Moebius gamma0() const { return (A0 * B0).inverse(); }      // z -> z + lambda
    Moebius matrixOf(const GroupWord& w) const;
};

TriangleGroupData buildGroup(int p, int q);

enum class DomainTag { D, D1, Dprime };
std::string toString(DomainTag t);
DomainTag parseDomainTag(const std::string& s);

// Vertical line Re z = x0, or circle |z - center| = radius with real center.
struct Geodesic {
    bool vertical = true;
    double x0 = 0;
    double radius = 0;

    double signedSide(cplx z) const;  // >0 right of the line / outside the circle
    double distance(cplx z) const;
};

struct Constraint {
    Geodesic geo;
    int side = 1;  // required sign of signedSide
};

struct Edge {
    std::string id;
    Geodesic geo;
    cplx from;
    cplx to;             // ignored when toInfinity
    bool toInfinity = false;
    bool closed = true;  // source edges of pairings are closed, images open
};

struct EdgePairing {
    std::string from;
    std::string to;
    GroupWord word;
};

struct OutlineSegment {
    Edge edge;
    bool reversed = false;
};

struct DomainSpec {
    DomainTag tag = DomainTag::D1;
    std::vector<Constraint> constraints;  // of the base region (D or D1)
    std::vector<Edge> edges;
    std::vector<EdgePairing> pairings;
    std::vector<cplx> includedVertices;
    std::vector<GroupWord> pieces;        // translates of the base region making up the domain
    std::vector<OutlineSegment> outline;  // base-region boundary in drawing order
};

DomainSpec domainSpec(const TriangleGroupData& G, DomainTag tag);
bool domainContains(const TriangleGroupData& G, const DomainSpec& dom, cplx z);
// Uniform rejection sample from D1 truncated at height yMax.
cplx samplePointD1(const TriangleGroupData& G, std::mt19937_64& rng, double yMax = 3.0);
// Closure membership of D1 with tolerance.
bool inClosureD1(const TriangleGroupData& G, cplx z, double tol);

// Points sampled along the interior of an edge (endpoints excluded).
std::vector<cplx> sampleEdge(const Edge& e, int n, double cuspHeight);
// Polyline from e.from to e.to inclusive; ideal endpoints are truncated.
std::vector<cplx> edgePath(const Edge& e, int n, double cuspHeight);
bool onEdge(const Edge& e, cplx z, double tol);

struct Reduction {
    cplx zReduced;
    GroupWord word;  // word(zReduced) = z
    Moebius map;     // matrix of word
    Moebius toReduced;  // inverse of map
};

Reduction reduceToFundamental(const TriangleGroupData& G, cplx z);

enum class CommutatorFamily { Xi, Eta };
GroupWord xiWord(long long i, long long j);
GroupWord etaWord(long long k, long long j);
std::vector<GroupWord> commutatorGenerators(const TriangleGroupData& G, CommutatorFamily family);
Report conjugationIdentityCheck(const TriangleGroupData& G);
Report edgePairingCheck(const TriangleGroupData& G, const DomainSpec& dom, int samplesPerEdge = 10);

struct Tile {
    GroupWord word;
    std::vector<std::vector<cplx>> polygons;  // one per piece of the domain
};

std::vector<Tile> tile(const TriangleGroupData& G, const DomainSpec& dom, int radius, double cuspHeight = 4.0);

}  // namespace tk
