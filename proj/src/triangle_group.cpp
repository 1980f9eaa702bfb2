#include "torusknot/triangle_group.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tk {

namespace {

// Drawing-only map that tolerates boundary points.
cplx mapPoint(const Moebius& g, cplx z) {
    cplx den = g.c * z + g.d;
    if (std::abs(den) < 1e-300) return {0.0, 1e300};
    return (g.a * z + g.b) / den;
}

// Moebius image of a boundary point; nullopt encodes infinity.
bool mapIdeal(const Moebius& g, cplx x, bool isInf, cplx& out) {
    if (isInf) {
        if (std::abs(g.c) < 1e-14) return false;
        out = {g.a / g.c, 0.0};
        return true;
    }
    cplx den = g.c * x + g.d;
    if (std::abs(den) < 1e-14) return false;
    out = (g.a * x + g.b) / den;
    if (x.imag() == 0) out.imag(0.0);
    return true;
}

Geodesic geodesicThrough(cplx z1, cplx z2, bool z2Inf) {
    Geodesic g;
    if (z2Inf || std::abs(z1.real() - z2.real()) < 1e-12 * (1 + std::abs(z1.real()))) {
        g.vertical = true;
        g.x0 = z1.real();
        return g;
    }
    g.vertical = false;
    g.x0 = (std::norm(z1) - std::norm(z2)) / (2.0 * (z1.real() - z2.real()));
    g.radius = std::abs(z1 - g.x0);
    return g;
}

Edge imageEdge(const Moebius& g, const Edge& e, const std::string& id) {
    Edge out;
    out.id = id;
    out.closed = e.closed;
    out.from = act(g, e.from);
    cplx end;
    bool endIsPoint = mapIdeal(g, e.to, e.toInfinity, end);
    out.toInfinity = !endIsPoint;
    out.to = endIsPoint ? end : cplx{};
    out.geo = geodesicThrough(out.from, out.to, out.toInfinity);
    return out;
}

double circleAngle(const Geodesic& g, cplx z) { return std::arg(z - g.x0); }

}  // namespace

Moebius TriangleGroupData::matrixOf(const GroupWord& w) const {
    Moebius m;
    Moebius Ainv = A0.inverse(), Binv = B0.inverse();
    for (const auto& l : w.letters) {
        const Moebius& step = l.gen == Gen::A ? (l.exp > 0 ? A0 : Ainv) : (l.exp > 0 ? B0 : Binv);
        for (long long k = 0; k < std::llabs(l.exp); ++k) m = m * step;
    }
    return m;
}

TriangleGroupData buildGroup(int p, int q) {
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("buildGroup: need coprime 2 <= p < q");
    TriangleGroupData G;
    G.p = p;
    G.q = q;
    G.r = static_cast<long long>(p) * q - p - q;
    G.ko = Rational(static_cast<long long>(p) * q, G.r);
    G.cosP = std::cos(kPi / p);
    if (std::abs(G.cosP) < 1e-12) G.cosP = 0.0;
    G.sinP = std::sin(kPi / p);
    G.cosQ = std::cos(kPi / q);
    G.sinQ = std::sin(kPi / q);
    G.lambda = 2.0 * (G.cosP + G.cosQ);
    for (long long q1 = 1; q1 < p; ++q1) {
        if ((q * q1) % p == 1 % p) {
            G.q1 = q1;
            G.p1 = (1 - q * q1) / p;
            break;
        }
    }
    G.a = {-G.cosP, G.sinP};
    G.b = {G.cosQ, G.sinQ};
    G.A0 = Moebius{2.0 * G.cosP, 1.0, -1.0, 0.0};
    G.B0 = Moebius{0.0, 1.0, -1.0, 2.0 * G.cosQ};
    return G;
}

std::string toString(DomainTag t) {
    switch (t) {
        case DomainTag::D: return "D";
        case DomainTag::D1: return "D1";
        case DomainTag::Dprime: return "Dprime";
    }
    return "?";
}

DomainTag parseDomainTag(const std::string& s) {
    if (s == "D") return DomainTag::D;
    if (s == "D1") return DomainTag::D1;
    if (s == "Dprime") return DomainTag::Dprime;
    throw std::invalid_argument("unknown domain '" + s + "'");
}

double Geodesic::signedSide(cplx z) const {
    if (vertical) return z.real() - x0;
    return std::abs(z - x0) - radius;
}

double Geodesic::distance(cplx z) const { return std::abs(signedSide(z)); }

namespace {

Geodesic vline(double x) { return {true, x, 0.0}; }
Geodesic circle(double c, double r) { return {false, c, r}; }

DomainSpec baseD(const TriangleGroupData& G) {
    DomainSpec dom;
    dom.tag = DomainTag::D;
    Geodesic ad = G.cosP == 0.0 ? vline(0.0) : circle(-0.5 / G.cosP, 0.5 / G.cosP);
    Geodesic bd = circle(0.5 / G.cosQ, 0.5 / G.cosQ);
    dom.constraints = {{vline(-G.cosP), 1}, {vline(G.cosQ), -1}, {ad, 1}, {bd, 1}};
    Edge eAD{"ad", ad, G.a, {0.0, 0.0}, false, true};
    Edge eAC{"ac", vline(-G.cosP), G.a, {}, true, false};
    Edge eBC{"bc", vline(G.cosQ), G.b, {}, true, true};
    Edge eBD{"bd", bd, G.b, {0.0, 0.0}, false, false};
    dom.edges = {eAD, eAC, eBC, eBD};
    dom.pairings = {{"ad", "ac", alphaPow(1)}, {"bc", "bd", betaPow(1)}};
    dom.includedVertices = {G.a, G.b};
    dom.pieces = {GroupWord{}};
    dom.outline = {{eAD, false}, {eBD, true}, {eBC, false}, {eAC, true}};
    return dom;
}

DomainSpec baseD1(const TriangleGroupData& G) {
    DomainSpec dom;
    dom.tag = DomainTag::D1;
    double left = -2.0 * G.cosP - G.cosQ;
    dom.constraints = {{vline(left), 1}, {vline(G.cosQ), -1}, {circle(0.0, 1.0), 1}, {circle(-2.0 * G.cosP, 1.0), 1}};
    Edge eLeft{"left", vline(left), G.bPrime(), {}, true, true};
    Edge eRight{"right", vline(G.cosQ), G.b, {}, true, false};
    Edge eAB{"arc_ab", circle(0.0, 1.0), G.a, G.b, false, true};
    Edge eAB2{"arc_ab'", circle(-2.0 * G.cosP, 1.0), G.bPrime(), G.a, false, false};
    dom.edges = {eLeft, eRight, eAB, eAB2};
    // gamma0 = (alpha beta)^-1 translates left onto right.
    dom.pairings = {{"left", "right", GroupWord{{Gen::B, -1}, {Gen::A, -1}}}, {"arc_ab", "arc_ab'", alphaPow(1)}};
    dom.includedVertices = {G.a, G.b};
    dom.pieces = {GroupWord{}};
    dom.outline = {{eAB2, false}, {eAB, false}, {eRight, false}, {eLeft, true}};
    return dom;
}

bool baseContains(const DomainSpec& dom, cplx z) {
    constexpr double tol = 1e-12;
    bool boundary = false;
    for (const auto& c : dom.constraints) {
        double s = c.side * c.geo.signedSide(z);
        if (s < -tol) return false;
        if (s <= tol) boundary = true;
    }
    if (!boundary) return true;
    for (const auto& v : dom.includedVertices)
        if (std::abs(z - v) <= tol) return true;
    bool onClosed = false;
    for (const auto& e : dom.edges) {
        if (!onEdge(e, z, tol)) continue;
        if (!e.closed) return false;
        onClosed = true;
    }
    return onClosed;
}

}  // namespace

DomainSpec domainSpec(const TriangleGroupData& G, DomainTag tag) {
    if (tag == DomainTag::D1) return baseD1(G);
    DomainSpec dom = baseD(G);
    if (tag == DomainTag::D) return dom;

    // D' is the union of alpha^i beta^j (D); its sides are images of ac and ad.
    const Edge& eAD = dom.edges[0];
    const Edge& eAC = dom.edges[1];
    DomainSpec out = dom;
    out.tag = DomainTag::Dprime;
    out.pieces.clear();
    out.edges.clear();
    out.pairings.clear();
    for (int i = 0; i < G.p; ++i)
        for (int j = 0; j < G.q; ++j) out.pieces.push_back(alphaPow(i) * betaPow(j));
    for (int i = 0; i < G.p; ++i) {
        for (int j = 1; j < G.q; ++j) {
            Moebius g = G.matrixOf(alphaPow(i) * betaPow(j));
            std::string sfx = "_" + std::to_string(i) + "_" + std::to_string(j);
            Edge e1 = imageEdge(g, eAC, "l1" + sfx);
            Edge e2 = imageEdge(g, eAD, "l2" + sfx);
            e1.closed = true;
            e2.closed = false;
            out.edges.push_back(e1);
            out.edges.push_back(e2);
        }
    }
    for (int i = 0; i < G.p; ++i)
        for (int j = 1; j < G.q; ++j)
            out.pairings.push_back({"l1_" + std::to_string(i) + "_" + std::to_string(j),
                                    "l2_" + std::to_string((i + 1) % G.p) + "_" + std::to_string(j), etaWord(i, j)});
    return out;
}

bool domainContains(const TriangleGroupData& G, const DomainSpec& dom, cplx z) {
    if (!(z.imag() > 0)) throw std::domain_error("domainContains: point not in the upper half-plane");
    if (dom.tag != DomainTag::Dprime) return baseContains(dom, z);
    DomainSpec base = baseD(G);
    for (const auto& w : dom.pieces)
        if (baseContains(base, act(G.matrixOf(w).inverse(), z))) return true;
    return false;
}

cplx samplePointD1(const TriangleGroupData& G, std::mt19937_64& rng, double yMax) {
    const double left = -2.0 * G.cosP - G.cosQ;
    std::uniform_real_distribution<double> ux(left, G.cosQ), uy(0.0, yMax);
    for (;;) {
        cplx z{ux(rng), uy(rng)};
        if (z.imag() > 0 && inClosureD1(G, z, 0.0)) return z;
    }
}

bool inClosureD1(const TriangleGroupData& G, cplx z, double tol) {
    double left = -2.0 * G.cosP - G.cosQ;
    return z.real() >= left - tol && z.real() <= G.cosQ + tol && std::abs(z) >= 1.0 - tol &&
           std::abs(z + 2.0 * G.cosP) >= 1.0 - tol;
}

bool onEdge(const Edge& e, cplx z, double tol) {
    if (e.geo.distance(z) > tol) return false;
    if (e.geo.vertical) {
        double y0 = e.from.imag();
        double y1 = e.toInfinity ? INFINITY : e.to.imag();
        double lo = std::min(y0, y1), hi = std::max(y0, y1);
        return z.imag() >= lo - tol && z.imag() <= hi + tol;
    }
    double t0 = circleAngle(e.geo, e.from);
    double t1 = e.toInfinity ? 0.0 : circleAngle(e.geo, e.to);
    if (!e.toInfinity && e.to.imag() == 0.0) t1 = e.to.real() > e.geo.x0 ? 0.0 : kPi;
    double t = circleAngle(e.geo, z);
    double lo = std::min(t0, t1), hi = std::max(t0, t1);
    double atol = tol / std::max(e.geo.radius, 1e-300);
    return t >= lo - atol && t <= hi + atol;
}

namespace {

// Parameter s in [0,1] along the edge; ideal endpoints truncated by cuspHeight.
cplx edgeAt(const Edge& e, double s, double cuspHeight) {
    if (e.geo.vertical) {
        double y0 = e.from.imag();
        double y1;
        if (e.toInfinity)
            y1 = std::max(cuspHeight, 2.0 * y0);
        else if (e.to.imag() == 0.0)
            y1 = y0 / std::max(cuspHeight, 2.0) * 1e-2;
        else
            y1 = e.to.imag();
        return {e.geo.x0, y0 * std::pow(y1 / y0, s)};
    }
    double t0 = circleAngle(e.geo, e.from);
    double t1 = circleAngle(e.geo, e.to);
    if (e.to.imag() == 0.0) t1 = e.to.real() > e.geo.x0 ? 0.0 : kPi;
    double t = t0 + s * (t1 - t0);
    return e.geo.x0 + std::polar(e.geo.radius, t);
}

}  // namespace

std::vector<cplx> sampleEdge(const Edge& e, int n, double cuspHeight) {
    std::vector<cplx> pts;
    for (int k = 1; k <= n; ++k) pts.push_back(edgeAt(e, double(k) / (n + 1), cuspHeight));
    return pts;
}

std::vector<cplx> edgePath(const Edge& e, int n, double cuspHeight) {
    std::vector<cplx> pts;
    for (int k = 0; k <= n; ++k) pts.push_back(edgeAt(e, double(k) / n, cuspHeight));
    return pts;
}

Reduction reduceToFundamental(const TriangleGroupData& G, cplx z0) {
    if (!(z0.imag() > 0)) throw std::domain_error("reduceToFundamental: point not in the upper half-plane");
    const double left = -2.0 * G.cosP - G.cosQ;
    const double twoCp = 2.0 * G.cosP;
    Moebius acc;  // acc(z0) = z
    Moebius shiftDown = G.A0 * G.B0;  // z -> z - lambda
    Moebius shiftUp = shiftDown.inverse();
    Moebius Ainv = G.A0.inverse();
    std::vector<Letter> applied;  // in order of application
    cplx z = z0;
    constexpr long long kMaxSteps = 1000000;
    long long steps = 0;
    auto translate = [&](long long n) {
        if (n == 0) return;
        z -= double(n) * G.lambda;
        const Moebius& m = n > 0 ? shiftDown : shiftUp;
        for (long long k = 0; k < std::llabs(n); ++k) {
            acc = m * acc;
            if (n > 0) {
                applied.push_back({Gen::B, 1});
                applied.push_back({Gen::A, 1});
            } else {
                applied.push_back({Gen::A, -1});
                applied.push_back({Gen::B, -1});
            }
        }
    };
    for (;;) {
        if (++steps > kMaxSteps) throw std::runtime_error("reduceToFundamental: step bound exceeded");
        translate(static_cast<long long>(std::floor((z.real() - left) / G.lambda)));
        if (std::norm(z) < 1.0) {
            z = -twoCp - 1.0 / z;
            acc = G.A0 * acc;
            applied.push_back({Gen::A, 1});
        } else if (std::norm(z + twoCp) < 1.0) {
            z = -1.0 / (z + twoCp);
            acc = Ainv * acc;
            applied.push_back({Gen::A, -1});
        } else {
            break;
        }
    }
    // The arc from b' to a is open: move it onto the arc from a to b.
    if (z.real() < -G.cosP && std::abs(std::abs(z + twoCp) - 1.0) < 1e-13) {
        z = -1.0 / (z + twoCp);
        acc = Ainv * acc;
        applied.push_back({Gen::A, -1});
    }
    Reduction red;
    red.zReduced = z;
    red.toReduced = acc;
    red.map = acc.inverse();
    for (const auto& l : applied) red.word.push(l.gen, -l.exp);
    return red;
}

Report edgePairingCheck(const TriangleGroupData& G, const DomainSpec& dom, int samplesPerEdge) {
    Report rep;
    for (const auto& pr : dom.pairings) {
        const Edge* src = nullptr;
        const Edge* dst = nullptr;
        for (const auto& e : dom.edges) {
            if (e.id == pr.from) src = &e;
            if (e.id == pr.to) dst = &e;
        }
        if (!src || !dst) {
            rep.addBool("pairing " + pr.from + "->" + pr.to + " edges exist", false);
            continue;
        }
        Moebius g = G.matrixOf(pr.word);
        double worst = 0;
        bool inside = true;
        for (cplx z : sampleEdge(*src, samplesPerEdge, 8.0)) {
            cplx w = act(g, z);
            worst = std::max(worst, dst->geo.distance(w));
            if (!onEdge(*dst, w, 1e-9 * std::max(1.0, std::abs(w)))) inside = false;
        }
        rep.add("pairing " + pr.from + "->" + pr.to + " geodesic distance", worst, 1e-9);
        rep.addBool("pairing " + pr.from + "->" + pr.to + " lands on edge", inside);
    }
    return rep;
}

std::vector<Tile> tile(const TriangleGroupData& G, const DomainSpec& dom, int radius, double cuspHeight) {
    if (radius < 0) throw std::invalid_argument("tile: radius must be nonnegative");
    std::vector<cplx> base;
    for (const auto& seg : dom.outline) {
        auto pts = edgePath(seg.edge, 32, cuspHeight);
        if (seg.reversed) std::reverse(pts.begin(), pts.end());
        pts.pop_back();
        base.insert(base.end(), pts.begin(), pts.end());
    }
    std::vector<std::pair<GroupWord, Moebius>> frontier{{GroupWord{}, Moebius{}}};
    std::vector<std::pair<GroupWord, Moebius>> seen = frontier;
    const Letter letters[] = {{Gen::A, 1}, {Gen::A, -1}, {Gen::B, 1}, {Gen::B, -1}};
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::pair<GroupWord, Moebius>> next;
        for (const auto& [w, m] : frontier) {
            for (const auto& l : letters) {
                if (!w.empty() && w.letters.back().gen == l.gen && (w.letters.back().exp > 0) != (l.exp > 0)) continue;
                GroupWord nw = w;
                nw.push(l.gen, l.exp);
                Moebius nm = m * G.matrixOf(GroupWord{l});
                bool dup = false;
                for (const auto& s : seen)
                    if (samePSL(s.second, nm, 1e-9)) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                seen.push_back({nw, nm});
                next.push_back({nw, nm});
            }
        }
        frontier = std::move(next);
    }
    std::vector<Tile> tiles;
    for (const auto& [w, m] : seen) {
        Tile t;
        t.word = w;
        for (const auto& piece : dom.pieces) {
            Moebius g = m * G.matrixOf(piece);
            std::vector<cplx> poly;
            for (cplx z : base) poly.push_back(mapPoint(g, z));
            t.polygons.push_back(std::move(poly));
        }
        tiles.push_back(std::move(t));
    }
    return tiles;
}

}  // namespace tk
