#include "torusknot/knot_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tk {

namespace {

cplx ipow(cplx z, int n) {
    cplx out = 1;
    for (int k = 0; k < n; ++k) out *= z;
    return out;
}

// e^{2 pi i x} with x reduced mod 1 first, so integer x gives exactly 1.
cplx unitPhase(double x) { return std::polar(1.0, kTwoPi * (x - std::floor(x))); }

void checkPair(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("p and q must be coprime integers >= 2");
}

}  // namespace

KnotMapConfig unitConfig(int p, int q) {
    checkPair(p, q);
    KnotMapConfig C;
    C.p = p;
    C.q = q;
    C.r = 1LL * p * q - p - q;
    return C;
}

KnotMapConfig fittedConfig(const FormEvaluator& E, const RelationConstants& rc) {
    KnotMapConfig C = unitConfig(E.group().p, E.group().q);
    C.ca = rc.ca;
    C.cb = rc.cb;
    C.convention = CurveConvention::Fitted;
    C.forms = &E;
    return C;
}

std::pair<cplx, cplx> psi(const KnotMapConfig& C, const TangentPoint& pt) {
    if (!C.forms) throw std::logic_error("psi: configuration has no form evaluator");
    FormLogs L = C.forms->evalFormLogs(pt);
    return {std::exp(L[1]), std::exp(L[0])};
}

cplx curveF(const KnotMapConfig& C, cplx z1, cplx z2) { return C.cb * ipow(z1, C.q) + C.ca * ipow(z2, C.p); }

std::pair<cplx, cplx> weightedScale(const KnotMapConfig& C, double lambda, cplx z1, cplx z2) {
    double r = double(C.r);
    return {std::pow(lambda, C.p / r) * z1, std::pow(lambda, C.q / r) * z2};
}

KnotSample radialProject(const KnotMapConfig& C, cplx z1, cplx z2) {
    const double A = std::norm(z1), B = std::norm(z2), n = A + B;
    if (n == 0) throw std::invalid_argument("radialProject: the origin has no projection");
    // Solve A e^{e1 s} + B e^{e2 s} = 1 for s = log(lambda).
    const double e1 = 2.0 * C.p / C.r, e2 = 2.0 * C.q / C.r;
    auto g = [&](double s) { return A * std::exp(e1 * s) + B * std::exp(e2 * s) - 1.0; };
    auto dg = [&](double s) { return A * e1 * std::exp(e1 * s) + B * e2 * std::exp(e2 * s); };
    double s1 = -std::log(n) / std::min(e1, e2), s2 = -std::log(n) / std::max(e1, e2);
    double lo = std::min(s1, s2), hi = std::max(s1, s2);
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        double v = g(s);
        if (v == 0) break;
        (v < 0 ? lo : hi) = s;
        double next = s - v / dg(s);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        bool done = std::abs(next - s) <= 1e-14 * (1.0 + std::abs(s));
        s = next;
        if (done || hi - lo <= 1e-15 * (1.0 + std::abs(s))) break;
    }
    KnotSample out;
    out.lambda = std::exp(s);
    std::tie(out.z1, out.z2) = weightedScale(C, out.lambda, z1, z2);
    out.onSphere = std::abs(std::norm(out.z1) + std::norm(out.z2) - 1.0) < 1e-10;
    out.fValue = curveF(C, out.z1, out.z2);
    return out;
}

double knotRadius(int p, int q) {
    checkPair(p, q);
    const double e = 2.0 * q / p;
    double lo = 0, hi = 1, a = 0.8;
    for (int it = 0; it < 100; ++it) {
        double v = a * a + std::pow(a, e) - 1.0;
        (v < 0 ? lo : hi) = a;
        double next = a - v / (2.0 * a + e * std::pow(a, e - 1.0));
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - a) < 1e-16) return next;
        a = next;
    }
    return a;
}

KnotSample knotPoint(int p, int q, double t) {
    const double a1 = knotRadius(p, q);
    const double a2 = std::pow(a1, double(q) / p);
    KnotSample out;
    out.z1 = a1 * unitPhase(p * t);
    out.z2 = a2 * unitPhase(q * t) * std::polar(1.0, kPi / p);
    out.onSphere = std::abs(std::norm(out.z1) + std::norm(out.z2) - 1.0) < 1e-10;
    out.fValue = ipow(out.z1, q) + ipow(out.z2, p);
    return out;
}

std::pair<cplx, cplx> seifertFlow(int p, int q, double t, cplx z1, cplx z2) {
    return {unitPhase(p * t) * z1, unitPhase(q * t) * z2};
}

LensData lensData(int p, int q) {
    checkPair(p, q);
    TriangleGroupData G = buildGroup(p, q);
    LensData L;
    L.r = G.r;
    long long s = (1LL * p * (G.q1 - G.p1 + p * G.p1)) % L.r;
    L.lensParam = (s + L.r) % L.r;
    L.phase1 = reduceMod1(Rational(p, L.r));
    L.phase2 = reduceMod1(Rational(q, L.r));
    L.periodic = reduceMod1(L.phase1 * L.r).numerator() == 0 && reduceMod1(L.phase2 * L.r).numerator() == 0;
    L.fixedPointFree = true;
    for (long long j = 1; j < L.r; ++j)
        if (reduceMod1(L.phase1 * j).numerator() == 0 || reduceMod1(L.phase2 * j).numerator() == 0) L.fixedPointFree = false;
    return L;
}

Report matchSphereSection(const KnotMapConfig& C, int samples, unsigned seed) {
    if (!C.forms) throw std::logic_error("matchSphereSection: configuration has no form evaluator");
    const auto& G = C.forms->group();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_int_distribution<int> branch(-2, 2);
    const auto gens = subgroupGrGenerators(G);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);

    struct Out {
        cplx zReduced;
        cplx z1, z2;
    };
    std::vector<Out> outs;
    double sphere = 0, minCurve = std::numeric_limits<double>::infinity(), curveRes = 0, congruent = 0;
    for (int k = 0; k < samples; ++k) {
        // Random element of the universal cover applied to (i, 1).
        cplx z = samplePointD1(G, rng, 2.5);
        double sy = std::sqrt(z.imag()), th = angle(rng);
        Moebius move{sy, z.real() / sy, 0, 1 / sy};
        Moebius rot{std::cos(th), std::sin(th), -std::sin(th), std::cos(th)};
        LiftedMoebius g{move * rot, branch(rng)};
        TangentPoint pt = actTangent(g, {cplx(0, 1), {}});

        auto [w1, w2] = psi(C, pt);
        cplx omegaInf = C.forms->evalForm(FormTag::Inf, pt);
        cplx fv = curveF(C, w1, w2);
        minCurve = std::min(minCurve, std::abs(fv));
        curveRes = std::max(curveRes, std::abs(fv - omegaInf) / std::abs(omegaInf));
        KnotSample s = radialProject(C, w1, w2);
        sphere = std::max(sphere, std::abs(std::norm(s.z1) + std::norm(s.z2) - 1.0));
        outs.push_back({reduceToFundamental(G, pt.z).zReduced, s.z1, s.z2});

        // A G-congruent partner must land on the same point.
        GroupWord h = gens[pick(rng)];
        if (sign(rng)) h = inverse(h);
        TangentPoint moved = actTangent(represent(h, G), pt);
        auto [v1, v2] = psi(C, moved);
        KnotSample s2 = radialProject(C, v1, v2);
        congruent = std::max(congruent, std::abs(s2.z1 - s.z1) + std::abs(s2.z2 - s.z2));
    }
    double separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = i + 1; j < outs.size(); ++j)
            if (std::abs(outs[i].zReduced - outs[j].zReduced) > 1e-3)
                separation = std::min(separation, std::abs(outs[i].z1 - outs[j].z1) + std::abs(outs[i].z2 - outs[j].z2));

    Report rep;
    rep.add("projected points on S^3", sphere, 1e-10);
    rep.addBool("psi image avoids the curve", minCurve > 0);
    rep.add("curve residual |F(psi) - omega_inf| / |omega_inf|", curveRes, 1e-8);
    rep.add("G-congruent pairs coincide", congruent, 1e-8);
    rep.addBool("reduced-distinct pairs separated by > 1e-6", separation > 1e-6);
    return rep;
}

}  // namespace tk
