#include "torusknot/forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace tk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Exponents of (theta', theta, theta - 1) in each radicand.
struct RadicandExponents {
    long long prime, theta, minus1;
};

RadicandExponents exponentsOf(FormTag t, int p, int q) {
    switch (t) {
        case FormTag::A: return {q, -1, -(q - 1)};
        case FormTag::B: return {p, -(p - 1), -1};
        default: return {1LL * p * q, -1LL * (p - 1) * q, -1LL * p * (q - 1)};
    }
}

cplx wrapImag(cplx d) { return {d.real(), d.imag() - kTwoPi * std::round(d.imag() / kTwoPi)}; }

bool isZeroLog(cplx l) { return l.real() == kNegInf; }

struct Radicands {
    FormLogs rest;                 // principal part without the local-coordinate term
    std::array<long long, 3> k{};  // multiple of logLocal
    FormLogs total;
};

Radicands radicands(const ThetaLogs& L, int p, int q) {
    Radicands out;
    for (FormTag t : kAllTags) {
        auto e = exponentsOf(t, p, q);
        int i = static_cast<int>(t);
        out.rest[i] = double(e.prime) * L.restPrime + double(e.theta) * L.restTheta + double(e.minus1) * L.restMinus1;
        out.k[i] = L.hasLocal ? e.prime * L.kPrime + e.theta * L.kTheta + e.minus1 * L.kMinus1 : 0;
        out.total[i] = out.rest[i];
        if (out.k[i] != 0) {
            if (isZeroLog(L.logLocal))
                out.total[i] = {kNegInf, 0.0};
            else
                out.total[i] += double(out.k[i]) * L.logLocal;
        }
    }
    return out;
}

bool sameMatrix(const Moebius& g, const Moebius& h) {
    double s = std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d), 1.0});
    return std::abs(g.a - h.a) + std::abs(g.b - h.b) + std::abs(g.c - h.c) + std::abs(g.d - h.d) < 1e-9 * s;
}

}  // namespace

std::string toString(FormTag t) {
    switch (t) {
        case FormTag::A: return "a";
        case FormTag::B: return "b";
        default: return "inf";
    }
}

FormTag parseFormTag(const std::string& s) {
    if (s == "a") return FormTag::A;
    if (s == "b") return FormTag::B;
    if (s == "inf" || s == "infinity") return FormTag::Inf;
    throw std::invalid_argument("unknown form tag '" + s + "' (expected a, b or inf)");
}

FormEvaluator::FormEvaluator(const TriangleGroupData& G)
    : U_(G), chars_(standardCharacters(G.p, G.q, G.p1, G.q1)) {
    // The principal branch is fixed at i unless i is itself a zero (p = 2).
    base_ = std::abs(G.a - cplx(0, 1)) < 1e-6 ? cplx(0, 2) : cplx(0, 1);
    baseState_ = stateAt(base_, nullptr);
    for (int i = 0; i < 3; ++i) {
        if (isZeroLog(baseState_.principal[i])) throw std::logic_error("FormEvaluator: base point is a zero");
        baseState_.continued[i] = wrapImag(baseState_.principal[i]);
    }
}

Rational FormEvaluator::degree(FormTag t) const {
    const auto& G = group();
    switch (t) {
        case FormTag::A: return Rational(G.q, G.r);
        case FormTag::B: return Rational(G.p, G.r);
        default: return Rational(1LL * G.p * G.q, G.r);
    }
}

const Character& FormEvaluator::character(FormTag t) const {
    switch (t) {
        case FormTag::A: return chars_.a;
        case FormTag::B: return chars_.b;
        default: return chars_.o;
    }
}

FormEvaluator::PathState FormEvaluator::stateAt(cplx z, const ThetaHint* hint) const {
    PathState s;
    s.z = z;
    s.detail = U_.thetaDetailed(z, hint);
    s.principal = radicands(s.detail.logs, group().p, group().q).total;
    return s;
}

void FormEvaluator::advance(PathState& s, cplx target) const {
    const int p = group().p, q = group().q;
    const double order = double(std::max<long long>(group().r, 1));
    double hNext = std::numeric_limits<double>::infinity();
    for (int steps = 0; steps < (1 << 14);) {
        cplx rem = target - s.z;
        double dist = std::abs(rem);
        if (dist == 0) return;
        double rho = s.detail.vertexDistance;
        double h = std::min({hNext, dist, 0.25 * s.z.imag()});
        if (dist > rho) h = std::min(h, 0.3 * rho);
        if (h < 1e-13 * (1.0 + std::abs(s.z)))
            throw PathStuck("form continuation stalled near z = " + std::to_string(s.z.real()) + "+" +
                            std::to_string(s.z.imag()) + "i");
        // A step that would stop within rounding of the target lands on it.
        cplx z1 = h >= dist * (1.0 - 1e-9) ? target : s.z + rem * (h / dist);
        PathState next = stateAt(z1, &s.detail.hint);

        Radicands r0 = radicands(s.detail.logs, p, q), r1 = radicands(next.detail.logs, p, q);
        bool local = s.detail.hint.atVertexChart() && next.detail.hint.chart == s.detail.hint.chart &&
                     next.detail.hint.reflected == s.detail.hint.reflected &&
                     sameMatrix(next.detail.toReduced, s.detail.toReduced);
        if (!local && h > 0.5 * std::min(rho, next.detail.vertexDistance) / order) {
            hNext = 0.5 * h;
            continue;
        }
        FormLogs delta;
        double worst = 0;
        cplx dLocal = 0;
        if (local) {
            dLocal = wrapImag(next.detail.logs.logLocal - s.detail.logs.logLocal);
            if (!isZeroLog(next.detail.logs.logLocal)) worst = std::abs(dLocal.imag());
        }
        for (int i = 0; i < 3; ++i) {
            if (local) {
                cplx dRest = wrapImag(r1.rest[i] - r0.rest[i]);
                worst = std::max(worst, std::abs(dRest.imag()));
                delta[i] = dRest + double(r1.k[i]) * dLocal;
            } else if (!isZeroLog(next.principal[i])) {
                delta[i] = wrapImag(next.principal[i] - s.principal[i]);
                worst = std::max(worst, std::abs(delta[i].imag()));
            }
        }
        if (worst > kPi / 4) {
            hNext = 0.5 * h;
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            if (isZeroLog(next.principal[i]))
                next.continued[i] = {kNegInf, 0.0};
            else if (isZeroLog(s.continued[i]))
                throw PathStuck("form continuation cannot leave a zero");
            else
                next.continued[i] = s.continued[i] + delta[i];
        }
        s = std::move(next);
        ++steps;
        hNext = worst < kPi / 16 ? 2.0 * h : h;
    }
    throw PathStuck("form continuation exceeded the segment budget");
}

FormLogs FormEvaluator::continueTo(cplx z) const {
    if (!(z.imag() > 0)) throw std::domain_error("forms: point not in the upper half-plane");
    PathState end = stateAt(z, nullptr);
    if (end.detail.vertexDistance <= 1e-12 * (1.0 + std::abs(z))) {
        // A vertex: continue to a point just above it, then take one last step.
        // Forms vanishing there get -inf; the others are analytic across it.
        const double off = std::min(1e-3, 0.25 * z.imag());
        FormLogs near = continueTo(z + cplx(0.0, off));
        PathState from = stateAt(z + cplx(0.0, off), nullptr);
        for (int i = 0; i < 3; ++i) {
            if (isZeroLog(end.principal[i]))
                end.continued[i] = {kNegInf, 0.0};
            else
                end.continued[i] = near[i] + wrapImag(end.principal[i] - from.principal[i]);
        }
        return end.continued;
    }
    try {
        PathState s = baseState_;
        advance(s, z);
        return s.continued;
    } catch (const PathStuck&) {
        // Detour around whatever zero blocked the straight segment.
    }
    cplx dir = (z - base_) / std::abs(z - base_);
    const double offsets[] = {1e-4, -1e-4, 1e-2, -1e-2};
    for (double off : offsets) {
        cplx mid = 0.5 * (z + base_) + cplx(0, 1) * dir * (off * std::abs(z - base_));
        if (mid.imag() <= 0) continue;
        try {
            PathState s = baseState_;
            advance(s, mid);
            advance(s, z);
            return s.continued;
        } catch (const PathStuck&) {
        }
    }
    throw PathStuck("form continuation failed to reach the target");
}

FormLogs FormEvaluator::evalLogs(cplx z) const {
    FormLogs L = continueTo(z);
    const double r = double(group().r);
    for (auto& l : L) l = isZeroLog(l) ? cplx(kNegInf, 0.0) : l / r;
    return L;
}

std::array<cplx, 3> FormEvaluator::evalAll(cplx z) const {
    FormLogs L = evalLogs(z);
    std::array<cplx, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = isZeroLog(L[i]) ? cplx(0.0) : std::exp(L[i]);
    return out;
}

cplx FormEvaluator::evalF(FormTag t, cplx z) const { return evalAll(z)[static_cast<int>(t)]; }

FormLogs FormEvaluator::evalFormLogs(const TangentPoint& pt) const {
    FormLogs L = evalLogs(pt.z);
    cplx w{pt.w.logMod, pt.w.arg};
    for (FormTag t : kAllTags) {
        int i = static_cast<int>(t);
        Rational k = degree(t);
        if (!isZeroLog(L[i])) L[i] += boost::rational_cast<double>(k) * w;
    }
    return L;
}

cplx FormEvaluator::evalForm(FormTag t, const TangentPoint& pt) const {
    cplx l = evalFormLogs(pt)[static_cast<int>(t)];
    return isZeroLog(l) ? cplx(0.0) : std::exp(l);
}

double FormEvaluator::automorphyResidual(FormTag t, const GroupWord& g, const TangentPoint& pt) const {
    if (g.length() == 0) return 0.0;
    const auto& G = group();
    TangentPoint moved = actTangent(represent(g, G), pt);
    int i = static_cast<int>(t);
    cplx l0 = evalFormLogs(pt)[i], l1 = evalFormLogs(moved)[i];
    cplx chi = character(t)(g, G.p, G.q);
    if (isZeroLog(l0)) {
        cplx f1 = isZeroLog(l1) ? cplx(0.0) : std::exp(l1);
        return std::abs(f1) / 1e-300;
    }
    if (isZeroLog(l1)) return 1.0;
    return std::abs(std::exp(l1 - l0) - chi);
}

double FormEvaluator::radicandResidual(FormTag t, cplx z) const {
    const auto& G = group();
    cplx l = evalLogs(z)[static_cast<int>(t)];
    ThetaValue tv = U_.theta(z);
    auto e = exponentsOf(t, G.p, G.q);
    cplx logRad = double(e.prime) * std::log(tv.derivative) + double(e.theta) * std::log(tv.value) +
                  double(e.minus1) * std::log(tv.value - 1.0);
    return std::abs(std::exp(double(G.r) * l - logRad) - 1.0);
}

RelationConstants fitRelationConstants(const FormEvaluator& E, unsigned seed, int validationPoints) {
    const auto& G = E.group();
    // Row of the system c_a * f_a^p / f_inf + c_b * f_b^q / f_inf = 1.
    auto row = [&](cplx z) {
        FormLogs L = E.evalLogs(z);
        return std::array<cplx, 2>{std::exp(double(G.p) * L[0] - L[2]), std::exp(double(G.q) * L[1] - L[2])};
    };
    std::mt19937_64 rng(seed);
    std::array<cplx, 2> r1 = row({0.15, 1.2}), r2 = row({-0.35, 1.7});
    for (int attempt = 0;; ++attempt) {
        cplx det = r1[0] * r2[1] - r1[1] * r2[0];
        double scale = std::abs(r1[0] * r2[1]) + std::abs(r1[1] * r2[0]);
        if (std::abs(det) > 1e-6 * scale) break;
        if (attempt > 10) throw std::runtime_error("fitRelationConstants: sample points are degenerate");
        r2 = row(samplePointD1(G, rng));
    }
    RelationConstants rc;
    cplx det = r1[0] * r2[1] - r1[1] * r2[0];
    rc.ca = (r2[1] - r1[1]) / det;
    rc.cb = (r1[0] - r2[0]) / det;
    for (int k = 0; k < validationPoints; ++k) {
        auto rw = row(samplePointD1(G, rng));
        rc.worstResidual = std::max(rc.worstResidual, std::abs(rc.ca * rw[0] + rc.cb * rw[1] - 1.0));
    }
    return rc;
}

std::vector<cplx> circleContour(cplx center, double radius, int vertices) {
    std::vector<cplx> out;
    for (int k = 0; k < vertices; ++k) out.push_back(center + std::polar(radius, kTwoPi * k / vertices));
    return out;
}

int windingNumber(const std::function<cplx(cplx)>& f, const std::vector<cplx>& contour, int samples) {
    if (contour.size() < 3) throw std::invalid_argument("windingNumber: contour needs at least three vertices");
    double perimeter = 0;
    for (std::size_t k = 0; k < contour.size(); ++k)
        perimeter += std::abs(contour[(k + 1) % contour.size()] - contour[k]);
    auto checked = [&](cplx z) {
        cplx v = f(z);
        if (!(std::abs(v) > 1e-10)) throw std::runtime_error("windingNumber: function vanishes on the contour");
        return v;
    };
    double total = 0;
    // Argument change along [z0, z1], refined until each piece turns less than pi/3.
    std::function<double(cplx, cplx, cplx, cplx, int)> piece = [&](cplx z0, cplx f0, cplx z1, cplx f1, int depth) {
        double d = std::arg(f1 / f0);
        if (std::abs(d) < kPi / 3) return d;
        if (depth > 30) throw std::runtime_error("windingNumber: argument changes too fast; increase samples");
        cplx zm = 0.5 * (z0 + z1);
        cplx fm = checked(zm);
        return piece(z0, f0, zm, fm, depth + 1) + piece(zm, fm, z1, f1, depth + 1);
    };
    cplx zPrev = contour[0], fPrev = checked(zPrev);
    const cplx fStart = fPrev;
    for (std::size_t k = 0; k < contour.size(); ++k) {
        cplx a = contour[k], b = contour[(k + 1) % contour.size()];
        int n = std::max(1, int(std::ceil(samples * std::abs(b - a) / perimeter)));
        for (int j = 1; j <= n; ++j) {
            cplx z = a + (b - a) * (double(j) / n);
            cplx fz = (k + 1 == contour.size() && j == n) ? fStart : checked(z);
            total += piece(zPrev, fPrev, z, fz, 0);
            zPrev = z;
            fPrev = fz;
        }
    }
    double w = total / kTwoPi;
    if (std::abs(w - std::round(w)) > 0.01) throw std::runtime_error("windingNumber: rounding residual too large");
    return int(std::lround(w));
}

double cuspOrder(const FormEvaluator& E, const std::function<cplx(cplx)>& logf, double x) {
    const double lambda = E.group().lambda;
    const double Y[3] = {10.0, 15.0, 20.0};
    double s[3];
    for (int k = 0; k < 3; ++k) s[k] = logf({x, Y[k]}).real();
    double slope1 = -(s[1] - s[0]) * lambda / (kTwoPi * (Y[1] - Y[0]));
    double slope2 = -(s[2] - s[1]) * lambda / (kTwoPi * (Y[2] - Y[1]));
    return 0.5 * (slope1 + slope2);
}

Report verifyDegreeIdentity(const FormEvaluator& E, int i, int j) {
    const auto& G = E.group();
    Report rep;
    Rational k = Rational(i) * E.degree(FormTag::A) + Rational(j) * E.degree(FormTag::B);
    Rational lhs = Rational(i, G.p) + Rational(j, G.q);  // N = n_inf = 0, n_a = i, n_b = j
    Rational rhs = k * Rational(G.r, 1LL * G.p * G.q);
    rep.addBool("degree identity a^" + std::to_string(i) + " b^" + std::to_string(j), lhs == rhs);
    return rep;
}

FormGrid buildFormGrid(const FormEvaluator& E, int n) {
    const auto& G = E.group();
    const double left = -2.0 * G.cosP - G.cosQ;
    FormGrid grid;
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            cplx z{left + (G.cosQ - left) * (ix + 0.5) / n, 10.0 * (iy + 0.5) / n};
            if (!inClosureD1(G, z, 0.0)) continue;
            grid.z.push_back(z);
            grid.logs.push_back(E.evalLogs(z));
        }
    }
    return grid;
}

Report verifyDegreeIdentity(const FormEvaluator& E, cplx c1, cplx c2, const FormGrid* grid) {
    const auto& G = E.group();
    // f / f_inf, which has the same zeros as f on H^2.
    auto fromLogs = [&](const FormLogs& L) {
        return c1 * std::exp(double(G.q) * L[1] - L[2]) + c2 * std::exp(double(G.p) * L[0] - L[2]);
    };
    auto ratio = [&](cplx z) { return fromLogs(E.evalLogs(z)); };
    Report rep;

    FormGrid local;
    if (!grid) {
        local = buildFormGrid(E);
        grid = &local;
    }
    cplx best = grid->z.front();
    double bestVal = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid->z.size(); ++k) {
        double v = std::abs(fromLogs(grid->logs[k]));
        if (v < bestVal) {
            bestVal = v;
            best = grid->z[k];
        }
    }
    // Newton with a central-difference derivative.
    cplx z = best;
    bool converged = false;
    for (int it = 0; it < 60 && !converged; ++it) {
        double h = 1e-6 * std::max(1.0, z.imag());
        cplx fz = ratio(z);
        cplx df = (ratio(z + h) - ratio(z - h)) / (2.0 * h);
        cplx step = fz / df;
        double lim = 0.5 * z.imag();
        if (std::abs(step) > lim) step *= lim / std::abs(step);
        z -= step;
        converged = std::abs(step) < 1e-12 * (1.0 + std::abs(z));
    }
    rep.addBool("interior zero located", converged && std::abs(ratio(z)) < 1e-8);
    if (!converged) return rep;
    Reduction red = reduceToFundamental(G, z);
    cplx z0 = red.zReduced;

    auto f = [&](cplx w) { return ratio(w); };
    double nearVertex = std::min({std::abs(z0 - G.a), std::abs(z0 - G.b), std::abs(z0 - G.bPrime())});
    double rad = std::min({0.05, 0.3 * nearVertex, 0.3 * z0.imag()});
    int N = windingNumber(f, circleContour(z0, rad, 32), 64);
    double rA = std::min(0.05, 0.3 * std::abs(z0 - G.a));
    double rB = std::min(0.05, 0.3 * std::min(std::abs(z0 - G.b), std::abs(z0 - G.bPrime())));
    int na = windingNumber(f, circleContour(G.a, rA, 32), 64);
    int nb = windingNumber(f, circleContour(G.b, rB, 32), 64);
    auto logf = [&](cplx w) {
        FormLogs L = E.evalLogs(w);
        return std::log(ratio(w)) + L[2];
    };
    double nInf = cuspOrder(E, logf);
    double lhs = N + nInf + double(na) / G.p + double(nb) / G.q;
    double rhs = boost::rational_cast<double>(E.degree(FormTag::Inf) * Rational(G.r, 1LL * G.p * G.q));
    rep.add("winding at located zero - 1", std::abs(N - 1), 0.0);
    rep.add("degree identity residual", std::abs(lhs - rhs), 1e-6);
    return rep;
}

}  // namespace tk
