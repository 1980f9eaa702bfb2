#include "torusknot/uniformizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tk {

namespace {

constexpr int kTerms = 800;
constexpr double kChartLimit = 0.9;

cplx ipow(cplx x, int n) {
    cplx r = 1;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

struct Mat2 {
    cplx a, b, c, d;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// Quotient num/den of two series-backed functions, each either evaluated
// directly or through the Pfaff transformation x -> x/(x-1).
ValueDeriv seriesQuotient(const PowerSeries& num, const PowerSeries& den, const PowerSeries& numPf,
                          const PowerSeries& denPf, double expDiff, cplx x) {
    if (std::abs(x) <= std::abs(x / (x - 1.0))) {
        ValueDeriv n = num.eval(x), d = den.eval(x);
        return {n.f / d.f, (n.df * d.f - n.f * d.df) / (d.f * d.f)};
    }
    // num/den = (1-x)^(-expDiff) * H2/H1 evaluated at tau = x/(x-1).
    cplx tau = x / (x - 1.0);
    ValueDeriv n = numPf.eval(tau), d = denPf.eval(tau);
    cplx k = n.f / d.f;
    cplx dk = (n.df * d.f - n.f * d.df) / (d.f * d.f);
    cplx one = 1.0 - x;
    cplx pre = std::pow(one, -expDiff);
    cplx dtau = -1.0 / ((x - 1.0) * (x - 1.0));
    return {pre * k, expDiff * pre / one * k + pre * dk * dtau};
}

}  // namespace

ComplexMoebius ComplexMoebius::fromThreePoints(const std::array<cplx, 3>& w, const std::array<cplx, 3>& z) {
    auto toStandard = [](const std::array<cplx, 3>& p) {
        // x -> (x - p0)(p1 - p2) / ((x - p2)(p1 - p0)) sends p0, p1, p2 to 0, 1, inf.
        return Mat2{p[1] - p[2], -p[0] * (p[1] - p[2]), p[1] - p[0], -p[2] * (p[1] - p[0])};
    };
    Mat2 mw = toStandard(w), mz = toStandard(z);
    Mat2 mzInv{mz.d, -mz.b, -mz.c, mz.a};
    Mat2 m = mzInv * mw;
    cplx s = std::sqrt(m.a * m.d - m.b * m.c);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
}

Uniformizer::Uniformizer(const TriangleGroupData& G) : G_(G) {
    const double p = G.p, q = G.q;
    a_ = (1.0 - 1.0 / p - 1.0 / q) / 2.0;
    c_ = 1.0 - 1.0 / p;
    const double a2 = a_ + 1.0 / p, c2 = 1.0 + 1.0 / p;

    F1_ = PowerSeries(gaussCoefficients(a_, a_, c_, kTerms));
    F2_ = PowerSeries(gaussCoefficients(a2, a2, c2, kTerms));
    F1pf_ = PowerSeries(gaussCoefficients(a_, c_ - a_, c_, kTerms));
    F2pf_ = PowerSeries(gaussCoefficients(a2, c2 - a2, c2, kTerms));
    aF1pf_ = a_;
    aF2pf_ = a2;

    // Local basis at t = 1 in s = 1 - t.
    const double cg1 = 2.0 * a_ - c_ + 1.0, ag2 = c_ - a_, cg2 = c_ - 2.0 * a_ + 1.0;
    G1_ = PowerSeries(gaussCoefficients(a_, a_, cg1, kTerms));
    G2_ = PowerSeries(gaussCoefficients(ag2, ag2, cg2, kTerms));
    G1pf_ = PowerSeries(gaussCoefficients(a_, cg1 - a_, cg1, kTerms));
    G2pf_ = PowerSeries(gaussCoefficients(ag2, cg2 - ag2, cg2, kTerms));
    aG1pf_ = a_;
    aG2pf_ = ag2;

    // Logarithmic basis at infinity: (-t)^-a (S0 log(-t) + S1) and (-t)^-a S0.
    {
        const double ca = c_ - a_;
        std::vector<cplx> s0(kTerms), s1(kTerms);
        double un = 1;
        double dn = 2.0 * digamma(1.0) - digamma(a_) - digamma(ca);
        for (int n = 0; n < kTerms; ++n) {
            if (n > 0) {
                un *= (a_ + n - 1) * (1.0 - c_ + a_ + n - 1) / (double(n) * n);
                dn += 2.0 / n - 1.0 / (a_ + n - 1) + 1.0 / (ca - n);
            }
            s0[n] = un;
            s1[n] = un * dn;
        }
        S0_ = PowerSeries(s0);
        S1_ = PowerSeries(s1);
    }

    // Normalizer: sigma(0) = 0 -> a, sigma(1) -> b, sigma(inf) -> inf.
    double sigma1 = (std::tgamma(c2) * std::tgamma(c2 - 2.0 * a2) / std::pow(std::tgamma(c2 - a2), 2)) /
                    (std::tgamma(c_) * std::tgamma(c_ - 2.0 * a_) / std::pow(std::tgamma(c_ - a_), 2));
    double logCoef1 = std::tgamma(c_) / (std::tgamma(a_) * std::tgamma(c_ - a_));
    double logCoef2 = std::tgamma(c2) / (std::tgamma(a2) * std::tgamma(c2 - a2));
    cplx sigmaInf = std::polar(logCoef2 / logCoef1, kPi / p);
    cplx Bn = -G.a * sigmaInf;
    cplx An = (G.b * (sigma1 - sigmaInf) - Bn) / sigma1;
    N_ = ComplexMoebius{An, Bn, 1.0, -sigmaInf};

    // Taylor patch around e^{i pi/3}, where none of the series above is fast.
    tD_ = cplx(0.5, std::sqrt(3.0) / 2.0);
    {
        cplx ts = 0.6 * tD_;
        ValueDeriv f1 = F1_.eval(ts), f2 = F2_.eval(ts);
        cplx tp = std::pow(ts, 1.0 / p);
        ValueDeriv y1{f1.f, f1.df};
        ValueDeriv y2{tp * f2.f, (1.0 / p) * tp / ts * f2.f + tp * f2.df};
        ValueDeriv e1 = odeContinue(a_, a_, c_, ts, y1, tD_);
        ValueDeriv e2 = odeContinue(a_, a_, c_, ts, y2, tD_);
        Y1_ = PowerSeries(odeTaylorCoefficients(a_, a_, c_, tD_, e1.f, e1.df, kTerms));
        Y2_ = PowerSeries(odeTaylorCoefficients(a_, a_, c_, tD_, e2.f, e2.df, kTerms));
    }

    // Glue the chart at t = 1 to the chart at t = 0 on their overlap.
    NB_ = ComplexMoebius{1.0, 0.0, 0.0, 1.0};
    {
        std::array<cplx, 3> rho{0.0, 0.0, 0.0}, zs{G.b, 0.0, 0.0};
        const cplx probes[2] = {{0.5, 0.25}, {0.45, 0.5}};
        for (int k = 0; k < 2; ++k) {
            zs[k + 1] = evalChart(A, varOf(A, probes[k])).z;
            rho[k + 1] = evalChart(B, varOf(B, probes[k])).z;  // NB_ is the identity here
        }
        NB_ = ComplexMoebius::fromThreePoints(rho, zs);
    }

    // Cusp chart z = Ac * mu + Bc, fitted on two overlap points.
    {
        Ac_ = 1.0;
        Bc_ = 0.0;
        const cplx t1{1.2, 0.7}, t2{-0.9, 1.0};
        cplx z1 = evalChart(B, varOf(B, t1)).z;
        cplx z2 = evalChart(A, varOf(A, t2)).z;
        cplx mu1 = evalChart(C, varOf(C, t1)).z;
        cplx mu2 = evalChart(C, varOf(C, t2)).z;
        Ac_ = (z1 - z2) / (mu1 - mu2);
        Bc_ = z1 - Ac_ * mu1;
    }

    // Newton seeds over the base triangle.
    const int n = 50;
    for (int i = 0; i < n; ++i) {
        double rad = std::pow(10.0, -6.0 + 12.0 * i / (n - 1));
        for (int j = 0; j < n; ++j) {
            cplx t = std::polar(rad, kPi * (j + 0.5) / n);
            int ch = bestChart(t);
            cplx v = varOf(ch, t);
            cplx z = evalChart(ch, v).z;
            seeds_.push_back({z, ch, v});
            seedTop_ = std::max(seedTop_, z.imag());
        }
    }
}

ValueDeriv Uniformizer::ratioAtZero(cplx t) const {
    return seriesQuotient(F2_, F1_, F2pf_, F1pf_, aF2pf_ - aF1pf_, t);
}

ValueDeriv Uniformizer::ratioAtOne(cplx s) const {
    return seriesQuotient(G2_, G1_, G2pf_, G1pf_, aG2pf_ - aG1pf_, s);
}

ValueDeriv Uniformizer::cuspCorrection(cplx w) const {
    ValueDeriv s0 = S0_.eval(w), s1 = S1_.eval(w);
    return {s1.f / s0.f, (s1.df * s0.f - s1.f * s0.df) / (s0.f * s0.f)};
}

Uniformizer::ChartEval Uniformizer::evalChart(int chart, cplx v) const {
    const int p = G_.p, q = G_.q;
    ChartEval e;
    switch (chart) {
        case A: {
            cplx up1 = ipow(v, p - 1);
            e.t = up1 * v;
            ValueDeriv R = ratioAtZero(e.t);
            cplx sigma = v * R.f;
            cplx dsigma = R.f + double(p) * e.t * R.df;
            e.z = N_(sigma);
            e.dzdv = N_.derivative(sigma) * dsigma;
            e.dtdv = double(p) * up1;
            break;
        }
        case B: {
            cplx vq1 = ipow(v, q - 1);
            cplx s = vq1 * v;
            e.t = 1.0 - s;
            ValueDeriv R = ratioAtOne(s);
            cplx rho = v * R.f;
            cplx drho = R.f + double(q) * s * R.df;
            e.z = NB_(rho);
            e.dzdv = NB_.derivative(rho) * drho;
            e.dtdv = -double(q) * vq1;
            break;
        }
        case C: {
            cplx ex = std::exp(v);
            e.t = -ex;
            cplx w = 1.0 / e.t;
            ValueDeriv K = cuspCorrection(w);
            cplx mu = v + K.f;
            cplx dmu = 1.0 - K.df * w;
            e.z = Ac_ * mu + Bc_;
            e.dzdv = Ac_ * dmu;
            e.dtdv = e.t;
            break;
        }
        default: {
            e.t = v;
            cplx h = v - tD_;
            ValueDeriv y1 = Y1_.eval(h), y2 = Y2_.eval(h);
            cplx sigma = y2.f / y1.f;
            cplx dsigma = (y2.df * y1.f - y2.f * y1.df) / (y1.f * y1.f);
            e.z = N_(sigma);
            e.dzdv = N_.derivative(sigma) * dsigma;
            e.dtdv = 1.0;
        }
    }
    return e;
}

double Uniformizer::ratio(int chart, cplx t) const {
    switch (chart) {
        case A: return std::min(std::abs(t), std::abs(t / (t - 1.0)));
        case B: return std::min(std::abs(1.0 - t), std::abs((1.0 - t) / t));
        case C: return 1.0 / std::abs(t);
        default: return std::abs(t - tD_);
    }
}

int Uniformizer::bestChart(cplx t) const {
    int best = A;
    double r = ratio(A, t);
    for (int ch = B; ch <= Dc; ++ch) {
        double rc = ratio(ch, t);
        if (rc < r) {
            r = rc;
            best = ch;
        }
    }
    return best;
}

cplx Uniformizer::varOf(int chart, cplx t) const {
    const double im = std::abs(t.imag());
    switch (chart) {
        case A: return std::polar(std::pow(std::abs(t), 1.0 / G_.p), std::atan2(im, t.real()) / G_.p);
        case B: {
            cplx s = 1.0 - t;
            return std::polar(std::pow(std::abs(s), 1.0 / G_.q), std::atan2(-im, s.real()) / G_.q);
        }
        case C: return {std::log(std::abs(t)), std::atan2(-im, -t.real())};
        default: return {t.real(), im};
    }
}

ThetaHint Uniformizer::solve(cplx zTarget, const ThetaHint* hint) const {
    if (hint && hint->chart >= 0 && std::abs(evalChart(hint->chart, hint->var).z - zTarget) < 0.25) {
        try {
            return newton(zTarget, hint->chart, hint->var);
        } catch (const std::runtime_error&) {
            // fall through to the seed grid
        }
    }
    if (zTarget.imag() > seedTop_) return newton(zTarget, C, (zTarget - Bc_) / Ac_);
    const Seed* best = &seeds_.front();
    double bd = std::norm(best->z - zTarget);
    for (const auto& s : seeds_) {
        double d = std::norm(s.z - zTarget);
        if (d < bd) {
            bd = d;
            best = &s;
        }
    }
    return newton(zTarget, best->chart, best->var);
}

ThetaHint Uniformizer::newton(cplx zTarget, int chart, cplx v) const {
    const int seedChart = chart;
    const cplx seedVar = v;
    const double ztol = 1e-14 * (1.0 + std::abs(zTarget));
    for (int it = 0; it < 50; ++it) {
        ChartEval e = evalChart(chart, v);
        cplx res = e.z - zTarget;
        if (std::abs(res) <= ztol) return {chart, v, false};
        cplx dv = res / e.dzdv;
        // Keep steps inside the chart's disc of convergence.
        double lim = chart == C ? 2.0 : 0.5 * (1.0 + std::abs(v));
        if (std::abs(dv) > lim) dv *= lim / std::abs(dv);
        v -= dv;
        if (std::abs(dv) <= 1e-15 * (1.0 + std::abs(v))) return {chart, v, false};
        cplx t = chart == A ? ipow(v, G_.p) : chart == B ? 1.0 - ipow(v, G_.q) : chart == C ? -std::exp(v) : v;
        if (ratio(chart, t) > kChartLimit) {
            chart = bestChart(t);
            v = varOf(chart, t);
        }
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "theta: Newton did not converge for z = " << zTarget << " (seed chart " << seedChart << ", var " << seedVar
        << ")";
    throw std::runtime_error(msg.str());
}

cplx Uniformizer::schwarzMap(cplx t) const {
    if (t == 0.0) return G_.a;
    if (t == 1.0) return G_.b;
    bool reflected = t.imag() < 0;
    if (reflected) t = std::conj(t);
    int ch = bestChart(t);
    cplx z = evalChart(ch, varOf(ch, t)).z;
    if (reflected) z = -2.0 * G_.cosP - std::conj(z);
    return z;
}

ThetaDetail Uniformizer::thetaDetailed(cplx z, const ThetaHint* hint) const {
    Reduction red = reduceToFundamental(G_, z);
    const cplx zr = red.zReduced;
    const bool reflected = zr.real() < -G_.cosP;
    const cplx zDelta = reflected ? -2.0 * G_.cosP - std::conj(zr) : zr;

    ThetaHint local;
    // Points within rounding of a vertex are the vertex, so zeros come out exact.
    const double snap = 1e-13 * (1.0 + std::abs(zDelta));
    if (std::abs(zDelta - G_.a) <= snap)
        local = {A, 0.0};
    else if (std::abs(zDelta - G_.b) <= snap)
        local = {B, 0.0};
    else if (hint && hint->chart >= 0 && hint->reflected == reflected)
        local = solve(zDelta, hint);
    else
        local = solve(zDelta, nullptr);
    local.reflected = reflected;

    ChartEval e = evalChart(local.chart, local.var);
    cplx t = e.t;
    cplx dt = e.dtdv / e.dzdv;

    ThetaLogs L;
    const int p = G_.p, q = G_.q;
    switch (local.chart) {
        case A:
            L.hasLocal = true;
            L.logLocal = std::log(local.var);
            L.kTheta = p;
            L.restTheta = 0.0;
            L.kPrime = p - 1;
            L.restPrime = std::log(double(p)) - std::log(e.dzdv);
            L.restMinus1 = std::log(t - 1.0);
            break;
        case B:
            L.hasLocal = true;
            L.logLocal = std::log(local.var);
            L.restTheta = std::log(t);
            L.kMinus1 = q;
            L.restMinus1 = cplx(0.0, kPi);
            L.kPrime = q - 1;
            L.restPrime = std::log(double(q)) + cplx(0.0, kPi) - std::log(e.dzdv);
            break;
        default:
            L.restTheta = std::log(t);
            L.restPrime = std::log(dt);
            L.restMinus1 = std::log(t - 1.0);
    }
    if (reflected) {
        t = std::conj(t);
        dt = -std::conj(dt);
        L.restTheta = std::conj(L.restTheta);
        L.restMinus1 = std::conj(L.restMinus1);
        L.restPrime = std::conj(L.restPrime) + cplx(0.0, kPi);
        L.logLocal = std::conj(L.logLocal);
    }
    const Moebius& g = red.toReduced;
    cplx den = g.c * z + g.d;
    L.restPrime -= 2.0 * std::log(den);

    ThetaDetail out;
    out.tv.value = t;
    out.tv.derivative = dt / (den * den);
    out.tv.reducedPoint = zr;
    out.tv.word = std::move(red.word);
    out.logs = L;
    out.hint = local;
    out.toReduced = g;
    double dv = std::min({std::abs(zr - G_.a), std::abs(zr - G_.b), std::abs(zr - G_.bPrime())});
    out.vertexDistance = dv * std::norm(den);
    return out;
}

ThetaValue Uniformizer::theta(cplx z) const { return thetaDetailed(z).tv; }

double Uniformizer::chartOverlapError() const {
    double worst = 0;
    for (int i = 0; i < 40; ++i) {
        for (int j = 0; j <= 40; ++j) {
            cplx t = std::polar(std::pow(10.0, -1.0 + 2.0 * i / 39.0), kPi * j / 40.0);
            if (std::abs(t) < 1e-6 || std::abs(t - 1.0) < 1e-6) continue;
            std::vector<cplx> zs;
            for (int ch = A; ch <= Dc; ++ch)
                if (ratio(ch, t) <= 0.8) zs.push_back(evalChart(ch, varOf(ch, t)).z);
            for (std::size_t k = 1; k < zs.size(); ++k)
                worst = std::max(worst, std::abs(zs[k] - zs[0]) / (1.0 + std::abs(zs[0])));
        }
    }
    return worst;
}

double Uniformizer::worstCoverageRatio() const {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        for (int j = 0; j <= 100; ++j) {
            cplx t = std::polar(std::pow(10.0, -8.0 + 16.0 * i / 199.0), kPi * j / 100.0);
            worst = std::max(worst, ratio(bestChart(t), t));
        }
    }
    return worst;
}

}  // namespace tk
