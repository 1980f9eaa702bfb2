#include "torusknot/hypergeometric.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <stdexcept>

namespace tk {

namespace {

constexpr double kEps = 1e-17;
constexpr double kDirect = 0.7;

bool isNonPositiveInteger(double x) { return x <= 0 && x == std::floor(x); }
bool isInteger(double x) { return std::abs(x - std::round(x)) < 1e-14; }

double rgamma(double x) { return isNonPositiveInteger(x) ? 0.0 : 1.0 / std::tgamma(x); }

ValueDeriv gaussSeries(double a, double b, double c, cplx x) {
    if (isNonPositiveInteger(c)) throw std::domain_error("2F1: c is a nonpositive integer");
    cplx f = 0, df = 0, xn = 1, xnm1 = 0;
    double cn = 1;
    int small = 0;
    for (int n = 0; n < 20000; ++n) {
        cplx term = cn * xn;
        f += term;
        if (n > 0) df += double(n) * cn * xnm1;
        if (std::abs(term) <= kEps * std::abs(f)) {
            if (++small >= 3) return {f, df};
        } else {
            small = 0;
        }
        xnm1 = xn;
        xn *= x;
        cn *= (a + n) * (b + n) / ((c + n) * (n + 1.0));
    }
    throw std::runtime_error("2F1: Gauss series did not converge");
}

ValueDeriv pfaff(double a, double b, double c, cplx t) {
    // F(a,b;c;t) = (1-t)^-a F(a, c-b; c; t/(t-1))
    cplx s = 1.0 - t;
    cplx tau = t / (t - 1.0);
    ValueDeriv h = gaussSeries(a, c - b, c, tau);
    cplx pre = std::pow(s, -a);
    cplx dtau = -1.0 / ((t - 1.0) * (t - 1.0));
    return {pre * h.f, a * pre / s * h.f + pre * h.df * dtau};
}

ValueDeriv aroundOne(double a, double b, double c, cplx t) {
    cplx s = 1.0 - t;
    double e = c - a - b;
    double k1 = std::tgamma(c) * std::tgamma(e) * rgamma(c - a) * rgamma(c - b);
    double k2 = std::tgamma(c) * std::tgamma(-e) * rgamma(a) * rgamma(b);
    ValueDeriv g1 = gaussSeries(a, b, a + b - c + 1.0, s);
    ValueDeriv g2 = gaussSeries(c - a, c - b, e + 1.0, s);
    cplx se = std::pow(s, e);
    cplx f = k1 * g1.f + k2 * se * g2.f;
    // d/dt = -d/ds
    cplx dfds = k1 * g1.df + k2 * (e * se / s * g2.f + se * g2.df);
    return {f, -dfds};
}

ValueDeriv aroundInfinity(double a, double b, double c, cplx t) {
    cplx w = 1.0 / t;
    cplx mt = -t;
    cplx dwdt = -w * w;
    if (!isInteger(a - b)) {
        double k1 = std::tgamma(c) * std::tgamma(b - a) * rgamma(b) * rgamma(c - a);
        double k2 = std::tgamma(c) * std::tgamma(a - b) * rgamma(a) * rgamma(c - b);
        ValueDeriv g1 = gaussSeries(a, a - c + 1.0, a - b + 1.0, w);
        ValueDeriv g2 = gaussSeries(b, b - c + 1.0, b - a + 1.0, w);
        cplx pa = std::pow(mt, -a), pb = std::pow(mt, -b);
        cplx f = k1 * pa * g1.f + k2 * pb * g2.f;
        // d/dt (-t)^-a = a (-t)^-a / t
        cplx df = k1 * (a * pa / t * g1.f + pa * g1.df * dwdt) + k2 * (b * pb / t * g2.f + pb * g2.df * dwdt);
        return {f, df};
    }
    // a == b: logarithmic case.
    double ca = c - a;
    double pref = std::tgamma(c) * rgamma(a) * rgamma(ca);
    double un = 1;
    double dn = 2.0 * digamma(1.0) - digamma(a) - digamma(ca);
    cplx L = std::log(mt);
    cplx s0 = 0, s1 = 0, ds0 = 0, ds1 = 0, wn = 1, wnm1 = 0;
    int small = 0;
    for (int n = 0; n < 20000; ++n) {
        if (n > 0) {
            un *= (a + n - 1) * (1.0 - c + a + n - 1) / (double(n) * n);
            dn += 2.0 / n - 1.0 / (a + n - 1) + 1.0 / (ca - n);
        }
        s0 += un * wn;
        s1 += un * dn * wn;
        if (n > 0) {
            ds0 += double(n) * un * wnm1;
            ds1 += double(n) * un * dn * wnm1;
        }
        double mag = std::abs(un * wn) * (1.0 + std::abs(dn));
        if (mag <= kEps * (std::abs(s0 * L) + std::abs(s1))) {
            if (++small >= 3) break;
        } else {
            small = 0;
        }
        wnm1 = wn;
        wn *= w;
    }
    cplx pa = std::pow(mt, -a);
    cplx body = s0 * L + s1;
    cplx dbody = (ds0 * L + ds1) * dwdt + s0 / t;
    return {pref * pa * body, pref * (a * pa / t * body + pa * dbody)};
}

}  // namespace

ValueDeriv PowerSeries::eval(cplx x) const {
    cplx f = 0, df = 0, xn = 1, xnm1 = 0;
    int small = 0;
    for (std::size_t n = 0; n < c_.size(); ++n) {
        cplx term = c_[n] * xn;
        f += term;
        if (n > 0) df += double(n) * c_[n] * xnm1;
        if (std::abs(term) <= kEps * std::abs(f) && std::abs(term) * double(n + 1) <= kEps * std::abs(df) * std::abs(x)) {
            if (++small >= 3) break;
        } else {
            small = 0;
        }
        xnm1 = xn;
        xn *= x;
    }
    return {f, df};
}

std::vector<cplx> gaussCoefficients(double a, double b, double c, int terms) {
    std::vector<cplx> out(static_cast<std::size_t>(terms));
    double cn = 1;
    for (int n = 0; n < terms; ++n) {
        out[static_cast<std::size_t>(n)] = cn;
        cn *= (a + n) * (b + n) / ((c + n) * (n + 1.0));
    }
    return out;
}

std::vector<cplx> odeTaylorCoefficients(double a, double b, double c, cplx t0, cplx y0, cplx dy0, int terms) {
    cplx P0 = t0 * (1.0 - t0), P1 = 1.0 - 2.0 * t0;
    const double P2 = -1.0;
    cplx Q0 = c - (a + b + 1.0) * t0;
    const double Q1 = -(a + b + 1.0), R = -a * b;
    std::vector<cplx> y(static_cast<std::size_t>(std::max(terms, 2)));
    y[0] = y0;
    y[1] = dy0;
    for (int n = 0; n + 2 < terms; ++n) {
        double dn = n;
        cplx num = (P1 * dn * (dn + 1.0) + Q0 * (dn + 1.0)) * y[n + 1] + (P2 * dn * (dn - 1.0) + Q1 * dn + R) * y[n];
        y[n + 2] = -num / (P0 * (dn + 2.0) * (dn + 1.0));
    }
    return y;
}

ValueDeriv odeContinue(double a, double b, double c, cplx t0, ValueDeriv start, cplx t1) {
    cplx t = t0;
    ValueDeriv cur = start;
    for (int guard = 0; guard < 100000; ++guard) {
        cplx remaining = t1 - t;
        if (std::abs(remaining) == 0) return cur;
        double rad = std::min(std::abs(t), std::abs(1.0 - t));
        if (rad < 1e-6) throw std::runtime_error("odeContinue: path passes through a singular point");
        double hmax = 0.5 * rad;
        cplx h = std::abs(remaining) <= hmax ? remaining : remaining * (hmax / std::abs(remaining));
        PowerSeries series(odeTaylorCoefficients(a, b, c, t, cur.f, cur.df, 120));
        cur = series.eval(h);
        t += h;
        if (std::abs(t1 - t) < 1e-15 * std::abs(t1)) t = t1;
    }
    throw std::runtime_error("odeContinue: too many steps");
}

double digamma(double x) { return boost::math::digamma(x); }

ValueDeriv hypergeometric2F1WithDerivative(double a, double b, double c, cplx t) {
    if (isNonPositiveInteger(c)) throw std::domain_error("2F1: c is a nonpositive integer");
    if (t.imag() == 0.0 && t.real() > 1.0) throw std::domain_error("2F1: argument on the branch cut");
    if (std::abs(t) <= kDirect) return gaussSeries(a, b, c, t);
    if (t == cplx(1.0)) {
        if (c - a - b <= 0) throw std::domain_error("2F1: divergent at t = 1");
        double v = std::tgamma(c) * std::tgamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
        return {v, cplx(NAN, NAN)};
    }
    if (std::abs(t / (t - 1.0)) <= kDirect) return pfaff(a, b, c, t);
    if (std::abs(1.0 - t) <= kDirect && !isInteger(c - a - b)) return aroundOne(a, b, c, t);
    if (std::abs(t) >= 1.0 / kDirect) {
        bool ok = !isInteger(a - b) || (a == b && !isInteger(c - a) && !isNonPositiveInteger(a));
        if (ok) return aroundInfinity(a, b, c, t);
    }
    // Fall back to Taylor continuation from a point where the Gauss series is fast.
    cplx start = 0.5 * t / std::abs(t);
    return odeContinue(a, b, c, start, gaussSeries(a, b, c, start), t);
}

cplx hypergeometric2F1(double a, double b, double c, cplx t) { return hypergeometric2F1WithDerivative(a, b, c, t).f; }

}  // namespace tk
