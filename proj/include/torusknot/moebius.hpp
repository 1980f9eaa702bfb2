#pragma once

#include <complex>
#include <variant>

namespace tk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Unimodular 2x2 real matrix.
struct Moebius {
    double a = 1, b = 0, c = 0, d = 1;

    static Moebius identity() { return {}; }
    static Moebius make(double a, double b, double c, double d);

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    Moebius inverse() const { return {d, -b, -c, a}; }
    Moebius operator-() const { return {-a, -b, -c, -d}; }
};

Moebius operator*(const Moebius& g, const Moebius& h);

// (az+b)/(cz+d); throws std::domain_error unless Im z > 0.
cplx act(const Moebius& g, cplx z);
// Classical derivative 1/(cz+d)^2.
cplx derivative(const Moebius& g, cplx z);
bool samePSL(const Moebius& g, const Moebius& h, double tol);
bool isPlusMinusIdentity(const Moebius& g, double tol);

struct Elliptic {
    double angle;  // in (0, 2pi), counter-clockwise
    cplx fixedPoint;
};
struct Parabolic {
    bool atInfinity;
    double fixedPoint;  // meaningful when !atInfinity
};
struct Hyperbolic {};
using MoebiusClass = std::variant<Elliptic, Parabolic, Hyperbolic>;

MoebiusClass classify(const Moebius& g);

// Element of the universal cover of C^x: log modulus and unbounded argument.
struct LogNonzero {
    double logMod = 0;
    double arg = 0;

    LogNonzero operator+(const LogNonzero& o) const { return {logMod + o.logMod, arg + o.arg}; }
    LogNonzero power(double k) const { return {k * logMod, k * arg}; }
    cplx value() const { return std::polar(std::exp(logMod), arg); }
};

struct TangentPoint {
    cplx z;
    LogNonzero w;
};

// Element of the universal cover of PSL2(R): signed matrix plus integer m.
// The continuous argument of cz+d is phi(z) = PrincipalArg(cz+d) + 2*pi*m.
struct LiftedMoebius {
    Moebius mat;
    long long branch = 0;

    static LiftedMoebius identity() { return {}; }
    // Rotation by 2*pi: (-I, m = -1).
    static LiftedMoebius center() { return {Moebius{-1, 0, 0, -1}, -1}; }

    double phi(cplx z) const;
};

LiftedMoebius liftCompose(const LiftedMoebius& g2, const LiftedMoebius& g1);
LiftedMoebius liftInverse(const LiftedMoebius& g);
LiftedMoebius liftPower(const LiftedMoebius& g, long long n);
LogNonzero liftedDerivative(const LiftedMoebius& g, cplx z);
TangentPoint actTangent(const LiftedMoebius& g, const TangentPoint& pt);
bool sameLift(const LiftedMoebius& g, const LiftedMoebius& h, double tol);

}  // namespace tk
