#include "torusknot/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace tk {

Moebius Moebius::make(double a, double b, double c, double d) {
    Moebius g{a, b, c, d};
    if (std::abs(g.det() - 1.0) > 1e-12) throw std::invalid_argument("Moebius: determinant must be 1");
    return g;
}

Moebius operator*(const Moebius& g, const Moebius& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

cplx act(const Moebius& g, cplx z) {
    if (!(z.imag() > 0)) throw std::domain_error("act: point not in the upper half-plane");
    cplx den = g.c * z + g.d;
    cplx w = (g.a * z + g.b) / den;
    // Im w = Im z / |cz+d|^2 exactly; use it to keep the result off the real axis.
    double im = z.imag() / std::norm(den);
    return {w.real(), im};
}

cplx derivative(const Moebius& g, cplx z) {
    cplx den = g.c * z + g.d;
    return 1.0 / (den * den);
}

bool samePSL(const Moebius& g, const Moebius& h, double tol) {
    auto close = [tol](const Moebius& x, const Moebius& y) {
        return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol && std::abs(x.c - y.c) <= tol &&
               std::abs(x.d - y.d) <= tol;
    };
    return close(g, h) || close(g, -h);
}

bool isPlusMinusIdentity(const Moebius& g, double tol) { return samePSL(g, Moebius::identity(), tol); }

MoebiusClass classify(const Moebius& g) {
    if (isPlusMinusIdentity(g, 1e-12)) throw std::invalid_argument("classify: identity has no class");
    double tr = std::abs(g.trace());
    if (std::abs(tr - 2.0) <= 1e-10) {
        if (std::abs(g.c) <= 1e-12) return Parabolic{true, 0.0};
        return Parabolic{false, (g.a - g.d) / (2.0 * g.c)};
    }
    if (tr > 2.0) return Hyperbolic{};
    // c != 0 for elliptic elements; fixed point solves c z^2 + (d - a) z - b = 0.
    double disc = g.trace() * g.trace() - 4.0;
    cplx fp{(g.a - g.d) / (2.0 * g.c), std::sqrt(-disc) / (2.0 * std::abs(g.c))};
    double angle = std::arg(derivative(g, fp));
    if (angle <= 0) angle += kTwoPi;
    return Elliptic{angle, fp};
}

namespace {

// Principal argument in (-pi, pi]; values within rounding of the negative real
// axis go to +pi so that branch integers do not depend on the sign of a zero.
double principalArg(cplx w) {
    if (w.real() < 0 && std::abs(w.imag()) <= 1e-12 * std::abs(w)) return kPi;
    return std::arg(w);
}

}  // namespace

double LiftedMoebius::phi(cplx z) const { return principalArg(mat.c * z + mat.d) + kTwoPi * double(branch); }

LiftedMoebius liftCompose(const LiftedMoebius& g2, const LiftedMoebius& g1) {
    const cplx base{0.0, 1.0};
    double target = g2.phi(act(g1.mat, base)) + g1.phi(base);
    LiftedMoebius out{g2.mat * g1.mat, 0};
    // The signed product satisfies (c2 g1(z) + d2)(c1 z + d1) = cz + d, so the
    // difference below is a multiple of 2pi.
    double diff = target - principalArg(out.mat.c * base + out.mat.d);
    double m = std::round(diff / kTwoPi);
    if (std::abs(diff - kTwoPi * m) > 1e-6) throw std::runtime_error("liftCompose: branch rounding failed");
    out.branch = static_cast<long long>(m);
    return out;
}

LiftedMoebius liftInverse(const LiftedMoebius& g) {
    const cplx base{0.0, 1.0};
    LiftedMoebius out{g.mat.inverse(), 0};
    // phi_inv(g(z)) = -phi(z).
    double target = -g.phi(base);
    cplx gz = act(g.mat, base);
    double diff = target - principalArg(out.mat.c * gz + out.mat.d);
    double m = std::round(diff / kTwoPi);
    if (std::abs(diff - kTwoPi * m) > 1e-6) throw std::runtime_error("liftInverse: branch rounding failed");
    out.branch = static_cast<long long>(m);
    return out;
}

LiftedMoebius liftPower(const LiftedMoebius& g, long long n) {
    LiftedMoebius base = n >= 0 ? g : liftInverse(g);
    LiftedMoebius out = LiftedMoebius::identity();
    for (long long k = 0; k < std::abs(n); ++k) out = liftCompose(base, out);
    return out;
}

LogNonzero liftedDerivative(const LiftedMoebius& g, cplx z) {
    if (!(z.imag() > 0)) throw std::domain_error("liftedDerivative: point not in the upper half-plane");
    return {-2.0 * std::log(std::abs(g.mat.c * z + g.mat.d)), -2.0 * g.phi(z)};
}

TangentPoint actTangent(const LiftedMoebius& g, const TangentPoint& pt) {
    return {act(g.mat, pt.z), liftedDerivative(g, pt.z) + pt.w};
}

bool sameLift(const LiftedMoebius& g, const LiftedMoebius& h, double tol) {
    return g.branch == h.branch && std::abs(g.mat.a - h.mat.a) <= tol && std::abs(g.mat.b - h.mat.b) <= tol &&
           std::abs(g.mat.c - h.mat.c) <= tol && std::abs(g.mat.d - h.mat.d) <= tol;
}

}  // namespace tk
