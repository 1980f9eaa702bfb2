#pragma once

#include <complex>
#include <vector>

namespace tk {

using cplx = std::complex<double>;

struct ValueDeriv {
    cplx f;
    cplx df;
};

// Fixed power series sum c_n x^n with precomputed real or complex coefficients.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}

    // Terms are truncated once |x|^n times the coefficient bound drops below 1e-18.
    ValueDeriv eval(cplx x) const;
    std::size_t size() const { return c_.size(); }
    const std::vector<cplx>& coeffs() const { return c_; }

private:
    std::vector<cplx> c_;
};

// Coefficients (a)_n (b)_n / ((c)_n n!) of the Gauss series.
std::vector<cplx> gaussCoefficients(double a, double b, double c, int terms);

// Taylor coefficients at t0 of the solution of the hypergeometric equation
// with y(t0) = y0, y'(t0) = dy0.
std::vector<cplx> odeTaylorCoefficients(double a, double b, double c, cplx t0, cplx y0, cplx dy0, int terms);

// Continues (y, y') of a hypergeometric-equation solution from t0 to t1 along
// the straight segment, using Taylor steps inside the disc of convergence.
ValueDeriv odeContinue(double a, double b, double c, cplx t0, ValueDeriv start, cplx t1);

double digamma(double x);

// Gauss hypergeometric function 2F1(a,b;c;t), principal branch (cut [1, inf)).
cplx hypergeometric2F1(double a, double b, double c, cplx t);
ValueDeriv hypergeometric2F1WithDerivative(double a, double b, double c, cplx t);

}  // namespace tk
