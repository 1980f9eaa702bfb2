#pragma once

// Reference values computed without the library: classical q-expansions for the
// modular group and small closed forms.

#include <cmath>
#include <complex>

namespace oracle {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

inline double divisorPowerSum(int n, int k) {
    double s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += std::pow(double(d), k);
    return s;
}

inline cplx nome(cplx z) { return std::exp(cplx(0, 2 * kPi) * z); }

// Eisenstein series of weight 4 and 6 and the discriminant, 20 terms each.
inline cplx E4(cplx z, int terms = 20) {
    cplx q = nome(z), qn = 1, s = 1;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        s += 240.0 * divisorPowerSum(n, 3) * qn;
    }
    return s;
}

inline cplx E6(cplx z, int terms = 20) {
    cplx q = nome(z), qn = 1, s = 1;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        s -= 504.0 * divisorPowerSum(n, 5) * qn;
    }
    return s;
}

// Product formula q prod (1 - q^n)^24, independent of the Eisenstein series.
inline cplx Delta(cplx z, int terms = 20) {
    cplx q = nome(z), prod = 1, qn = 1;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        prod *= std::pow(1.0 - qn, 24);
    }
    return q * prod;
}

inline cplx kleinJ(cplx z) {
    cplx e4 = E4(z);
    return e4 * e4 * e4 / Delta(z);
}

// Real root of s^3 + s^2 - 1 by bisection.
inline double cubicRoot() {
    double lo = 0, hi = 1;
    for (int k = 0; k < 200; ++k) {
        double mid = 0.5 * (lo + hi);
        (mid * mid * mid + mid * mid - 1 < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
