#pragma once

#include <random>
#include <utility>

#include "torusknot/forms.hpp"
#include "torusknot/report.hpp"

namespace tk {

enum class CurveConvention { Unit, Fitted };

struct KnotMapConfig {
    int p = 0, q = 0;
    long long r = 0;
    cplx ca = 1, cb = 1;  // curve c_b z1^q + c_a z2^p
    CurveConvention convention = CurveConvention::Unit;
    const FormEvaluator* forms = nullptr;
};

KnotMapConfig unitConfig(int p, int q);
KnotMapConfig fittedConfig(const FormEvaluator& E, const RelationConstants& rc);

struct KnotSample {
    cplx z1, z2;
    bool onSphere = false;
    cplx fValue;
    double lambda = 1;  // scale used by radialProject
};

// (omega_b, omega_a) at a tangent point.
std::pair<cplx, cplx> psi(const KnotMapConfig& C, const TangentPoint& pt);
cplx curveF(const KnotMapConfig& C, cplx z1, cplx z2);
// Weighted R+ action (lambda^{p/r} z1, lambda^{q/r} z2).
std::pair<cplx, cplx> weightedScale(const KnotMapConfig& C, double lambda, cplx z1, cplx z2);
KnotSample radialProject(const KnotMapConfig& C, cplx z1, cplx z2);

double knotRadius(int p, int q);  // a1 with a1^2 + a1^(2q/p) = 1
KnotSample knotPoint(int p, int q, double t);
std::pair<cplx, cplx> seifertFlow(int p, int q, double t, cplx z1, cplx z2);

struct LensData {
    long long r = 0;
    long long lensParam = 0;       // in [0, r)
    Rational phase1, phase2;       // h_{1/r} = diag(e^{2 pi i phase1}, e^{2 pi i phase2})
    bool periodic = false;         // h_{1/r}^r is the identity
    bool fixedPointFree = false;
};

LensData lensData(int p, int q);

// Samples of the tangent bundle pushed through psi and projected to S^3.
Report matchSphereSection(const KnotMapConfig& C, int samples, unsigned seed = 0);

}  // namespace tk
