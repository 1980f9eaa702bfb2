#pragma once

#include <array>
#include <vector>

#include "torusknot/hypergeometric.hpp"
#include "torusknot/triangle_group.hpp"

namespace tk {

// Complex Moebius map used for the normalizers of the Schwarz map.
struct ComplexMoebius {
    cplx a = 1, b = 0, c = 0, d = 1;

    cplx operator()(cplx w) const { return (a * w + b) / (c * w + d); }
    cplx derivative(cplx w) const {
        cplx den = c * w + d;
        return (a * d - b * c) / (den * den);
    }
    ComplexMoebius inverse() const { return {d, -b, -c, a}; }
    // Unique map sending w[k] to z[k].
    static ComplexMoebius fromThreePoints(const std::array<cplx, 3>& w, const std::array<cplx, 3>& z);
};

struct ThetaValue {
    cplx value;
    cplx derivative;
    cplx reducedPoint;
    GroupWord word;  // word(reducedPoint) = z
};

// Logarithms of theta, theta' and theta - 1, each written as rest + k * logLocal,
// where logLocal is the log of the chart's local coordinate at a vertex.
// Keeping the integer k separate lets radicands cancel exactly at a and b.
struct ThetaLogs {
    cplx restTheta, restPrime, restMinus1;
    int kTheta = 0, kPrime = 0, kMinus1 = 0;
    cplx logLocal;
    bool hasLocal = false;
};

// Newton state that can warm-start a nearby evaluation.
struct ThetaHint {
    int chart = -1;  // 0 and 1 are the local charts at a and b
    bool atVertexChart() const { return chart == 0 || chart == 1; }
    cplx var;
    bool reflected = false;
};

struct ThetaDetail {
    ThetaValue tv;
    ThetaLogs logs;
    ThetaHint hint;
    Moebius toReduced;  // maps z to the reduced point
    double vertexDistance = 0;  // first-order distance from z to the nearest orbit point of a or b
};

class Uniformizer {
public:
    explicit Uniformizer(const TriangleGroupData& G);

    const TriangleGroupData& group() const { return G_; }
    double aH() const { return a_; }
    double cH() const { return c_; }
    const ComplexMoebius& normalizer() const { return N_; }
    cplx cuspSlope() const { return Ac_; }  // z ~ cuspSlope * log(-t) near the cusp

    // Inverse of theta on the closed upper half t-plane, onto the closure of the
    // base triangle; Im t < 0 is sent to its mirror image in D1.
    cplx schwarzMap(cplx t) const;
    ThetaValue theta(cplx z) const;
    cplx thetaPrime(cplx z) const { return theta(z).derivative; }
    ThetaDetail thetaDetailed(cplx z, const ThetaHint* hint = nullptr) const;

    // Consistency of the chart gluing at points covered by several charts.
    double chartOverlapError() const;
    // Largest convergence ratio over a dense sample of the closed upper half-plane.
    double worstCoverageRatio() const;

private:
    struct ChartEval {
        cplx z, dzdv, t, dtdv;
    };
    enum Chart { A = 0, B = 1, C = 2, Dc = 3 };

    ChartEval evalChart(int chart, cplx v) const;
    double ratio(int chart, cplx t) const;
    int bestChart(cplx t) const;
    cplx varOf(int chart, cplx t) const;
    ThetaHint solve(cplx zTarget, const ThetaHint* hint) const;
    ThetaHint newton(cplx zTarget, int chart, cplx v) const;

    // Each chart's series in its local coordinate.
    ValueDeriv ratioAtZero(cplx t) const;   // F2/F1
    ValueDeriv ratioAtOne(cplx s) const;    // G2/G1, s = 1 - t
    ValueDeriv cuspCorrection(cplx w) const;  // S1/S0, w = 1/t

    TriangleGroupData G_;
    double a_, c_;
    PowerSeries F1_, F2_, F1pf_, F2pf_;  // at 0 and in Pfaff form
    PowerSeries G1_, G2_, G1pf_, G2pf_;  // at 1
    double aF1pf_, aF2pf_, aG1pf_, aG2pf_;  // Pfaff prefactor exponents
    PowerSeries S0_, S1_;                // at infinity (logarithmic case)
    PowerSeries Y1_, Y2_;                // Taylor patch at tD
    cplx tD_;
    ComplexMoebius N_, NB_;
    cplx Ac_, Bc_;
    struct Seed {
        cplx z;
        int chart;
        cplx var;
    };
    std::vector<Seed> seeds_;
    double seedTop_ = 0;
};

}  // namespace tk
