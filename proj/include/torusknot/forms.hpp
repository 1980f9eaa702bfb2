#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "torusknot/knot_group.hpp"
#include "torusknot/report.hpp"
#include "torusknot/uniformizer.hpp"

namespace tk {

enum class FormTag { A = 0, B = 1, Inf = 2 };
std::string toString(FormTag t);
FormTag parseFormTag(const std::string& s);  // "a", "b", "inf"

inline constexpr std::array<FormTag, 3> kAllTags{FormTag::A, FormTag::B, FormTag::Inf};

// Continuous logarithms of f_a, f_b, f_inf at one point. A zero of a form
// shows up as a real part of -infinity.
using FormLogs = std::array<cplx, 3>;

struct RelationConstants {
    cplx ca, cb;
    double worstResidual = 0;  // over the validation points
};

// Thrown when path continuation cannot step past a radicand zero.
struct PathStuck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FormEvaluator {
public:
    explicit FormEvaluator(const TriangleGroupData& G);

    const TriangleGroupData& group() const { return U_.group(); }
    const Uniformizer& uniformizer() const { return U_; }
    cplx basePoint() const { return base_; }
    Rational degree(FormTag t) const;
    const Character& character(FormTag t) const;

    FormLogs evalLogs(cplx z) const;
    std::array<cplx, 3> evalAll(cplx z) const;
    cplx evalF(FormTag t, cplx z) const;
    // f(z) times w^k, using the lifted argument of w.
    cplx evalForm(FormTag t, const TangentPoint& pt) const;
    // Logarithms of the three forms at a tangent point.
    FormLogs evalFormLogs(const TangentPoint& pt) const;

    double automorphyResidual(FormTag t, const GroupWord& g, const TangentPoint& pt) const;
    // |f^r / radicand - 1| with the radicand built from theta directly.
    double radicandResidual(FormTag t, cplx z) const;

private:
    struct PathState {
        cplx z;
        ThetaDetail detail;
        FormLogs principal;  // sums of principal logs of the radicands
        FormLogs continued;  // continuous logs of the radicands
    };
    PathState stateAt(cplx z, const ThetaHint* hint) const;
    void advance(PathState& s, cplx target) const;
    FormLogs continueTo(cplx z) const;

    Uniformizer U_;
    StandardCharacters chars_;
    cplx base_;
    PathState baseState_;
};

RelationConstants fitRelationConstants(const FormEvaluator& E, unsigned seed = 0, int validationPoints = 100);

// Argument-principle count of zeros of f inside the closed polyline.
int windingNumber(const std::function<cplx(cplx)>& f, const std::vector<cplx>& contour, int samples);
std::vector<cplx> circleContour(cplx center, double radius, int vertices = 64);

// Monomial omega_a^i omega_b^j: exact rational bookkeeping.
Report verifyDegreeIdentity(const FormEvaluator& E, int i, int j);
// Form logs on a 40x40 grid over D1 cut at Im z <= 10, reusable across combinations.
struct FormGrid {
    std::vector<cplx> z;
    std::vector<FormLogs> logs;
};
FormGrid buildFormGrid(const FormEvaluator& E, int n = 40);
// Combination c1 omega_b^q + c2 omega_a^p: locates its zero in D1 and counts.
Report verifyDegreeIdentity(const FormEvaluator& E, cplx c1, cplx c2, const FormGrid* grid = nullptr);

// Order of vanishing at the cusp from the decay of |f(x + iY)|.
double cuspOrder(const FormEvaluator& E, const std::function<cplx(cplx)>& logf, double x = 0.1);

}  // namespace tk
