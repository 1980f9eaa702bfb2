#pragma once

#include "torusknot/forms.hpp"
#include "torusknot/report.hpp"

namespace tk {

struct SuiteOptions {
    double tol = 0;      // when positive, every threshold is raised to at least tol
    unsigned seed = 0;
};

Report groupSuite(const TriangleGroupData& G, const SuiteOptions& opt = {});
Report formsSuite(const FormEvaluator& E, const SuiteOptions& opt = {});
Report knotmapSuite(const FormEvaluator& E, const SuiteOptions& opt = {});

// Raises thresholds to tol and recomputes pass flags of numeric checks.
Report loosen(const Report& rep, double tol);

// Seeded sample of `count` freely reduced words of length 1..maxLen.
std::vector<GroupWord> randomWords(std::mt19937_64& rng, int count, int maxLen);

}  // namespace tk
