#pragma once

#include <string>
#include <vector>

namespace tk {

struct Check {
    std::string name;
    double measured = 0;
    double threshold = 0;
    bool pass = false;
};

struct Report {
    std::vector<Check> checks;

    // Passes when measured <= threshold.
    void add(const std::string& name, double measured, double threshold) {
        checks.push_back({name, measured, threshold, measured <= threshold});
    }
    // Boolean check recorded as measured 0 (pass) or 1 (fail) against threshold 0.
    void addBool(const std::string& name, bool ok) { checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok}); }
    void append(const Report& other, const std::string& prefix = "") {
        for (auto c : other.checks) {
            c.name = prefix + c.name;
            checks.push_back(c);
        }
    }
    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace tk
