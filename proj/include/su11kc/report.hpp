#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace su11kc {

/// One verification entry: an identity or residual check with its measured
/// error against a fixed tolerance. Symbolic identities use tolerance 0 and
/// report the residual term count.
struct CheckEntry {
    std::string check_name;
    std::map<std::string, double> parameters;
    double measured_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Ordered collection of check entries; passes overall iff all entries pass.
/// Reports from independent checks merge by concatenation, so the harness may
/// evaluate them in any order.
struct VerificationReport {
    std::vector<CheckEntry> entries;

    void add(std::string name, std::map<std::string, double> parameters,
             double measured_error, double tolerance) {
        entries.push_back({std::move(name), std::move(parameters),
                           measured_error, tolerance,
                           measured_error <= tolerance});
    }

    void merge(const VerificationReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    bool passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

}  // namespace su11kc
