#pragma once

#include "su11kc/report.hpp"
#include "su11kc/spectrum.hpp"

#include <map>
#include <string>
#include <vector>

namespace su11kc {

/// Fixed 9-significant-digit, C-locale number formatting used by every
/// machine-readable output: below the acceptance tolerances, above float
/// noise churn, and byte-stable across runs.
std::string format_sig9(double value);

/// Nearest double to the 9-significant-digit decimal form of value. JSON
/// output rounds through this so serialized numbers never carry more than
/// nine significant digits.
double round_sig9(double value);

struct SpectrumRow {
    int n = 0;
    int N = 0;
    double s = 0.0;
    double xi = 0.0;
    double e_over_m = 0.0;
};

std::string spectrum_csv(const std::vector<SpectrumRow>& rows);
std::string spectrum_json(const std::map<std::string, double>& parameters,
                          const std::vector<SpectrumRow>& rows);

/// Columns rho,F1,F2 (or the single requested component).
std::string wavefunction_csv(const std::vector<double>& rho,
                             const std::vector<double>* f1,
                             const std::vector<double>* f2);
std::string wavefunction_json(const std::map<std::string, double>& parameters,
                              const std::vector<double>& rho,
                              const std::vector<double>* f1,
                              const std::vector<double>* f2);

/// Schema: {"version", "parameters", "entries":[{"check_name",
/// "parameters", "measured_error", "tolerance", "passed"}], "passed"}.
std::string report_json(const VerificationReport& report,
                        const std::map<std::string, double>& parameters);

std::string diagram_csv(const DiagramData& data);
std::string diagram_svg(const DiagramData& data);

}  // namespace su11kc
