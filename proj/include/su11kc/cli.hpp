#pragma once

#include <string>

namespace su11kc::cli {

/// Exit-code contract shared by every subcommand:
/// 0 success, 1 verification failure, 2 invalid input.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;

enum class Format { json, csv, svg };

/// Destination of a command's machine-readable output; path "-" writes to
/// standard output. svg is valid only for the diagram command.
struct OutputSpec {
    Format format = Format::csv;
    std::string path = "-";
};

enum class WaveComponent { Upper, Lower, Both };

int cmd_spectrum(double gamma, int k, int n_max, double mass, const OutputSpec& out);
int cmd_wavefunction(double gamma, int k, int n, WaveComponent component,
                     double rho_max, int samples, const OutputSpec& out);
int cmd_verify(double gamma, int k, int n_max, const OutputSpec& out,
               bool perturb = false);
int cmd_diagram(double gamma, int k_max, int n_max, const OutputSpec& out);

}  // namespace su11kc::cli
