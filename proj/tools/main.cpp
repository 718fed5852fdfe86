#include "su11kc/cli.hpp"

#include <CLI11.hpp>

#include <clocale>
#include <map>
#include <string>

namespace {

using su11kc::cli::Format;
using su11kc::cli::OutputSpec;
using su11kc::cli::WaveComponent;

const std::map<std::string, Format> kFormatNames{
    {"json", Format::json}, {"csv", Format::csv}, {"svg", Format::svg}};
const std::map<std::string, WaveComponent> kComponentNames{
    {"upper", WaveComponent::Upper},
    {"lower", WaveComponent::Lower},
    {"both", WaveComponent::Both}};

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"su(1,1) ladder-operator solver for the relativistic "
                 "Kepler-Coulomb bound states"};
    app.require_subcommand(1);

    double gamma = 0.5;
    int k = -1;
    double mass = 1.0;
    std::string out_path = "-";

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Bound-state energy table");
    int n_max = 5;
    Format spectrum_format = Format::csv;
    spectrum->add_option("--gamma", gamma, "Coulomb coupling (0 < gamma < |k|)")
        ->capture_default_str();
    spectrum->add_option("--k", k, "Dirac quantum number (nonzero)")->capture_default_str();
    spectrum->add_option("--n-max", n_max, "Highest radial quantum number (<= 50)")
        ->capture_default_str();
    spectrum->add_option("--mass", mass, "Mass (energy unit)")->capture_default_str();
    spectrum->add_option("--format", spectrum_format, "csv or json")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->capture_default_str();
    spectrum->add_option("--out", out_path, "Output path ('-' for stdout)")
        ->capture_default_str();

    // wavefunction
    auto* wavefunction =
        app.add_subcommand("wavefunction", "Sampled radial spinor components");
    int n = 0;
    WaveComponent component = WaveComponent::Both;
    double rho_max = 20.0;
    int samples = 200;
    Format wave_format = Format::csv;
    wavefunction->add_option("--gamma", gamma, "Coulomb coupling")->capture_default_str();
    wavefunction->add_option("--k", k, "Dirac quantum number")->capture_default_str();
    wavefunction->add_option("--n", n, "Radial quantum number")->capture_default_str();
    wavefunction->add_option("--component", component, "upper, lower or both")
        ->transform(CLI::CheckedTransformer(kComponentNames, CLI::ignore_case))
        ->capture_default_str();
    wavefunction->add_option("--rho-max", rho_max, "Largest sampled rho")
        ->capture_default_str();
    wavefunction->add_option("--samples", samples, "Number of sample points (>= 2)")
        ->capture_default_str();
    wavefunction->add_option("--format", wave_format, "csv or json")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->capture_default_str();
    wavefunction->add_option("--out", out_path, "Output path")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run the full operator-algebra and state verification suite");
    int verify_n_max = 5;
    bool perturb = false;
    verify->add_option("--gamma", gamma, "Coulomb coupling")->capture_default_str();
    verify->add_option("--k", k, "Dirac quantum number")->capture_default_str();
    verify->add_option("--n-max", verify_n_max, "Grid size (<= 20)")->capture_default_str();
    verify->add_option("--out", out_path, "Report path (JSON)")->capture_default_str();
    verify->add_flag("--perturb", perturb)->group("");  // hidden test hook

    // diagram
    auto* diagram = app.add_subcommand("diagram", "Level diagram (csv or svg)");
    int k_max = 3;
    int big_n_max = 5;
    Format diagram_format = Format::svg;
    diagram->add_option("--gamma", gamma, "Coulomb coupling (0 < gamma < 1)")
        ->capture_default_str();
    diagram->add_option("--k-max", k_max, "Largest |k| column (<= 20)")
        ->capture_default_str();
    diagram->add_option("--N-max", big_n_max, "Largest principal quantum number (<= 20)")
        ->capture_default_str();
    diagram->add_option("--format", diagram_format, "svg or csv")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->capture_default_str();
    diagram->add_option("--out", out_path, "Output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : su11kc::cli::kExitInvalidInput;
    }

    if (spectrum->parsed())
        return su11kc::cli::cmd_spectrum(gamma, k, n_max, mass,
                                         {spectrum_format, out_path});
    if (wavefunction->parsed())
        return su11kc::cli::cmd_wavefunction(gamma, k, n, component, rho_max, samples,
                                             {wave_format, out_path});
    if (verify->parsed())
        return su11kc::cli::cmd_verify(gamma, k, verify_n_max,
                                       {Format::json, out_path}, perturb);
    if (diagram->parsed())
        return su11kc::cli::cmd_diagram(gamma, k_max, big_n_max,
                                        {diagram_format, out_path});
    return su11kc::cli::kExitInvalidInput;
}
