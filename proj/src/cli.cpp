#include "su11kc/cli.hpp"

#include "su11kc/generators.hpp"
#include "su11kc/ladder.hpp"
#include "su11kc/serialize.hpp"
#include "su11kc/spectrum.hpp"
#include "su11kc/states.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace su11kc::cli {

namespace {

int write_output(const OutputSpec& out, const std::string& content) {
    if (out.path == "-") {
        std::cout << content;
        return kExitSuccess;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << out.path << "'\n";
        return kExitInvalidInput;
    }
    file << content;
    return kExitSuccess;
}

int invalid(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitInvalidInput;
}

}  // namespace

int cmd_spectrum(double gamma, int k, int n_max, double mass, const OutputSpec& out) {
    try {
        if (n_max < 0 || n_max > 50) return invalid("n-max must be in [0, 50]");
        if (out.format == Format::svg) return invalid("spectrum output is csv or json");
        std::vector<SpectrumRow> rows;
        for (int n = 0; n <= n_max; ++n) {
            QuantumNumbers q{k, n, gamma, mass};
            const SpectralParams p = energy_of(q);
            rows.push_back({n, q.principal(), p.s, p.xi, p.energy / mass});
        }
        const std::map<std::string, double> parameters{
            {"gamma", gamma}, {"k", double(k)}, {"n_max", double(n_max)}, {"mass", mass}};
        return write_output(out, out.format == Format::csv
                                     ? spectrum_csv(rows)
                                     : spectrum_json(parameters, rows));
    } catch (const std::exception& e) {
        return invalid(e.what());
    }
}

int cmd_wavefunction(double gamma, int k, int n, WaveComponent component,
                     double rho_max, int samples, const OutputSpec& out) {
    try {
        if (samples < 2) return invalid("samples must be >= 2");
        if (!(rho_max > 0.0)) return invalid("rho-max must be positive");
        if (out.format == Format::svg) return invalid("wavefunction output is csv or json");
        const SpinorState state = make_spinor(QuantumNumbers{k, n, gamma, 1.0});

        std::vector<double> rho(static_cast<size_t>(samples));
        std::vector<double> f1(rho.size()), f2(rho.size());
        for (int i = 0; i < samples; ++i) {
            rho[i] = rho_max * static_cast<double>(i) / (samples - 1);
            f1[i] = static_cast<double>(state.upper(rho[i]));
            f2[i] = static_cast<double>(state.lower(rho[i]));
        }

        const std::vector<double>* f1_col =
            component == WaveComponent::Lower ? nullptr : &f1;
        const std::vector<double>* f2_col =
            component == WaveComponent::Upper ? nullptr : &f2;
        const std::map<std::string, double> parameters{{"gamma", gamma},
                                                       {"k", double(k)},
                                                       {"n", double(n)},
                                                       {"rho_max", rho_max},
                                                       {"samples", double(samples)}};
        return write_output(out, out.format == Format::csv
                                     ? wavefunction_csv(rho, f1_col, f2_col)
                                     : wavefunction_json(parameters, rho, f1_col, f2_col));
    } catch (const std::exception& e) {
        return invalid(e.what());
    }
}

int cmd_verify(double gamma, int k, int n_max, const OutputSpec& out, bool perturb) {
    try {
        if (n_max < 0 || n_max > 20) return invalid("n-max must be in [0, 20]");
        if (out.format != Format::json) return invalid("verify output is json");
        QuantumNumbers{k, 0, gamma, 1.0}.validate();

        const double s = s_of(k, gamma);
        const double xi0 = gamma / s;
        const int m_max = std::min(n_max, 20);

        VerificationReport report = verify_algebra(perturb);
        report.merge(check_ladder(s, xi0, m_max));
        report.merge(check_eigen(s, gamma, m_max));
        report.merge(check_hermiticity(s, xi0, 10));
        for (int n = 0; n <= n_max; ++n) {
            QuantumNumbers q{k, n, gamma, 1.0};
            report.merge(check_b_equivalence(q));
            if (state_exists(n, k)) report.merge(check_dirac_system(q));
        }

        const std::map<std::string, double> parameters{{"gamma", gamma},
                                                       {"k", double(k)},
                                                       {"n_max", double(n_max)},
                                                       {"perturb", perturb ? 1.0 : 0.0}};
        const int write_rc = write_output(out, report_json(report, parameters));
        if (write_rc != kExitSuccess) return write_rc;
        return report.passed() ? kExitSuccess : kExitVerifyFailed;
    } catch (const std::exception& e) {
        return invalid(e.what());
    }
}

int cmd_diagram(double gamma, int k_max, int n_max, const OutputSpec& out) {
    try {
        if (out.format == Format::json) return invalid("diagram output is csv or svg");
        const DiagramData data = level_diagram(gamma, k_max, n_max);
        return write_output(out, out.format == Format::csv ? diagram_csv(data)
                                                           : diagram_svg(data));
    } catch (const std::exception& e) {
        return invalid(e.what());
    }
}

}  // namespace su11kc::cli
