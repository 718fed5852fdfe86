// Acceptance suite: one criterion per stanza, one PASS/FAIL line each, exit
// nonzero if any fail. Tolerances are pinned here, in code.

#include "su11kc/cli.hpp"
#include "su11kc/generators.hpp"
#include "su11kc/ladder.hpp"
#include "su11kc/serialize.hpp"
#include "su11kc/special_functions.hpp"
#include "su11kc/spectrum.hpp"
#include "su11kc/states.hpp"

#include "oracles.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace su11kc;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool passed, double measured,
            double tolerance) {
    if (!passed) ++failures;
    std::printf("[%s] criterion %2d: %s (measured %.3e, tolerance %.1e)\n",
                passed ? "PASS" : "FAIL", id, label.c_str(), measured, tolerance);
}

const std::array<std::pair<int, double>, 4> kSpectralGrid{
    {{-1, 0.5}, {1, 0.5}, {2, 0.9}, {-3, 1.4}}};

int run_cli(const std::string& args) {
    const std::string command =
        std::string(SU11KC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture_cli(const std::string& args) {
    const std::string command = std::string(SU11KC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    std::string output;
    std::array<char, 4096> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    pclose(pipe);
    return output;
}

// 1. su(1,1) commutators, exact.
void criterion_commutators() {
    const VerificationReport algebra = verify_algebra();
    double worst = 0.0;
    bool passed = true;
    for (const CheckEntry& entry : algebra.entries) {
        if (entry.check_name.rfind("commutator_", 0) != 0) continue;
        worst = std::max(worst, entry.measured_error);
        passed = passed && entry.passed && entry.tolerance == 0.0;
    }
    report(1, "su(1,1) commutators exact in the indeterminates", passed, worst, 0.0);
}

// 2. Schroedinger factorization identity, exact.
void criterion_factorization() {
    const VerificationReport algebra = verify_algebra();
    double worst = 0.0;
    bool passed = true;
    int seen = 0;
    for (const CheckEntry& entry : algebra.entries) {
        if (entry.check_name.rfind("factorization_", 0) != 0) continue;
        ++seen;
        worst = std::max(worst, entry.measured_error);
        passed = passed && entry.passed && entry.tolerance == 0.0;
    }
    report(2, "factorization (B-+ -+ 1)B+- = RadialH + (g^2/xi^2 +- g/xi)",
           passed && seen == 2, worst, 0.0);
}

// 3. Sigma3 and Casimir eigen-equations, m <= 10, four (k, gamma) pairs.
void criterion_eigen() {
    double worst = 0.0;
    for (const auto& [k, gamma] : kSpectralGrid) {
        const VerificationReport r = check_eigen(s_of(k, gamma), gamma, 10);
        for (const CheckEntry& entry : r.entries)
            if (entry.check_name == "sigma3_eigen" || entry.check_name == "casimir_eigen")
                worst = std::max(worst, entry.measured_error);
    }
    report(3, "Sigma3 and Casimir eigenvalues (coefficient space)", worst <= 1e-10,
           worst, 1e-10);
}

// 4. Ladder relations in both sectors, magnitudes against q_coeff.
void criterion_ladder() {
    double worst = 0.0;
    double worst_annihilation = 0.0;
    for (const auto& [k, gamma] : kSpectralGrid) {
        const double s = s_of(k, gamma);
        const VerificationReport r = check_ladder(s, gamma / s, 10);
        for (const CheckEntry& entry : r.entries) {
            if (entry.check_name.find("annihilation") != std::string::npos)
                worst_annihilation = std::max(worst_annihilation, entry.measured_error);
            else
                worst = std::max(worst, entry.measured_error);
        }
    }
    const bool passed = worst <= 1e-10 && worst_annihilation <= 1e-12;
    std::ostringstream label;
    label << "ladder colinearity and |<chi^(m+-1), Sigma+- chi^m>| = Q+- "
          << "(annihilation " << worst_annihilation << " <= 1e-12)";
    report(4, label.str(), passed, worst, 1e-10);
}

// 5. Fixed-xi orthonormality by Gamma sums, with the quadrature oracle.
void criterion_orthonormality() {
    double worst_gram = 0.0;
    double worst_quad = 0.0;
    for (const auto& [k, gamma] : kSpectralGrid) {
        const double s = s_of(k, gamma);
        const double xi = gamma / s;
        const auto gram = gram_matrix(s, xi, 10);
        for (size_t i = 0; i < gram.size(); ++i)
            for (size_t j = 0; j < gram.size(); ++j)
                worst_gram = std::max(
                    worst_gram, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
        for (int m : {0, 3, 10}) {
            for (int mp : {0, 10}) {
                const QuasiPolynomial a = normalize(basis_state(m, s, xi));
                const QuasiPolynomial b = normalize(basis_state(mp, s, xi));
                worst_quad = std::max(
                    worst_quad,
                    std::abs(static_cast<double>(inner_product(a, b)) -
                             test::quadrature_inner_product(a, b, 40)));
            }
        }
    }
    const bool passed = worst_gram <= 1e-10 && worst_quad <= 1e-9;
    report(5, "Gram matrix = identity (quadrature oracle " +
                  format_sig9(worst_quad) + " <= 1e-9)",
           passed, worst_gram, 1e-10);
}

// 6. Closed-form spectrum: frozen spot values, E(n=0) = s/|k|, Balmer limit.
void criterion_spectrum() {
    double worst = 0.0;
    // nine-digit spot values, independently confirmed before freezing
    worst = std::max(worst, std::abs(energy_of({-1, 0, 0.5, 1.0}).energy - 0.866025404));
    worst = std::max(worst, std::abs(energy_of({-1, 1, 0.5, 1.0}).energy - 0.965925826));
    bool passed = worst <= 5e-10;

    double worst_ground = 0.0;
    for (const auto& [k, gamma] : kSpectralGrid) {
        const double s = s_of(k, gamma);
        const double e0 = energy_of({k, 0, gamma, 1.0}).energy;
        worst_ground = std::max(worst_ground,
                                std::abs(e0 - s / std::abs(k)) / (s / std::abs(k)));
        for (int n = 0; n <= 5; ++n) {
            // closed form recomputed locally, plus exact k -> -k degeneracy
            const double nu = n + std::sqrt(double(k) * k - gamma * gamma);
            const double want = 1.0 / std::sqrt(1.0 + gamma * gamma / (nu * nu));
            const double got = energy_of({k, n, gamma, 1.0}).energy;
            worst_ground = std::max(worst_ground, std::abs(got - want) / want);
            passed = passed && got == energy_of({-k, n, gamma, 1.0}).energy;
        }
    }
    passed = passed && worst_ground <= 1e-12;

    double worst_balmer = 0.0;
    for (int N : {1, 2, 3}) {
        worst_balmer = std::max(worst_balmer, nonrel_limit_check(N, -1, 1e-3));
        if (N >= 2) worst_balmer = std::max(worst_balmer, nonrel_limit_check(N, 2, 1e-3));
    }
    passed = passed && worst_balmer <= 1e-2;

    report(6, "spectrum spot values, E(0) = s/|k| (" + format_sig9(worst_ground) +
                  " <= 1e-12), Balmer limit (" + format_sig9(worst_balmer) + " <= 1e-2)",
           passed, worst, 5e-10);
}

// 7. Coupled first-order system and D-transform round trip.
void criterion_dirac() {
    double worst = 0.0;
    for (int k : {-2, -1, 1, 2}) {
        for (double gamma : {0.3, 0.5, 0.9}) {
            for (int n = 0; n <= 5; ++n) {
                if (!state_exists(n, k)) continue;
                const VerificationReport r = check_dirac_system({k, n, gamma, 1.0});
                for (const CheckEntry& entry : r.entries)
                    worst = std::max(worst, entry.measured_error);
            }
        }
    }
    report(7, "Dirac system residuals and D round trip (n <= 5)", worst <= 1e-8,
           worst, 1e-8);
}

// 8. Ground-state characterization, including the CLI surface.
void criterion_ground_state() {
    double worst = 0.0;
    bool passed = true;
    for (const auto& [k, gamma] : kSpectralGrid) {
        if (k > 0) continue;  // n = 0 exists only for k < 0
        const QuantumNumbers q{k, 0, gamma, 1.0};
        const SpinorState state = make_spinor(q);
        passed = passed && state.upper.is_zero();
        const Binding binding{state.params.s, state.params.xi, gamma};
        worst = std::max(
            worst, static_cast<double>(qp_norm(apply_diffop(
                       build_generator(Generator::SigmaMinus), state.lower, binding))));
        worst = std::max(
            worst, static_cast<double>(qp_norm(apply_diffop(
                       build_generator(Generator::BMinus), state.lower, binding))));
    }
    // CLI: F1 column all zeros for n = 0
    const std::string csv =
        capture_cli("wavefunction --gamma 0.5 --k -1 --n 0 --samples 20 --rho-max 8");
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    passed = passed && line == "rho,F1,F2";
    while (std::getline(lines, line)) {
        const size_t c1 = line.find(',');
        const size_t c2 = line.find(',', c1 + 1);
        passed = passed && line.substr(c1 + 1, c2 - c1 - 1) == "0";
    }
    report(8, "Sigma- psi0 = B- psi0 = 0 and null upper component (CLI honored)",
           passed && worst <= 1e-12, worst, 1e-12);
}

// 9. Independent oracles: finite differences and the Laguerre recurrence.
void criterion_oracles() {
    double worst_fd = 0.0;
    {
        const double s = s_of(-1, 0.5);
        const double xi = 0.5 / s;
        const Binding binding{s, xi, 0.5};
        const FdGrid grid{0.5, 20.0, 801};
        const std::vector<double> rho = fd_grid_points(grid);
        for (Generator which : {Generator::Sigma3, Generator::SigmaPlus,
                                Generator::SigmaMinus, Generator::BPlus,
                                Generator::RadialH}) {
            const QuasiPolynomial chi = basis_state(2, s, xi);
            const std::vector<double> fd =
                apply_fd(build_generator(which), chi, binding, grid);
            const QuasiPolynomial image = apply_diffop(build_generator(which), chi, binding);
            std::vector<double> exact(rho.size());
            double sup = 0.0;
            for (size_t i = 0; i < rho.size(); ++i) {
                exact[i] = static_cast<double>(image(rho[i]));
                sup = std::max(sup, std::abs(exact[i]));
            }
            for (int i = 8; i < grid.count - 8; ++i)
                worst_fd = std::max(worst_fd, std::abs(fd[i] - exact[i]) / sup);
        }
    }

    // Kummer against the Laguerre three-term recurrence, relative sup norm
    // over the z grid per (n, b).
    double worst_kummer = 0.0;
    const double zs[] = {0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 48.0};
    for (const auto& [k, gamma] : kSpectralGrid) {
        const double b = 2.0 * s_of(k, gamma);
        for (int n = 0; n <= 10; ++n) {
            double fact = 1.0;
            for (int i = 2; i <= n; ++i) fact *= i;
            const double norm = fact / test::pochhammer(b, n);
            double sup = 0.0, diff = 0.0;
            for (double z : zs) {
                const double kum = kummer_m({double(-n), b, z});
                const double lag = norm * test::laguerre_recurrence(n, b - 1.0, z);
                sup = std::max({sup, std::abs(kum), std::abs(lag)});
                diff = std::max(diff, std::abs(kum - lag));
            }
            worst_kummer = std::max(worst_kummer, diff / sup);
        }
    }

    report(9, "apply_diffop vs finite differences (" + format_sig9(worst_fd) +
                  " <= 1e-5); Kummer vs Laguerre recurrence",
           worst_fd <= 1e-5 && worst_kummer <= 1e-12, worst_kummer, 1e-12);
}

// 10. Diagram layout invariants and the end-to-end verify exit codes.
void criterion_diagram_and_cli() {
    bool passed = true;
    const DiagramData data = level_diagram(0.5, 3, 6);
    for (const DiagramLevel& level : data.levels) {
        if (level.k > 0) passed = passed && level.N > std::abs(level.k);
        passed = passed && (level.dashed == (level.n == 0));
        if (level.n == 0) passed = passed && level.k < 0;
    }
    for (const DiagramLevel& a : data.levels) {
        for (const DiagramLevel& b : data.levels) {
            if (a.k == b.k && a.N < b.N) passed = passed && a.e_over_m < b.e_over_m;
            if (a.N == b.N && std::abs(a.k) < std::abs(b.k))
                passed = passed && a.e_over_m < b.e_over_m;
        }
    }
    // column k = -1 has a level at N = 1; column k = +1 does not
    bool minus_at_1 = false, plus_at_1 = false;
    for (const DiagramLevel& level : data.levels) {
        if (level.k == -1 && level.N == 1) minus_at_1 = true;
        if (level.k == 1 && level.N == 1) plus_at_1 = true;
    }
    passed = passed && minus_at_1 && !plus_at_1;

    const int ok = run_cli("verify --gamma 0.5 --k -1 --n-max 5");
    const int perturbed = run_cli("verify --gamma 0.5 --k -1 --n-max 5 --perturb");
    passed = passed && ok == 0 && perturbed == 1;

    report(10, "diagram layout; verify exit 0, perturbed exit 1 (codes " +
                   std::to_string(ok) + "/" + std::to_string(perturbed) + ")",
           passed, passed ? 0.0 : 1.0, 0.0);
}

}  // namespace

int main() {
    criterion_commutators();
    criterion_factorization();
    criterion_eigen();
    criterion_ladder();
    criterion_orthonormality();
    criterion_spectrum();
    criterion_dirac();
    criterion_ground_state();
    criterion_oracles();
    criterion_diagram_and_cli();

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
