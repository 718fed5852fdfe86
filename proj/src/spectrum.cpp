#include "su11kc/spectrum.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace su11kc {

int QuantumNumbers::principal() const { return n + std::abs(k); }

double QuantumNumbers::j_total() const { return std::abs(k) - 0.5; }

void QuantumNumbers::validate() const {
    if (k == 0) throw std::domain_error("QuantumNumbers: k must be nonzero");
    if (n < 0) throw std::domain_error("QuantumNumbers: n must be nonnegative");
    if (!(gamma > 0.0) || !(gamma < std::abs(k)))
        throw std::domain_error("QuantumNumbers: requires 0 < gamma < |k|");
    if (!(mass > 0.0)) throw std::domain_error("QuantumNumbers: mass must be positive");
}

bool state_exists(int n, int k) { return n >= 1 || k < 0; }

double s_of(int k, double gamma) {
    if (k == 0) throw std::domain_error("s_of: k must be nonzero");
    if (!(gamma > 0.0))
        throw std::domain_error("s_of: requires gamma > 0");
    if (!(gamma < std::abs(k)))
        throw std::domain_error("s_of: requires gamma < |k| (s would be imaginary)");
    return std::sqrt(static_cast<double>(k) * k - gamma * gamma);
}

SpectralParams energy_of(const QuantumNumbers& q) {
    q.validate();
    SpectralParams p;
    p.s = s_of(q.k, q.gamma);
    p.nu = q.n + p.s;
    p.xi = q.gamma / p.nu;
    p.mu = p.s - 1.0;
    p.energy = q.mass / std::sqrt(1.0 + q.gamma * q.gamma / (p.nu * p.nu));
    p.alpha1 = q.mass + p.energy;
    p.alpha2 = q.mass - p.energy;
    return p;
}

bool component_match_check(const QuantumNumbers& q) {
    if (q.n < 1) throw std::domain_error("component_match_check: requires n >= 1");
    q.validate();
    const double s = s_of(q.k, q.gamma);
    const double nu_lower = q.n + s;              // (n_s = n, s)
    const double nu_upper = (q.n - 1) + (s + 1);  // (n_{s+1} = n-1, s+1)
    const double e_lower = q.mass / std::sqrt(1.0 + q.gamma * q.gamma / (nu_lower * nu_lower));
    const double e_upper = q.mass / std::sqrt(1.0 + q.gamma * q.gamma / (nu_upper * nu_upper));
    return std::abs(e_lower - e_upper) <= 1e-12 * e_lower;
}

DiagramData level_diagram(double gamma, int k_max, int N_max) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw std::domain_error("level_diagram: requires 0 < gamma < 1");
    if (k_max < 1 || k_max > 20 || N_max < 1 || N_max > 20)
        throw std::domain_error("level_diagram: k_max and N_max must be in [1, 20]");

    DiagramData data;
    data.gamma = gamma;
    data.k_max = k_max;
    data.n_max = N_max;

    // Column order pairs the two k signs per |k|: -1, +1, -2, +2, ...
    for (int abs_k = 1; abs_k <= k_max; ++abs_k) {
        for (int k : {-abs_k, abs_k}) {
            for (int N = abs_k; N <= N_max; ++N) {
                const int n = N - abs_k;
                if (!state_exists(n, k)) continue;
                QuantumNumbers q{k, n, gamma, 1.0};
                DiagramLevel level;
                level.k = k;
                level.N = N;
                level.n = n;
                level.e_over_m = energy_of(q).energy;
                level.dashed = (n == 0);
                data.levels.push_back(level);
            }
        }
    }

    // Representative operator arrows on the first column pair: Sigma+-
    // vertical in the k<0 column, Xi+- vertical in the k>0 column, A+-
    // horizontal between the columns.
    const int abs_k = 1;
    if (k_max >= abs_k && N_max >= abs_k + 2) {
        const int lo = abs_k + 1, hi = abs_k + 2;
        data.arrows.push_back({"Sigma+", -abs_k, lo, -abs_k, hi});
        data.arrows.push_back({"Sigma-", -abs_k, hi, -abs_k, lo});
        data.arrows.push_back({"Xi+", abs_k, lo, abs_k, hi});
        data.arrows.push_back({"Xi-", abs_k, hi, abs_k, lo});
        data.arrows.push_back({"A-", -abs_k, lo, abs_k, lo});
        data.arrows.push_back({"A+", abs_k, lo, -abs_k, lo});
    }
    return data;
}

double nonrel_limit_check(int N, int k, double gamma_small) {
    if (N < 1) throw std::domain_error("nonrel_limit_check: requires N >= 1");
    if (!(gamma_small > 0.0) || !(gamma_small <= 1e-2))
        throw std::domain_error("nonrel_limit_check: requires 0 < gamma <= 1e-2");
    const int n = N - std::abs(k);
    if (n < 0) throw std::domain_error("nonrel_limit_check: requires N >= |k|");
    QuantumNumbers q{k, n, gamma_small, 1.0};
    const double binding = q.mass - energy_of(q).energy;
    const double balmer = q.mass * gamma_small * gamma_small / (2.0 * N * N);
    return std::abs(binding - balmer) / balmer;
}

}  // namespace su11kc
