#pragma once

#include <string>
#include <vector>

namespace su11kc {

/// Bound-state labels. k is the Dirac quantum number (nonzero integer),
/// n the radial quantum number, gamma the dimensionless coupling, mass the
/// energy unit. Admissible coupling is 0 < gamma < |k| so that
/// s = sqrt(k^2 - gamma^2) stays real and the weight rho^(2s-1) integrable.
struct QuantumNumbers {
    int k = -1;
    int n = 0;
    double gamma = 0.5;
    double mass = 1.0;

    int principal() const;  // N = n + |k|
    double j_total() const; // j = |k| - 1/2
    /// Throws std::domain_error on k = 0, n < 0, gamma outside (0, |k|),
    /// or mass <= 0.
    void validate() const;
};

/// n = 0 bound states exist only for k < 0: the upper spinor component is
/// identically zero there and the first-order system then forces
/// k/s + m/E = 0. (For k > 0 the would-be n = 0 solution is unphysical;
/// the level diagram starts that column one step higher.)
bool state_exists(int n, int k);

/// Parameters derived from one (k, n, gamma, mass):
///   s = sqrt(k^2-gamma^2), nu = n+s, xi = gamma/nu, E = m [1+gamma^2/nu^2]^(-1/2),
///   mu = s-1, alpha1 = m+E, alpha2 = m-E.
struct SpectralParams {
    double s = 0.0;
    double xi = 0.0;
    double energy = 0.0;
    double nu = 0.0;
    double mu = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

/// sqrt(k^2 - gamma^2); throws std::domain_error unless 0 < gamma < |k|.
double s_of(int k, double gamma);

SpectralParams energy_of(const QuantumNumbers& q);

/// True iff the energies computed from (n_s = n, s) and from
/// (n_{s+1} = n-1, s+1) agree to 1e-12 relative: both spinor components of
/// one bound state carry the same E. Requires n >= 1.
bool component_match_check(const QuantumNumbers& q);

struct DiagramLevel {
    int k = 0;
    int N = 0;
    int n = 0;
    double e_over_m = 0.0;
    bool dashed = false;  // n = 0 ground levels
};

struct DiagramArrow {
    std::string label;  // "Sigma+", "Sigma-", "Xi+", "Xi-", "A+", "A-"
    int k_from = 0, N_from = 0;
    int k_to = 0, N_to = 0;
};

struct DiagramData {
    double gamma = 0.0;
    int k_max = 0;
    int n_max = 0;  // principal quantum number cap
    std::vector<DiagramLevel> levels;
    std::vector<DiagramArrow> arrows;
};

/// Level data in a two-columns-per-|k| layout: columns ordered
/// -1, +1, -2, +2, ..., levels at N = |k|..N_max (k < 0) or N = |k|+1..N_max
/// (k > 0), vertical placement by actual E/m. Arrow metadata marks the
/// ladder actions: Sigma+- within the k<0 column, Xi+- within the k>0
/// column, A+- horizontally between the paired columns.
DiagramData level_diagram(double gamma, int k_max, int N_max);

/// Relative deviation of m - E from the Balmer form m gamma^2 / (2 N^2)
/// at weak coupling. Requires 0 < gamma_small <= 1e-2.
double nonrel_limit_check(int N, int k, double gamma_small);

}  // namespace su11kc
