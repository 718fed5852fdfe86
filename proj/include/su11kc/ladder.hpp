#pragma once

#include "su11kc/quasi_polynomial.hpp"
#include "su11kc/report.hpp"
#include "su11kc/spectrum.hpp"

namespace su11kc {

enum class LadderSign { Plus, Minus };

/// Ladder coefficient magnitude of the discrete-series irrep with Casimir
/// label mu = s-1 and weight nu = m+s:
///   Q+(m,s) = sqrt((m+1)(m+2s)),   Q-(m,s) = sqrt(m(m+2s-1)),
/// i.e. [(nu -+ mu)(nu +- mu +- 1)]^(1/2). Q- vanishes at the lowest weight
/// m = 0; below it the radicand turns negative (no normalizable state), so
/// m < 0 is rejected. The Xi sector uses the same formula with s+1.
struct LadderCoefficient {
    int m = 0;
    double s = 0.0;
    LadderSign sign = LadderSign::Plus;
    double value = 0.0;
};

LadderCoefficient q_coeff(int m, double s, LadderSign sign);

/// Phase of the ladder action on normalized states with the
/// positive-leading-coefficient convention:
///   Sigma+- chi_hat^m = sigma_+- Q+- chi_hat^(m+-1).
/// Measured once against the Gamma-sum inner products; independent of m and
/// s (asserted by the property tests).
inline constexpr double kLadderPhasePlus = -1.0;
inline constexpr double kLadderPhaseMinus = -1.0;

/// Ladder relations on the fixed-xi family, Sigma sector at s and Xi sector
/// at s+1: colinearity of Sigma+- chi_hat^m with chi_hat^(m+-1), transition
/// magnitudes against q_coeff, annihilation at the lowest weight. m_max <= 20.
VerificationReport check_ladder(double s, double xi, int m_max);

/// Eigen-equations at fixed s: Sigma3 chi^m = (m+s) chi^m for any xi,
/// the physical binding xi = gamma/(m+s) giving eigenvalue gamma/xi, the
/// Casimir eigenvalue s(s-1), and the irrep labels mu = s-1, nu = m+s read
/// back from operator expectation values. m_max <= 20.
VerificationReport check_eigen(double s, double gamma, int m_max);

/// Adjointness under the rho^-1 inner product on random quasi-polynomials
/// sharing one decay rate: (f, Sigma+- g) = (Sigma-+ f, g) and Sigma3
/// symmetric. Deterministic seed.
VerificationReport check_hermiticity(double s, double xi, int trials,
                                     unsigned seed = 20240901u);

/// B+- = Sigma+- + Sigma3 - (gamma/xi) Id, exactly as operators; therefore
/// (B+- - Sigma+-) annihilates every Sigma3 eigenstate with eigenvalue
/// gamma/xi, i.e. every physical state at its own xi_n. Checks both the
/// exact symbolic identity and the numeric action; for n = 0 also the
/// ground-state annihilation B- psi0 = Sigma- psi0 = 0.
VerificationReport check_b_equivalence(const QuantumNumbers& q);

/// The coupled first-order radial system on the physical spinor: fits the
/// single free relative normalization of the two components by least
/// squares on the first equation, then checks both equations in relative
/// sup norm over the sample window, applies the inverse of the
/// D = [[k+s, -gamma], [-gamma, k+s]] transform (det = 2s(s+k)) and checks
/// the untransformed system as well. Throws std::domain_error for
/// nonexistent states and std::runtime_error if |det D| < 1e-12.
VerificationReport check_dirac_system(const QuantumNumbers& q);

}  // namespace su11kc
