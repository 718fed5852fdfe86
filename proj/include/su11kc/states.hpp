#pragma once

#include "su11kc/diff_op.hpp"
#include "su11kc/quasi_polynomial.hpp"
#include "su11kc/spectrum.hpp"

#include <vector>

namespace su11kc {

/// Numeric values substituted for the symbolic indeterminates when a DiffOp
/// acts on a QuasiPolynomial.
struct Binding {
    double s = 0.0;
    double xi = 0.0;
    double gamma = 0.0;
};

/// Fixed-xi basis function  chi_s^m(rho) = rho^s e^(-xi rho) 1F1(-m, 2s; 2 xi rho).
/// All m share one decay rate: this is the family on which the ladder
/// algebra acts literally. Not normalized.
QuasiPolynomial basis_state(int m, double s, double xi);

enum class Component { Upper, Lower };

/// Physical bound-state radial component, carrying its own decay rate
/// xi_n = gamma/(n+s):
///   Lower: rho^s     e^(-xi rho) 1F1(-n,   2s;   2 xi rho)
///   Upper: rho^(s+1) e^(-xi rho) 1F1(-n+1, 2s+2; 2 xi rho),  zero for n = 0.
/// Not normalized.
QuasiPolynomial physical_component(const QuantumNumbers& q, Component which);

/// Two-component radial spinor with normalized components (positive leading
/// coefficient). The upper component is the zero function iff n = 0, which
/// requires k < 0 (see state_exists).
struct SpinorState {
    QuasiPolynomial upper;
    QuasiPolynomial lower;
    QuantumNumbers q;
    SpectralParams params;
};

SpinorState make_spinor(const QuantumNumbers& q);

/// Exact coefficient-space application of a differential operator:
/// derivatives and rho-power shifts act term by term on the
/// quasi-polynomial. Coefficients indistinguishable from roundoff relative
/// to the scale of the accumulated contributions are trimmed, so exact
/// cancellations (annihilation, eigenvalue relations) come out as clean
/// zero coefficients. Throws std::domain_error when the result would carry
/// a base exponent <= 0.
QuasiPolynomial apply_diffop(const DiffOp& op, const QuasiPolynomial& f,
                             const Binding& binding);

struct FdGrid {
    double rho_min = 0.1;
    double rho_max = 30.0;
    int count = 200;
};

/// Independent finite-difference oracle for apply_diffop: evaluates op.f on
/// the uniform grid using Fornberg stencil weights (9-point windows, at
/// least 4th order) applied to exact point values of f.
std::vector<double> apply_fd(const DiffOp& op, const QuasiPolynomial& f,
                             const Binding& binding, const FdGrid& grid);

std::vector<double> fd_grid_points(const FdGrid& grid);

/// Pairwise inner products of the normalized chi_s^m, 0 <= m, m' <= m_max,
/// all sharing one xi. Orthonormality of the fixed-xi family makes this the
/// identity matrix. m_max <= 30.
std::vector<std::vector<double>> gram_matrix(double s, double xi, int m_max);

}  // namespace su11kc
