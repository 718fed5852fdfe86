#pragma once

#include "su11kc/diff_op.hpp"
#include "su11kc/report.hpp"

namespace su11kc {

/// The named operators of the radial problem, with s, xi, gamma kept as
/// formal indeterminates:
///   Sigma3     = (1/2xi) (-rho D^2 + xi^2 rho + s(s-1)/rho)
///   Sigma+/-   = -/+ rho D + xi rho - Sigma3
///   Xi3, Xi+/- = the Sigma operators with s -> s+1
///   B+/-       = -/+ rho D + xi rho - gamma/xi
///   RadialH    = -rho^2 D^2 + xi^2 rho^2 - 2 gamma rho
enum class Generator {
    Sigma3,
    SigmaPlus,
    SigmaMinus,
    Xi3,
    XiPlus,
    XiMinus,
    BPlus,
    BMinus,
    RadialH,
};

DiffOp build_generator(Generator which);

/// Quadratic Casimir  -Sigma+ Sigma- + Sigma3^2 - Sigma3, composed symbolically.
DiffOp casimir_sigma();
/// Casimir of the Xi family (s -> s+1).
DiffOp casimir_xi();

/// Checks every operator identity of the algebra as an exact zero-operator
/// identity in the indeterminates:
///   [Sigma+-, Sigma3] = -+ Sigma+-      [Sigma+, Sigma-] = -2 Sigma3
///   [Xi+-, Xi3]       = -+ Xi+-         [Xi+, Xi-]       = -2 Xi3
///   (B-+ -+ 1) B+- = RadialH + (gamma^2/xi^2 +- gamma/xi) Id
/// Failures become report entries, not faults. `perturb` replaces the
/// s(s-1) centrifugal coefficient of Sigma3 by s^2 as a negative control.
VerificationReport verify_algebra(bool perturb = false);

}  // namespace su11kc
