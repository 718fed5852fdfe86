#pragma once

#include <functional>
#include <vector>

namespace su11kc {

/// Arguments of the confluent hypergeometric function 1F1(a, b; z).
/// This library only ever needs the terminating case a = -n: the series is
/// then a finite sum of n+1 terms, exact in structure.
struct KummerParams {
    double a = 0.0;
    double b = 1.0;
    double z = 0.0;
};

/// 1F1(a, b; z) for terminating a (a nonpositive integer). Throws
/// std::domain_error when b is a nonpositive integer or a does not terminate.
double kummer_m(const KummerParams& p);

/// Monomial coefficients of z -> 1F1(-n, b; z): coefficient j equals
/// (-n)_j / ((b)_j j!). Requires b > 0.
std::vector<double> kummer_coeffs(int n, double b);

/// Gamma function for x > 0 (Lanczos approximation, relative error below
/// 1e-13 over the library's range). Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// log Gamma(x) for x > 0; used where Gamma itself would overflow.
double log_gamma(double x);

/// Generalized Gauss-Laguerre rule: sum_i w_i f(x_i) approximates
/// integral_0^inf f(x) x^alpha e^-x dx, exactly for polynomial f of degree
/// <= 2*count - 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;

    double integrate(const std::function<double(double)>& f) const;
};

/// Nodes and weights via Golub-Welsch: eigenvalues of the Jacobi matrix of
/// the generalized Laguerre recurrence, weights from the first eigenvector
/// components. count <= 200, alpha > -1.
QuadratureRule gauss_laguerre(int count, double alpha);

}  // namespace su11kc
