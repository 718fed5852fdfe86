#pragma once

#include "su11kc/real.hpp"

#include <vector>

namespace su11kc {

/// Radial function  f(rho) = rho^sigma e^(-xi rho) sum_j c_j rho^j.
/// This class is closed under differentiation, multiplication by integer
/// powers of rho, and (in `states`) application of any DiffOp — every state
/// and every operator image in the library lives here.
///
/// Canonical form: leading and trailing exactly-zero coefficients are
/// trimmed (leading trims raise sigma), the zero function has an empty
/// coefficient list. sigma may be <= 0 on intermediates such as plain
/// derivatives; inner products require sigma_f + sigma_g > 0, which makes
/// a state square-integrable under the rho^-1 weight iff sigma > 0.
class QuasiPolynomial {
  public:
    QuasiPolynomial() = default;  // zero function
    QuasiPolynomial(Real base_exponent, Real decay, std::vector<Real> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    Real base_exponent() const { return base_; }
    Real decay() const { return decay_; }
    const std::vector<Real>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Real operator()(Real rho) const;
    std::vector<Real> sample(const std::vector<Real>& rho) const;

    /// d/drho: base drops by one, coefficients pick up the down-shifted
    /// (sigma + j) c_j and the decay term -xi c_(j-1).
    QuasiPolynomial derivative() const;

    /// Multiplication by rho^power (integer power, possibly negative).
    QuasiPolynomial shifted(int power) const;

    QuasiPolynomial operator-() const;
    /// Addition requires equal decay rates and base exponents that differ
    /// by an integer; throws std::invalid_argument otherwise.
    friend QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator*(Real c, const QuasiPolynomial& f);

  private:
    void canonicalize();

    Real base_ = 0.0L;
    Real decay_ = 1.0L;
    std::vector<Real> coeffs_;
};

/// Weighted inner product  (f, g) = integral_0^inf f g rho^-1 drho, evaluated
/// as the exact Gamma sum
///   sum_{j,j'} c_j d_j' Gamma(sf+sg+j+j') / (xi_f+xi_g)^(sf+sg+j+j').
/// The moments come from one Gamma seed advanced by the recurrence
/// Gamma(a+1) = a Gamma(a), and the alternating sum is accumulated in
/// quad precision: the cancellation between terms is orders of magnitude
/// larger than the result for high-degree states. No quadrature involved.
/// Throws std::domain_error when sigma_f + sigma_g <= 0 (the integral
/// diverges at the origin).
Real inner_product(const QuasiPolynomial& f, const QuasiPolynomial& g);

/// sqrt((f, f)); 0 for the zero function.
Real qp_norm(const QuasiPolynomial& f);

/// f scaled to unit norm, with the sign convention that the coefficient of
/// the lowest power is strictly positive. Throws std::domain_error for the
/// zero function.
QuasiPolynomial normalize(const QuasiPolynomial& f);

}  // namespace su11kc
