#pragma once

#include "su11kc/real.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>

namespace su11kc {

/// Exact rational coefficient type. Unbounded, so products of operator
/// coefficients never overflow or round.
using Rational = boost::multiprecision::cpp_rational;

/// Exponent tuple of one monomial  rho^e_rho * xi^e_xi * s^e_s * gamma^e_gamma.
/// rho and xi may carry negative (Laurent) exponents; s and gamma are plain
/// polynomial indeterminates.
struct Monomial {
    int e_rho = 0;
    int e_xi = 0;
    int e_s = 0;
    int e_gamma = 0;

    auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate Laurent polynomial in (rho, xi) and polynomial in
/// (s, gamma) over exact rationals. This is the coefficient ring for every
/// differential operator in the library: the 1/(2 xi) prefactors force
/// negative xi powers, the centrifugal terms force negative rho powers.
///
/// Canonical form: no stored term has a zero coefficient, so equality is
/// term-map comparison.
class ScalarPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    ScalarPoly() = default;

    static ScalarPoly constant(const Rational& c);
    static ScalarPoly monomial(const Rational& c, int e_rho, int e_xi = 0,
                               int e_s = 0, int e_gamma = 0);
    // Single-symbol conveniences.
    static ScalarPoly rho(int power = 1);
    static ScalarPoly xi(int power = 1);
    static ScalarPoly s(int power = 1);
    static ScalarPoly gamma(int power = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& rhs);
    ScalarPoly& operator-=(const ScalarPoly& rhs);
    friend ScalarPoly operator+(ScalarPoly lhs, const ScalarPoly& rhs) { return lhs += rhs; }
    friend ScalarPoly operator-(ScalarPoly lhs, const ScalarPoly& rhs) { return lhs -= rhs; }
    friend ScalarPoly operator*(const ScalarPoly& lhs, const ScalarPoly& rhs);
    friend ScalarPoly operator*(const Rational& c, const ScalarPoly& p);

    bool operator==(const ScalarPoly&) const = default;

    /// d/drho applied to the polynomial itself: rho^n -> n rho^(n-1).
    ScalarPoly differentiate_rho() const;

    /// Polynomial substitution s -> s+1 (binomial expansion of s powers).
    ScalarPoly shift_s() const;

    /// Substitute numeric values for xi, s, gamma; rho stays symbolic.
    /// Returns the map e_rho -> coefficient.
    std::map<int, Real> bind(double s_value, double xi_value,
                             double gamma_value) const;

    std::string str() const;

  private:
    void insert(const Monomial& m, const Rational& c);

    TermMap terms_;
};

}  // namespace su11kc
