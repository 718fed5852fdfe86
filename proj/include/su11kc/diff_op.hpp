#pragma once

#include "su11kc/scalar_poly.hpp"

#include <map>
#include <string>

namespace su11kc {

/// Linear differential operator in rho with ScalarPoly coefficients,
///     A = sum_d  a_d(rho, xi, s, gamma) * (d/drho)^d.
/// Stored sparsely by derivative order; the zero operator has an empty map.
/// Composition implements the Leibniz rule exactly, so all identity checks
/// reduce to normal-form term-map comparison.
class DiffOp {
  public:
    using CoeffMap = std::map<int, ScalarPoly>;

    DiffOp() = default;  // zero operator

    static DiffOp identity();
    /// (d/drho)^order
    static DiffOp derivative(int order = 1);
    /// Multiplication operator f -> p*f.
    static DiffOp mul(const ScalarPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    /// Highest derivative order present, -1 for the zero operator.
    int max_order() const;
    const CoeffMap& coeffs() const { return coeffs_; }
    /// Coefficient of (d/drho)^order (zero polynomial if absent).
    ScalarPoly coeff(int order) const;

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& rhs);
    DiffOp& operator-=(const DiffOp& rhs);
    friend DiffOp operator+(DiffOp lhs, const DiffOp& rhs) { return lhs += rhs; }
    friend DiffOp operator-(DiffOp lhs, const DiffOp& rhs) { return lhs -= rhs; }
    /// Left multiplication by a function (same as mul(p) composed with op).
    friend DiffOp operator*(const ScalarPoly& p, const DiffOp& op);

    bool operator==(const DiffOp&) const = default;

    /// Substitution s -> s+1 in every coefficient.
    DiffOp shift_s() const;

    std::string str() const;

  private:
    void insert(int order, const ScalarPoly& p);
    friend DiffOp diffop_compose(const DiffOp&, const DiffOp&);

    CoeffMap coeffs_;
};

/// Operator product: apply rhs first, then lhs. Exact Leibniz rule,
///   a ∂^d ∘ b ∂^e = sum_j C(d,j) a b^(j) ∂^(d-j+e).
DiffOp diffop_compose(const DiffOp& lhs, const DiffOp& rhs);

/// compose(a,b) - compose(b,a).
DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b);

}  // namespace su11kc
