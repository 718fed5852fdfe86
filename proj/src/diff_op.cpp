#include "su11kc/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace su11kc {

DiffOp DiffOp::identity() { return mul(ScalarPoly::constant(1)); }

DiffOp DiffOp::derivative(int order) {
    if (order < 0) throw std::invalid_argument("DiffOp: negative derivative order");
    DiffOp op;
    op.coeffs_[order] = ScalarPoly::constant(1);
    return op;
}

DiffOp DiffOp::mul(const ScalarPoly& p) {
    DiffOp op;
    if (!p.is_zero()) op.coeffs_[0] = p;
    return op;
}

int DiffOp::max_order() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

ScalarPoly DiffOp::coeff(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? ScalarPoly() : it->second;
}

void DiffOp::insert(int order, const ScalarPoly& p) {
    if (p.is_zero()) return;
    auto it = coeffs_.find(order);
    if (it == coeffs_.end()) {
        coeffs_.emplace(order, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
}

DiffOp DiffOp::operator-() const {
    DiffOp out;
    for (const auto& [d, p] : coeffs_) out.coeffs_.emplace(d, -p);
    return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
    for (const auto& [d, p] : rhs.coeffs_) insert(d, p);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
    for (const auto& [d, p] : rhs.coeffs_) insert(d, -p);
    return *this;
}

DiffOp operator*(const ScalarPoly& p, const DiffOp& op) {
    return diffop_compose(DiffOp::mul(p), op);
}

DiffOp DiffOp::shift_s() const {
    DiffOp out;
    for (const auto& [d, p] : coeffs_) out.insert(d, p.shift_s());
    return out;
}

DiffOp diffop_compose(const DiffOp& lhs, const DiffOp& rhs) {
    DiffOp out;
    for (const auto& [d, a] : lhs.coeffs()) {
        for (const auto& [e, b] : rhs.coeffs()) {
            // ∂^d (b f^(e)) = sum_{j=0}^{d} C(d,j) b^(j) f^(d-j+e)
            ScalarPoly b_deriv = b;
            Rational binom = 1;
            for (int j = 0; j <= d; ++j) {
                out.insert(d - j + e, binom * (a * b_deriv));
                if (j == d) break;
                b_deriv = b_deriv.differentiate_rho();
                if (b_deriv.is_zero()) break;
                binom = binom * Rational(d - j) / Rational(j + 1);
            }
        }
    }
    return out;
}

DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b) {
    return diffop_compose(a, b) - diffop_compose(b, a);
}

std::string DiffOp::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : coeffs_) {
        if (!first) os << "  +  ";
        first = false;
        os << "[" << p.str() << "]";
        if (d > 0) {
            os << "*D";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace su11kc
