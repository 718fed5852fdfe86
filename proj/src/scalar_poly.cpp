#include "su11kc/scalar_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace su11kc {

ScalarPoly ScalarPoly::constant(const Rational& c) {
    return monomial(c, 0, 0, 0, 0);
}

ScalarPoly ScalarPoly::monomial(const Rational& c, int e_rho, int e_xi,
                                int e_s, int e_gamma) {
    if (e_s < 0 || e_gamma < 0)
        throw std::invalid_argument("ScalarPoly: s and gamma exponents must be nonnegative");
    ScalarPoly p;
    if (c != 0) p.terms_[{e_rho, e_xi, e_s, e_gamma}] = c;
    return p;
}

ScalarPoly ScalarPoly::rho(int power) { return monomial(1, power, 0, 0, 0); }
ScalarPoly ScalarPoly::xi(int power) { return monomial(1, 0, power, 0, 0); }
ScalarPoly ScalarPoly::s(int power) { return monomial(1, 0, 0, power, 0); }
ScalarPoly ScalarPoly::gamma(int power) { return monomial(1, 0, 0, 0, power); }

void ScalarPoly::insert(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert(m, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert(m, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& lhs, const ScalarPoly& rhs) {
    ScalarPoly out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.insert({ma.e_rho + mb.e_rho, ma.e_xi + mb.e_xi,
                        ma.e_s + mb.e_s, ma.e_gamma + mb.e_gamma},
                       ca * cb);
    return out;
}

ScalarPoly operator*(const Rational& c, const ScalarPoly& p) {
    ScalarPoly out;
    if (c == 0) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
    return out;
}

ScalarPoly ScalarPoly::differentiate_rho() const {
    ScalarPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.e_rho == 0) continue;
        out.insert({m.e_rho - 1, m.e_xi, m.e_s, m.e_gamma}, Rational(m.e_rho) * c);
    }
    return out;
}

ScalarPoly ScalarPoly::shift_s() const {
    ScalarPoly out;
    for (const auto& [m, c] : terms_) {
        // (s+1)^p = sum_i C(p,i) s^i
        Rational binom = 1;
        for (int i = 0; i <= m.e_s; ++i) {
            out.insert({m.e_rho, m.e_xi, i, m.e_gamma}, binom * c);
            binom = binom * Rational(m.e_s - i) / Rational(i + 1);
        }
    }
    return out;
}

std::map<int, Real> ScalarPoly::bind(double s_value, double xi_value,
                                     double gamma_value) const {
    std::map<int, Real> out;
    for (const auto& [m, c] : terms_) {
        // numerator and denominator convert exactly (they stay far below
        // 2^64 for every operator in this library); one rounding in the division
        Real v = static_cast<Real>(numerator(c).convert_to<long double>()) /
                 static_cast<Real>(denominator(c).convert_to<long double>());
        v *= real_powi(static_cast<Real>(xi_value), m.e_xi);
        v *= real_powi(static_cast<Real>(s_value), m.e_s);
        v *= real_powi(static_cast<Real>(gamma_value), m.e_gamma);
        out[m.e_rho] += v;
    }
    return out;
}

std::string ScalarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        auto power = [&os](const char* name, int e) {
            if (e == 0) return;
            os << "*" << name;
            if (e != 1) os << "^" << e;
        };
        power("rho", m.e_rho);
        power("xi", m.e_xi);
        power("s", m.e_s);
        power("gamma", m.e_gamma);
    }
    return os.str();
}

}  // namespace su11kc
