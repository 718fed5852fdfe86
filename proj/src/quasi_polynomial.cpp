#include "su11kc/quasi_polynomial.hpp"

#include "su11kc/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace su11kc {

QuasiPolynomial::QuasiPolynomial(Real base_exponent, Real decay,
                                 std::vector<Real> coeffs)
    : base_(base_exponent), decay_(decay), coeffs_(std::move(coeffs)) {
    if (!(decay_ > 0.0L))
        throw std::invalid_argument("QuasiPolynomial: decay rate must be positive");
    canonicalize();
}

void QuasiPolynomial::canonicalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0.0L) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        base_ = 0.0L;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        base_ += static_cast<Real>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0L) coeffs_.pop_back();
}

Real QuasiPolynomial::operator()(Real rho) const {
    if (is_zero()) return 0.0L;
    Real poly = 0.0L;
    for (size_t j = coeffs_.size(); j-- > 0;) poly = poly * rho + coeffs_[j];
    return real_pow(rho, base_) * real_exp(-decay_ * rho) * poly;
}

std::vector<Real> QuasiPolynomial::sample(const std::vector<Real>& rho) const {
    std::vector<Real> out(rho.size());
    for (size_t i = 0; i < rho.size(); ++i) out[i] = (*this)(rho[i]);
    return out;
}

QuasiPolynomial QuasiPolynomial::derivative() const {
    if (is_zero()) return {};
    std::vector<Real> d(coeffs_.size() + 1, 0.0L);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        d[j] += (base_ + static_cast<Real>(j)) * coeffs_[j];
        d[j + 1] -= decay_ * coeffs_[j];
    }
    return {base_ - 1.0L, decay_, std::move(d)};
}

QuasiPolynomial QuasiPolynomial::shifted(int power) const {
    if (is_zero()) return {};
    QuasiPolynomial out = *this;
    out.base_ += power;
    return out;
}

QuasiPolynomial QuasiPolynomial::operator-() const { return -1.0L * (*this); }

QuasiPolynomial operator*(Real c, const QuasiPolynomial& f) {
    if (c == 0.0L || f.is_zero()) return {};
    QuasiPolynomial out = f;
    for (Real& v : out.coeffs_) v *= c;
    return out;
}

QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (real_abs(a.decay_ - b.decay_) > 1e-12L * std::max(a.decay_, b.decay_))
        throw std::invalid_argument("QuasiPolynomial: cannot add different decay rates");
    const Real raw_offset = b.base_ - a.base_;
    const long offset = std::lround(static_cast<double>(raw_offset));
    if (real_abs(raw_offset - static_cast<Real>(offset)) > 1e-9L)
        throw std::invalid_argument(
            "QuasiPolynomial: base exponents must differ by an integer");
    const long start = std::min(0L, offset);
    const long len = std::max(static_cast<long>(a.coeffs_.size()),
                              offset + static_cast<long>(b.coeffs_.size())) -
                     start;
    std::vector<Real> c(static_cast<size_t>(len), 0.0L);
    for (size_t j = 0; j < a.coeffs_.size(); ++j)
        c[static_cast<size_t>(static_cast<long>(j) - start)] += a.coeffs_[j];
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[static_cast<size_t>(offset + static_cast<long>(j) - start)] += b.coeffs_[j];
    return {a.base_ + static_cast<Real>(start), a.decay_, std::move(c)};
}

QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    return a + (-b);
}

Real inner_product(const QuasiPolynomial& f, const QuasiPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0.0L;
    const Real base_sum = f.base_exponent() + g.base_exponent();
    if (!(base_sum > 0.0L))
        throw std::domain_error("inner_product: integral diverges at the origin");
    const Real rate = f.decay() + g.decay();

    // moments[p] = Gamma(base_sum + p) / rate^(base_sum + p). The seed is a
    // common factor of every term, so only the recurrence (exact factors,
    // quad arithmetic) sets the term-to-term accuracy that the cancellation
    // below feeds on.
    const size_t p_max = f.coeffs().size() + g.coeffs().size() - 2;
    std::vector<Real> moments(p_max + 1);
    const double a0 = static_cast<double>(base_sum);
    const Real seed_gamma = a0 < 170.0
                                ? static_cast<Real>(gamma_fn(a0))
                                : real_exp(static_cast<Real>(log_gamma(a0)));
    moments[0] = seed_gamma / real_pow(rate, base_sum);
    for (size_t p = 1; p <= p_max; ++p)
        moments[p] = moments[p - 1] * (base_sum + static_cast<Real>(p - 1)) / rate;

    Real acc = 0;
    for (size_t j = 0; j < f.coeffs().size(); ++j) {
        if (f.coeffs()[j] == 0.0L) continue;
        for (size_t jp = 0; jp < g.coeffs().size(); ++jp) {
            if (g.coeffs()[jp] == 0.0L) continue;
            acc += f.coeffs()[j] * g.coeffs()[jp] * moments[j + jp];
        }
    }
    return acc;
}

Real qp_norm(const QuasiPolynomial& f) {
    if (f.is_zero()) return 0.0L;
    return real_sqrt(inner_product(f, f));
}

QuasiPolynomial normalize(const QuasiPolynomial& f) {
    if (f.is_zero()) throw std::domain_error("normalize: zero function");
    const Real norm2 = inner_product(f, f);
    if (!(norm2 > 0.0L) || !std::isfinite(static_cast<double>(norm2)))
        throw std::domain_error("normalize: norm is not finite and positive");
    Real scale = 1.0L / real_sqrt(norm2);
    if (f.coeffs().front() < 0.0L) scale = -scale;
    return scale * f;
}

}  // namespace su11kc
