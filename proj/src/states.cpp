#include "su11kc/states.hpp"

#include "su11kc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su11kc {

namespace {

// An end coefficient of an operator image is dropped when it is this small
// relative to the contributions that formed its own slot: then it is
// cancellation noise, not data. The comparison is per slot because genuine
// coefficients of high-degree states span far more orders of magnitude than
// any global cutoff could separate. Well below every check tolerance.
constexpr Real kTrimRelTol = 1e-12L;

// (-n)_j / ((b)_j j!) * (2 xi)^j, the kummer_coeffs formula carried out in
// quad precision: inner products of high-m states cancel so deeply that the
// stored coefficients must be accurate to better than double.
std::vector<Real> scaled_kummer_coeffs(int n, double b, double xi) {
    std::vector<Real> c(static_cast<size_t>(n) + 1);
    c[0] = 1.0L;
    const Real two_xi = 2.0L * static_cast<Real>(xi);
    for (int j = 0; j < n; ++j)
        c[j + 1] = c[j] * (-n + j) * two_xi /
                   ((static_cast<Real>(b) + j) * (j + 1));
    return c;
}

}  // namespace

QuasiPolynomial basis_state(int m, double s, double xi) {
    if (m < 0) throw std::domain_error("basis_state: requires m >= 0");
    if (!(s > 0.0) || !(xi > 0.0))
        throw std::domain_error("basis_state: requires s > 0 and xi > 0");
    return {static_cast<Real>(s), static_cast<Real>(xi),
            scaled_kummer_coeffs(m, 2.0 * s, xi)};
}

QuasiPolynomial physical_component(const QuantumNumbers& q, Component which) {
    const SpectralParams p = energy_of(q);
    if (which == Component::Lower)
        return {static_cast<Real>(p.s), static_cast<Real>(p.xi),
                scaled_kummer_coeffs(q.n, 2.0 * p.s, p.xi)};
    if (q.n == 0) return {};  // no normalizable upper partner below n = 1
    return {static_cast<Real>(p.s) + 1.0L, static_cast<Real>(p.xi),
            scaled_kummer_coeffs(q.n - 1, 2.0 * p.s + 2.0, p.xi)};
}

SpinorState make_spinor(const QuantumNumbers& q) {
    q.validate();
    if (!state_exists(q.n, q.k))
        throw std::domain_error("make_spinor: no bound state with n = 0 and k > 0");
    SpinorState state;
    state.q = q;
    state.params = energy_of(q);
    state.lower = normalize(physical_component(q, Component::Lower));
    const QuasiPolynomial upper = physical_component(q, Component::Upper);
    state.upper = upper.is_zero() ? upper : normalize(upper);
    return state;
}

QuasiPolynomial apply_diffop(const DiffOp& op, const QuasiPolynomial& f,
                             const Binding& binding) {
    if (op.is_zero() || f.is_zero()) return {};

    // Exact derivatives of f, once per order.
    std::vector<QuasiPolynomial> derivs(static_cast<size_t>(op.max_order()) + 1);
    derivs[0] = f;
    for (int d = 1; d <= op.max_order(); ++d) derivs[d] = derivs[d - 1].derivative();

    struct Piece {
        long offset;  // base exponent shift relative to f
        Real factor;
        const QuasiPolynomial* part;
    };
    std::vector<Piece> pieces;
    long min_offset = 0, max_index = 0;
    for (const auto& [d, poly] : op.coeffs()) {
        const QuasiPolynomial& fd = derivs[d];
        if (fd.is_zero()) continue;
        for (const auto& [e_rho, c] : poly.bind(binding.s, binding.xi, binding.gamma)) {
            if (c == 0.0L) continue;
            const long offset = std::lround(
                static_cast<double>(fd.base_exponent() + e_rho - f.base_exponent()));
            pieces.push_back({offset, c, &fd});
            min_offset = std::min(min_offset, offset);
            max_index = std::max(max_index, offset + fd.degree());
        }
    }
    if (pieces.empty()) return {};

    const size_t len = static_cast<size_t>(max_index - min_offset) + 1;
    std::vector<Real> value(len, 0.0L), slot_scale(len, 0.0L);
    for (const Piece& piece : pieces) {
        const std::vector<Real>& c = piece.part->coeffs();
        for (size_t j = 0; j < c.size(); ++j) {
            const Real v = piece.factor * c[j];
            const size_t slot = static_cast<size_t>(piece.offset - min_offset) + j;
            value[slot] += v;
            slot_scale[slot] += real_abs(v);
        }
    }

    auto is_noise = [&](size_t slot) {
        return real_abs(value[slot]) <= kTrimRelTol * slot_scale[slot];
    };
    size_t lead = 0;
    while (lead < value.size() && is_noise(lead)) ++lead;
    if (lead == value.size()) return {};  // exact cancellation: zero function
    size_t tail = value.size();
    while (tail > lead && is_noise(tail - 1)) --tail;

    const Real base =
        f.base_exponent() + static_cast<Real>(min_offset + static_cast<long>(lead));
    if (!(base > 0.0L))
        throw std::domain_error("apply_diffop: rho exponent underflow (base <= 0)");
    return {base, f.decay(),
            std::vector<Real>(value.begin() + static_cast<long>(lead),
                              value.begin() + static_cast<long>(tail))};
}

std::vector<double> fd_grid_points(const FdGrid& grid) {
    std::vector<double> rho(static_cast<size_t>(grid.count));
    const double h = (grid.rho_max - grid.rho_min) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i) rho[i] = grid.rho_min + h * i;
    return rho;
}

namespace {

// Fornberg weights: w[j] such that sum_j w[j] f(x[j]) approximates the
// m-th derivative of f at x0, to the maximal order the stencil allows.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& x,
                                     int m) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(
        static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(m) + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) w[j] = c[j][m];
    return w;
}

}  // namespace

std::vector<double> apply_fd(const DiffOp& op, const QuasiPolynomial& f,
                             const Binding& binding, const FdGrid& grid) {
    if (!(grid.rho_min > 0.0))
        throw std::domain_error("apply_fd: requires rho_min > 0");
    if (grid.count < 5) throw std::domain_error("apply_fd: requires count >= 5");
    const std::vector<double> rho = fd_grid_points(grid);
    std::vector<double> fv(rho.size());
    for (size_t i = 0; i < rho.size(); ++i)
        fv[i] = static_cast<double>(f(static_cast<Real>(rho[i])));
    std::vector<double> out(rho.size(), 0.0);
    if (op.is_zero() || f.is_zero()) return out;

    const int max_order = op.max_order();
    const int window = std::min(grid.count, std::max(9, max_order + 5));

    for (int i = 0; i < grid.count; ++i) {
        int lo = std::clamp(i - window / 2, 0, grid.count - window);
        const std::vector<double> xs(rho.begin() + lo, rho.begin() + lo + window);
        double acc = 0.0;
        for (const auto& [d, poly] : op.coeffs()) {
            double fd_value;
            if (d == 0) {
                fd_value = fv[i];
            } else {
                const std::vector<double> w = fornberg_weights(rho[i], xs, d);
                double sum = 0.0;
                for (int j = 0; j < window; ++j) sum += w[j] * fv[lo + j];
                fd_value = sum;
            }
            double coeff = 0.0;
            for (const auto& [e_rho, c] : poly.bind(binding.s, binding.xi, binding.gamma))
                coeff += static_cast<double>(c) * std::pow(rho[i], e_rho);
            acc += coeff * fd_value;
        }
        out[i] = acc;
    }
    return out;
}

std::vector<std::vector<double>> gram_matrix(double s, double xi, int m_max) {
    if (m_max < 0 || m_max > 30)
        throw std::domain_error("gram_matrix: requires 0 <= m_max <= 30");
    std::vector<QuasiPolynomial> basis;
    basis.reserve(static_cast<size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) basis.push_back(normalize(basis_state(m, s, xi)));
    std::vector<std::vector<double>> g(
        basis.size(), std::vector<double>(basis.size(), 0.0));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i; j < basis.size(); ++j)
            g[i][j] = g[j][i] = static_cast<double>(inner_product(basis[i], basis[j]));
    return g;
}

}  // namespace su11kc
