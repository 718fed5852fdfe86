#include "su11kc/ladder.hpp"

#include "su11kc/generators.hpp"
#include "su11kc/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace su11kc {

namespace {

Real max_abs(const std::vector<Real>& v) {
    Real m = 0.0L;
    for (Real x : v) m = std::max(m, real_abs(x));
    return m;
}

// max_j |got_j - want_j| / max_j |want_j| with aligned bases.
double coeff_rel_error(const QuasiPolynomial& got, const QuasiPolynomial& want) {
    const Real scale = max_abs(want.coeffs());
    if (scale == 0.0L) return static_cast<double>(max_abs(got.coeffs()));
    return static_cast<double>(max_abs((got - want).coeffs()) / scale);
}

void add_symbolic_zero(VerificationReport& report, std::string name,
                       const DiffOp& residual) {
    double residual_terms = 0;
    for (const auto& [order, poly] : residual.coeffs())
        residual_terms += static_cast<double>(poly.terms().size());
    report.add(std::move(name), {}, residual_terms, 0.0);
}

}  // namespace

LadderCoefficient q_coeff(int m, double s, LadderSign sign) {
    if (!(s > 0.0)) throw std::domain_error("q_coeff: requires s > 0");
    if (m < 0)
        throw std::domain_error(
            "q_coeff: m < 0 has no normalizable state (coefficient would be complex)");
    const double value = sign == LadderSign::Plus
                             ? std::sqrt((m + 1.0) * (m + 2.0 * s))
                             : std::sqrt(m * (m + 2.0 * s - 1.0));
    return {m, s, sign, value};
}

VerificationReport check_ladder(double s, double xi, int m_max) {
    if (m_max < 0 || m_max > 20)
        throw std::domain_error("check_ladder: requires 0 <= m_max <= 20");
    VerificationReport report;

    struct Sector {
        const char* tag;
        double s;
        DiffOp plus_op;
        DiffOp minus_op;
    };
    const Sector sectors[2] = {
        {"sigma", s, build_generator(Generator::SigmaPlus),
         build_generator(Generator::SigmaMinus)},
        {"xi", s + 1.0, build_generator(Generator::XiPlus),
         build_generator(Generator::XiMinus)},
    };

    for (const Sector& sector : sectors) {
        const Binding binding{s, xi, 0.0};  // generators carry no gamma
        std::vector<QuasiPolynomial> basis;
        for (int m = 0; m <= m_max + 1; ++m)
            basis.push_back(normalize(basis_state(m, sector.s, xi)));

        const QuasiPolynomial lowest = apply_diffop(sector.minus_op, basis[0], binding);
        report.add(std::string(sector.tag) + "_ladder_annihilation",
                   {{"m", 0.0}, {"s", sector.s}, {"xi", xi}},
                   static_cast<double>(qp_norm(lowest)), 1e-12);

        for (int m = 0; m <= m_max; ++m) {
            const double q_plus = q_coeff(m, sector.s, LadderSign::Plus).value;
            const QuasiPolynomial up = apply_diffop(sector.plus_op, basis[m], binding);
            const double up_err = static_cast<double>(
                qp_norm(up - static_cast<Real>(kLadderPhasePlus * q_plus) * basis[m + 1]) /
                std::max(static_cast<Real>(q_plus), static_cast<Real>(1.0)));
            report.add(std::string(sector.tag) + "_ladder_plus_colinearity",
                       {{"m", double(m)}, {"s", sector.s}, {"xi", xi}}, up_err, 1e-10);
            const double up_mag =
                std::abs(static_cast<double>(inner_product(basis[m + 1], up)));
            report.add(std::string(sector.tag) + "_ladder_plus_magnitude",
                       {{"m", double(m)}, {"s", sector.s}, {"xi", xi}},
                       std::abs(up_mag - q_plus) / std::max(q_plus, 1.0), 1e-10);

            if (m == 0) continue;
            const double q_minus = q_coeff(m, sector.s, LadderSign::Minus).value;
            const QuasiPolynomial down = apply_diffop(sector.minus_op, basis[m], binding);
            const double down_err = static_cast<double>(
                qp_norm(down -
                        static_cast<Real>(kLadderPhaseMinus * q_minus) * basis[m - 1]) /
                std::max(static_cast<Real>(q_minus), static_cast<Real>(1.0)));
            report.add(std::string(sector.tag) + "_ladder_minus_colinearity",
                       {{"m", double(m)}, {"s", sector.s}, {"xi", xi}}, down_err, 1e-10);
            const double down_mag =
                std::abs(static_cast<double>(inner_product(basis[m - 1], down)));
            report.add(std::string(sector.tag) + "_ladder_minus_magnitude",
                       {{"m", double(m)}, {"s", sector.s}, {"xi", xi}},
                       std::abs(down_mag - q_minus) / std::max(q_minus, 1.0), 1e-10);
        }
    }
    return report;
}

VerificationReport check_eigen(double s, double gamma, int m_max) {
    if (m_max < 0 || m_max > 20)
        throw std::domain_error("check_eigen: requires 0 <= m_max <= 20");
    if (!(s > 0.0) || !(gamma > 0.0))
        throw std::domain_error("check_eigen: requires s > 0 and gamma > 0");
    VerificationReport report;

    const DiffOp sigma3 = build_generator(Generator::Sigma3);
    const DiffOp casimir = casimir_sigma();
    const double xi_fixed = gamma / s;

    for (int m = 0; m <= m_max; ++m) {
        const QuasiPolynomial chi = normalize(basis_state(m, s, xi_fixed));
        const Binding binding{s, xi_fixed, gamma};

        // Weight eigenvalue at an arbitrary shared xi.
        const QuasiPolynomial s3_chi = apply_diffop(sigma3, chi, binding);
        report.add("sigma3_eigen", {{"m", double(m)}, {"s", s}, {"xi", xi_fixed}},
                   coeff_rel_error(s3_chi, static_cast<Real>(m + s) * chi), 1e-10);

        // Physical binding xi_m = gamma/(m+s): eigenvalue gamma/xi_m.
        const double xi_m = gamma / (m + s);
        const QuasiPolynomial psi = normalize(basis_state(m, s, xi_m));
        const QuasiPolynomial s3_psi = apply_diffop(sigma3, psi, {s, xi_m, gamma});
        report.add("sigma3_physical_eigen",
                   {{"m", double(m)}, {"s", s}, {"gamma", gamma}},
                   coeff_rel_error(s3_psi, static_cast<Real>(gamma / xi_m) * psi),
                   1e-10);

        // Casimir eigenvalue s(s-1) = mu(mu+1) with mu = s-1.
        const QuasiPolynomial c_chi = apply_diffop(casimir, chi, binding);
        report.add("casimir_eigen", {{"m", double(m)}, {"s", s}, {"xi", xi_fixed}},
                   coeff_rel_error(c_chi, static_cast<Real>(s * (s - 1.0)) * chi),
                   1e-10);

        // Irrep labels read back from expectation values.
        const double nu_measured = static_cast<double>(inner_product(chi, s3_chi));
        const double casimir_measured = static_cast<double>(inner_product(chi, c_chi));
        const double mu = s - 1.0;
        const double label_err =
            std::max(std::abs(nu_measured - (m + s)) / (m + s),
                     std::abs(casimir_measured - mu * (mu + 1.0)) /
                         std::max(std::abs(mu * (mu + 1.0)), 1.0));
        report.add("irrep_labels", {{"m", double(m)}, {"s", s}}, label_err, 1e-10);
    }
    return report;
}

VerificationReport check_hermiticity(double s, double xi, int trials, unsigned seed) {
    if (trials < 1) throw std::domain_error("check_hermiticity: requires trials >= 1");
    VerificationReport report;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<int> degree(0, 6);
    auto random_qp = [&]() {
        std::vector<Real> c(static_cast<size_t>(degree(rng)) + 1);
        for (Real& v : c) v = static_cast<Real>(coeff(rng));
        if (c[0] == 0.0L) c[0] = 0.5L;
        return QuasiPolynomial(static_cast<Real>(s), static_cast<Real>(xi),
                               std::move(c));
    };

    const Binding binding{s, xi, 0.0};
    const DiffOp sigma_plus = build_generator(Generator::SigmaPlus);
    const DiffOp sigma_minus = build_generator(Generator::SigmaMinus);
    const DiffOp sigma3 = build_generator(Generator::Sigma3);

    for (int t = 0; t < trials; ++t) {
        const QuasiPolynomial f = random_qp();
        const QuasiPolynomial g = random_qp();

        const double plus_lhs =
            static_cast<double>(inner_product(f, apply_diffop(sigma_plus, g, binding)));
        const double plus_rhs =
            static_cast<double>(inner_product(apply_diffop(sigma_minus, f, binding), g));
        report.add("hermiticity_sigma_plus", {{"trial", double(t)}, {"s", s}, {"xi", xi}},
                   std::abs(plus_lhs - plus_rhs) / (1.0 + std::abs(plus_lhs)), 1e-10);

        const double minus_lhs =
            static_cast<double>(inner_product(f, apply_diffop(sigma_minus, g, binding)));
        const double minus_rhs =
            static_cast<double>(inner_product(apply_diffop(sigma_plus, f, binding), g));
        report.add("hermiticity_sigma_minus", {{"trial", double(t)}, {"s", s}, {"xi", xi}},
                   std::abs(minus_lhs - minus_rhs) / (1.0 + std::abs(minus_lhs)), 1e-10);

        const double sym_lhs =
            static_cast<double>(inner_product(f, apply_diffop(sigma3, g, binding)));
        const double sym_rhs =
            static_cast<double>(inner_product(apply_diffop(sigma3, f, binding), g));
        report.add("hermiticity_sigma3", {{"trial", double(t)}, {"s", s}, {"xi", xi}},
                   std::abs(sym_lhs - sym_rhs) / (1.0 + std::abs(sym_lhs)), 1e-10);
    }
    return report;
}

VerificationReport check_b_equivalence(const QuantumNumbers& q) {
    q.validate();
    VerificationReport report;

    // Exact operator identity B+- - Sigma+- - Sigma3 + (gamma/xi) Id = 0.
    const ScalarPoly gamma_over_xi = ScalarPoly::monomial(1, 0, -1, 0, 1);
    add_symbolic_zero(report, "b_sigma_identity_plus",
                      build_generator(Generator::BPlus) -
                          build_generator(Generator::SigmaPlus) -
                          build_generator(Generator::Sigma3) +
                          DiffOp::mul(gamma_over_xi));
    add_symbolic_zero(report, "b_sigma_identity_minus",
                      build_generator(Generator::BMinus) -
                          build_generator(Generator::SigmaMinus) -
                          build_generator(Generator::Sigma3) +
                          DiffOp::mul(gamma_over_xi));

    const SpectralParams p = energy_of(q);
    const QuasiPolynomial psi = normalize(physical_component(q, Component::Lower));
    const Binding binding{p.s, p.xi, q.gamma};
    const std::map<std::string, double> params{
        {"n", double(q.n)}, {"k", double(q.k)}, {"gamma", q.gamma}};

    const QuasiPolynomial plus_diff = apply_diffop(
        build_generator(Generator::BPlus) - build_generator(Generator::SigmaPlus),
        psi, binding);
    report.add("b_equivalence_plus", params, static_cast<double>(qp_norm(plus_diff)),
               1e-10);

    const QuasiPolynomial minus_diff = apply_diffop(
        build_generator(Generator::BMinus) - build_generator(Generator::SigmaMinus),
        psi, binding);
    report.add("b_equivalence_minus", params, static_cast<double>(qp_norm(minus_diff)),
               1e-10);

    if (q.n == 0) {
        report.add(
            "b_minus_ground_annihilation", params,
            static_cast<double>(qp_norm(
                apply_diffop(build_generator(Generator::BMinus), psi, binding))),
            1e-12);
        report.add(
            "sigma_minus_ground_annihilation", params,
            static_cast<double>(qp_norm(
                apply_diffop(build_generator(Generator::SigmaMinus), psi, binding))),
            1e-12);
    }
    return report;
}

VerificationReport check_dirac_system(const QuantumNumbers& q) {
    q.validate();
    if (!state_exists(q.n, q.k))
        throw std::domain_error("check_dirac_system: no bound state with n = 0, k > 0");
    VerificationReport report;

    const SpectralParams p = energy_of(q);
    const Real s = static_cast<Real>(p.s);
    const Real mass_over_e = static_cast<Real>(q.mass) / static_cast<Real>(p.energy);
    const Real coef_plus = q.k / s + mass_over_e;
    const Real coef_minus = q.k / s - mass_over_e;
    const Real gamma = static_cast<Real>(q.gamma);
    const std::map<std::string, double> params{
        {"n", double(q.n)}, {"k", double(q.k)}, {"gamma", q.gamma}};

    // Sample window rho in [0.1, 30]/E.
    const int count = 240;
    std::vector<Real> rho(count);
    const Real lo = 0.1L / static_cast<Real>(p.energy);
    const Real hi = 30.0L / static_cast<Real>(p.energy);
    for (int i = 0; i < count; ++i)
        rho[i] = lo + (hi - lo) * i / (count - 1);

    const QuasiPolynomial f2 = normalize(physical_component(q, Component::Lower));
    const QuasiPolynomial f1_raw = physical_component(q, Component::Upper);
    const QuasiPolynomial f1_hat = f1_raw.is_zero() ? f1_raw : normalize(f1_raw);

    const std::vector<Real> f2_v = f2.sample(rho);
    const std::vector<Real> f2_dv = f2.derivative().sample(rho);
    const std::vector<Real> f1_v = f1_hat.sample(rho);
    const std::vector<Real> f1_dv =
        f1_hat.is_zero() ? std::vector<Real>(count, 0.0L) : f1_hat.derivative().sample(rho);

    // Eq. for the lower component sources the ratio fit:
    //   (k/s + m/E) F2 = (d/drho + s/rho - gamma/s) F1.
    std::vector<Real> lhs2(count), op_f1(count);
    for (int i = 0; i < count; ++i) {
        lhs2[i] = coef_plus * f2_v[i];
        op_f1[i] = f1_dv[i] + (s / rho[i] - gamma / s) * f1_v[i];
    }
    Real ratio = 0.0L;
    if (!f1_hat.is_zero()) {
        Real num = 0.0L, den = 0.0L;
        for (int i = 0; i < count; ++i) {
            num += lhs2[i] * op_f1[i];
            den += op_f1[i] * op_f1[i];
        }
        ratio = num / den;
    }

    auto sup = [](const std::vector<Real>& v) {
        Real m = 0.0L;
        for (Real x : v) m = std::max(m, real_abs(x));
        return m;
    };
    const Real component_scale = std::max(sup(f2_v), real_abs(ratio) * sup(f1_v));

    Real eq2_resid = 0.0L, eq2_scale = component_scale;
    for (int i = 0; i < count; ++i) {
        eq2_resid = std::max(eq2_resid, real_abs(lhs2[i] - ratio * op_f1[i]));
        eq2_scale =
            std::max({eq2_scale, real_abs(lhs2[i]), real_abs(ratio * op_f1[i])});
    }
    report.add("dirac_coupled_eq_lower", params,
               static_cast<double>(eq2_resid / eq2_scale), 1e-8);

    //   (k/s - m/E) F1 = (-d/drho + s/rho - gamma/s) F2.
    Real eq3_resid = 0.0L, eq3_scale = component_scale;
    for (int i = 0; i < count; ++i) {
        const Real lhs = coef_minus * ratio * f1_v[i];
        const Real rhs = -f2_dv[i] + (s / rho[i] - gamma / s) * f2_v[i];
        eq3_resid = std::max(eq3_resid, real_abs(lhs - rhs));
        eq3_scale = std::max({eq3_scale, real_abs(lhs), real_abs(rhs)});
    }
    report.add("dirac_coupled_eq_upper", params,
               static_cast<double>(eq3_resid / eq3_scale), 1e-8);

    // Invert the D transform and check the original first-order system.
    const Real det = 2.0L * s * (s + q.k);
    if (real_abs(det) < 1e-12L)
        throw std::runtime_error("check_dirac_system: singular D transform");
    const QuasiPolynomial f1 = f1_hat.is_zero() ? f1_hat : ratio * f1_hat;
    const Real ks = q.k + s;
    QuasiPolynomial g1, g2;
    if (f1.is_zero()) {
        g1 = (gamma / det) * f2;
        g2 = (ks / det) * f2;
    } else {
        g1 = (ks / det) * f1 + (gamma / det) * f2;
        g2 = (gamma / det) * f1 + (ks / det) * f2;
    }

    const std::vector<Real> g1_v = g1.sample(rho);
    const std::vector<Real> g1_dv = g1.derivative().sample(rho);
    const std::vector<Real> g2_v = g2.sample(rho);
    const std::vector<Real> g2_dv = g2.derivative().sample(rho);
    const Real g_scale = std::max(sup(g1_v), sup(g2_v));
    const Real alpha1_over_e =
        static_cast<Real>(p.alpha1) / static_cast<Real>(p.energy);
    const Real alpha2_over_e =
        static_cast<Real>(p.alpha2) / static_cast<Real>(p.energy);

    Real row1_resid = 0.0L, row1_scale = g_scale;
    Real row2_resid = 0.0L, row2_scale = g_scale;
    for (int i = 0; i < count; ++i) {
        const Real r1_lhs = g1_dv[i] + (q.k * g1_v[i] - gamma * g2_v[i]) / rho[i];
        const Real r1_rhs = alpha1_over_e * g2_v[i];
        row1_resid = std::max(row1_resid, real_abs(r1_lhs - r1_rhs));
        row1_scale = std::max({row1_scale, real_abs(r1_lhs), real_abs(r1_rhs)});
        const Real r2_lhs = g2_dv[i] + (gamma * g1_v[i] - q.k * g2_v[i]) / rho[i];
        const Real r2_rhs = alpha2_over_e * g1_v[i];
        row2_resid = std::max(row2_resid, real_abs(r2_lhs - r2_rhs));
        row2_scale = std::max({row2_scale, real_abs(r2_lhs), real_abs(r2_rhs)});
    }
    report.add("dirac_radial_eq_row1", params,
               static_cast<double>(row1_resid / row1_scale), 1e-8);
    report.add("dirac_radial_eq_row2", params,
               static_cast<double>(row2_resid / row2_scale), 1e-8);

    return report;
}

}  // namespace su11kc
