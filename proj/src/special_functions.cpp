#include "su11kc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace su11kc {

namespace {

// Lanczos g=7, n=9 coefficients (Godfrey / Boost choice).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double lanczos_series(double x) {
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i - 1);
    return acc;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
    if (x < 0.5) {
        // Reflection keeps the series argument in its accurate range.
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) *
           lanczos_series(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5)
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_series(x));
}

std::vector<double> kummer_coeffs(int n, double b) {
    if (n < 0) throw std::domain_error("kummer_coeffs: requires n >= 0");
    if (!(b > 0.0)) throw std::domain_error("kummer_coeffs: requires b > 0");
    std::vector<double> coeffs(static_cast<size_t>(n) + 1);
    coeffs[0] = 1.0;
    for (int j = 0; j < n; ++j)
        coeffs[j + 1] = coeffs[j] * (-n + j) / ((b + j) * (j + 1));
    return coeffs;
}

double kummer_m(const KummerParams& p) {
    if (is_nonpositive_integer(p.b))
        throw std::domain_error("kummer_m: b must not be a nonpositive integer");
    if (!is_nonpositive_integer(p.a))
        throw std::domain_error("kummer_m: only terminating a = -n supported");
    const int n = static_cast<int>(-p.a);

    // Same coefficient recurrence as kummer_coeffs, evaluated by Horner:
    // one shared path, so series coefficients and point values never drift
    // apart. (For b > 0 this is bit-identical to summing kummer_coeffs.)
    std::vector<double> c(static_cast<size_t>(n) + 1);
    c[0] = 1.0;
    for (int j = 0; j < n; ++j)
        c[j + 1] = c[j] * (p.a + j) / ((p.b + j) * (j + 1));
    double acc = 0.0;
    for (int j = n; j >= 0; --j) acc = acc * p.z + c[j];
    return acc;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    long double acc = 0.0L;
    for (size_t i = 0; i < nodes.size(); ++i)
        acc += static_cast<long double>(weights[i]) * f(nodes[i]);
    return static_cast<double>(acc);
}

QuadratureRule gauss_laguerre(int count, double alpha) {
    if (count < 1 || count > 200)
        throw std::domain_error("gauss_laguerre: count must be in [1, 200]");
    if (!(alpha > -1.0))
        throw std::domain_error("gauss_laguerre: requires alpha > -1");

    const int n = count;
    // Jacobi matrix of the generalized Laguerre recurrence.
    std::vector<double> diag(n), off(n, 0.0);
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 1; i < n; ++i) off[i] = std::sqrt(i * (i + alpha));

    // Implicit-shift QL on the symmetric tridiagonal matrix, accumulating
    // only the first row of the eigenvector matrix (Golub-Welsch).
    std::vector<double> first_row(n, 0.0);
    first_row[0] = 1.0;
    std::vector<double> e(n, 0.0);  // e[i] couples rows i and i+1
    for (int i = 0; i + 1 < n; ++i) e[i] = off[i + 1];

    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 50)
                throw std::runtime_error("gauss_laguerre: eigenvalue iteration failed");
            double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + e[l] / (g + std::copysign(r, g));
            double sine = 1.0, cosine = 1.0, p = 0.0;
            int i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                double f = sine * e[i];
                double b = cosine * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                sine = f / r;
                cosine = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * sine + 2.0 * cosine * b;
                p = sine * r;
                diag[i + 1] = g + p;
                g = cosine * r - b;
                double fr = first_row[i + 1];
                first_row[i + 1] = sine * first_row[i] + cosine * fr;
                first_row[i] = cosine * first_row[i] - sine * fr;
            }
            if (underflow && i >= l) continue;
            diag[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // Sort ascending and form weights w_i = Gamma(alpha+1) * q_{0,i}^2.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&diag](int a, int b) { return diag[a] < diag[b]; });

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mu0 = gamma_fn(alpha + 1.0);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = diag[order[i]];
        rule.weights[i] = mu0 * first_row[order[i]] * first_row[order[i]];
    }
    return rule;
}

}  // namespace su11kc
