#pragma once

#include <cmath>

// Numeric currency of the state representation. The Gamma-sum inner products
// of high-m basis states cancel through terms many orders larger than the
// result (condition number ~ 1e7 at m = 10, ~ 1e10 at m = 20), so the
// coefficient storage itself sets an orthogonality floor of roughly
// kappa * eps. Quad precision keeps that floor below every check tolerance
// across the whole supported m range. Public double values enter unchanged;
// outputs narrow to double at the serialization and binding boundaries.

#if defined(__GNUC__) && defined(__SIZEOF_FLOAT128__) && defined(__x86_64__)
#define SU11KC_HAVE_FLOAT128 1

extern "C" {
__float128 powq(__float128, __float128) noexcept;
__float128 expq(__float128) noexcept;
__float128 sqrtq(__float128) noexcept;
__float128 fabsq(__float128) noexcept;
}

namespace su11kc {

using Real = __float128;

inline Real real_pow(Real base, Real exponent) { return powq(base, exponent); }
inline Real real_exp(Real x) { return expq(x); }
inline Real real_sqrt(Real x) { return sqrtq(x); }
inline Real real_abs(Real x) { return fabsq(x); }

}  // namespace su11kc

#else

namespace su11kc {

using Real = long double;  // binary128 already on aarch64

inline Real real_pow(Real base, Real exponent) { return std::pow(base, exponent); }
inline Real real_exp(Real x) { return std::exp(x); }
inline Real real_sqrt(Real x) { return std::sqrt(x); }
inline Real real_abs(Real x) { return std::abs(x); }

}  // namespace su11kc

#endif

namespace su11kc {

/// Exact integer power (plain multiply loop; reciprocal for negatives).
inline Real real_powi(Real base, int exponent) {
    if (exponent < 0) return 1.0L / real_powi(base, -exponent);
    Real acc = 1.0L;
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

}  // namespace su11kc
