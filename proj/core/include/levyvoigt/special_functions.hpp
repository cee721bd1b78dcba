#pragma once

#include <cstdint>

namespace levyvoigt {

/// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
/// extended to negative non-integer arguments by the reflection formula.
/// Relative accuracy is ~1e-14 over the double range; poles at 0, -1, -2, ...
/// raise invalid_parameter_error. Shared by the Riesz kernels, the stable
/// tail series and the moment series.
double gamma_fn(double x);

/// log|Gamma(x)| with the sign of Gamma(x) returned separately.
double log_abs_gamma(double x, int* sign = nullptr);

/// Upper bound for the upper incomplete gamma function Gamma(s, z), s > 0,
/// valid for z > max(s - 1, 0). Used to certify envelope tail truncations:
/// integral_K^inf exp(-c k^a) dk = Gamma(1/a, c K^a) / (a c^{1/a}).
double upper_incomplete_gamma_bound(double s, double z);

/// sin(pi * x) evaluated without the cancellation of sin(M_PI * x) at
/// integer-adjacent arguments.
double sin_pi(double x);

/// cos(pi * x), same argument-reduction approach as sin_pi.
double cos_pi(double x);

} // namespace levyvoigt
