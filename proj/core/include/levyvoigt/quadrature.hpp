#pragma once

#include <functional>
#include <span>
#include <vector>

namespace levyvoigt {

/// Result of an adaptive integration: value and a certified-error estimate
/// (QUADPACK-style |K15 - G7| accounting, summed over panels).
struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to an
/// absolute tolerance. Splits the worst panel until the summed error
/// estimate is below abs_tol; throws quadrature_nonconvergence_error if the
/// panel budget is exhausted first. Endpoints are never evaluated (Kronrod
/// nodes are interior), so integrable endpoint singularities are tolerated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    std::size_t max_panels = 4000);

/// Same scheme over a pre-broken partition. `breakpoints` must be sorted and
/// contain at least two entries; every [b_i, b_{i+1}] is seeded as a panel.
/// Used for oscillatory integrands (panels at cosine zeros) and envelopes
/// with known knees.
QuadratureResult integrate_segments(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    double abs_tol,
                                    std::size_t max_panels = 0);

/// Non-adaptive single K15 application on [a, b] (value + error estimate).
QuadratureResult gauss_kronrod_15(const std::function<double(double)>& f,
                                  double a, double b);

/// Trapezoidal rule over uniformly spaced samples with spacing dx.
double trapezoid_uniform(std::span<const double> values, double dx);

} // namespace levyvoigt
