#include "levyvoigt/special_functions.hpp"
#include "levyvoigt/errors.hpp"

#include <cmath>
#include <limits>

namespace levyvoigt {

namespace {

// Lanczos g = 7, n = 9 coefficient set (Godfrey's values, standard choice).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
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

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos core for x >= 0.5.
double gamma_positive(double x)
{
    const double z = x - 1.0;
    double a = kLanczosCoeff[0];
    for (int i = 1; i < 9; ++i)
        a += kLanczosCoeff[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace

double sin_pi(double x)
{
    // Reduce to |r| <= 0.5 so the pi multiplication happens on a small argument.
    double r = std::fmod(x, 2.0);
    if (r < -1.0) r += 2.0;
    if (r > 1.0) r -= 2.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double cos_pi(double x)
{
    return sin_pi(x + 0.5);
}

double gamma_fn(double x)
{
    if (std::isnan(x))
        throw invalid_parameter_error("gamma_fn: argument is NaN");
    if (is_nonpositive_integer(x))
        throw invalid_parameter_error("gamma_fn: pole at non-positive integer argument");
    if (x >= 0.5) {
        if (x > 171.6)
            return std::numeric_limits<double>::infinity();
        return gamma_positive(x);
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    const double s = sin_pi(x);
    return kPi / (s * gamma_positive(1.0 - x));
}

double log_abs_gamma(double x, int* sign)
{
    if (is_nonpositive_integer(x))
        throw invalid_parameter_error("log_abs_gamma: pole at non-positive integer argument");
    if (x >= 0.5) {
        if (sign) *sign = 1;
        const double z = x - 1.0;
        double a = kLanczosCoeff[0];
        for (int i = 1; i < 9; ++i)
            a += kLanczosCoeff[i] / (z + i);
        const double t = z + kLanczosG + 0.5;
        return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
    }
    const double s = sin_pi(x);
    if (sign) *sign = (s > 0.0) ? 1 : -1;
    int inner_sign = 1;
    return std::log(kPi / std::abs(s)) - log_abs_gamma(1.0 - x, &inner_sign);
}

double upper_incomplete_gamma_bound(double s, double z)
{
    if (!(s > 0.0) || !(z > 0.0))
        throw invalid_parameter_error("upper_incomplete_gamma_bound: needs s > 0, z > 0");
    // For u >= z:  u^{s-1} = z^{s-1} e^{(s-1) ln(u/z)} <= z^{s-1} e^{(s-1)(u-z)/z}
    // when s >= 1, hence Gamma(s,z) <= z^{s-1} e^{-z} / (1 - (s-1)/z) for z > s-1.
    // For s <= 1 the integrand is directly bounded by z^{s-1} e^{-u}.
    if (s <= 1.0)
        return std::pow(z, s - 1.0) * std::exp(-z);
    if (z <= s - 1.0)
        return std::numeric_limits<double>::infinity();
    return std::pow(z, s - 1.0) * std::exp(-z) / (1.0 - (s - 1.0) / z);
}

} // namespace levyvoigt
