#pragma once

#include <stdexcept>
#include <string>

namespace levyvoigt {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter violates a documented precondition (bad alpha, tau, q, grid, ...).
class invalid_parameter_error : public error {
public:
    using error::error;
};

/// Base class for failures of numerical certification.
class numerics_error : public error {
public:
    using error::error;
};

/// An adaptive quadrature could not certify the requested tolerance.
class quadrature_nonconvergence_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

/// A grid evaluation's certified aliasing/truncation bound exceeds the tolerance.
class grid_too_coarse_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

/// Sampled data does not decay enough at the grid ends for a spectral operator.
class insufficient_decay_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

/// A moment series is outside its useful regime (terms grow before tolerance is met).
class series_divergence_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

/// A series term requires Gamma at a non-positive integer; caller should use quadrature.
class gamma_pole_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

/// The singular-kernel split near xi = 0 could not reach the tolerance.
class singularity_error : public numerics_error {
public:
    using numerics_error::numerics_error;
};

/// A fractional absolute moment of order q >= min(alpha1, alpha2) does not exist.
class divergent_moment_error : public invalid_parameter_error {
public:
    using invalid_parameter_error::invalid_parameter_error;
};

} // namespace levyvoigt
