#pragma once

#include <stdexcept>
#include <string>

namespace mlf {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value-type invariant was violated at construction.
class invalid_parameter : public error {
public:
    using error::error;
};

/// A contour angle lies outside the bounds of the requested representation.
class delta_out_of_range : public error {
public:
    using error::error;
};

/// The from-zero representation requires mu_re < 1 + 1/rho.
class mu_constraint_violated : public error {
public:
    using error::error;
};

/// The fixed widest-sector contour is not available for the given rho.
class param3_not_available : public error {
public:
    using error::error;
};

/// arg z lies on or outside the admissible sector of the chosen contour.
class inadmissible_theta : public error {
public:
    using error::error;
};

/// An integrand denominator vanished exactly.
class singular_denominator : public error {
public:
    using error::error;
};

/// A fused exponent exceeded the double-precision exponent budget.
class kernel_overflow : public error {
public:
    using error::error;
};

/// An integrand produced a non-finite value.
class non_finite_evaluation : public error {
public:
    using error::error;
};

/// The endpoint power exponent is <= -1: the integral does not exist.
class non_integrable : public error {
public:
    using error::error;
};

/// The integrand does not decay along the ray; no truncation radius exists.
class no_decay : public error {
public:
    using error::error;
};

/// The defining series hit the term cap without meeting the stop rule.
class series_divergence : public error {
public:
    using error::error;
};

} // namespace mlf
