#pragma once

#include <functional>
#include <vector>

#include "mlf/domain.hpp"
#include "mlf/errors.hpp"

namespace mlf {

struct Tolerances {
    double rtol = 1e-10;
    double atol = 1e-12;
    int max_subdivisions = 2000;
    double tail_atol = 1e-14;
};

/// converged guarantees abs_err <= max(atol, rtol*|value|). A result with
/// converged == false and subdivisions < max_subdivisions stopped voluntarily
/// at the double-precision roundoff floor of the integrand; abs_err is the
/// honest remaining estimate in both cases.
struct QuadratureResult {
    double value = 0.0;
    double abs_err = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Adaptive 7-point Gauss / 15-point Kronrod bisection on [a, b]. Endpoints
/// are never sampled. Throws non_finite_evaluation if f returns NaN/inf.
QuadratureResult integrate_finite(const Integrand& f, double a, double b, const Tolerances& tol);

/// Decay data for the ray integrands: the modulus factor along the ray is
/// exp{(t r)^rho * c(phi)} with c(phi) = cos(rho*(theta + phi - pi)), which
/// must be negative for every angle in phis.
struct DecaySpec {
    MLParameters params;
    double t;
    double theta;
    std::vector<double> phis;
};

/// Radius R beyond which the ray integrand envelope, including the power and
/// mu_im weights, stays below tail_atol. Throws no_decay when some c(phi) >= 0.
double truncation_radius(const DecaySpec& d, double tail_atol);

/// Integrates f over [a, infinity) by truncating at truncation_radius and
/// covering [a, R] with width-doubling panels [a,a+1], [a+1,a+2], [a+2,a+4],
/// ... tail_atol is added to the reported error.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a, const DecaySpec& d,
                                         const Tolerances& tol);

/// Integrates f over [0, b] where f ~ r^e0 near 0 with e0 > -1. For e0 < 0
/// the substitution r = u^p, p = ceil(2/(1+e0)), makes the integrand vanish
/// at 0. Throws non_integrable for e0 <= -1.
QuadratureResult integrate_endpoint_singular(const Integrand& f, double exponent_at_zero,
                                             double b, const Tolerances& tol);

} // namespace mlf
