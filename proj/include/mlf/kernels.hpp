#pragma once

#include <complex>

#include "mlf/domain.hpp"

namespace mlf {

/// Largest fused exponent the kernels will pass to exp(); anything above
/// throws kernel_overflow so callers can pre-truncate or fall back.
inline constexpr double exp_budget = 705.0;

/// Exponent of the modulus factor of every ray/arc integrand:
/// (t r)^rho cos(rho (theta+phi)) + rho mu_im (theta+phi).
double amplitude_exponent(double r, double phi, double t, double theta, const MLParameters& p);

/// exp(amplitude_exponent), always positive; throws kernel_overflow beyond
/// the exponent budget.
double amplitude(double r, double phi, double t, double theta, const MLParameters& p);

/// Oscillation phase of the integrands:
/// (t r)^rho sin(rho (theta+phi)) + rho (1-mu_re)(theta+phi) - rho mu_im ln(t r).
double phase(double r, double phi, double t, double theta, const MLParameters& p);

/// growth/phase pair of the widest-sector ray kernel, referenced to theta-pi.
struct WidestPhases {
    double growth;
    double phase;
};
WidestPhases widest_phases(double r, double t, double theta, const MLParameters& p);

/// Two-sided ray integrand with independent ray angles phi1, phi2.
std::complex<double> ray_kernel(double r, double phi1, double phi2, double t, double theta,
                                const MLParameters& p);

/// Arc integrand at radius r over the angular variable phi.
std::complex<double> arc_kernel(double r, double phi, double t, double theta,
                                const MLParameters& p);

/// Equal-angle ray integrand; identical to ray_kernel(r, -delta, delta, ...).
std::complex<double> ray_kernel_sym(double r, double delta, double t, double theta,
                                    const MLParameters& p);

/// Widest-sector ray integrand (delta = pi/rho, rho >= 1); identical to
/// ray_kernel_sym(r, pi/rho, ...).
std::complex<double> ray_kernel_widest(double r, double t, double theta, const MLParameters& p);

/// One-sided ray integrand; ray_kernel_sym(r,delta,..) equals
/// half_ray_kernel(r,delta,..) - half_ray_kernel(r,-delta,..).
std::complex<double> half_ray_kernel(double r, double delta, double t, double theta,
                                     const MLParameters& p);

/// Polar form of the detour point 1 + tau e^{i psi}, with the angle branch
/// shifted by k pi. Requires 0 < tau < 1 so the principal arctangent applies.
struct ArcPoint {
    double r;
    double phi;
};
ArcPoint arc_point(double tau, double psi, int k);

/// Integrand of the detour arcs around r = 1 in the from-zero representation.
std::complex<double> detour_kernel(double tau, double psi, int k, double t, double theta,
                                   const MLParameters& p);

} // namespace mlf
