#pragma once

#include <complex>
#include <utility>

#include "mlf/errors.hpp"

namespace mlf {

/// Argument z = t * e^{i*theta} in polar form. The angle is stored exactly as
/// given; admissibility checks reduce it with canonical_angle() first.
struct PolarComplex {
    double t;
    double theta;

    PolarComplex(double modulus, double angle);

    std::complex<double> to_complex() const;
};

/// Reduces an angle to [0, 2*pi) by adding multiples of 2*pi.
double canonical_angle(double theta);

/// Parameters of E_{rho,mu}: real rho > 1/2 and complex mu = mu_re + i*mu_im.
struct MLParameters {
    double rho;
    double mu_re;
    double mu_im;

    explicit MLParameters(double rho, double mu_re = 1.0, double mu_im = 0.0);

    std::complex<double> mu() const { return {mu_re, mu_im}; }
};

enum class Parameterization { p1, p2, p3 };

/// Contour description. p1 carries two independent ray angles, p2 a single
/// shared angle, p3 fixes the angle to pi/rho. eps is the ray start offset
/// (> 0, ray-plus-arc form) and eps1 the detour radius around r = 1 (in
/// (0,1), from-zero form); the function value is independent of both.
struct ContourConfig {
    Parameterization mode = Parameterization::p2;
    double delta1 = 0.0; // p1 only
    double delta2 = 0.0; // p1 only
    double delta = 0.0;  // p2 only
    double eps = 0.5;
    double eps1 = 0.5;

    static ContourConfig param1(double delta1, double delta2, double eps = 0.5, double eps1 = 0.5);
    static ContourConfig param2(double delta, double eps = 0.5, double eps1 = 0.5);
    static ContourConfig param3(double eps = 0.5, double eps1 = 0.5);

    /// Effective (delta1, delta2); p2 duplicates delta, p3 yields pi/rho.
    std::pair<double, double> deltas(double rho) const;
};

/// The two integral forms: 'a' integrates a ray from 1+eps plus an arc at
/// radius 1+eps; 'b' integrates from r = 0 and exists only for
/// mu_re < 1 + 1/rho, with detours around r = 1 when a ray angle equals pi.
enum class Rep { a, b };

/// Sub-cases of the from-zero representation.
enum class RepBCase { case1, case2, case3, case4, case5, case6 };

/// Open interval of admissible arg z; both endpoints are rejected (the
/// improper integrals diverge there).
struct ThetaInterval {
    double lo;
    double hi;

    bool contains(double theta) const { return lo < theta && theta < hi; }
};

/// Checks the contour angles against the representation-specific bounds and
/// returns the config with angles snapped onto the exact special values
/// (pi, pi/rho) when they sit within 1e-9 of them. Throws delta_out_of_range,
/// mu_constraint_violated (rep b) or param3_not_available.
ContourConfig validate_config(const MLParameters& p, const ContourConfig& cfg, Rep rep);

/// Deterministic case selection for rep b. Requires a config validated for
/// rep b. Never returns case1 with a delta equal to pi.
RepBCase classify_case(const MLParameters& p, const ContourConfig& cfg);

ThetaInterval admissible_theta(const MLParameters& p, const ContourConfig& cfg, Rep rep);
ThetaInterval admissible_theta(const MLParameters& p, const ContourConfig& cfg, RepBCase c);

/// Widest-sector rep-a config: p3 for rho >= 1, else p2 with delta = pi.
ContourConfig default_config(const MLParameters& p);

} // namespace mlf
