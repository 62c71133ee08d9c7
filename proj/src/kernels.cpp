#include "mlf/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mlf {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi_inv = 0.5 / std::numbers::pi;

double checked_exp(double e)
{
    if (e > exp_budget) {
        throw kernel_overflow("fused exponent " + std::to_string(e) +
                              " exceeds the double-precision budget");
    }
    return std::exp(e);
}

// log of the power weight (t r)^{rho (1 - mu_re)}; fused with the amplitude
// exponent before exponentiation so large |mu_re| cannot overflow a factor
// whose product with the amplitude is moderate.
double log_power(double r, double t, const MLParameters& p)
{
    return p.rho * (1.0 - p.mu_re) * std::log(t * r);
}

void check_denominator(double den, double r)
{
    if (den == 0.0) {
        throw singular_denominator("integrand denominator vanished at r = " + std::to_string(r));
    }
}

} // namespace

double amplitude_exponent(double r, double phi, double t, double theta, const MLParameters& p)
{
    return std::pow(t * r, p.rho) * std::cos(p.rho * (theta + phi)) + p.rho * p.mu_im * (theta + phi);
}

double amplitude(double r, double phi, double t, double theta, const MLParameters& p)
{
    return checked_exp(amplitude_exponent(r, phi, t, theta, p));
}

double phase(double r, double phi, double t, double theta, const MLParameters& p)
{
    return std::pow(t * r, p.rho) * std::sin(p.rho * (theta + phi)) +
           p.rho * (1.0 - p.mu_re) * (theta + phi) - p.rho * p.mu_im * std::log(t * r);
}

WidestPhases widest_phases(double r, double t, double theta, const MLParameters& p)
{
    const double u = std::pow(t * r, p.rho);
    const double a = p.rho * (theta - pi);
    return {-u * std::cos(a) + p.mu_im * a,
            -u * std::sin(a) + (1.0 - p.mu_re) * a - p.rho * p.mu_im * std::log(t * r)};
}

std::complex<double> ray_kernel(double r, double phi1, double phi2, double t, double theta,
                                const MLParameters& p)
{
    const double den1 = r * r + 2.0 * r * std::cos(phi1) + 1.0;
    const double den2 = r * r + 2.0 * r * std::cos(phi2) + 1.0;
    check_denominator(den1, r);
    check_denominator(den2, r);

    const double lp = log_power(r, t, p);
    const double w1 = checked_exp(lp + amplitude_exponent(r, phi1 - pi, t, theta, p));
    const double w2 = checked_exp(lp + amplitude_exponent(r, phi2 - pi, t, theta, p));
    const double xi1 = phase(r, phi1 - pi, t, theta, p);
    const double xi2 = phase(r, phi2 - pi, t, theta, p);

    const double pref = p.rho * two_pi_inv / (den1 * den2);
    const double re = pref * (w2 * den1 * (r * std::sin(xi2) + std::sin(xi2 + phi2)) -
                              w1 * den2 * (r * std::sin(xi1) + std::sin(xi1 + phi1)));
    const double im = pref * (w1 * den2 * (r * std::cos(xi1) + std::cos(xi1 + phi1)) -
                              w2 * den1 * (r * std::cos(xi2) + std::cos(xi2 + phi2)));
    return {re, im};
}

std::complex<double> arc_kernel(double r, double phi, double t, double theta,
                                const MLParameters& p)
{
    const double den = r * r - 2.0 * r * std::cos(phi) + 1.0;
    check_denominator(den, r);

    const double w = checked_exp(log_power(r, t, p) + amplitude_exponent(r, phi, t, theta, p));
    const double xi = phase(r, phi, t, theta, p);
    const double pref = p.rho * two_pi_inv * r * w / den;
    return {pref * (r * std::cos(xi) - std::cos(xi + phi)),
            pref * (r * std::sin(xi) - std::sin(xi + phi))};
}

std::complex<double> ray_kernel_sym(double r, double delta, double t, double theta,
                                    const MLParameters& p)
{
    const double den = r * r + 2.0 * r * std::cos(delta) + 1.0;
    check_denominator(den, r);

    const double lp = log_power(r, t, p);
    const double wp = checked_exp(lp + amplitude_exponent(r, delta - pi, t, theta, p));
    const double wm = checked_exp(lp + amplitude_exponent(r, -delta - pi, t, theta, p));
    const double xp = phase(r, delta - pi, t, theta, p);
    const double xm = phase(r, -delta - pi, t, theta, p);

    const double pref = p.rho * two_pi_inv / den;
    const double re = pref * (wp * (r * std::sin(xp) + std::sin(xp + delta)) -
                              wm * (r * std::sin(xm) + std::sin(xm - delta)));
    const double im = pref * (wm * (r * std::cos(xm) + std::cos(xm - delta)) -
                              wp * (r * std::cos(xp) + std::cos(xp + delta)));
    return {re, im};
}

std::complex<double> ray_kernel_widest(double r, double t, double theta, const MLParameters& p)
{
    const double dr = pi / p.rho;
    const double den = r * r + 2.0 * r * std::cos(dr) + 1.0;
    check_denominator(den, r);

    const double lp = log_power(r, t, p);
    const auto [growth, xi] = widest_phases(r, t, theta, p);
    const double a = (1.0 - p.mu_re) * pi;
    const double wp = checked_exp(lp + growth + p.mu_im * pi);
    const double wm = checked_exp(lp + growth - p.mu_im * pi);

    const double pref = p.rho * two_pi_inv / den;
    const double re = pref * (wp * (r * std::sin(xi + a) + std::sin(xi + a + dr)) -
                              wm * (r * std::sin(xi - a) + std::sin(xi - a - dr)));
    const double im = pref * (wm * (r * std::cos(xi - a) + std::cos(xi - a - dr)) -
                              wp * (r * std::cos(xi + a) + std::cos(xi + a + dr)));
    return {re, im};
}

std::complex<double> half_ray_kernel(double r, double delta, double t, double theta,
                                     const MLParameters& p)
{
    const double den = r * r + 2.0 * r * std::cos(delta) + 1.0;
    check_denominator(den, r);

    const double w = checked_exp(log_power(r, t, p) +
                                 amplitude_exponent(r, delta - pi, t, theta, p));
    const double xi = phase(r, delta - pi, t, theta, p);
    const double pref = p.rho * two_pi_inv * w / den;
    return {pref * (r * std::sin(xi) + std::sin(xi + delta)),
            -pref * (r * std::cos(xi) + std::cos(xi + delta))};
}

ArcPoint arc_point(double tau, double psi, int k)
{
    if (!(tau > 0.0 && tau < 1.0)) {
        throw invalid_parameter("detour radius must lie in (0, 1)");
    }
    const double r = std::sqrt(tau * tau + 2.0 * tau * std::cos(psi) + 1.0);
    const double phi = std::atan(tau * std::sin(psi) / (tau * std::cos(psi) + 1.0)) + k * pi;
    return {r, phi};
}

std::complex<double> detour_kernel(double tau, double psi, int k, double t, double theta,
                                   const MLParameters& p)
{
    const auto [r, phi] = arc_point(tau, psi, k);
    const double den = r * r - 2.0 * r * std::cos(phi) + 1.0;
    check_denominator(den, r);

    const double w = checked_exp(log_power(r, t, p) + amplitude_exponent(r, phi, t, theta, p));
    // Unlike phase(), the detour phase carries the arc variable itself.
    const double xi = std::pow(t * r, p.rho) * std::sin(p.rho * (theta + phi)) -
                      p.rho * p.mu_im * std::log(r * t) +
                      p.rho * (1.0 - p.mu_re) * (theta + phi) + psi;
    const double pref = p.rho * tau * two_pi_inv * w / den;
    return {pref * (r * std::cos(xi - phi) - std::cos(xi)),
            pref * (r * std::sin(xi - phi) - std::sin(xi))};
}

} // namespace mlf
