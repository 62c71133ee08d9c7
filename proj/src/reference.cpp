#include "mlf/reference.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mlf {

namespace {

using cld = std::complex<long double>;

constexpr long double pi_ld = std::numbers::pi_v<long double>;

// Lanczos approximation, g = 7 with 9 coefficients.
constexpr long double lanczos_c[9] = {
    0.99999999999980993L,      676.5203681218851L,     -1259.1392167224028L,
    771.32342877765313L,       -176.61502916214059L,   12.507343278686905L,
    -0.13857109526572012L,     9.9843695780195716e-6L, 1.5056327351493116e-7L};

// log Gamma(w) for Re w >= 0.5; any branch works under exp().
cld log_gamma_right_half(cld w)
{
    const cld z = w - 1.0L;
    cld acc = lanczos_c[0];
    for (int i = 1; i < 9; ++i) {
        acc += lanczos_c[i] / (z + static_cast<long double>(i));
    }
    const cld t = z + 7.5L; // z + g + 1/2
    return 0.5L * std::log(2.0L * pi_ld) + (z + 0.5L) * std::log(t) - t + std::log(acc);
}

bool is_real_integer(cld w)
{
    return w.imag() == 0.0L && w.real() == std::floor(w.real());
}

cld recip_gamma_ld(cld w)
{
    if (is_real_integer(w)) {
        const long double x = w.real();
        if (x <= 0.0L) {
            return 0.0L; // pole of Gamma
        }
        long double fact = 1.0L;
        for (long double k = 2.0L; k < x; k += 1.0L) {
            fact *= k;
            if (std::isinf(fact)) {
                return 0.0L;
            }
        }
        return 1.0L / fact;
    }
    if (w.real() < 0.5L) {
        // 1/Gamma(w) = Gamma(1-w) sin(pi w) / pi
        return std::exp(log_gamma_right_half(1.0L - w)) * std::sin(pi_ld * w) / pi_ld;
    }
    return std::exp(-log_gamma_right_half(w));
}

std::complex<double> to_double(cld v)
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

cld int_pow(cld z, int n)
{
    cld acc = 1.0L;
    for (int k = 0; k < n; ++k) {
        acc *= z;
    }
    return acc;
}

} // namespace

std::complex<double> recip_gamma(std::complex<double> w)
{
    return to_double(recip_gamma_ld(cld(w.real(), w.imag())));
}

SeriesResult series_eval(const MLParameters& p, std::complex<double> z, const SeriesSettings& s)
{
    if (s.max_terms < 1) {
        throw invalid_parameter("max_terms must be >= 1");
    }
    const cld zl(z.real(), z.imag());
    const cld mu(p.mu_re, p.mu_im);

    cld sum = 0.0L;
    cld zpow = 1.0L;
    long double max_abs_term = 0.0L;
    int small_run = 0;

    for (int k = 0; k < s.max_terms; ++k) {
        const cld term = zpow * recip_gamma_ld(mu + static_cast<long double>(k) / p.rho);
        if (!std::isfinite(static_cast<double>(std::abs(term)))) {
            throw series_divergence("series term overflowed at k = " + std::to_string(k));
        }
        sum += term;
        max_abs_term = std::max(max_abs_term, std::abs(term));
        // a zero term at a still-zero sum is a leading Gamma pole, not
        // convergence, unless the argument itself zeroed the powers
        const bool pole_prefix = sum == 0.0L && term == 0.0L && zpow != 0.0L;
        if (!pole_prefix &&
            std::abs(term) <= static_cast<long double>(s.rel_term_tol) * std::abs(sum)) {
            ++small_run;
        } else {
            small_run = 0;
        }
        zpow *= zl;
        if (small_run >= s.consecutive_small) {
            const cld omitted = zpow * recip_gamma_ld(mu + static_cast<long double>(k + 1) / p.rho);
            // The 1e-15 factor covers the accuracy of the Lanczos term values;
            // the summation itself carries long-double headroom.
            const double floor = static_cast<double>(max_abs_term) * 1e-15 * std::sqrt(k + 1.0);
            SeriesResult out;
            out.value = to_double(sum);
            out.abs_err = static_cast<double>(std::abs(omitted)) + floor;
            out.terms = k + 1;
            return out;
        }
    }
    throw series_divergence("series did not meet the stop rule within " +
                            std::to_string(s.max_terms) + " terms");
}

std::complex<double> closed_form_rho1(int n, std::complex<double> z)
{
    if (z == std::complex<double>(0.0, 0.0)) {
        return recip_gamma(static_cast<double>(n));
    }
    const cld zl(z.real(), z.imag());
    const cld ez = std::exp(zl);
    if (n <= 1) {
        return to_double(ez * int_pow(zl, 1 - n));
    }
    cld partial = 0.0L;
    cld zpow = 1.0L;
    long double fact = 1.0L;
    for (int k = 0; k <= n - 2; ++k) {
        partial += zpow / fact;
        zpow *= zl;
        fact *= static_cast<long double>(k + 1);
    }
    return to_double((ez - partial) / int_pow(zl, n - 1));
}

} // namespace mlf
