#pragma once

#include <complex>

#include "mlf/domain.hpp"

namespace mlf {

struct SeriesSettings {
    double rel_term_tol = 1e-16;
    int consecutive_small = 2;
    int max_terms = 10000;
};

struct SeriesResult {
    std::complex<double> value;
    /// Magnitude of the first omitted term plus the cancellation floor of the
    /// summation; honest even when the sum is dominated by cancellation.
    double abs_err;
    int terms;
};

/// 1/Gamma(w) on the whole plane: Lanczos (g = 7, 9 coefficients) for
/// Re w >= 1/2, reflection below, exactly 0 at nonpositive integers. Real
/// integer arguments take an exact factorial path so that the series oracle
/// keeps sub-double cancellation noise at integer parameters.
std::complex<double> recip_gamma(std::complex<double> w);

/// Sum of z^k / Gamma(mu + k/rho) with the two-consecutive-small-terms stop
/// rule. Throws series_divergence if max_terms is hit first.
SeriesResult series_eval(const MLParameters& p, std::complex<double> z,
                         const SeriesSettings& s = {});

/// E_{1,n} in elementary terms: e^z z^{1-n} for n <= 1 and
/// z^{1-n} (e^z - sum_{k<=n-2} z^k/k!) for n >= 2. At z = 0 returns 1/Gamma(n).
std::complex<double> closed_form_rho1(int n, std::complex<double> z);

} // namespace mlf
