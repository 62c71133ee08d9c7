#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mlf/reference.hpp"

using namespace mlf;
using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double rel_err(cplx got, cplx want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-30);
}

} // namespace

TEST_CASE("reciprocal gamma special values")
{
    CHECK(recip_gamma({1.0, 0.0}) == cplx(1.0, 0.0));
    CHECK(recip_gamma({0.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(recip_gamma({-4.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(recip_gamma({5.0, 0.0}).real() == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK(recip_gamma({0.5, 0.0}).real() ==
          doctest::Approx(0.5641895835477562869481).epsilon(1e-14));
}

TEST_CASE("reciprocal gamma against high-precision references")
{
    // frozen from tests/oracle/reference_values.py (mpmath, 40 digits)
    struct Row {
        cplx w;
        cplx want;
    };
    const Row rows[] = {
        {{0.3, -0.4}, {0.3375951129583157435434, -0.5063375119631571822561}},
        {{-1.7, 2.3}, {6.010093754097372909974, -119.8087715332264169737}},
        {{5.5, 0.0}, {0.01910483245876000125115, 0.0}},
        {{-3.2, 0.0}, {1.451259987681998144391, 0.0}},
        {{2.7, 0.3}, {0.6415847988685013171995, -0.1569501108091364137759}},
    };
    for (const auto& row : rows) {
        CHECK(rel_err(recip_gamma(row.w), row.want) < 1e-13);
    }
}

TEST_CASE("reflection identity off the integer lattice")
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    int tested = 0;
    while (tested < 500) {
        const cplx w(u(rng), u(rng));
        if (std::abs(w) > 10.0 || std::abs(w.imag()) < 0.05 ||
            std::abs(w.real() - std::round(w.real())) < 0.05) {
            continue;
        }
        const cplx lhs = recip_gamma(w) * recip_gamma(1.0 - w);
        const cplx rhs = std::sin(pi * w) / pi;
        CHECK(rel_err(lhs, rhs) < 1e-12);
        ++tested;
    }
}

TEST_CASE("series basics")
{
    const MLParameters p11(1.0, 1.0);
    auto r = series_eval(p11, {1.0, 0.0});
    CHECK(r.value.real() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(std::abs(r.value.imag()) < 1e-16);

    // only the k = 0 term survives at z = 0
    const MLParameters p(0.77, 0.3, -0.6);
    r = series_eval(p, {0.0, 0.0});
    CHECK(std::abs(r.value - recip_gamma(p.mu())) < 1e-16);

    r = series_eval(MLParameters(1.0, 2.0), {-1.0, 0.0});
    CHECK(r.value.real() == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("series against frozen references")
{
    // frozen from tests/oracle/reference_values.py
    auto r = series_eval(MLParameters(1.3, 2.7), std::polar(3.0, pi));
    CHECK(rel_err(r.value, {0.2424555005899308711363, 0.0}) < 1e-12);

    r = series_eval(MLParameters(0.8, 0.5, 0.25), std::polar(0.7, 2.5));
    CHECK(rel_err(r.value, {0.0261473727960083581625, 0.5729383308389910245049}) < 1e-12);

    r = series_eval(MLParameters(2.0, 1.0), {-1.0, 0.0});
    CHECK(rel_err(r.value, {0.4275835761558070044108, 0.0}) < 1e-12);

    r = series_eval(MLParameters(0.6, 1.2), std::polar(1.1, 2.8));
    CHECK(rel_err(r.value, {0.5781599806816051068193, 0.1512891942786664195311}) < 1e-12);
}

TEST_CASE("series matches the elementary forms at rho = 1")
{
    const double ts[] = {0.01, 0.3, 1.0, 2.5, 4.0, 7.0};
    const double thetas[] = {0.0, pi / 4, pi / 2, 2.2, pi, 4.4, 3 * pi / 2};
    for (int n = -2; n <= 4; ++n) {
        const MLParameters p(1.0, static_cast<double>(n));
        for (double t : ts) {
            for (double th : thetas) {
                const cplx z = std::polar(t, th);
                const cplx want = closed_form_rho1(n, z);
                const auto got = series_eval(p, z);
                CHECK(rel_err(got.value, want) < 1e-10);
            }
        }
    }
}

TEST_CASE("series symmetry for real parameters")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> urho(0.55, 2.5);
    std::uniform_real_distribution<double> umu(-2.0, 4.0);
    std::uniform_real_distribution<double> ut(0.0, 7.0);
    std::uniform_real_distribution<double> uth(0.0, pi);
    for (int i = 0; i < 200; ++i) {
        const MLParameters p(urho(rng), umu(rng));
        const cplx z = std::polar(ut(rng), uth(rng));
        const auto a = series_eval(p, z);
        const auto b = series_eval(p, std::conj(z));
        CHECK(std::abs(b.value - std::conj(a.value)) <= 1e-14 * std::max(1.0, std::abs(a.value)));

        const auto real_arg = series_eval(p, {z.real(), 0.0});
        CHECK(std::abs(real_arg.value.imag()) <=
              1e-14 * std::max(1.0, std::abs(real_arg.value.real())));
    }
}

TEST_CASE("series stop rule failure")
{
    SeriesSettings s;
    s.max_terms = 3;
    CHECK_THROWS_AS(series_eval(MLParameters(1.0, 1.0), {5.0, 0.0}, s), series_divergence);
}

TEST_CASE("elementary forms")
{
    CHECK(closed_form_rho1(1, {-1.0, 0.0}).real() ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(closed_form_rho1(0, {-2.0, 0.0}).real() ==
          doctest::Approx(-2.0 * std::exp(-2.0)).epsilon(1e-15));
    CHECK(closed_form_rho1(3, {-2.0, 0.0}).real() ==
          doctest::Approx((1.0 + std::exp(-2.0)) / 4.0).epsilon(1e-14));
    // z = 0 falls back to the series value 1/Gamma(n)
    CHECK(closed_form_rho1(3, {0.0, 0.0}).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(closed_form_rho1(0, {0.0, 0.0}) == cplx(0.0, 0.0));
}
