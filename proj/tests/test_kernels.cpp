#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mlf/kernels.hpp"

using namespace mlf;
using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double rel_err(cplx got, cplx want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-30);
}

double rel_gap(cplx a, cplx b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
    return std::abs(a - b) / scale;
}

const MLParameters generic(1.3, 0.4, 0.3);

} // namespace

TEST_CASE("phase building blocks")
{
    const MLParameters p11(1.0, 1.0);
    CHECK(amplitude(1.0, -pi / 2, 1.0, pi, p11) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(amplitude(1.0, 0.0, 1.0, 0.0, p11) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(amplitude(2.0, -pi, 1.0, pi, MLParameters(1.0, 1.0, 0.5)) ==
          doctest::Approx(std::exp(2.0)).epsilon(1e-14));

    CHECK(phase(1.0, -pi / 2, 1.0, pi, MLParameters(1.0, 1.0, 0.0)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(phase(2.0, 0.0, 1.0, pi / 2, MLParameters(2.0, 0.5, 0.0)) ==
          doctest::Approx(pi / 2).epsilon(1e-13));
    // the log term vanishes at t*r = 1
    CHECK(phase(1.0, 0.7, 1.0, 2.0, MLParameters(1.3, 0.1, 0.9)) ==
          doctest::Approx(std::sin(1.3 * 2.7) + 1.3 * 0.9 * 2.7).epsilon(1e-13));

    // on the negative axis the angular terms drop and the growth is -(t r)^rho
    const auto wp = widest_phases(1.0, 1.0, pi, generic);
    CHECK(wp.growth == doctest::Approx(-1.0));
    CHECK(wp.phase == doctest::Approx(0.0));
    CHECK(widest_phases(2.0, 1.5, pi, generic).growth == doctest::Approx(-std::pow(3.0, 1.3)));
    const auto wp2 = widest_phases(1.0, 2.0, 3 * pi / 2, MLParameters(1.0, 1.0, 0.0));
    CHECK(wp2.growth == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(wp2.phase == doctest::Approx(-2.0).epsilon(1e-14));

    // frozen from tests/oracle/reference_values.py
    CHECK(amplitude(1.7, -2.2, 0.8, 2.9, generic) ==
          doctest::Approx(3.281675084836103030797).epsilon(1e-14));
    CHECK(phase(1.7, -2.2, 0.8, 2.9, generic) ==
          doctest::Approx(1.603564310594261740149).epsilon(1e-14));
    const auto wg = widest_phases(1.7, 0.8, 2.9, generic);
    CHECK(wg.growth == doctest::Approx(-1.51268879076126466145).epsilon(1e-14));
    CHECK(wg.phase == doctest::Approx(0.1523874986956923367364).epsilon(1e-13));
}

TEST_CASE("kernels at hand-checkable points")
{
    const MLParameters p11(1.0, 1.0);
    const cplx k = ray_kernel(1.0, -pi / 2, pi / 2, 1.0, pi, p11);
    CHECK(k.real() ==
          doctest::Approx((std::sin(1.0) + std::cos(1.0)) / (2 * pi)).epsilon(1e-14));
    CHECK(std::abs(k.imag()) < 1e-15);

    const cplx a = arc_kernel(2.0, -pi, 1.0, pi, p11);
    CHECK(a.real() == doctest::Approx(std::exp(2.0) / (3 * pi)).epsilon(1e-14));
    CHECK(std::abs(a.imag()) < 1e-14);

    const cplx h = half_ray_kernel(1.0, pi / 2, 1.0, pi, p11);
    CHECK(h.real() ==
          doctest::Approx((std::sin(1.0) + std::cos(1.0)) / (4 * pi)).epsilon(1e-14));

    // degenerate angle: the sine numerator vanishes
    CHECK(half_ray_kernel(1.0, 0.0, 1.0, pi, p11).real() == doctest::Approx(0.0));

    const cplx d = detour_kernel(0.5, -pi, 0, 1.0, pi, p11);
    CHECK(d.real() == doctest::Approx(0.09653235263005390754197).epsilon(1e-14));
    CHECK(std::abs(d.imag()) < 1e-15);

    // the power weight kills the arc integrand as t -> 0 when mu_re < 1
    CHECK(std::abs(arc_kernel(1.0, pi, 1e-12, pi, MLParameters(1.0, 0.5))) < 1e-5);
}

TEST_CASE("kernels against high-precision references")
{
    // frozen from tests/oracle/reference_values.py
    CHECK(rel_err(ray_kernel(1.7, -2.9, 2.5, 0.8, 2.9, generic),
                  {0.1195849722384090060551, 0.1074056140468588471394}) < 1e-14);
    CHECK(rel_err(arc_kernel(1.5, -2.0, 0.8, 2.9, generic),
                  {-0.2440451818927984466599, 0.3079166979883464907588}) < 1e-14);
    CHECK(rel_err(half_ray_kernel(1.7, 2.5, 0.8, 2.9, generic),
                  {0.07794600882104281995894, 0.112007629080623281042}) < 1e-14);
    CHECK(rel_err(ray_kernel_widest(1.7, 0.8, 2.9, generic),
                  {0.07493795002729280542117, 0.09922537635218664751932}) < 1e-13);
    const MLParameters p09(0.9, 0.4, 0.3);
    CHECK(rel_err(detour_kernel(0.4, -1.9, 0, 0.8, 2.9, p09),
                  {-0.06609679454239817790375, 0.133442655097190725008}) < 1e-13);
    CHECK(rel_err(detour_kernel(0.4, -4.1, -2, 0.8, 2.9, p09),
                  {-0.006537329207722986237279, -0.02681888607277939962078}) < 1e-13);
}

TEST_CASE("arc geometry")
{
    auto g = arc_point(0.5, -pi, 0);
    CHECK(g.r == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.phi == doctest::Approx(0.0));
    g = arc_point(0.5, 0.0, 0);
    CHECK(g.r == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(g.phi == doctest::Approx(0.0));
    g = arc_point(0.5, -pi, -2);
    CHECK(g.r == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.phi == doctest::Approx(-2 * pi).epsilon(1e-15));
    CHECK_THROWS_AS(arc_point(1.0, 0.0, 0), invalid_parameter);
}

TEST_CASE("pointwise kernel identities on random admissible points")
{
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> urho(0.55, 2.5);
    std::uniform_real_distribution<double> umu(-2.0, 3.0);
    std::uniform_real_distribution<double> umui(-1.0, 1.0);
    std::uniform_real_distribution<double> upos(0.05, 2.8);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (int i = 0; i < 5000; ++i) {
        const MLParameters p(urho(rng), umu(rng), umui(rng));
        const double lo = pi / (2 * p.rho);
        const double hi = std::min(pi, pi / p.rho);
        const double delta = lo + (hi - lo) * (0.02 + 0.96 * u01(rng));
        const double r = upos(rng);
        const double t = upos(rng);
        const double th = 2 * pi * u01(rng);

        const cplx sym = ray_kernel_sym(r, delta, t, th, p);
        const cplx two = ray_kernel(r, -delta, delta, t, th, p);
        CHECK(rel_gap(sym, two) < 1e-12);

        const cplx split = half_ray_kernel(r, delta, t, th, p) -
                           half_ray_kernel(r, -delta, t, th, p);
        CHECK(rel_gap(sym, split) < 1e-12);

        if (p.rho >= 1.0) {
            const cplx widest = ray_kernel_widest(r, t, th, p);
            const cplx at_pirho = ray_kernel_sym(r, pi / p.rho, t, th, p);
            CHECK(rel_gap(widest, at_pirho) < 1e-12);
        }
    }
}

TEST_CASE("conjugation symmetry of the two-sided kernel")
{
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> urho(0.55, 2.5);
    std::uniform_real_distribution<double> umu(-2.0, 3.0);
    std::uniform_real_distribution<double> upos(0.1, 2.5);
    std::uniform_real_distribution<double> uth(0.1, 2 * pi - 0.1);
    std::uniform_real_distribution<double> uphi(-pi, pi);
    for (int i = 0; i < 2000; ++i) {
        const MLParameters p(urho(rng), umu(rng), 0.0);
        const double r = upos(rng);
        const double t = upos(rng);
        const double th = uth(rng);
        const double phi1 = uphi(rng);
        const double phi2 = uphi(rng);
        const cplx k = ray_kernel(r, phi1, phi2, t, th, p);
        const cplx m = ray_kernel(r, -phi2, -phi1, t, 2 * pi - th, p);
        CHECK(std::abs(m.real() - k.real()) <= 1e-12 * std::max(1.0, std::abs(k)));
        CHECK(std::abs(m.imag() + k.imag()) <= 1e-12 * std::max(1.0, std::abs(k)));
    }
}

TEST_CASE("amplitude positivity and ray decay")
{
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const MLParameters p(0.55 + 2.0 * u01(rng), -2.0 + 5.0 * u01(rng), -1.0 + 2.0 * u01(rng));
        const double phi = -pi + 2 * pi * u01(rng);
        const double t = 0.05 + 2.0 * u01(rng);
        const double th = 2 * pi * u01(rng);
        const double r = 0.05 + 3.0 * u01(rng);
        CHECK(amplitude(r, phi, t, th, p) > 0.0);
        if (std::cos(p.rho * (th + phi)) < -0.05) {
            // decreasing in r once the cosine is negative (both ends may
            // underflow to zero)
            CHECK(amplitude(400.0 / t, phi, t, th, p) <= amplitude(40.0 / t, phi, t, th, p));
            CHECK(amplitude(4000.0 / t, phi, t, th, p) <= amplitude(400.0 / t, phi, t, th, p));
        }
        const MLParameters real_mu(p.rho, p.mu_re, 0.0);
        if (std::cos(p.rho * (th + phi)) < -0.3) {
            CHECK(amplitude(400.0 / t, phi, t, th, real_mu) < 1e-3);
        }
    }
}

TEST_CASE("kernel failure modes")
{
    const MLParameters p11(1.0, 1.0);
    CHECK_THROWS_AS(ray_kernel_sym(1.0, pi, 1.0, pi, p11), singular_denominator);
    CHECK_THROWS_AS(ray_kernel(1.0, -pi, pi, 1.0, pi, p11), singular_denominator);
    CHECK_THROWS_AS(arc_kernel(1.0, 0.0, 1.0, pi, p11), singular_denominator);
    CHECK_THROWS_AS(ray_kernel_widest(1.0, 1.0, pi, p11), singular_denominator);
    // exponent budget
    CHECK_THROWS_AS(amplitude(100.0, 0.0, 100.0, 0.0, MLParameters(2.0, 1.0)), kernel_overflow);
    CHECK_THROWS_AS(arc_kernel(100.0, -pi, 100.0, pi, MLParameters(2.0, 1.0)), kernel_overflow);
}
