#include "mlf/domain.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mlf {

namespace {

constexpr double pi = std::numbers::pi;

// Angles within this distance of a special value (pi or pi/rho) are snapped
// onto it, so that near-boundary CLI input selects the detour contours
// instead of an almost-singular plain one.
constexpr double angle_snap = 1e-9;

double snap(double x, double target)
{
    return std::abs(x - target) <= angle_snap ? target : x;
}

void check_finite(double x, const char* name)
{
    if (!std::isfinite(x)) {
        throw invalid_parameter(std::string(name) + " must be finite");
    }
}

} // namespace

PolarComplex::PolarComplex(double modulus, double angle) : t(modulus), theta(angle)
{
    check_finite(modulus, "modulus");
    check_finite(angle, "angle");
    if (t < 0.0) {
        throw invalid_parameter("modulus must be >= 0");
    }
}

std::complex<double> PolarComplex::to_complex() const
{
    return std::polar(t, theta);
}

double canonical_angle(double theta)
{
    double r = std::fmod(theta, 2.0 * pi);
    if (r < 0.0) {
        r += 2.0 * pi;
    }
    if (r >= 2.0 * pi) { // fmod rounding at the seam
        r = 0.0;
    }
    return r;
}

MLParameters::MLParameters(double rho_, double mu_re_, double mu_im_)
    : rho(rho_), mu_re(mu_re_), mu_im(mu_im_)
{
    check_finite(rho_, "rho");
    check_finite(mu_re_, "mu_re");
    check_finite(mu_im_, "mu_im");
    if (!(rho > 0.5)) {
        throw invalid_parameter("rho must be > 1/2, got " + std::to_string(rho));
    }
}

ContourConfig ContourConfig::param1(double delta1, double delta2, double eps, double eps1)
{
    ContourConfig c;
    c.mode = Parameterization::p1;
    c.delta1 = delta1;
    c.delta2 = delta2;
    c.eps = eps;
    c.eps1 = eps1;
    if (!(c.eps > 0.0)) {
        throw invalid_parameter("eps must be > 0");
    }
    if (!(c.eps1 > 0.0 && c.eps1 < 1.0)) {
        throw invalid_parameter("eps1 must lie in (0, 1)");
    }
    return c;
}

ContourConfig ContourConfig::param2(double delta, double eps, double eps1)
{
    ContourConfig c = param1(delta, delta, eps, eps1);
    c.mode = Parameterization::p2;
    c.delta = delta;
    return c;
}

ContourConfig ContourConfig::param3(double eps, double eps1)
{
    ContourConfig c = param1(0.0, 0.0, eps, eps1);
    c.mode = Parameterization::p3;
    return c;
}

std::pair<double, double> ContourConfig::deltas(double rho) const
{
    switch (mode) {
    case Parameterization::p1:
        return {delta1, delta2};
    case Parameterization::p2:
        return {delta, delta};
    case Parameterization::p3:
    default:
        return {pi / rho, pi / rho};
    }
}

namespace {

void check_delta_range(double d, double lo, double hi, bool hi_inclusive, const char* which)
{
    const bool ok = d > lo && (hi_inclusive ? d <= hi : d < hi);
    if (!ok) {
        throw delta_out_of_range(std::string(which) + " = " + std::to_string(d) +
                                 " outside (" + std::to_string(lo) +
                                 (hi_inclusive ? ", " : ", ") + std::to_string(hi) +
                                 (hi_inclusive ? "]" : ")"));
    }
}

} // namespace

ContourConfig validate_config(const MLParameters& p, const ContourConfig& cfg, Rep rep)
{
    ContourConfig out = cfg;
    const double lo = pi / (2.0 * p.rho);

    if (!(out.eps > 0.0)) {
        throw invalid_parameter("eps must be > 0");
    }
    if (!(out.eps1 > 0.0 && out.eps1 < 1.0)) {
        throw invalid_parameter("eps1 must lie in (0, 1)");
    }

    if (rep == Rep::b && !(p.mu_re < 1.0 + 1.0 / p.rho)) {
        throw mu_constraint_violated("rep b requires mu_re < 1 + 1/rho = " +
                                     std::to_string(1.0 + 1.0 / p.rho) + ", got mu_re = " +
                                     std::to_string(p.mu_re));
    }

    if (out.mode == Parameterization::p3) {
        if (rep == Rep::a ? p.rho < 1.0 : !(p.rho > 1.0)) {
            throw param3_not_available(rep == Rep::a
                                           ? "fixed delta = pi/rho requires rho >= 1"
                                           : "rep b with delta = pi/rho requires rho > 1");
        }
        return out;
    }

    const double special = p.rho > 1.0 ? pi / p.rho : pi;
    auto snap_one = [&](double d) { return snap(d, special); };
    if (out.mode == Parameterization::p1) {
        out.delta1 = snap_one(out.delta1);
        out.delta2 = snap_one(out.delta2);
    } else {
        out.delta = snap_one(out.delta);
        out.delta1 = out.delta2 = out.delta;
    }

    const auto [d1, d2] = out.deltas(p.rho);
    if (rep == Rep::a) {
        const double hi = std::min(pi, pi / p.rho);
        check_delta_range(d1, lo, hi, true, "delta1");
        check_delta_range(d2, lo, hi, true, "delta2");
    } else if (p.rho > 1.0) {
        check_delta_range(d1, lo, pi / p.rho, true, "delta1");
        check_delta_range(d2, lo, pi / p.rho, true, "delta2");
    } else {
        // delta = pi is admitted here and routed to the detour cases 2-4.
        check_delta_range(d1, lo, pi, true, "delta1");
        check_delta_range(d2, lo, pi, true, "delta2");
    }
    return out;
}

RepBCase classify_case(const MLParameters& p, const ContourConfig& cfg)
{
    if (cfg.mode == Parameterization::p3) {
        return RepBCase::case6;
    }
    const auto [d1, d2] = cfg.deltas(p.rho);
    if (p.rho <= 1.0) {
        const bool b1 = d1 == pi;
        const bool b2 = d2 == pi;
        if (b1 && b2) {
            return RepBCase::case4;
        }
        if (b1) {
            return RepBCase::case2;
        }
        if (b2) {
            return RepBCase::case3;
        }
    } else if (d1 == d2 && d1 == pi / p.rho) {
        return RepBCase::case6;
    }
    return d1 == d2 ? RepBCase::case5 : RepBCase::case1;
}

ThetaInterval admissible_theta(const MLParameters& p, const ContourConfig& cfg, Rep rep)
{
    if (rep == Rep::a) {
        const auto [d1, d2] = cfg.deltas(p.rho);
        const double h = pi / (2.0 * p.rho);
        return {h - d2 + pi, -h + d1 + pi};
    }
    return admissible_theta(p, cfg, classify_case(p, cfg));
}

ThetaInterval admissible_theta(const MLParameters& p, const ContourConfig& cfg, RepBCase c)
{
    const auto [d1, d2] = cfg.deltas(p.rho);
    const double h = pi / (2.0 * p.rho);
    switch (c) {
    case RepBCase::case2:
        return {h - d2 + pi, -h + 2.0 * pi};
    case RepBCase::case3:
        return {h, -h + d1 + pi};
    case RepBCase::case4:
        return {h, -h + 2.0 * pi};
    case RepBCase::case6:
        return {pi - h, pi + h};
    case RepBCase::case1:
    case RepBCase::case5:
    default:
        return {h - d2 + pi, -h + d1 + pi};
    }
}

ContourConfig default_config(const MLParameters& p)
{
    if (p.rho >= 1.0) {
        return ContourConfig::param3();
    }
    return ContourConfig::param2(std::min(pi, pi / p.rho));
}

} // namespace mlf
