#include "mlf/representations.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "mlf/kernels.hpp"

namespace mlf {

namespace {

constexpr double pi = std::numbers::pi;

const char* names[] = {"RepA_P1",     "RepA_P2",     "RepA_P3",     "RepB_Case1",
                       "RepB_Case2",  "RepB_Case3",  "RepB_Case4",  "RepB_Case5",
                       "RepB_Case6",  "Series",      "ClosedForm"};

using KernelFn = std::function<std::complex<double>(double)>;

// Accumulates quadrature pieces into one complex value with an aggregate
// error estimate and failure notes.
struct Assembly {
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;
    bool budget_exhausted = false;
    bool evaluation_failed = false;
    std::vector<std::string> notes;
    const Tolerances* tol;

    explicit Assembly(const Tolerances& t) : tol(&t) {}

    void take(const QuadratureResult& q, bool real_part, double sign)
    {
        if (real_part) {
            value += std::complex<double>(sign * q.value, 0.0);
        } else {
            value += std::complex<double>(0.0, sign * q.value);
        }
        abs_err += q.abs_err;
        if (!q.converged && q.subdivisions >= tol->max_subdivisions) {
            budget_exhausted = true;
        }
    }

    // Runs re/im quadratures of one contour piece, catching integrand-level
    // failures so a partial result with warnings survives.
    template <typename Job>
    void piece(const char* what, double sign, Job&& job)
    {
        for (bool real_part : {true, false}) {
            try {
                take(job(real_part), real_part, sign);
            } catch (const error& e) {
                evaluation_failed = true;
                notes.push_back(std::string(what) + (real_part ? " (re): " : " (im): ") + e.what());
            }
        }
    }

    EvalReport report(Method m) const
    {
        EvalReport r;
        r.value = value;
        r.abs_err = abs_err;
        r.method = m;
        r.warnings = notes;
        // Roundoff-floor stops leave abs_err slightly above tolerance; 100x
        // is the cutoff between that and a genuinely unresolved integral.
        const double bound =
            100.0 * std::max(tol->atol, tol->rtol * std::max(1.0, std::abs(value)));
        r.reliable = !evaluation_failed && !budget_exhausted && abs_err <= bound;
        if (budget_exhausted) {
            r.warnings.push_back("quadrature hit the subdivision budget; result unresolved");
        } else if (!r.reliable && !evaluation_failed) {
            r.warnings.push_back("quadrature error estimate exceeds the reliability cutoff");
        }
        return r;
    }
};

double part(const std::complex<double>& v, bool real_part)
{
    return real_part ? v.real() : v.imag();
}

void require_positive_t(const PolarComplex& z)
{
    if (!(z.t > 0.0)) {
        throw invalid_parameter("integral representations require t > 0");
    }
}

double admitted_angle(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                      Rep rep)
{
    const double th = canonical_angle(z.theta);
    const ThetaInterval w = admissible_theta(p, cfg, rep);
    if (!w.contains(th)) {
        throw inadmissible_theta("arg z = " + std::to_string(th) + " outside (" +
                                 std::to_string(w.lo) + ", " + std::to_string(w.hi) + ")");
    }
    return th;
}

// Ray-plus-arc evaluator shared by the three rep-a parameterizations.
EvalReport rep_a_common(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                        const Tolerances& tol, Method m)
{
    require_positive_t(z);
    const double th = admitted_angle(p, cfg, z, Rep::a);
    const auto [d1, d2] = cfg.deltas(p.rho);
    const double a = 1.0 + cfg.eps;
    const double t = z.t;

    Assembly asmb(tol);
    const DecaySpec decay{p, t, th, {-d1, d2}};

    KernelFn ray;
    if (m == Method::rep_a_p1) {
        ray = [=](double r) { return ray_kernel(r, -d1, d2, t, th, p); };
    } else if (m == Method::rep_a_p2) {
        ray = [=, dd = cfg.delta](double r) { return ray_kernel_sym(r, dd, t, th, p); };
    } else {
        ray = [=](double r) { return ray_kernel_widest(r, t, th, p); };
    }

    asmb.piece("ray integral", 1.0, [&](bool re) {
        return integrate_semi_infinite([&](double r) { return part(ray(r), re); }, a, decay, tol);
    });
    asmb.piece("arc integral", 1.0, [&](bool re) {
        return integrate_finite([&](double phi) { return part(arc_kernel(a, phi, t, th, p), re); },
                                -d1 - pi, d2 - pi, tol);
    });
    return asmb.report(m);
}

} // namespace

const char* method_name(Method m)
{
    return names[static_cast<int>(m)];
}

EvalReport eval_rep_a_p1(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                         const Tolerances& tol)
{
    ContourConfig c = validate_config(p, cfg, Rep::a);
    if (c.mode != Parameterization::p1) {
        throw invalid_parameter("eval_rep_a_p1 requires a two-angle contour");
    }
    return rep_a_common(p, c, z, tol, Method::rep_a_p1);
}

EvalReport eval_rep_a_p2(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                         const Tolerances& tol)
{
    ContourConfig c = validate_config(p, cfg, Rep::a);
    if (c.mode != Parameterization::p2) {
        throw invalid_parameter("eval_rep_a_p2 requires a single-angle contour");
    }
    return rep_a_common(p, c, z, tol, Method::rep_a_p2);
}

EvalReport eval_rep_a_p3(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                         const Tolerances& tol)
{
    ContourConfig c = validate_config(p, cfg, Rep::a);
    if (c.mode != Parameterization::p3) {
        throw invalid_parameter("eval_rep_a_p3 requires the fixed pi/rho contour");
    }
    return rep_a_common(p, c, z, tol, Method::rep_a_p3);
}

EvalReport eval_rep_b(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                      const Tolerances& tol, SplitTailSign tail_sign)
{
    ContourConfig c = validate_config(p, cfg, Rep::b);
    require_positive_t(z);
    const RepBCase bc = classify_case(p, c);
    const double th = [&] {
        const double thc = canonical_angle(z.theta);
        const ThetaInterval w = admissible_theta(p, c, bc);
        if (!w.contains(thc)) {
            throw inadmissible_theta("arg z = " + std::to_string(thc) + " outside (" +
                                     std::to_string(w.lo) + ", " + std::to_string(w.hi) + ")");
        }
        return thc;
    }();

    const auto [d1, d2] = c.deltas(p.rho);
    const double t = z.t;
    const double e0 = p.rho * (1.0 - p.mu_re);
    const double eps1 = c.eps1;
    const double tail = tail_sign == SplitTailSign::plus ? 1.0 : -1.0;

    Assembly asmb(tol);

    // [0, cut] with the endpoint power treatment plus, optionally, the
    // truncated remainder [cut, infinity).
    auto from_zero = [&](const char* what, double sign, const KernelFn& k, double cut,
                         std::vector<double> phis, bool to_infinity) {
        asmb.piece(what, sign, [&](bool re) {
            QuadratureResult head = integrate_endpoint_singular(
                [&](double r) { return part(k(r), re); }, e0, cut, tol);
            if (!to_infinity) {
                return head;
            }
            const DecaySpec decay{p, t, th, phis};
            const QuadratureResult rest = integrate_semi_infinite(
                [&](double r) { return part(k(r), re); }, cut, decay, tol);
            head.value += rest.value;
            head.abs_err += rest.abs_err;
            head.subdivisions = std::max(head.subdivisions, rest.subdivisions);
            head.converged = head.converged && rest.converged;
            return head;
        });
    };
    auto upper_ray = [&](const char* what, double sign, const KernelFn& k,
                         std::vector<double> phis) {
        const DecaySpec decay{p, t, th, phis};
        asmb.piece(what, sign, [&](bool re) {
            return integrate_semi_infinite([&](double r) { return part(k(r), re); }, 1.0 + eps1,
                                           decay, tol);
        });
    };
    auto arc = [&](const char* what, int k, double lo, double hi) {
        asmb.piece(what, 1.0, [&](bool re) {
            return integrate_finite(
                [&](double psi) { return part(detour_kernel(eps1, psi, k, t, th, p), re); }, lo, hi,
                tol);
        });
    };

    Method m = Method::rep_b_case1;
    switch (bc) {
    case RepBCase::case1: {
        m = Method::rep_b_case1;
        from_zero("ray integral", 1.0,
                  [=](double r) { return ray_kernel(r, -d1, d2, t, th, p); }, 1.0, {-d1, d2},
                  true);
        break;
    }
    case RepBCase::case5: {
        m = Method::rep_b_case5;
        from_zero("ray integral", 1.0,
                  [=, dd = d1](double r) { return ray_kernel_sym(r, dd, t, th, p); }, 1.0,
                  {-d1, d1}, true);
        break;
    }
    case RepBCase::case6: {
        m = Method::rep_b_case6;
        from_zero("ray integral", 1.0, [=](double r) { return ray_kernel_widest(r, t, th, p); },
                  1.0, {-pi / p.rho, pi / p.rho}, true);
        break;
    }
    case RepBCase::case2: {
        m = Method::rep_b_case2;
        from_zero("outgoing ray", 1.0,
                  [=, dd = d2](double r) { return half_ray_kernel(r, dd, t, th, p); }, 1.0, {d2},
                  true);
        from_zero("incoming ray below detour", -1.0,
                  [=](double r) { return half_ray_kernel(r, -pi, t, th, p); }, 1.0 - eps1, {},
                  false);
        upper_ray("incoming ray above detour", -1.0,
                  [=](double r) { return half_ray_kernel(r, -pi, t, th, p); }, {-pi});
        arc("detour arc", -2, -2.0 * pi, -pi);
        break;
    }
    case RepBCase::case3: {
        m = Method::rep_b_case3;
        from_zero("outgoing ray below detour", 1.0,
                  [=](double r) { return half_ray_kernel(r, pi, t, th, p); }, 1.0 - eps1, {},
                  false);
        arc("detour arc", 0, -pi, 0.0);
        upper_ray("outgoing ray above detour", tail,
                  [=](double r) { return half_ray_kernel(r, pi, t, th, p); }, {pi});
        from_zero("incoming ray", -1.0,
                  [=, dd = d1](double r) { return half_ray_kernel(r, -dd, t, th, p); }, 1.0,
                  {-d1}, true);
        break;
    }
    case RepBCase::case4: {
        m = Method::rep_b_case4;
        // Per the derivation this is the delta = pi instance of the
        // equal-angle kernel, not the pi/rho one; they differ for rho < 1.
        from_zero("ray below detour", 1.0,
                  [=](double r) { return ray_kernel_sym(r, pi, t, th, p); }, 1.0 - eps1, {},
                  false);
        arc("detour arc (upper branch)", 0, -pi, 0.0);
        arc("detour arc (lower branch)", -2, -2.0 * pi, -pi);
        upper_ray("ray above detour", tail,
                  [=](double r) { return ray_kernel_sym(r, pi, t, th, p); }, {-pi, pi});
        break;
    }
    }
    return asmb.report(m);
}

EvalReport evaluate(const MLParameters& p, const PolarComplex& z, const EvalOptions& opt)
{
    if (z.t == 0.0) {
        // E(0) = 1/Gamma(mu); no quadrature is involved, so no error estimate
        EvalReport r;
        r.value = recip_gamma(p.mu());
        r.abs_err = 0.0;
        r.method = Method::closed_form;
        r.reliable = true;
        return r;
    }

    std::vector<std::string> carried;
    const ContourConfig cfg = default_config(p);
    const double th = canonical_angle(z.theta);
    if (z.t <= opt.t_max_integral && admissible_theta(p, cfg, Rep::a).contains(th)) {
        EvalReport r = p.rho >= 1.0 ? eval_rep_a_p3(p, cfg, z, opt.tol)
                                    : eval_rep_a_p2(p, cfg, z, opt.tol);
        if (r.reliable) {
            return r;
        }
        carried = std::move(r.warnings);
        carried.push_back("integral representation unreliable; falling back to series");
    }

    const SeriesResult s = series_eval(p, z.to_complex(), opt.series);
    EvalReport r;
    r.value = s.value;
    r.abs_err = s.abs_err;
    r.method = Method::series;
    r.warnings = std::move(carried);
    r.reliable = s.abs_err <= 1e-8 * std::max(1.0, std::abs(s.value));
    if (!r.reliable) {
        r.warnings.push_back("series error estimate " + std::to_string(s.abs_err) +
                             " is poor at this argument");
    }
    return r;
}

} // namespace mlf
