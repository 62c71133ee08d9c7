#include "mlf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mlf {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps_mach = std::numeric_limits<double>::epsilon();

// 15-point Kronrod abscissae (positive half); every second one is a node of
// the embedded 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double err;
    double resabs;
};

double eval_checked(const Integrand& f, double x)
{
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw non_finite_evaluation("integrand returned a non-finite value at x = " +
                                    std::to_string(x));
    }
    return v;
}

// One G7/K15 application with the QUADPACK error heuristic: the raw |K-G|
// difference is sharpened through resasc and floored at the roundoff level
// of the absolute integral.
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = eval_checked(f, centre);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double f1 = eval_checked(f, centre - dx);
        const double f2 = eval_checked(f, centre + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        if (j % 2 == 1) {
            resg += wg[j / 2] * (f1 + f2);
        }
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += wgk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));
    }

    const double ahalf = std::abs(half);
    const double value = resk * half;
    resabs *= ahalf;
    resasc *= ahalf;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps_mach)) {
        err = std::max(eps_mach * 50.0 * resabs, err);
    }
    return {value, err, resabs};
}

struct Panel {
    double a;
    double b;
    double value;
    double err;
    double resabs;
};

bool improvable(const Panel& p)
{
    if (p.err <= 50.0 * eps_mach * p.resabs * 1.0000001) {
        return false; // at the roundoff floor of this panel
    }
    const double scale = std::abs(p.a) + std::abs(p.b) + 1.0;
    return (p.b - p.a) > 16.0 * eps_mach * scale;
}

} // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b, const Tolerances& tol)
{
    if (!(a < b)) {
        throw invalid_parameter("integration bounds must satisfy a < b");
    }
    if (!(tol.rtol >= 1e-14)) {
        throw invalid_parameter("rtol must be >= 1e-14");
    }
    if (tol.max_subdivisions < 1) {
        throw invalid_parameter("max_subdivisions must be >= 1");
    }

    std::vector<Panel> panels;
    {
        const PanelEstimate e = gauss_kronrod_15(f, a, b);
        panels.push_back({a, b, e.value, e.err, e.resabs});
    }

    QuadratureResult out;
    out.subdivisions = 1;
    for (;;) {
        double total_v = 0.0;
        double total_e = 0.0;
        for (const Panel& p : panels) {
            total_v += p.value;
            total_e += p.err;
        }
        out.value = total_v;
        out.abs_err = total_e;
        if (total_e <= std::max(tol.atol, tol.rtol * std::abs(total_v))) {
            out.converged = true;
            return out;
        }
        if (out.subdivisions >= tol.max_subdivisions) {
            return out; // budget exhausted, converged stays false
        }

        std::size_t worst = panels.size();
        double worst_err = 0.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (improvable(panels[i]) && panels[i].err >= worst_err) {
                worst_err = panels[i].err;
                worst = i;
            }
        }
        if (worst == panels.size()) {
            return out; // every panel is precision-limited; abs_err is honest
        }

        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        const PanelEstimate l = gauss_kronrod_15(f, p.a, mid);
        const PanelEstimate r = gauss_kronrod_15(f, mid, p.b);
        panels[worst] = {p.a, mid, l.value, l.err, l.resabs};
        panels.push_back({mid, p.b, r.value, r.err, r.resabs});
        ++out.subdivisions;
    }
}

double truncation_radius(const DecaySpec& d, double tail_atol)
{
    if (!(tail_atol > 0.0)) {
        throw invalid_parameter("tail_atol must be > 0");
    }
    if (d.phis.empty()) {
        throw invalid_parameter("decay spec needs at least one ray angle");
    }
    if (!(d.t > 0.0)) {
        throw invalid_parameter("decay requires t > 0");
    }
    const double rho = d.params.rho;
    double c_max = -std::numeric_limits<double>::infinity();
    for (double phi : d.phis) {
        c_max = std::max(c_max, std::cos(rho * (d.theta + phi - pi)));
    }
    if (c_max >= 0.0) {
        throw no_decay("ray integrand does not decay: max cos(rho*(theta+phi-pi)) = " +
                       std::to_string(c_max));
    }

    // Solve (tR)^rho * |c_max| >= L for the envelope budget L, feeding the
    // slowly varying log-power term back in once.
    const double base = -std::log(tail_atol) + rho * std::abs(d.params.mu_im) * 2.0 * pi + 10.0;
    const double u0 = std::max(1.0, base / -c_max);
    const double L = base + std::abs(rho * (1.0 - d.params.mu_re)) * std::max(0.0, std::log(u0) / rho);
    const double u = L / -c_max;
    return std::pow(u, 1.0 / rho) / d.t;
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a, const DecaySpec& d,
                                         const Tolerances& tol)
{
    const double R = std::max(truncation_radius(d, tol.tail_atol), a + 1.0);

    QuadratureResult out;
    double lo = a;
    double width = 1.0;
    int panel_index = 0;
    while (lo < R) {
        const double hi = std::min(lo + width, R);
        const QuadratureResult q = integrate_finite(f, lo, hi, tol);
        out.value += q.value;
        out.abs_err += q.abs_err;
        // max, not sum: the budget is per integrate_finite call
        out.subdivisions = std::max(out.subdivisions, q.subdivisions);
        out.converged = (panel_index == 0) ? q.converged : (out.converged && q.converged);
        lo = hi;
        if (panel_index >= 1) {
            width *= 2.0;
        }
        ++panel_index;
    }
    out.abs_err += tol.tail_atol;
    return out;
}

QuadratureResult integrate_endpoint_singular(const Integrand& f, double exponent_at_zero,
                                             double b, const Tolerances& tol)
{
    if (!(exponent_at_zero > -1.0)) {
        throw non_integrable("endpoint exponent must be > -1, got " +
                             std::to_string(exponent_at_zero));
    }
    if (!(b > 0.0)) {
        throw invalid_parameter("upper bound must be > 0");
    }
    if (exponent_at_zero >= 0.0) {
        return integrate_finite(f, 0.0, b, tol);
    }
    // r = u^p with p*(1+e0) >= 2 bounds the transformed integrand at 0; p is
    // capped so u^p cannot underflow before the integrand becomes negligible.
    const int p = static_cast<int>(
        std::min(64.0, std::ceil(2.0 / (1.0 + exponent_at_zero))));
    const double c = std::pow(b, 1.0 / p);
    auto g = [&f, p](double u) {
        const double r = std::pow(u, p);
        if (r < 1e-300) {
            return 0.0;
        }
        return f(r) * p * std::pow(u, p - 1);
    };
    return integrate_finite(g, 0.0, c, tol);
}

} // namespace mlf
