// Command-line front end: single evaluations, polar-grid sweeps in CSV form,
// and the verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mlf/representations.hpp"
#include "mlf/verification.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct CommonFlags {
    double rho = 1.0;
    double mu_re = 1.0;
    double mu_im = 0.0;
    std::string rep = "auto";
    std::optional<double> delta1;
    std::optional<double> delta2;
    std::optional<double> delta;
    double eps = 0.5;
    double eps1 = 0.5;
    double rtol = 1e-10;
    double atol = 1e-12;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--rho", rho, "parameter rho (> 1/2)");
        cmd->add_option("--mu-re", mu_re, "real part of mu");
        cmd->add_option("--mu-im", mu_im, "imaginary part of mu");
        cmd->add_option("--rep", rep, "evaluation route")
            ->check(CLI::IsMember({"a1", "a2", "a3", "b", "auto"}))
            ->capture_default_str();
        cmd->add_option("--delta1", delta1, "first ray angle (radians; a1/b)");
        cmd->add_option("--delta2", delta2, "second ray angle (radians; a1/b)");
        cmd->add_option("--delta", delta, "shared ray angle (radians; a2/b)");
        cmd->add_option("--eps", eps, "ray start offset (> 0)")->capture_default_str();
        cmd->add_option("--eps1", eps1, "detour radius around r = 1, in (0,1)")
            ->capture_default_str();
        cmd->add_option("--rtol", rtol, "relative quadrature tolerance")->capture_default_str();
        cmd->add_option("--atol", atol, "absolute quadrature tolerance")->capture_default_str();
    }

    mlf::Tolerances tolerances() const
    {
        mlf::Tolerances t;
        t.rtol = rtol;
        t.atol = atol;
        return t;
    }

    mlf::MLParameters params() const { return mlf::MLParameters(rho, mu_re, mu_im); }

    mlf::ContourConfig config(mlf::Rep which) const
    {
        if (rep == "a3") {
            return mlf::ContourConfig::param3(eps, eps1);
        }
        if (rep == "a1") {
            const double fallback = std::min(pi, pi / rho);
            return mlf::ContourConfig::param1(delta1.value_or(fallback),
                                              delta2.value_or(fallback), eps, eps1);
        }
        if (delta1 || delta2) {
            const double fallback = which == mlf::Rep::b && rho > 1.0 ? pi / rho
                                                                      : std::min(pi, pi / rho);
            return mlf::ContourConfig::param1(delta1.value_or(fallback),
                                              delta2.value_or(fallback), eps, eps1);
        }
        double d = delta.value_or(which == mlf::Rep::b && rho > 1.0 ? pi / rho
                                                                    : std::min(pi, pi / rho));
        return mlf::ContourConfig::param2(d, eps, eps1);
    }

    mlf::EvalReport run(const mlf::PolarComplex& z) const
    {
        const mlf::MLParameters p = params();
        const mlf::Tolerances tol = tolerances();
        if (rep == "a1") {
            return mlf::eval_rep_a_p1(p, config(mlf::Rep::a), z, tol);
        }
        if (rep == "a2") {
            return mlf::eval_rep_a_p2(p, config(mlf::Rep::a), z, tol);
        }
        if (rep == "a3") {
            return mlf::eval_rep_a_p3(p, config(mlf::Rep::a), z, tol);
        }
        if (rep == "b") {
            return mlf::eval_rep_b(p, config(mlf::Rep::b), z, tol);
        }
        mlf::EvalOptions opt;
        opt.tol = tol;
        return mlf::evaluate(p, z, opt);
    }
};

std::string num17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// exit codes shared by the subcommands
constexpr int exit_usage = 1;
constexpr int exit_inadmissible = 2;
constexpr int exit_numerical = 3;

int cmd_eval(const CommonFlags& flags, double t, double theta)
{
    try {
        const mlf::PolarComplex z(t, theta);
        const mlf::EvalReport r = flags.run(z);
        std::printf("%s %s %s %s\n", num17(r.value.real()).c_str(), num17(r.value.imag()).c_str(),
                    num17(r.abs_err).c_str(), mlf::method_name(r.method));
        for (const std::string& w : r.warnings) {
            std::fprintf(stderr, "warning: %s\n", w.c_str());
        }
        return r.reliable ? 0 : exit_numerical;
    } catch (const mlf::series_divergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numerical;
    } catch (const mlf::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_inadmissible;
    }
}

struct GridRow {
    double t;
    double theta;
    mlf::EvalReport report;
    bool failed = false;
};

int cmd_grid(const CommonFlags& flags, double t_min, double t_max, double theta_min,
             double theta_max, int n_t, int n_theta, const std::string& out_path)
{
    if (!(t_min <= t_max) || !(theta_min < theta_max) || n_t < 1 || n_theta < 1 || t_min < 0.0) {
        std::fprintf(stderr, "error: invalid grid bounds\n");
        return exit_inadmissible;
    }
    // validate the parameters and any explicit contour up front
    try {
        const mlf::MLParameters p = flags.params();
        if (flags.rep != "auto") {
            validate_config(p, flags.config(flags.rep == "b" ? mlf::Rep::b : mlf::Rep::a),
                            flags.rep == "b" ? mlf::Rep::b : mlf::Rep::a);
        }
    } catch (const mlf::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_inadmissible;
    }

    std::vector<GridRow> rows(static_cast<std::size_t>(n_t) * n_theta);
    auto value_at = [&](int i, int j) {
        const double t = n_t == 1 ? t_min : t_min + (t_max - t_min) * i / (n_t - 1.0);
        const double th =
            n_theta == 1 ? theta_min : theta_min + (theta_max - theta_min) * j / (n_theta - 1.0);
        GridRow row;
        row.t = t;
        row.theta = th;
        try {
            if (flags.rep == "auto") {
                row.report = flags.run(mlf::PolarComplex(t, th));
            } else {
                const mlf::Rep which = flags.rep == "b" ? mlf::Rep::b : mlf::Rep::a;
                const mlf::MLParameters p = flags.params();
                const auto cfg = validate_config(p, flags.config(which), which);
                const auto sector = admissible_theta(p, cfg, which);
                if (t > 0.0 && sector.contains(mlf::canonical_angle(th))) {
                    row.report = flags.run(mlf::PolarComplex(t, th));
                } else {
                    const auto s = mlf::series_eval(p, std::polar(t, th));
                    row.report.value = s.value;
                    row.report.abs_err = s.abs_err;
                    row.report.method = mlf::Method::series;
                    row.report.reliable = true;
                }
            }
        } catch (const mlf::error&) {
            row.failed = true;
        }
        return row;
    };

    // deterministic fan-out: rows are indexed, threads fill disjoint slices
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, rows.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < rows.size(); k += workers) {
                rows[k] = value_at(static_cast<int>(k) / n_theta, static_cast<int>(k) % n_theta);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::fprintf(stderr, "error: cannot open %s\n", out_path.c_str());
            return exit_usage;
        }
        os = &file;
    }
    *os << "t,theta,re,im,abs_err,method\n";
    for (const GridRow& row : rows) {
        if (row.failed) {
            *os << num17(row.t) << ',' << num17(row.theta) << ",,,,Failed\n";
        } else {
            *os << num17(row.t) << ',' << num17(row.theta) << ',' << num17(row.report.value.real())
                << ',' << num17(row.report.value.imag()) << ',' << num17(row.report.abs_err) << ','
                << mlf::method_name(row.report.method) << '\n';
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite)
{
    const auto results = mlf::verify::run_suite(suite);
    bool all_ok = true;
    for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        std::printf("%-40s %s  max err %.3e  (tol %.1e, %d checks)\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.max_err, r.tolerance, r.points);
    }
    return all_ok ? 0 : exit_usage;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-parameter Mittag-Leffler function evaluator"};
    app.require_subcommand(1);

    CommonFlags eval_flags;
    double t = 0.0;
    double theta = 0.0;
    double theta_pi = 0.0;
    auto* eval = app.add_subcommand("eval", "evaluate at one point, print 're im abs_err method'");
    eval_flags.attach(eval);
    eval->add_option("--t", t, "modulus of z")->required();
    auto* th_opt = eval->add_option("--theta", theta, "angle of z in radians");
    auto* thpi_opt =
        eval->add_option("--theta-pi", theta_pi, "angle of z in multiples of pi")->excludes(th_opt);
    th_opt->excludes(thpi_opt);

    CommonFlags grid_flags;
    double t_min = 0.01, t_max = 7.0, theta_min = 0.0, theta_max = 0.0;
    double theta_min_pi = 0.55, theta_max_pi = 1.45;
    int n_t = 25, n_theta = 25;
    std::string out_path;
    auto* grid = app.add_subcommand("grid", "sweep a polar grid, emit CSV");
    grid_flags.attach(grid);
    grid->add_option("--t-min", t_min, "")->capture_default_str();
    grid->add_option("--t-max", t_max, "")->capture_default_str();
    auto* gth1 = grid->add_option("--theta-min", theta_min, "lower angle (radians)");
    auto* gth2 = grid->add_option("--theta-max", theta_max, "upper angle (radians)");
    auto* gthp1 = grid->add_option("--theta-min-pi", theta_min_pi, "lower angle (multiples of pi)")
                      ->excludes(gth1);
    auto* gthp2 = grid->add_option("--theta-max-pi", theta_max_pi, "upper angle (multiples of pi)")
                      ->excludes(gth2);
    grid->add_option("--n-t", n_t, "")->capture_default_str();
    grid->add_option("--n-theta", n_theta, "")->capture_default_str();
    grid->add_option("--out", out_path, "write CSV to a file instead of stdout");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "closed-form | cross-rep | independence | kernels | all")
        ->check(CLI::IsMember({"closed-form", "cross-rep", "independence", "kernels", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (eval->parsed()) {
            if (thpi_opt->count() > 0) {
                theta = theta_pi * pi;
            }
            return cmd_eval(eval_flags, t, theta);
        }
        if (grid->parsed()) {
            if (gthp1->count() > 0 || gth1->count() == 0) {
                theta_min = theta_min_pi * pi;
            }
            if (gthp2->count() > 0 || gth2->count() == 0) {
                theta_max = theta_max_pi * pi;
            }
            return cmd_grid(grid_flags, t_min, t_max, theta_min, theta_max, n_t, n_theta,
                            out_path);
        }
        return cmd_verify(suite);
    } catch (const mlf::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_inadmissible;
    }
}
