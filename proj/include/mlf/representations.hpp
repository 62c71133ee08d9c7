#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mlf/domain.hpp"
#include "mlf/quadrature.hpp"
#include "mlf/reference.hpp"

namespace mlf {

enum class Method {
    rep_a_p1,
    rep_a_p2,
    rep_a_p3,
    rep_b_case1,
    rep_b_case2,
    rep_b_case3,
    rep_b_case4,
    rep_b_case5,
    rep_b_case6,
    series,
    closed_form,
};

/// Stable external spelling of a method tag (RepA_P1, ..., Series, ClosedForm).
const char* method_name(Method m);

struct EvalReport {
    std::complex<double> value{0.0, 0.0};
    /// Sum of the quadrature error estimates and tail bounds (or the series
    /// term estimate when method == series).
    double abs_err = 0.0;
    Method method = Method::series;
    /// True when every quadrature either met its tolerance or stopped at the
    /// roundoff floor with a small remaining estimate; false results should
    /// not be trusted without the warnings.
    bool reliable = false;
    std::vector<std::string> warnings;
};

/// Sign applied to the [1+eps1, inf) ray piece of the detour cases 3 and 4.
/// plus is the default, validated against the rho = 1 elementary forms;
/// minus is kept so the regression test can show it is the wrong branch.
enum class SplitTailSign { plus, minus };

EvalReport eval_rep_a_p1(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                         const Tolerances& tol = {});
EvalReport eval_rep_a_p2(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                         const Tolerances& tol = {});
EvalReport eval_rep_a_p3(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                         const Tolerances& tol = {});
EvalReport eval_rep_b(const MLParameters& p, const ContourConfig& cfg, const PolarComplex& z,
                      const Tolerances& tol = {},
                      SplitTailSign tail_sign = SplitTailSign::plus);

struct EvalOptions {
    Tolerances tol{};
    SeriesSettings series{};
    /// Above this modulus the integrands oscillate too hard for adaptive
    /// quadrature and the series is used directly.
    double t_max_integral = 50.0;
};

/// Front door. Uses the widest-sector rep-a contour when arg z admits it and
/// t is moderate, the series otherwise or whenever the quadrature degrades;
/// the method tag records the path taken.
EvalReport evaluate(const MLParameters& p, const PolarComplex& z, const EvalOptions& opt = {});

} // namespace mlf
