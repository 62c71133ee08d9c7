#pragma once

#include <string>
#include <vector>

#include "mlf/representations.hpp"

namespace mlf::verify {

struct SuiteResult {
    std::string name;
    double max_err = 0.0;
    double tolerance = 0.0;
    int points = 0;
    bool passed = false;
    std::string detail;
};

// One runner per acceptance criterion. Errors are normalized as
// |got - want| / max(1, |want|) unless the suite states otherwise.
SuiteResult closed_form_rep_a();
SuiteResult closed_form_rep_b();
SuiteResult non_integer_vs_series();
SuiteResult kernel_identities();
SuiteResult contour_independence();
SuiteResult complex_mu_cross_check();
SuiteResult symmetry();
SuiteResult guards();

std::vector<SuiteResult> run_all();

/// Named groups for the command line: closed-form, cross-rep, independence,
/// kernels, or all. Throws invalid_parameter for unknown names.
std::vector<SuiteResult> run_suite(const std::string& name);

} // namespace mlf::verify
