#pragma once

namespace survsim {

// Standardized two-sample test outcome. `estimate` is the test's natural
// effect quantity (RMST difference, log hazard ratio, or observed-minus-
// expected events) and z = estimate / std_err.
struct TestResult {
    double z = 0.0;
    double p_two_sided = 1.0;
    double estimate = 0.0;
    double std_err = 0.0;
};

// Builds a TestResult from an estimate and its (positive) standard error.
TestResult make_test_result(double estimate, double std_err);

}  // namespace survsim
