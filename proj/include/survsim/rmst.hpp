#pragma once

#include <span>

#include "survsim/test_result.hpp"
#include "survsim/types.hpp"

namespace survsim {

// Restricted mean survival time up to `tau`: the area under the
// Kaplan-Meier curve over [0, tau], with its plug-in variance.
struct RmstEstimate {
    double mu = 0.0;
    double variance = 0.0;
    double tau = 0.0;
};

// Point estimate and variance of the restricted mean for one arm.
// mu = integral of the KM curve over [0, tau]. The variance is the
// Greenwood-type sum over event times t_i <= tau,
//     sum A(t_i)^2 * d_i / (n_i * (n_i - d_i)),   A(t) = int_t^tau S(u) du.
// Requires tau <= max follow-up time, so the KM curve is defined on [0, tau].
RmstEstimate rmst_estimate(std::span<const Observation> data, double tau);

// Difference in RMST (experimental minus control) with independent-arm
// variance; z = diff / sqrt(var1 + var0).
TestResult rmst_diff_test(const TrialDataset& dataset, double tau);

}  // namespace survsim
