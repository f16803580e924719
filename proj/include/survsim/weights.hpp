#pragma once

#include <utility>
#include <vector>

#include "survsim/scenario.hpp"

namespace survsim {

// Exponential control-arm survival S0(t) = exp(-rate * t).
struct ExponentialSurvival {
    double rate = 0.0;  // > 0, per year
};

// Administrative censoring driven by uniform recruitment over [0, t_recruit]
// with total trial duration t_horizon (0 <= t_recruit <= t_horizon).
struct CensoringModel {
    double t_recruit = 0.0;
    double t_horizon = 0.0;
};

// Weight function evaluated on a uniform grid over [0, tau]. `values` are
// standardized to trapezoidal mean 1 over the grid; `raw` keeps the
// unstandardized values.
struct WeightCurve {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> raw;
};

// Probability of still being uncensored at t: 1 up to t_horizon - t_recruit,
// then linear down to 0 at t_horizon.
double censoring_survival(const CensoringModel& model, double t);

// RMST-test weight w_D(t) = int_t^tau S0 / int_0^tau S0, in closed form
// for exponential S0. Requires 0 <= t <= tau.
double weight_rmst(const ExponentialSurvival& control, double tau, double t);

// Log-rank / PH-test weight w_theta(t) = S_C(t) * S0(t).
double weight_ph(const ExponentialSurvival& control, const CensoringModel& model,
                 double t);

// Both weight functions for a scenario on a uniform grid over [0, tau],
// each standardized to mean 1. Returned as (RMST curve, PH curve).
std::pair<WeightCurve, WeightCurve> standardized_curves(const Scenario& scenario,
                                                        int grid_size);

}  // namespace survsim
