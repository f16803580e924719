#pragma once

#include <string>

namespace survsim {

// One simulation scenario: exponential survival in both arms with a
// constant hazard ratio, uniform recruitment over [0, t_r], and
// administrative censoring at the analysis cutoff (t_h, or t_h_plus when
// the log-rank test is given extra follow-up). tau is the restriction time
// targeted by the RMST analysis.
struct Scenario {
    int id = 0;
    double s1_at_3 = 0.0;  // experimental-arm survival probability at 3 years
    double hr = 0.0;       // experimental / control hazard ratio
    int n_per_arm = 0;
    double tau = 0.0;
    double t_h = 0.0;
    double t_h_plus = 0.0;
    double t_r = 0.0;
    std::string label;

    void validate() const;
};

struct HazardRates {
    double control = 0.0;
    double experimental = 0.0;
};

// Event rates implied by the scenario: lambda1 = -ln(s1_at_3)/3,
// lambda0 = lambda1 / hr.
HazardRates hazard_rates(const Scenario& scenario);

}  // namespace survsim
