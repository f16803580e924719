#pragma once

#include "survsim/test_result.hpp"
#include "survsim/types.hpp"

namespace survsim {

// Cox partial-likelihood fit of the log hazard ratio (treatment term only).
struct CoxFit {
    double theta_hat = 0.0;
    double std_err = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Two-sample log-rank test. estimate = O1 - E1 (observed minus expected
// events on the experimental arm), std_err = sqrt of the hypergeometric
// variance; negative z favors arm 1.
TestResult logrank_test(const TrialDataset& dataset);

// Newton fit of theta maximizing the two-group partial likelihood with
// Breslow tie handling; starts at theta = 0. std_err is the inverse root
// of the observed information at theta_hat.
CoxFit cox_fit(const TrialDataset& dataset);

// Score statistic of the same partial likelihood evaluated at theta = 0:
// l'(0) / sqrt(-l''(0)). Equals the log-rank z exactly when event times
// are untied.
double cox_score_statistic(const TrialDataset& dataset);

}  // namespace survsim
