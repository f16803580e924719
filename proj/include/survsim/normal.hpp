#pragma once

namespace survsim {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile (Wichura's AS 241 rational approximations,
// accurate to full double precision). Requires p in (0, 1).
double normal_quantile(double p);

// Two-sided p-value for a standard-normal statistic: 2 * (1 - Phi(|z|)).
double two_sided_p(double z);

}  // namespace survsim
