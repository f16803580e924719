#pragma once

#include <vector>

namespace survsim {

// Right-continuous piecewise-constant function: equals `initial_value` on
// [0, breakpoints[0]) and values[i] on [breakpoints[i], breakpoints[i+1]).
// Breakpoints are strictly increasing and nonnegative. Survival and
// cumulative-hazard estimates are stored in this form with breakpoints at
// the distinct event times, so integrals are exact (no quadrature).
class StepFunction {
  public:
    StepFunction(double initial_value, std::vector<double> breakpoints,
                 std::vector<double> values);

    double operator()(double t) const;

    // Exact integral over [a, b]; requires a <= b.
    double integral(double a, double b) const;

    double initial_value() const { return initial_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

  private:
    double initial_;
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

inline double restricted_integral(const StepFunction& f, double a, double b) {
    return f.integral(a, b);
}

}  // namespace survsim
