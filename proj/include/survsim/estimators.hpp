#pragma once

#include <span>
#include <vector>

#include "survsim/step_function.hpp"
#include "survsim/types.hpp"

namespace survsim {

// One distinct event time with its risk-set size and event count. At tied
// times events are counted against the full risk set, i.e. n_risk includes
// subjects censored at exactly this time.
struct EventRow {
    double time = 0.0;
    std::size_t n_risk = 0;
    std::size_t n_events = 0;
};

// Distinct event times of a single sample, ascending. Times without events
// do not get a row (they only shrink later risk sets).
std::vector<EventRow> event_table(std::span<const Observation> data);

/// Kaplan-Meier product-limit survival estimate; starts at 1.
StepFunction km_estimate(std::span<const Observation> data);

/// Nelson-Aalen cumulative-hazard estimate; starts at 0, non-decreasing.
StepFunction na_estimate(std::span<const Observation> data);

}  // namespace survsim
