#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace survsim {

// One subject's observed follow-up: arm (0 = control, 1 = experimental),
// time on study in years, and whether the event was observed (true) or the
// subject was censored (false).
struct SubjectRecord {
    int arm = 0;
    double time = 0.0;
    bool event = false;
};

// A (time, event) pair for single-arm estimation.
struct Observation {
    double time = 0.0;
    bool event = false;
};

// Right-censored two-arm dataset, administratively censored at `cutoff`.
// Every record satisfies 0 <= time <= cutoff and arm in {0, 1}.
class TrialDataset {
  public:
    TrialDataset() = default;
    TrialDataset(std::vector<SubjectRecord> subjects, double cutoff);

    const std::vector<SubjectRecord>& subjects() const { return subjects_; }
    double cutoff() const { return cutoff_; }

    std::vector<Observation> arm_observations(int arm) const;
    std::size_t arm_size(int arm) const;
    std::size_t arm_events(int arm) const;
    std::size_t total_events() const;

    // Throws if either arm is empty; two-sample analyses call this first.
    void require_both_arms() const;

  private:
    std::vector<SubjectRecord> subjects_;
    double cutoff_ = 0.0;
};

}  // namespace survsim
