#pragma once

#include <cstdint>

#include "epiprob/measures.hpp"

namespace epiprob {

// Closed-form long-run frequencies of a run-based event in a waking puzzle:
// per_trial is the event's prior mass, per_point weights each run by how
// many wakings it contains.
struct FrequencyPair {
    Rat per_trial;
    Rat per_point;
};

FrequencyPair exact_frequencies(const ProbabilisticSystem& psys, const std::string& agent,
                                const std::set<std::string>& event_runs,
                                const std::string& wakeup_state);

struct SimReport {
    std::string rng = "splitmix64-per-trial";
    uint64_t seed = 0;
    long trials = 0;
    std::set<std::string> event;
    std::string wakeup_state;
    long event_trials = 0;
    long long event_points = 0;
    long long total_points = 0;
    Rat per_trial;   // event_trials / trials
    Rat per_point;   // event_points / total_points
    FrequencyPair exact;
};

// Samples `trials` runs independently from the prior, exactly (integer
// arithmetic over the common denominator, rejection sampling; no floating
// point anywhere). Each trial draws from its own splitmix64 stream keyed by
// (seed, trial index), so partitioning trials into any number of shards
// reproduces the single-shard counts bit for bit. `shards` only chooses how
// the trial range is partitioned during execution; it does not appear in the
// report.
SimReport run_frequency_experiment(const ProbabilisticSystem& psys, const std::string& agent,
                                   const std::set<std::string>& event_runs,
                                   const std::string& wakeup_state, long trials,
                                   uint64_t seed, int shards = 1);

}  // namespace epiprob
