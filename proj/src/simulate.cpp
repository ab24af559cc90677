#include "epiprob/simulate.hpp"

#include <gmpxx.h>

#include "epiprob/rng.hpp"

namespace epiprob {

namespace {

long count_wakings(const Run& r, const std::string& agent, const std::string& wakeup_state) {
    long n = 0;
    for (const GlobalState& g : r.states)
        if (g.locals.at(agent) == wakeup_state) ++n;
    return n;
}

// Uniform integer in [0, bound) from the trial's stream, by rejection over
// whole 64-bit chunks.
mpz_class draw_below(SplitMix64& g, const mpz_class& bound) {
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t chunks = (bits + 63) / 64;
    while (true) {
        mpz_class x = 0;
        for (size_t i = 0; i < chunks; ++i) {
            x <<= 64;
            x += mpz_class(static_cast<unsigned long>(g.next()));
        }
        x >>= (chunks * 64 - bits);
        if (x < bound) return x;
    }
}

}  // namespace

FrequencyPair exact_frequencies(const ProbabilisticSystem& psys, const std::string& agent,
                                const std::set<std::string>& event_runs,
                                const std::string& wakeup_state) {
    const System& sys = psys.sys();
    const RunPrior& prior = psys.prior_for(agent);
    for (const std::string& r : event_runs)
        if (!sys.has_run(r)) throw domain_error("unknown run \"" + r + "\" in event");

    FrequencyPair f;
    Rat weighted_event, weighted_total;
    for (const Run& r : sys.runs()) {
        const Rat w = prior.of(r.name) * Rat(count_wakings(r, agent, wakeup_state));
        weighted_total += w;
        if (event_runs.count(r.name)) {
            f.per_trial += prior.of(r.name);
            weighted_event += w;
        }
    }
    if (weighted_total.is_zero())
        throw domain_error("no prior mass wakes in state \"" + wakeup_state + "\"");
    f.per_point = weighted_event / weighted_total;
    return f;
}

SimReport run_frequency_experiment(const ProbabilisticSystem& psys, const std::string& agent,
                                   const std::set<std::string>& event_runs,
                                   const std::string& wakeup_state, long trials,
                                   uint64_t seed, int shards) {
    if (trials <= 0) throw input_error("trials must be positive");
    if (shards <= 0) throw input_error("shards must be positive");
    const System& sys = psys.sys();
    const RunPrior& prior = psys.prior_for(agent);

    SimReport rep;
    rep.seed = seed;
    rep.trials = trials;
    rep.event = event_runs;
    rep.wakeup_state = wakeup_state;
    rep.exact = exact_frequencies(psys, agent, event_runs, wakeup_state);

    // Integer weights over the common denominator of the prior.
    mpz_class denom = 1;
    for (const auto& [name, w] : prior.weights())
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.den().get_mpz_t());
    struct Entry {
        mpz_class cumulative;  // upper bound of this run's slice of [0, denom)
        bool in_event;
        long wakings;
    };
    std::vector<Entry> table;
    mpz_class cum = 0;
    for (const Run& r : sys.runs()) {
        const Rat& w = prior.of(r.name);
        cum += w.num() * (denom / w.den());
        table.push_back(Entry{cum, event_runs.count(r.name) != 0,
                              count_wakings(r, agent, wakeup_state)});
    }

    for (int shard = 0; shard < shards; ++shard) {
        for (long t = shard; t < trials; t += shards) {
            SplitMix64 g = trial_stream(seed, static_cast<uint64_t>(t));
            const mpz_class x = draw_below(g, denom);
            size_t i = 0;
            while (x >= table[i].cumulative) ++i;
            rep.total_points += table[i].wakings;
            if (table[i].in_event) {
                ++rep.event_trials;
                rep.event_points += table[i].wakings;
            }
        }
    }

    rep.per_trial = Rat(rep.event_trials) / Rat(trials);
    if (rep.total_points == 0) throw domain_error("no sampled run ever woke");
    rep.per_point = Rat(static_cast<long>(rep.event_points)) /
                    Rat(static_cast<long>(rep.total_points));
    return rep;
}

}  // namespace epiprob
