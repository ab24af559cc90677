#include "doctest.h"

#include "epiprob/scenarios.hpp"
#include "epiprob/simulate.hpp"

using namespace epiprob;

TEST_CASE("closed-form frequencies weight runs by their waking counts") {
    const auto sb = scenarios::sleeping_beauty();
    const FrequencyPair f = exact_frequencies(sb, "sb", {"r1"}, "w");
    CHECK(f.per_trial == Rat(1, 2));
    CHECK(f.per_point == Rat(1, 3));

    const auto ex = scenarios::extreme_variant(Rat(99, 100), 9900);
    const FrequencyPair fx = exact_frequencies(ex, "sb", {"r2"}, "w");
    CHECK(fx.per_trial == Rat(1, 100));
    CHECK(fx.per_point == Rat(100, 101));
    const FrequencyPair fh = exact_frequencies(ex, "sb", {"r1"}, "w");
    CHECK(fh.per_point == Rat(1, 101));

    // With one run both ratios are trivially 1.
    const auto solo = ProbabilisticSystem(
        System::build({"a"}, {Run{"only", {GlobalState{"e", {{"a", "w"}}}}}}),
        RunPrior::exact({{"only", Rat(1)}}));
    const FrequencyPair f1 = exact_frequencies(solo, "a", {"only"}, "w");
    CHECK(f1.per_trial == Rat(1));
    CHECK(f1.per_point == Rat(1));
}

TEST_CASE("the experiment is deterministic in the seed") {
    const auto sb = scenarios::sleeping_beauty();
    const SimReport a = run_frequency_experiment(sb, "sb", {"r1"}, "w", 5000, 7);
    const SimReport b = run_frequency_experiment(sb, "sb", {"r1"}, "w", 5000, 7);
    CHECK(a.event_trials == b.event_trials);
    CHECK(a.event_points == b.event_points);
    CHECK(a.total_points == b.total_points);
    CHECK(a.per_trial == b.per_trial);

    const SimReport c = run_frequency_experiment(sb, "sb", {"r1"}, "w", 5000, 8);
    CHECK(c.event_trials != a.event_trials);  // a different stream
}

TEST_CASE("any shard count reproduces the single-shard counts") {
    const auto sb = scenarios::sleeping_beauty();
    const SimReport one = run_frequency_experiment(sb, "sb", {"r2"}, "w", 4097, 99, 1);
    for (int shards : {2, 3, 8, 64}) {
        const SimReport s = run_frequency_experiment(sb, "sb", {"r2"}, "w", 4097, 99, shards);
        CHECK(s.event_trials == one.event_trials);
        CHECK(s.event_points == one.event_points);
        CHECK(s.total_points == one.total_points);
        CHECK(s.per_trial == one.per_trial);
        CHECK(s.per_point == one.per_point);
    }
}

TEST_CASE("observed frequencies sit near the closed form at a fixed seed") {
    const auto sb = scenarios::sleeping_beauty();
    const SimReport r = run_frequency_experiment(sb, "sb", {"r1"}, "w", 100000, 42);
    CHECK(r.exact.per_trial == Rat(1, 2));
    CHECK(r.exact.per_point == Rat(1, 3));
    const Rat tol(1, 100);
    auto absdiff = [](const Rat& x, const Rat& y) { return x < y ? y - x : x - y; };
    CHECK(absdiff(r.per_trial, r.exact.per_trial) <= tol);
    CHECK(absdiff(r.per_point, r.exact.per_point) <= tol);

    // A biased prior is sampled exactly, not through float rounding.
    const auto ex = scenarios::extreme_variant(Rat(99, 100), 3);
    const SimReport rx = run_frequency_experiment(ex, "sb", {"r2"}, "w", 100000, 42);
    CHECK(absdiff(rx.per_trial, Rat(1, 100)) <= tol);
}

TEST_CASE("reports validate their inputs") {
    const auto sb = scenarios::sleeping_beauty();
    CHECK_THROWS_AS(run_frequency_experiment(sb, "sb", {"r1"}, "w", 0, 1), input_error);
    CHECK_THROWS_AS(run_frequency_experiment(sb, "sb", {"r1"}, "w", 10, 1, 0), input_error);
    CHECK_THROWS_AS(run_frequency_experiment(sb, "sb", {"zzz"}, "w", 10, 1), domain_error);
    CHECK_THROWS_AS(exact_frequencies(sb, "sb", {"r1"}, "zzz"), domain_error);
}
