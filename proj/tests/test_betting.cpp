#include <algorithm>

#include "doctest.h"

#include "epiprob/betting.hpp"
#include "epiprob/scenarios.hpp"
#include "generators.hpp"

using namespace epiprob;

namespace {

// The pre-experiment-tails plus waking-heads pair, fair for a halfer.
BetBook halfer_trap() {
    Bet sunday{.id = "sunday-tails",
               .offered_state = Bet::kTime0,
               .payoff_event = {"r2"},
               .payoff = Rat(30),
               .cost = Rat(15),
               .accounting = Bet::Accounting::per_trial};
    Bet wake{.id = "wakeup-heads",
             .offered_state = "w",
             .payoff_event = {"r1"},
             .payoff = Rat(20),
             .cost = Rat(10),
             .accounting = Bet::Accounting::per_point};
    return BetBook{{sunday, wake}};
}

// The pre-experiment-heads plus waking-tails pair, fair for a thirder.
BetBook thirder_trap() {
    Bet sunday{.id = "sunday-heads",
               .offered_state = Bet::kTime0,
               .payoff_event = {"r1"},
               .payoff = Rat(30),
               .cost = Rat(15),
               .accounting = Bet::Accounting::per_trial};
    Bet wake{.id = "wakeup-tails",
             .offered_state = "w",
             .payoff_event = {"r2"},
             .payoff = Rat(30),
             .cost = Rat(20),
             .accounting = Bet::Accounting::per_trial};
    return BetBook{{sunday, wake}};
}

}  // namespace

TEST_CASE("run nets settle per point or per trial") {
    const auto psys = scenarios::sleeping_beauty();
    const BetBook book = halfer_trap();
    CHECK(run_net(psys, "sb", book, "r1") == Rat(-5));
    CHECK(run_net(psys, "sb", book, "r2") == Rat(-5));
    CHECK(run_net(psys, "sb", BetBook{}, "r1") == Rat(0));
    CHECK_THROWS_AS(run_net(psys, "sb", book, "nope"), domain_error);

    // The per-point waking bet is charged twice on the two-waking run.
    BetBook only_wake{{book.bets[1]}};
    CHECK(run_net(psys, "sb", only_wake, "r1") == Rat(10));   // 20 - 10
    CHECK(run_net(psys, "sb", only_wake, "r2") == Rat(-20));  // two costs, no payoff

    // Rebooked per-trial it is charged once.
    only_wake.bets[0].accounting = Bet::Accounting::per_trial;
    CHECK(run_net(psys, "sb", only_wake, "r2") == Rat(-10));

    const BetBook third = thirder_trap();
    CHECK(run_net(psys, "sb", third, "r1") == Rat(-5));
    CHECK(run_net(psys, "sb", third, "r2") == Rat(-5));
}

TEST_CASE("acceptability prices the payoff event at every offered point") {
    const auto psys = scenarios::sleeping_beauty();
    const BetBook book = halfer_trap();

    // Fair for the uniform-split halfer (weak inequality).
    CHECK(is_acceptable(psys, "sb", book.bets[0], Method::ht_uniform));
    CHECK(is_acceptable(psys, "sb", book.bets[1], Method::ht_uniform));
    // The proportional thirder rejects paying 10 for a 1/3 shot at 20.
    CHECK(is_acceptable(psys, "sb", book.bets[0], Method::elga));
    CHECK_FALSE(is_acceptable(psys, "sb", book.bets[1], Method::elga));

    const BetBook third = thirder_trap();
    CHECK(is_acceptable(psys, "sb", third.bets[0], Method::elga));
    CHECK(is_acceptable(psys, "sb", third.bets[1], Method::elga));
    CHECK_FALSE(is_acceptable(psys, "sb", third.bets[1], Method::ht_uniform));

    // Costing more than the maximum payoff is never acceptable.
    Bet silly{.id = "silly",
              .offered_state = "w",
              .payoff_event = {"r1", "r2"},
              .payoff = Rat(1),
              .cost = Rat(2),
              .accounting = Bet::Accounting::per_trial};
    CHECK_FALSE(is_acceptable(psys, "sb", silly, Method::ht_uniform));
    CHECK_FALSE(is_acceptable(psys, "sb", silly, Method::elga));
}

TEST_CASE("sure-loss verdicts hit exactly the targeted rule") {
    const auto psys = scenarios::sleeping_beauty();

    const BookEvaluation half_u = detect_dutch_book(psys, "sb", halfer_trap(),
                                                    Method::ht_uniform);
    CHECK(half_u.all_acceptable);
    CHECK(half_u.sure_loss);
    CHECK(half_u.run_nets.at("r1") == Rat(-5));
    CHECK(half_u.run_nets.at("r2") == Rat(-5));

    const BookEvaluation half_e = detect_dutch_book(psys, "sb", halfer_trap(), Method::elga);
    CHECK_FALSE(half_e.all_acceptable);
    CHECK_FALSE(half_e.sure_loss);

    const BookEvaluation third_e = detect_dutch_book(psys, "sb", thirder_trap(),
                                                     Method::elga);
    CHECK(third_e.all_acceptable);
    CHECK(third_e.sure_loss);

    const BookEvaluation third_u = detect_dutch_book(psys, "sb", thirder_trap(),
                                                     Method::ht_uniform);
    CHECK_FALSE(third_u.sure_loss);

    // The raw cell measure prices run-based events identically to its
    // uniform split, so the verdicts coincide.
    CHECK(detect_dutch_book(psys, "sb", halfer_trap(), Method::ht).sure_loss);
}

TEST_CASE("verdicts ignore bet order and scale with the stakes") {
    const auto psys = scenarios::sleeping_beauty();
    BetBook book = thirder_trap();
    std::reverse(book.bets.begin(), book.bets.end());
    const BookEvaluation rev = detect_dutch_book(psys, "sb", book, Method::elga);
    CHECK(rev.sure_loss);
    CHECK(rev.run_nets.at("r1") == Rat(-5));

    BetBook scaled = thirder_trap();
    for (Bet& b : scaled.bets) {
        b.payoff *= Rat(7, 3);
        b.cost *= Rat(7, 3);
    }
    const BookEvaluation sc = detect_dutch_book(psys, "sb", scaled, Method::elga);
    CHECK(sc.sure_loss);
    CHECK(sc.run_nets.at("r1") == Rat(-35, 3));
    CHECK(sc.run_nets.at("r2") == Rat(-35, 3));
}

TEST_CASE("bets reject negative stakes and unknown runs") {
    const auto psys = scenarios::sleeping_beauty();
    Bet bad{.id = "bad",
            .offered_state = "w",
            .payoff_event = {"r1"},
            .payoff = Rat(-1),
            .cost = Rat(0),
            .accounting = Bet::Accounting::per_trial};
    CHECK_THROWS_AS(is_acceptable(psys, "sb", bad, Method::elga), input_error);
    bad.payoff = Rat(1);
    bad.cost = Rat(-1);
    CHECK_THROWS_AS(is_acceptable(psys, "sb", bad, Method::elga), input_error);
    bad.cost = Rat(0);
    bad.payoff_event = {"mystery"};
    CHECK_THROWS_AS(is_acceptable(psys, "sb", bad, Method::elga), input_error);
    bad.payoff_event = {"r1"};
    bad.offered_state = "no-such-token";
    CHECK(offered_points(psys.sys(), "sb", bad).empty());
}

TEST_CASE("no sure loss from frequency-matching beliefs with per-trial settlement") {
    SplitMix64 g(604);
    for (int it = 0; it < 50; ++it) {
        const auto psys = testgen::random_sync_recall_system(g);
        const System& sys = psys.sys();
        const auto& agent = sys.agents().front();

        // Build a random book of per-trial bets priced exactly fairly at
        // their offered state by the synchronous time-indexed belief, which
        // is the run-conditional frequency.
        BetBook book;
        const auto sets = sys.info_sets(agent);
        for (int b = 0; b < 3; ++b) {
            const InformationSet& k = sets[g.below(sets.size())];
            if (psys.prior_for(agent).mass(runs_through(k)).is_zero()) continue;
            std::set<std::string> ev;
            for (const Run& r : sys.runs())
                if (g.next() & 1) ev.insert(r.name);
            const Rat p = run_event_belief(psys, agent, k.points.front(), ev, Method::ht);
            if (p.is_zero()) continue;
            Bet bet{.id = "b" + std::to_string(b),
                    .offered_state = k.state,
                    .payoff_event = ev,
                    .payoff = Rat(1),
                    .cost = p,  // exactly fair
                    .accounting = Bet::Accounting::per_trial};
            book.bets.push_back(std::move(bet));
        }
        const BookEvaluation eval = detect_dutch_book(psys, agent, book, Method::ht);
        CHECK(eval.all_acceptable);
        CHECK_FALSE(eval.sure_loss);
    }
}

TEST_CASE("answer games on the canonical waking puzzle") {
    const auto psys = scenarios::sleeping_beauty();

    CHECK(answer_game_value(psys, "sb", GuessGame::per_point, {"r2"}, "w") == Rat(1));
    CHECK(answer_game_value(psys, "sb", GuessGame::per_point, {"r1"}, "w") == Rat(1, 2));

    CHECK(answer_game_value(psys, "sb", GuessGame::per_trial, {"r2"}, "w") == Rat(1, 2));
    CHECK(answer_game_value(psys, "sb", GuessGame::per_trial, {"r1"}, "w") == Rat(1, 2));

    // One adjudicated waking drawn by the uniform-split rule: indifferent.
    CHECK(answer_game_value(psys, "sb", GuessGame::single_point, {"r2"}, "w") == Rat(1, 2));
    CHECK(answer_game_value(psys, "sb", GuessGame::single_point, {"r1"}, "w") == Rat(1, 2));
    // Drawn proportionally instead, the two-waking run gets the edge.
    CHECK(answer_game_value(psys, "sb", GuessGame::single_point, {"r2"}, "w",
                            Method::elga) == Rat(2, 3));
    CHECK(answer_game_value(psys, "sb", GuessGame::single_point, {"r1"}, "w",
                            Method::elga) == Rat(1, 3));
}

TEST_CASE("answer games scale with the waking counts") {
    const auto psys = scenarios::extreme_variant(Rat(99, 100), 9900);
    // Saying tails wins 9900 times in a hundredth of the trials.
    CHECK(answer_game_value(psys, "sb", GuessGame::per_point, {"r2"}, "w") == Rat(99));
    CHECK(answer_game_value(psys, "sb", GuessGame::per_point, {"r1"}, "w") == Rat(99, 100));
    CHECK(answer_game_value(psys, "sb", GuessGame::per_trial, {"r2"}, "w") == Rat(1, 100));
    CHECK(answer_game_value(psys, "sb", GuessGame::per_trial, {"r1"}, "w") == Rat(99, 100));
}
