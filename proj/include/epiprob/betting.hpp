#pragma once

#include "epiprob/measures.hpp"

namespace epiprob {

// A single offered bet. It is offered either at every time-0 point
// (offered_state == kTime0) or at every point where the bettor's local state
// equals offered_state. It costs `cost` wherever taken and pays `payoff`
// when the actual run lies in `payoff_event`. Accounting picks how repeated
// offers on one run settle: per-point bets cost and pay at every offered
// point, per-trial bets cost and pay at most once per run.
struct Bet {
    static constexpr const char* kTime0 = "time0";

    std::string id;
    std::string offered_state;  // local-state token, or kTime0
    std::set<std::string> payoff_event;
    Rat payoff;
    Rat cost;
    enum class Accounting { per_point, per_trial } accounting = Accounting::per_trial;

    bool at_time0() const { return offered_state == kTime0; }
};

struct BetBook {
    std::vector<Bet> bets;
};

// The points of the system where the bet is offered to the agent.
std::vector<Point> offered_points(const System& sys, const std::string& agent,
                                  const Bet& bet);

// Net payout of the whole book to the agent if `run_name` is the actual run
// and the agent takes every bet wherever offered.
Rat run_net(const ProbabilisticSystem& psys, const std::string& agent, const BetBook& book,
            const std::string& run_name);

// A bet is acceptable when at every offered point the expected payoff under
// the method's assignment is at least the cost (weak inequality: fair bets
// are taken). Per-trial bets still price by the event's probability at the
// offered point; the single settlement is what their accounting means.
bool is_acceptable(const ProbabilisticSystem& psys, const std::string& agent, const Bet& bet,
                   Method method);

struct BookEvaluation {
    Method method = Method::ht;
    std::vector<std::pair<std::string, bool>> acceptable;  // per bet id, book order
    std::map<std::string, Rat> run_nets;
    bool all_acceptable = true;
    bool sure_loss = false;  // every bet acceptable yet every run nets < 0
};

// Evaluates the book against an agent using the method's assignments. The
// verdict is independent of the order of the bets.
BookEvaluation detect_dutch_book(const ProbabilisticSystem& psys, const std::string& agent,
                                 const BetBook& book, Method method);

// Guessing games on a waking puzzle: the agent commits to announcing that
// the actual run lies in `guess` at every point whose local state is
// `wakeup_state`, earning 1 per correct settlement.
enum class GuessGame {
    per_point,     // every waking settles
    per_trial,     // one settlement per run that wakes at all
    single_point,  // an adversary picks a single waking per trial
};

// Expected gain of the committed strategy. For the single-point game the
// adversary draws the waking from the given assignment over the waking
// information set (uniform-split cells by default).
Rat answer_game_value(const ProbabilisticSystem& psys, const std::string& agent,
                      GuessGame game, const std::set<std::string>& guess,
                      const std::string& wakeup_state,
                      Method selection = Method::ht_uniform);

}  // namespace epiprob
