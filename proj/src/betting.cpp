#include "epiprob/betting.hpp"

namespace epiprob {

std::vector<Point> offered_points(const System& sys, const std::string& agent,
                                  const Bet& bet) {
    std::vector<Point> out;
    for (const Run& r : sys.runs()) {
        if (bet.at_time0()) {
            out.push_back(Point{r.name, 0});
            continue;
        }
        for (int m = 0; m < static_cast<int>(r.states.size()); ++m)
            if (r.states[m].locals.at(agent) == bet.offered_state)
                out.push_back(Point{r.name, m});
    }
    return out;
}

Rat run_net(const ProbabilisticSystem& psys, const std::string& agent, const BetBook& book,
            const std::string& run_name) {
    const System& sys = psys.sys();
    if (!sys.has_run(run_name)) throw domain_error("unknown run \"" + run_name + "\"");
    Rat net;
    for (const Bet& bet : book.bets) {
        long offers = 0;
        for (const Point& p : offered_points(sys, agent, bet))
            if (p.run == run_name) ++offers;
        if (offers == 0) continue;
        const Rat gain =
            (bet.payoff_event.count(run_name) ? bet.payoff : Rat(0)) - bet.cost;
        net += bet.accounting == Bet::Accounting::per_point ? gain * Rat(offers) : gain;
    }
    return net;
}

bool is_acceptable(const ProbabilisticSystem& psys, const std::string& agent, const Bet& bet,
                   Method method) {
    if (bet.cost.is_negative() || bet.payoff.is_negative())
        throw input_error("bet \"" + bet.id + "\" has a negative amount");
    for (const std::string& r : bet.payoff_event)
        if (!psys.sys().has_run(r))
            throw input_error("bet \"" + bet.id + "\" pays on unknown run \"" + r + "\"");
    for (const Point& p : offered_points(psys.sys(), agent, bet)) {
        const Rat belief = run_event_belief(psys, agent, p, bet.payoff_event, method);
        if (bet.payoff * belief < bet.cost) return false;
    }
    return true;
}

BookEvaluation detect_dutch_book(const ProbabilisticSystem& psys, const std::string& agent,
                                 const BetBook& book, Method method) {
    BookEvaluation eval;
    eval.method = method;
    for (const Bet& bet : book.bets) {
        const bool ok = is_acceptable(psys, agent, bet, method);
        eval.acceptable.emplace_back(bet.id, ok);
        eval.all_acceptable = eval.all_acceptable && ok;
    }
    bool all_negative = true;
    for (const Run& r : psys.sys().runs()) {
        const Rat net = run_net(psys, agent, book, r.name);
        all_negative = all_negative && net.is_negative();
        eval.run_nets[r.name] = net;
    }
    eval.sure_loss = eval.all_acceptable && all_negative;
    return eval;
}

Rat answer_game_value(const ProbabilisticSystem& psys, const std::string& agent,
                      GuessGame game, const std::set<std::string>& guess,
                      const std::string& wakeup_state, Method selection) {
    const System& sys = psys.sys();
    const RunPrior& prior = psys.prior_for(agent);
    for (const std::string& r : guess)
        if (!sys.has_run(r)) throw domain_error("unknown run \"" + r + "\" in guess");

    std::map<std::string, long> wakings;
    std::vector<Point> wakeup_points;
    for (const Run& r : sys.runs())
        for (int m = 0; m < static_cast<int>(r.states.size()); ++m)
            if (r.states[m].locals.at(agent) == wakeup_state) {
                ++wakings[r.name];
                wakeup_points.push_back(Point{r.name, m});
            }
    if (wakeup_points.empty())
        throw domain_error("no point has waking state \"" + wakeup_state + "\"");

    Rat value;
    switch (game) {
        case GuessGame::per_point:
            for (const auto& [r, n] : wakings)
                if (guess.count(r)) value += prior.of(r) * Rat(n);
            return value;
        case GuessGame::per_trial:
            for (const auto& [r, n] : wakings)
                if (guess.count(r)) value += prior.of(r);
            return value;
        case GuessGame::single_point: {
            // All points sharing the waking state form one information set;
            // the adversary's draw is the selected assignment over it.
            PointDistribution sel =
                selection == Method::elga
                    ? elga_assign(psys, agent, wakeup_points.front())
                    : ht_uniform_assign(psys, agent, wakeup_points.front());
            for (const auto& [p, mass] : sel.mass)
                if (guess.count(p.run)) value += mass;
            return value;
        }
    }
    throw domain_error("bad game");
}

}  // namespace epiprob
