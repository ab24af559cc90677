#include "epiprob/json_io.hpp"

#include <fstream>

namespace epiprob {

using nlohmann::json;

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw input_error("missing \"" + key + "\" in " + where);
    return j.at(key);
}

std::string string_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) throw input_error("\"" + key + "\" in " + where + " must be a string");
    return v.get<std::string>();
}

json points_json(const std::vector<Point>& points) {
    json arr = json::array();
    for (const Point& p : points) arr.push_back(p.str());
    return arr;
}

json runs_json(const std::set<std::string>& runs) {
    json arr = json::array();
    for (const auto& r : runs) arr.push_back(r);
    return arr;
}

}  // namespace

Rat rat_from_json(const json& j, const std::string& what) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_number_float())
        throw input_error(what + ": floating-point literals are not accepted, "
                          "write an exact rational like \"1/3\"");
    throw input_error(what + " must be a rational string \"p/q\" or an integer");
}

ProbabilisticSystem system_from_json(const json& j) {
    if (!j.is_object()) throw input_error("system file must hold a JSON object");
    const json& agents_j = field(j, "agents", "system");
    if (!agents_j.is_array() || agents_j.empty())
        throw input_error("\"agents\" must be a nonempty array");
    std::vector<std::string> agents;
    for (const json& a : agents_j) {
        if (!a.is_string()) throw input_error("agent names must be strings");
        agents.push_back(a.get<std::string>());
    }

    const json& runs_j = field(j, "runs", "system");
    if (!runs_j.is_array() || runs_j.empty())
        throw input_error("\"runs\" must be a nonempty array");
    std::vector<Run> runs;
    std::map<std::string, Rat> weights;
    for (const json& rj : runs_j) {
        Run run;
        run.name = string_field(rj, "name", "run");
        weights[run.name] = rat_from_json(field(rj, "prob", "run \"" + run.name + "\""),
                                          "\"prob\" of run \"" + run.name + "\"");
        const json& states = field(rj, "states", "run \"" + run.name + "\"");
        if (!states.is_array())
            throw input_error("\"states\" of run \"" + run.name + "\" must be an array");
        for (const json& sj : states) {
            GlobalState g;
            g.env = string_field(sj, "env", "state of run \"" + run.name + "\"");
            const json& locals = field(sj, "locals", "state of run \"" + run.name + "\"");
            if (!locals.is_object())
                throw input_error("\"locals\" must be an object in run \"" + run.name + "\"");
            for (const auto& [agent, tok] : locals.items()) {
                if (!tok.is_string())
                    throw input_error("local state of \"" + agent + "\" must be a string");
                g.locals[agent] = tok.get<std::string>();
            }
            run.states.push_back(std::move(g));
        }
        runs.push_back(std::move(run));
    }
    if (weights.size() != runs.size()) throw input_error("duplicate run name");
    System sys = System::build(std::move(agents), std::move(runs));
    return {std::move(sys), RunPrior::exact(std::move(weights))};
}

json system_to_json(const ProbabilisticSystem& psys) {
    const System& sys = psys.sys();
    json j;
    j["agents"] = sys.agents();
    json runs = json::array();
    for (const Run& r : sys.runs()) {
        json rj;
        rj["name"] = r.name;
        rj["prob"] = psys.shared_prior().of(r.name).str();
        json states = json::array();
        for (const GlobalState& g : r.states) {
            json sj;
            sj["env"] = g.env;
            sj["locals"] = g.locals;
            states.push_back(std::move(sj));
        }
        rj["states"] = std::move(states);
        runs.push_back(std::move(rj));
    }
    j["runs"] = std::move(runs);
    return j;
}

ProbabilisticSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("bad JSON in \"" + path + "\": " + e.what());
    }
    return system_from_json(j);
}

BetBook book_from_json(const json& j) {
    if (!j.is_object()) throw input_error("bet book must hold a JSON object");
    const json& bets = field(j, "bets", "bet book");
    if (!bets.is_array()) throw input_error("\"bets\" must be an array");
    BetBook book;
    for (const json& bj : bets) {
        Bet bet;
        bet.id = string_field(bj, "id", "bet");
        bet.offered_state = string_field(bj, "offered_state", "bet \"" + bet.id + "\"");
        const json& ev = field(bj, "payoff_event", "bet \"" + bet.id + "\"");
        if (!ev.is_array())
            throw input_error("\"payoff_event\" of bet \"" + bet.id + "\" must be an array");
        for (const json& r : ev) {
            if (!r.is_string()) throw input_error("payoff_event entries must be run names");
            bet.payoff_event.insert(r.get<std::string>());
        }
        bet.payoff = rat_from_json(field(bj, "payoff", "bet \"" + bet.id + "\""),
                                   "\"payoff\" of bet \"" + bet.id + "\"");
        bet.cost = rat_from_json(field(bj, "cost", "bet \"" + bet.id + "\""),
                                 "\"cost\" of bet \"" + bet.id + "\"");
        const std::string acc = string_field(bj, "accounting", "bet \"" + bet.id + "\"");
        if (acc == "per-point") {
            bet.accounting = Bet::Accounting::per_point;
        } else if (acc == "per-trial") {
            bet.accounting = Bet::Accounting::per_trial;
        } else {
            throw input_error("bet \"" + bet.id + "\": accounting must be \"per-point\" or "
                              "\"per-trial\"");
        }
        book.bets.push_back(std::move(bet));
    }
    return book;
}

BetBook load_book_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("bad JSON in \"" + path + "\": " + e.what());
    }
    return book_from_json(j);
}

json to_json(const InformationSet& k) {
    json j;
    j["agent"] = k.agent;
    j["state"] = k.state;
    j["points"] = points_json(k.points);
    return j;
}

json to_json(const CellMeasure& m) {
    json j;
    j["info_set"] = to_json(m.domain);
    json cells;
    for (const auto& [run_name, cell] : m.cells) {
        json cj;
        cj["mass"] = cell.mass.str();
        cj["points"] = points_json(cell.points);
        cells[run_name] = std::move(cj);
    }
    j["cells"] = std::move(cells);
    return j;
}

json to_json(const PointDistribution& d) {
    json j;
    j["info_set"] = to_json(d.domain);
    json mass;
    for (const auto& [p, m] : d.mass) mass[p.str()] = m.str();
    j["mass"] = std::move(mass);
    return j;
}

json to_json(const RefinementAudit& a) {
    json j;
    j["holds"] = a.holds;
    json cx = json::array();
    for (const auto& [p, q] : a.counterexamples) cx.push_back(json::array({p.str(), q.str()}));
    j["counterexamples"] = std::move(cx);
    return j;
}

json to_json(const ConditioningAudit& a) {
    json j;
    j["applicable"] = a.applicable;
    if (!a.applicable) j["reason"] = a.reason;
    j["synchronous"] = a.synchronous;
    j["perfect_recall"] = a.perfect_recall;
    j["checks"] = a.checks;
    j["skipped"] = a.skipped;
    j["holds"] = a.holds();
    json vs = json::array();
    for (const ViolationRecord& v : a.violations) {
        json vj;
        vj["point"] = v.point.str();
        vj["event"] = runs_json(v.event);
        vj["lhs"] = v.lhs.str();
        vj["rhs"] = v.rhs.str();
        vs.push_back(std::move(vj));
    }
    j["violations"] = std::move(vs);
    return j;
}

json to_json(const ReflectionReport& r) {
    json j;
    j["agent"] = r.agent;
    j["origin"] = r.origin.str();
    j["time"] = r.time;
    j["ok"] = r.ok;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["trichotomy"] = r.nesting.trichotomy;
    j["maximal_disjoint"] = r.nesting.maximal_disjoint;
    j["covers_origin_runs"] = r.nesting.covers_origin_runs;
    j["alpha_sum"] = r.alpha_sum.str();

    const std::set<int> maximal(r.nesting.maximal.begin(), r.nesting.maximal.end());
    json members = json::array();
    for (size_t i = 0; i < r.nesting.members.size(); ++i) {
        json mj;
        mj["state"] = r.nesting.members[i].state;
        mj["points"] = points_json(r.nesting.members[i].points);
        mj["run_set"] = runs_json(r.nesting.run_sets[i]);
        mj["maximal"] = maximal.count(static_cast<int>(i)) != 0;
        mj["alpha"] = (i < r.alpha.size() ? r.alpha[i] : Rat(0)).str();
        members.push_back(std::move(mj));
    }
    j["members"] = std::move(members);

    json res;
    for (const auto& [run_name, v] : r.residuals) res[run_name] = v.str();
    j["residuals"] = std::move(res);
    return j;
}

json to_json(const SpanAudit& a) {
    json j;
    j["agent"] = a.agent;
    j["origin"] = a.origin.str();
    j["time"] = a.time;
    j["event"] = runs_json(a.event);
    j["method"] = method_name(a.method);
    j["now"] = a.now.str();
    json beliefs;
    for (const auto& [state, b] : a.member_beliefs) beliefs[state] = b.str();
    j["member_beliefs"] = std::move(beliefs);
    j["lo"] = a.lo.str();
    j["hi"] = a.hi.str();
    j["within_span"] = a.within_span;
    j["all_members_equal"] = a.all_members_equal;
    j["sure_thing_holds"] = a.sure_thing_holds;
    j["holds"] = a.holds();
    return j;
}

json to_json(const BookEvaluation& e, const std::string& agent) {
    json j;
    j["agent"] = agent;
    j["method"] = method_name(e.method);
    json bets = json::array();
    for (const auto& [id, ok] : e.acceptable) {
        json bj;
        bj["id"] = id;
        bj["acceptable"] = ok;
        bets.push_back(std::move(bj));
    }
    j["bets"] = std::move(bets);
    j["all_acceptable"] = e.all_acceptable;
    json nets;
    for (const auto& [run_name, net] : e.run_nets) nets[run_name] = net.str();
    j["run_nets"] = std::move(nets);
    j["sure_loss"] = e.sure_loss;
    return j;
}

json to_json(const SimReport& r) {
    json j;
    j["rng"] = r.rng;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["event"] = runs_json(r.event);
    j["state"] = r.wakeup_state;
    json obs;
    obs["event_trials"] = r.event_trials;
    obs["event_points"] = r.event_points;
    obs["total_points"] = r.total_points;
    json pt;
    pt["exact"] = r.per_trial.str();
    pt["decimal"] = r.per_trial.decimal_string();
    obs["per_trial"] = std::move(pt);
    json pp;
    pp["exact"] = r.per_point.str();
    pp["decimal"] = r.per_point.decimal_string();
    obs["per_point"] = std::move(pp);
    j["observed"] = std::move(obs);
    json ex;
    ex["per_trial"] = r.exact.per_trial.str();
    ex["per_point"] = r.exact.per_point.str();
    j["exact"] = std::move(ex);
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace epiprob
