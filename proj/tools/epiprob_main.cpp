// epiprob: exact probability assignments, conditioning and reflection
// audits, bet-book evaluation, and seeded frequency experiments for finite
// multiagent runs-and-systems models.
//
// Exit codes: 0 success, 1 audit violation or failed property, 2 bad input.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "epiprob/json_io.hpp"
#include "epiprob/scenarios.hpp"

namespace {

using namespace epiprob;
using nlohmann::json;

std::set<std::string> parse_run_list(const std::string& csv) {
    std::set<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    if (out.empty()) throw input_error("empty run list");
    return out;
}

// Single-agent systems do not need --agent.
std::string resolve_agent(const ProbabilisticSystem& psys, const std::string& agent) {
    if (!agent.empty()) {
        if (!psys.sys().has_agent(agent)) throw input_error("unknown agent \"" + agent + "\"");
        return agent;
    }
    if (psys.sys().agents().size() == 1) return psys.sys().agents().front();
    throw input_error("system has several agents, pass --agent");
}

void emit(const json& j) { std::cout << canonical_dump(j); }

uint64_t default_seed() {
    const char* env = std::getenv("EPIPROB_SEED");
    if (env == nullptr || *env == '\0') return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw input_error("EPIPROB_SEED must be an unsigned integer");
    }
}

int cmd_validate(const std::string& file) {
    const ProbabilisticSystem psys = load_system_file(file);
    json j;
    j["ok"] = true;
    j["agents"] = psys.sys().agents().size();
    j["runs"] = psys.sys().runs().size();
    j["points"] = psys.sys().all_points().size();
    emit(j);
    return 0;
}

int cmd_infosets(const std::string& file, const std::string& agent_opt) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    json j;
    j["agent"] = agent;
    json sets = json::array();
    for (const InformationSet& k : psys.sys().info_sets(agent)) sets.push_back(to_json(k));
    j["info_sets"] = std::move(sets);
    emit(j);
    return 0;
}

int cmd_check(const std::string& file, const std::string& agent_opt,
              const std::string& property) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    json j;
    j["agent"] = agent;
    j["property"] = property;
    bool holds;
    if (property == "sync") {
        holds = psys.sys().is_synchronous(agent);
    } else if (property == "recall") {
        holds = psys.sys().has_perfect_recall(agent);
    } else if (property == "refinement") {
        const RefinementAudit audit = psys.sys().check_refinement(agent);
        holds = audit.holds;
        j["counterexamples"] = to_json(audit)["counterexamples"];
    } else {
        throw input_error("unknown property \"" + property +
                          "\" (sync, recall, refinement)");
    }
    j["holds"] = holds;
    emit(j);
    return holds ? 0 : 1;
}

int cmd_assign(const std::string& file, const std::string& agent_opt,
               const std::string& method_name_str, const std::string& point_str) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    const Method method = parse_method(method_name_str);
    const Point p = Point::parse(point_str);
    if (!psys.sys().has_point(p)) throw input_error("no point " + p.str());
    json j;
    if (method == Method::ht) {
        j = to_json(ht_assign(psys, agent, p));
    } else if (method == Method::ht_uniform) {
        j = to_json(ht_uniform_assign(psys, agent, p));
    } else {
        j = to_json(elga_assign(psys, agent, p));
    }
    j["agent"] = agent;
    j["method"] = method_name_str;
    j["point"] = p.str();
    emit(j);
    return 0;
}

int cmd_condition(const std::string& file, const std::string& agent_opt,
                  const std::string& method_name_str, uint64_t seed) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    const Method method = parse_method(method_name_str);
    const ConditioningAudit pre = audit_step_conditioning_sync(psys, agent, seed);
    const ConditioningAudit carry = audit_step_conditioning_carryover(psys, agent, method, seed);
    json j;
    j["agent"] = agent;
    j["method"] = method_name_str;
    j["predecessor_form"] = to_json(pre);
    j["carryover_form"] = to_json(carry);
    emit(j);
    const bool bad = (pre.applicable && !pre.violations.empty()) ||
                     (carry.applicable && !carry.violations.empty());
    return bad ? 1 : 0;
}

int cmd_reflect(const std::string& file, const std::string& agent_opt, int time,
                const std::string& origin_str, const std::string& event_csv,
                const std::string& method_name_str) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    const Point origin = origin_str.empty()
                             ? Point{psys.sys().runs().front().name, 0}
                             : Point::parse(origin_str);
    if (!psys.sys().has_point(origin)) throw input_error("no point " + origin.str());

    const ReflectionReport rep = reflection_decompose(psys, agent, time, origin);
    json j;
    j["decomposition"] = to_json(rep);
    bool bad = !rep.ok;
    if (!event_csv.empty()) {
        const SpanAudit span = audit_reflection_span(
            psys, agent, time, parse_run_list(event_csv), parse_method(method_name_str),
            origin);
        j["span"] = to_json(span);
        bad = bad || !span.holds();
    }
    emit(j);
    return bad ? 1 : 0;
}

int cmd_bet(const std::string& file, const std::string& book_file,
            const std::string& agent_opt, const std::string& method_name_str) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    const BetBook book = load_book_file(book_file);
    const BookEvaluation eval = detect_dutch_book(psys, agent, book, parse_method(method_name_str));
    emit(to_json(eval, agent));
    return eval.sure_loss ? 1 : 0;
}

int cmd_sim(const std::string& file, const std::string& agent_opt,
            const std::string& event_csv, const std::string& state, long trials,
            uint64_t seed, int shards) {
    const ProbabilisticSystem psys = load_system_file(file);
    const std::string agent = resolve_agent(psys, agent_opt);
    const SimReport rep = run_frequency_experiment(psys, agent, parse_run_list(event_csv),
                                                   state, trials, seed, shards);
    emit(to_json(rep));
    return 0;
}

int cmd_scenario(const std::string& name, const std::string& beta, const std::string& alpha,
                 const std::string& p, long k) {
    ProbabilisticSystem psys = [&] {
        using namespace scenarios;
        if (name == "sleeping-beauty") return sleeping_beauty(Rat::parse(beta));
        if (name == "sleeping-beauty-learning")
            return sleeping_beauty_learning(Rat::parse(alpha));
        if (name == "two-coins") return two_coins();
        if (name == "prisoner-clocks") return prisoner_clocks();
        if (name == "prisoner-clocks-sync") return prisoner_clocks_synchronous();
        if (name == "extreme") return extreme_variant(Rat::parse(p), k);
        if (name == "forgetful-coin") return forgetful_coin();
        throw input_error(
            "unknown scenario \"" + name +
            "\" (sleeping-beauty, sleeping-beauty-learning, two-coins, prisoner-clocks, "
            "prisoner-clocks-sync, extreme, forgetful-coin)");
    }();
    emit(system_to_json(psys));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact probability assignments and audits for finite runs-and-systems models"};
    app.require_subcommand(1);

    std::string file, agent, method = "ht", point, property, book_file, event_csv, origin;
    std::string scenario_name, beta = "1/2", alpha = "1/2", p = "99/100";
    int time = 0, shards = 1;
    long trials = 100000, k = 9900;
    uint64_t seed = 0;
    bool seed_given = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "system JSON file")->required();
    };
    auto add_agent = [&](CLI::App* cmd) {
        cmd->add_option("--agent", agent, "agent name (optional when unique)");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a system file");
    add_file(validate);

    CLI::App* infosets = app.add_subcommand("infosets", "list an agent's information sets");
    add_file(infosets);
    add_agent(infosets);

    CLI::App* check =
        app.add_subcommand("check", "check sync, recall, or refinement for an agent");
    add_file(check);
    add_agent(check);
    check->add_option("--property", property, "sync|recall|refinement")->required();

    CLI::App* assign = app.add_subcommand("assign", "probability assignment at a point");
    add_file(assign);
    add_agent(assign);
    assign->add_option("--method", method, "ht|ht-uniform|elga");
    assign->add_option("--point", point, "point as run@time")->required();

    CLI::App* condition =
        app.add_subcommand("condition", "audit step-to-step belief conditioning");
    add_file(condition);
    add_agent(condition);
    condition->add_option("--method", method, "ht|elga");
    condition->add_option("--seed", seed, "seed for the random event family");

    CLI::App* reflect =
        app.add_subcommand("reflect", "decompose the origin belief over future beliefs");
    add_file(reflect);
    add_agent(reflect);
    reflect->add_option("--time", time, "future time index")->required();
    reflect->add_option("--origin", origin, "origin point (default: first run at time 0)");
    reflect->add_option("--event", event_csv, "run-based event for the span audit");
    reflect->add_option("--method", method, "ht|ht-uniform|elga (span audit)");

    CLI::App* bet = app.add_subcommand("bet", "evaluate a bet book against an agent");
    add_file(bet);
    add_agent(bet);
    bet->add_option("--book", book_file, "bet book JSON file")->required();
    bet->add_option("--method", method, "ht|ht-uniform|elga");

    CLI::App* sim = app.add_subcommand("sim", "seeded frequency experiment");
    add_file(sim);
    add_agent(sim);
    sim->add_option("--event", event_csv, "run names, comma separated")->required();
    sim->add_option("--state", point, "waking local state")->required();
    sim->add_option("--trials", trials, "number of trials");
    sim->add_option("--seed", seed, "RNG seed (default: EPIPROB_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
    sim->add_option("--shards", shards, "partition trials into this many shards");

    CLI::App* scenario = app.add_subcommand("scenario", "emit a built-in system as JSON");
    scenario->add_option("name", scenario_name, "scenario name")->required();
    scenario->add_option("--beta", beta, "heads prior for sleeping-beauty");
    scenario->add_option("--alpha", alpha, "telling probability for sleeping-beauty-learning");
    scenario->add_option("--p", p, "heads prior for extreme");
    scenario->add_option("--k", k, "tails wakings for extreme");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*infosets) return cmd_infosets(file, agent);
        if (*check) return cmd_check(file, agent, property);
        if (*assign) return cmd_assign(file, agent, method, point);
        if (*condition) return cmd_condition(file, agent, method, seed);
        if (*reflect) return cmd_reflect(file, agent, time, origin, event_csv, method);
        if (*bet) return cmd_bet(file, book_file, agent, method);
        if (*sim)
            return cmd_sim(file, agent, event_csv, point, trials,
                           seed_given ? seed : default_seed(), shards);
        if (*scenario) return cmd_scenario(scenario_name, beta, alpha, p, k);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
