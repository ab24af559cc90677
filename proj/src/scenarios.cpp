#include "epiprob/scenarios.hpp"

namespace epiprob {
namespace scenarios {

namespace {

void check_unit_interval(const Rat& x, const std::string& what) {
    if (x.is_negative() || x > Rat(1))
        throw input_error(what + " must lie in [0, 1], got " + x.str());
}

GlobalState gs(std::string env, std::string agent, std::string local) {
    return GlobalState{std::move(env), {{std::move(agent), std::move(local)}}};
}

}  // namespace

ProbabilisticSystem sleeping_beauty(const Rat& beta) {
    check_unit_interval(beta, "beta");
    Run r1{"r1", {gs("H", "sb", "b"), gs("H", "sb", "w"), gs("H", "sb", "a")}};
    Run r2{"r2",
           {gs("T", "sb", "b"), gs("T", "sb", "w"), gs("T", "sb", "w"), gs("T", "sb", "a")}};
    System sys = System::build({"sb"}, {r1, r2});
    return {std::move(sys), RunPrior::exact({{"r1", beta}, {"r2", Rat(1) - beta}})};
}

ProbabilisticSystem sleeping_beauty_learning(const Rat& alpha) {
    check_unit_interval(alpha, "alpha");
    Run r1{"r1", {gs("H", "sb", "b"), gs("H", "sb", "w"), gs("H", "sb", "a")}};
    Run r2{"r2",
           {gs("T", "sb", "b"), gs("T", "sb", "w"), gs("T", "sb", "w"), gs("T", "sb", "a")}};
    Run r1L{"r1L", {gs("H", "sb", "b"), gs("H", "sb", "M"), gs("H", "sb", "a")}};
    Run r2L{"r2L", {gs("T", "sb", "b"), gs("T", "sb", "M"), gs("T", "sb", "w")}};
    System sys = System::build({"sb"}, {r1, r2, r1L, r2L});
    const Rat plain = (Rat(1) - alpha) / Rat(2);
    const Rat told = alpha / Rat(2);
    return {std::move(sys), RunPrior::exact({{"r1", plain}, {"r2", plain},
                                             {"r1L", told}, {"r2L", told}})};
}

ProbabilisticSystem two_coins() {
    auto g = [](std::string env, std::string alice, std::string bob) {
        return GlobalState{std::move(env),
                           {{"alice", std::move(alice)}, {"bob", std::move(bob)}}};
    };
    Run r1{"r1", {g("-", "-", "-"), g("H", "H", "t"), g("HH", "HH", "tH")}};
    Run r2{"r2", {g("-", "-", "-"), g("H", "H", "t"), g("HT", "HT", "tH")}};
    Run r3{"r3", {g("-", "-", "-"), g("T", "T", "t"), g("TH", "TH", "tT")}};
    Run r4{"r4", {g("-", "-", "-"), g("T", "T", "t"), g("TT", "TT", "tT")}};
    System sys = System::build({"alice", "bob"}, {r1, r2, r3, r4});
    return {std::move(sys), RunPrior::exact({{"r1", Rat(1, 3)}, {"r2", Rat(1, 3)},
                                             {"r3", Rat(1, 6)}, {"r4", Rat(1, 6)}})};
}

namespace {

// Half-hour clock labels from 5:00 PM through 1:30 AM.
const char* kClock[18] = {"5:00", "5:30", "6:00",  "6:30",  "7:00", "7:30",
                          "8:00", "8:30", "9:00",  "9:30",  "10:00", "10:30",
                          "11:00", "11:30", "12:00", "12:30", "1:00", "1:30"};

std::string reading_token(int a, int b, bool light_on) {
    return std::string("(") + kClock[a] + "," + kClock[b] + "," + (light_on ? "1" : "0") + ")";
}

}  // namespace

ProbabilisticSystem prisoner_clocks() {
    // Point index m covers true time 6:00 PM (m = 0) through 12:30 AM
    // (m = 13); the true time is kClock[m+2]. In r1/r2 clock A is right, so
    // A reads the true time and B runs an hour ahead; in r3/r4 clock B is
    // right, so A runs an hour behind. Heads (r1, r3) puts the lights out
    // from true midnight (m = 12).
    std::vector<Run> runs;
    for (const auto& [name, a_right, heads] :
         std::initializer_list<std::tuple<std::string, bool, bool>>{
             {"r1", true, true}, {"r2", true, false}, {"r3", false, true},
             {"r4", false, false}}) {
        Run run{name, {}};
        for (int m = 0; m <= 13; ++m) {
            const int a = a_right ? m + 2 : m;
            const bool light_on = !heads || m < 12;
            std::string env = std::string("(") + kClock[m + 2] + "," + (heads ? "H" : "T") +
                              "," + (a_right ? "A" : "B") + ")";
            run.states.push_back(
                gs(std::move(env), "prisoner", reading_token(a, a + 2, light_on)));
        }
        runs.push_back(std::move(run));
    }
    System sys = System::build({"prisoner"}, std::move(runs));
    return {std::move(sys), RunPrior::exact({{"r1", Rat(1, 4)}, {"r2", Rat(1, 4)},
                                             {"r3", Rat(1, 4)}, {"r4", Rat(1, 4)}})};
}

ProbabilisticSystem prisoner_clocks_synchronous() {
    // Clock A always reads the true time kClock[m+2]; B runs an hour ahead.
    // On heads the lights go out when the jailer's clock reads midnight:
    // from m = 12 when the jailer holds A (r1), from m = 10 when the jailer
    // holds B (r3). The off-token records the A-reading at the moment the
    // lights went out, which the prisoner witnessed.
    std::vector<Run> runs;
    for (const auto& [name, jailer_a, heads] :
         std::initializer_list<std::tuple<std::string, bool, bool>>{
             {"r1", true, true}, {"r2", true, false}, {"r3", false, true},
             {"r4", false, false}}) {
        const int off_from = !heads ? 99 : (jailer_a ? 12 : 10);
        Run run{name, {}};
        for (int m = 0; m <= 13; ++m) {
            const int a = m + 2;
            std::string local;
            if (m < off_from) {
                local = reading_token(a, a + 2, true);
            } else {
                local = std::string("(") + kClock[a] + "," + kClock[a + 2] + ",0,off=" +
                        kClock[off_from + 2] + ")";
            }
            std::string env = std::string("(") + kClock[m + 2] + "," + (heads ? "H" : "T") +
                              "," + (jailer_a ? "A" : "B") + ")";
            run.states.push_back(gs(std::move(env), "prisoner", std::move(local)));
        }
        runs.push_back(std::move(run));
    }
    System sys = System::build({"prisoner"}, std::move(runs));
    return {std::move(sys), RunPrior::exact({{"r1", Rat(1, 4)}, {"r2", Rat(1, 4)},
                                             {"r3", Rat(1, 4)}, {"r4", Rat(1, 4)}})};
}

ProbabilisticSystem extreme_variant(const Rat& p, long wakeups) {
    check_unit_interval(p, "p");
    if (wakeups < 1) throw input_error("extreme variant needs at least one tails waking");
    Run r1{"r1", {gs("H", "sb", "b"), gs("H", "sb", "w"), gs("H", "sb", "a")}};
    Run r2{"r2", {gs("T", "sb", "b")}};
    for (long i = 0; i < wakeups; ++i) r2.states.push_back(gs("T", "sb", "w"));
    r2.states.push_back(gs("T", "sb", "a"));
    System sys = System::build({"sb"}, {r1, std::move(r2)});
    return {std::move(sys), RunPrior::exact({{"r1", p}, {"r2", Rat(1) - p}})};
}

ProbabilisticSystem forgetful_coin() {
    Run rh{"rH",
           {gs("H", "observer", "t0"), gs("H", "observer", "H@1"), gs("H", "observer", "t2")}};
    Run rt{"rT",
           {gs("T", "observer", "t0"), gs("T", "observer", "T@1"), gs("T", "observer", "t2")}};
    System sys = System::build({"observer"}, {rh, rt});
    return {std::move(sys), RunPrior::exact({{"rH", Rat(1, 2)}, {"rT", Rat(1, 2)}})};
}

}  // namespace scenarios
}  // namespace epiprob
