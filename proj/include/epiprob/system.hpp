#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epiprob/rational.hpp"

namespace epiprob {

// A global state at one instant: the environment's state plus one local state
// per agent. State tokens are opaque nonempty strings; two points look alike
// to an agent exactly when their tokens for that agent are equal.
struct GlobalState {
    std::string env;
    std::map<std::string, std::string> locals;

    friend bool operator==(const GlobalState&, const GlobalState&) = default;
};

// A finite execution: a named sequence of global states, indexed from time 0.
struct Run {
    std::string name;
    std::vector<GlobalState> states;

    friend bool operator==(const Run&, const Run&) = default;
};

// A point is a run at a time. Serialized as "run@time".
struct Point {
    std::string run;
    int time = 0;

    std::string str() const { return run + "@" + std::to_string(time); }
    static Point parse(const std::string& s);

    friend auto operator<=>(const Point&, const Point&) = default;
};

// All points an agent cannot distinguish from a given one, i.e. the points
// sharing that agent's local state. `state` is the shared token.
struct InformationSet {
    std::string agent;
    std::string state;
    std::vector<Point> points;  // sorted by (run, time)

    bool contains(const Point& p) const;
    friend bool operator==(const InformationSet&, const InformationSet&) = default;
};

// One counterexample to the same-time refinement property: two time-(m+1)
// points that share a local state while their time-m predecessors do not.
struct RefinementAudit {
    bool holds = true;
    std::vector<std::pair<Point, Point>> counterexamples;
};

// A finite multiagent system: an agent roster plus a set of named runs.
// Runs are kept sorted by name; every traversal in the library is
// deterministic, so equal inputs always produce byte-equal reports.
class System {
  public:
    static System build(std::vector<std::string> agents, std::vector<Run> runs);

    const std::vector<std::string>& agents() const { return agents_; }
    const std::vector<Run>& runs() const { return runs_; }
    bool has_agent(const std::string& agent) const;
    bool has_run(const std::string& name) const { return run_index_.count(name) != 0; }
    const Run& run(const std::string& name) const;
    int length(const std::string& run_name) const;

    bool has_point(const Point& p) const;
    const GlobalState& global_state(const Point& p) const;
    const std::string& local_state(const std::string& agent, const Point& p) const;
    std::vector<Point> all_points() const;

    InformationSet info_set(const std::string& agent, const Point& p) const;
    // Every information set of the agent, sorted by their smallest point.
    std::vector<InformationSet> info_sets(const std::string& agent) const;

    // True when every information set of the agent lies at a single time.
    bool is_synchronous(const std::string& agent) const;

    // The agent's local states along p's run from time 0 through p, with
    // consecutive duplicates collapsed: what an agent with perfect recall
    // remembers at p.
    std::vector<std::string> local_state_sequence(const std::string& agent,
                                                  const Point& p) const;

    // True when indistinguishable points always carry the same collapsed
    // local-state sequence.
    bool has_perfect_recall(const std::string& agent) const;

    // Checks that same-time indistinguishability is preserved backwards:
    // if (r,m+1) and (r',m+1) share a local state then so do (r,m) and
    // (r',m). Guaranteed for synchronous agents with perfect recall.
    RefinementAudit check_refinement(const std::string& agent) const;

    friend bool operator==(const System&, const System&) = default;

  private:
    std::vector<std::string> agents_;
    std::vector<Run> runs_;  // sorted by name
    std::map<std::string, int> run_index_;
};

// The runs that pass through at least one point of the set.
std::set<std::string> runs_through(const std::vector<Point>& points);
std::set<std::string> runs_through(const InformationSet& k);

// The points of the set lying on any of the given runs.
std::vector<Point> points_on(const std::vector<Point>& points,
                             const std::set<std::string>& run_names);

}  // namespace epiprob
