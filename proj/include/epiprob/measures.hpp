#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epiprob/rational.hpp"
#include "epiprob/system.hpp"

namespace epiprob {

// An exact probability distribution over a system's runs. Weights are
// nonnegative rationals summing to exactly 1.
class RunPrior {
  public:
    // Weights must sum to exactly 1.
    static RunPrior exact(std::map<std::string, Rat> weights);
    // Rescales nonnegative weights with positive total to sum 1. Assignments
    // built from rescaled weights are identical to those from the original.
    static RunPrior normalized(std::map<std::string, Rat> weights);

    const Rat& of(const std::string& run_name) const;
    Rat mass(const std::set<std::string>& run_names) const;
    const std::map<std::string, Rat>& weights() const { return w_; }

    friend bool operator==(const RunPrior&, const RunPrior&) = default;

  private:
    std::map<std::string, Rat> w_;
};

// A system together with a prior on runs for each agent. A single shared
// prior is the common case; per-agent priors are supported because nothing
// in the theory requires agents to agree.
class ProbabilisticSystem {
  public:
    ProbabilisticSystem(System sys, RunPrior shared);
    ProbabilisticSystem(System sys, std::map<std::string, RunPrior> per_agent);

    const System& sys() const { return sys_; }
    const RunPrior& prior_for(const std::string& agent) const;
    bool has_shared_prior() const { return per_agent_.empty(); }
    const RunPrior& shared_prior() const;

  private:
    void validate(const RunPrior& p) const;
    System sys_;
    std::optional<RunPrior> shared_;
    std::map<std::string, RunPrior> per_agent_;
};

// The conditional-run-prior measure on an information set: one cell per run
// passing through the set, holding all of that run's points there. Only
// unions of cells are measurable; in particular a single point of a
// multi-point cell has no probability.
struct CellMeasure {
    InformationSet domain;
    struct Cell {
        std::vector<Point> points;
        Rat mass;
    };
    std::map<std::string, Cell> cells;  // keyed by run name
};

// A full distribution over the points of an information set.
struct PointDistribution {
    InformationSet domain;
    std::map<Point, Rat> mass;

    friend bool operator==(const PointDistribution&, const PointDistribution&) = default;
};

// Methods of assigning probability at a point.
enum class Method { ht, ht_uniform, elga };

std::string method_name(Method m);
Method parse_method(const std::string& name);

// All points of the system lying on the given runs (a run-based event,
// viewed as a point set).
std::vector<Point> points_of_runs(const System& sys, const std::set<std::string>& run_names);

// The time-m distribution for a synchronous agent: the prior over the runs
// of the information set, conditioned on being in it.
PointDistribution sync_point_probability(const ProbabilisticSystem& psys,
                                         const std::string& agent, const Point& p);

// Conditional-run-prior cells over the information set of p.
CellMeasure ht_assign(const ProbabilisticSystem& psys, const std::string& agent,
                      const Point& p);

// The cell measure extended to all points by splitting each cell's mass
// equally among its points.
PointDistribution ht_uniform_assign(const ProbabilisticSystem& psys, const std::string& agent,
                                    const Point& p);

// Point masses proportional to the run prior: mass(r',m') =
// prior(r') / sum over runs r'' through the set of prior(r'') * |cell(r'')|.
PointDistribution elga_assign(const ProbabilisticSystem& psys, const std::string& agent,
                              const Point& p);

// True exactly when every two positive-prior runs through the information
// set put the same number of points in it; then the uniform split and the
// proportional assignment coincide (cross-checked exactly).
struct AgreementResult {
    bool agree = true;
    std::optional<std::pair<std::string, std::string>> witness;  // runs with unequal counts
};
AgreementResult approaches_agree(const ProbabilisticSystem& psys, const std::string& agent,
                                 const Point& p);

// Probability of a point set. For cell measures the set's trace on the
// domain must be a union of complete cells.
Rat event_probability(const CellMeasure& m, const std::vector<Point>& points);
Rat event_probability(const PointDistribution& d, const std::vector<Point>& points);

Rat conditional(const CellMeasure& m, const std::vector<Point>& target,
                const std::vector<Point>& given);
Rat conditional(const PointDistribution& d, const std::vector<Point>& target,
                const std::vector<Point>& given);

// Probability assigned at p's information set to a run-based event.
Rat run_event_belief(const ProbabilisticSystem& psys, const std::string& agent,
                     const Point& p, const std::set<std::string>& event_runs, Method method);

// Same, conditioned on a point set (its trace on the information set).
Rat conditional_run_event_belief(const ProbabilisticSystem& psys, const std::string& agent,
                                 const Point& p, const std::set<std::string>& event_runs,
                                 const std::vector<Point>& given, Method method);

}  // namespace epiprob
