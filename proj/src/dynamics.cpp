#include "epiprob/dynamics.hpp"

#include <algorithm>

#include "epiprob/rng.hpp"

namespace epiprob {

std::vector<Point> predecessors(const std::vector<Point>& points) {
    std::set<Point> out;
    for (const Point& p : points)
        if (p.time >= 1) out.insert(Point{p.run, p.time - 1});
    return {out.begin(), out.end()};
}

std::vector<Point> carryover_set(const System& sys, const std::string& agent, const Point& p) {
    const Point succ{p.run, p.time + 1};
    if (!sys.has_point(succ))
        throw domain_error("run \"" + p.run + "\" ends before time " +
                           std::to_string(p.time + 1));
    const InformationSet now = sys.info_set(agent, p);
    const std::set<std::string> still_possible = runs_through(sys.info_set(agent, succ));
    return points_on(now.points, still_possible);
}

std::vector<std::set<std::string>> run_event_family(const System& sys, uint64_t seed) {
    std::vector<std::string> names;
    for (const Run& r : sys.runs()) names.push_back(r.name);
    const size_t n = names.size();

    std::vector<std::set<std::string>> family;
    if (n <= 12) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            std::set<std::string> ev;
            for (size_t i = 0; i < n; ++i)
                if (mask & (uint64_t{1} << i)) ev.insert(names[i]);
            family.push_back(std::move(ev));
        }
        return family;
    }

    std::set<std::set<std::string>> seen;
    for (const auto& name : names) {
        std::set<std::string> ev{name};
        if (seen.insert(ev).second) family.push_back(std::move(ev));
    }
    SplitMix64 g(seed);
    for (int k = 0; k < 256; ++k) {
        std::set<std::string> ev;
        for (const auto& name : names)
            if (g.next() & 1) ev.insert(name);
        if (seen.insert(ev).second) family.push_back(std::move(ev));
    }
    return family;
}

namespace {

// Runs one later-belief-vs-conditioned-earlier-belief comparison for every
// step of every run and every event in the family. `later_belief` and
// `conditioned_belief` may signal an undefined side with domain_error, which
// counts the comparison as skipped.
template <typename Later, typename Cond>
void audit_steps(const System& sys, const std::vector<std::set<std::string>>& events,
                 ConditioningAudit& audit, Later later_belief, Cond conditioned_belief) {
    for (const Run& r : sys.runs()) {
        for (int m = 0; m + 1 < static_cast<int>(r.states.size()); ++m) {
            const Point here{r.name, m};
            const Point later{r.name, m + 1};
            for (const auto& ev : events) {
                ++audit.checks;
                Rat lhs, rhs;
                try {
                    lhs = later_belief(later, ev);
                    rhs = conditioned_belief(here, later, ev);
                } catch (const domain_error&) {
                    ++audit.skipped;
                    continue;
                }
                if (lhs != rhs) audit.violations.push_back({later, ev, lhs, rhs});
            }
        }
    }
}

}  // namespace

ConditioningAudit audit_step_conditioning_sync(const ProbabilisticSystem& psys,
                                               const std::string& agent, uint64_t seed) {
    const System& sys = psys.sys();
    ConditioningAudit audit;
    audit.synchronous = sys.is_synchronous(agent);
    audit.perfect_recall = sys.has_perfect_recall(agent);
    if (!audit.synchronous) {
        audit.applicable = false;
        audit.reason = "agent \"" + agent +
                       "\" is not synchronous, so time-indexed beliefs are undefined";
        return audit;
    }

    const auto events = run_event_family(sys, seed);
    audit_steps(
        sys, events, audit,
        [&](const Point& later, const std::set<std::string>& ev) {
            return event_probability(sync_point_probability(psys, agent, later),
                                     points_of_runs(sys, ev));
        },
        [&](const Point& here, const Point& later, const std::set<std::string>& ev) {
            const auto given = predecessors(sys.info_set(agent, later).points);
            return conditional(sync_point_probability(psys, agent, here),
                               points_of_runs(sys, ev), given);
        });
    return audit;
}

ConditioningAudit audit_step_conditioning_carryover(const ProbabilisticSystem& psys,
                                                    const std::string& agent, Method method,
                                                    uint64_t seed) {
    const System& sys = psys.sys();
    ConditioningAudit audit;
    audit.synchronous = sys.is_synchronous(agent);
    audit.perfect_recall = sys.has_perfect_recall(agent);

    const auto events = run_event_family(sys, seed);
    audit_steps(
        sys, events, audit,
        [&](const Point& later, const std::set<std::string>& ev) {
            return run_event_belief(psys, agent, later, ev, method);
        },
        [&](const Point& here, const Point& later, const std::set<std::string>& ev) {
            const auto carry = carryover_set(sys, agent, here);
            return conditional_run_event_belief(psys, agent, here, ev, carry, method);
        });
    return audit;
}

NestingReport nesting_structure(const System& sys, const std::string& agent, int time,
                                const Point& origin) {
    if (time < 0) throw input_error("negative time");
    NestingReport rep;
    rep.agent = agent;
    rep.origin = origin;
    rep.time = time;

    const InformationSet k0 = sys.info_set(agent, origin);
    const std::set<std::string> origin_runs = runs_through(k0);

    std::set<std::string> seen_states;
    for (const std::string& r : origin_runs) {
        if (sys.length(r) <= time) continue;
        InformationSet k = sys.info_set(agent, Point{r, time});
        if (seen_states.insert(k.state).second) {
            rep.run_sets.push_back(runs_through(k));
            rep.members.push_back(std::move(k));
        }
    }

    const size_t n = rep.members.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const auto& a = rep.run_sets[i];
            const auto& b = rep.run_sets[j];
            const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
            const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
            if (a_in_b || b_in_a) continue;
            std::vector<std::string> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                rep.incomparable.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    rep.trichotomy = rep.incomparable.empty();

    for (size_t i = 0; i < n; ++i) {
        bool strictly_contained = false;
        for (size_t j = 0; j < n && !strictly_contained; ++j) {
            if (i == j) continue;
            const auto& a = rep.run_sets[i];
            const auto& b = rep.run_sets[j];
            strictly_contained = a.size() < b.size() &&
                                 std::includes(b.begin(), b.end(), a.begin(), a.end());
        }
        // Members with equal run sets induce the same run-based beliefs, so
        // only the first of them represents that belief in the cover.
        bool repeated = false;
        for (size_t j = 0; j < i && !repeated; ++j)
            repeated = rep.run_sets[j] == rep.run_sets[i];
        if (!strictly_contained && !repeated) rep.maximal.push_back(static_cast<int>(i));
    }

    std::set<std::string> covered;
    for (int i : rep.maximal) {
        for (const auto& r : rep.run_sets[i]) {
            if (!covered.insert(r).second) rep.maximal_disjoint = false;
        }
    }
    for (int i : rep.maximal)
        for (int j : rep.maximal)
            if (i < j) {
                std::vector<std::string> common;
                const auto& a = rep.run_sets[i];
                const auto& b = rep.run_sets[j];
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(common));
                if (!common.empty()) rep.maximal_disjoint = false;
            }
    rep.covers_origin_runs = std::includes(covered.begin(), covered.end(),
                                           origin_runs.begin(), origin_runs.end());
    return rep;
}

ReflectionReport reflection_decompose(const ProbabilisticSystem& psys,
                                      const std::string& agent, int time,
                                      const Point& origin) {
    const System& sys = psys.sys();
    const RunPrior& prior = psys.prior_for(agent);

    ReflectionReport rep;
    rep.agent = agent;
    rep.origin = origin;
    rep.time = time;
    rep.nesting = nesting_structure(sys, agent, time, origin);

    const std::set<std::string> origin_runs = runs_through(sys.info_set(agent, origin));
    const Rat p0 = prior.mass(origin_runs);
    if (p0.is_zero()) {
        rep.reason = "zero prior mass through the origin information set";
        return rep;
    }
    if (!rep.nesting.ok()) {
        rep.reason = "containment structure violated at time " + std::to_string(time);
        return rep;
    }

    const std::set<int> maximal(rep.nesting.maximal.begin(), rep.nesting.maximal.end());
    rep.alpha.assign(rep.nesting.members.size(), Rat(0));
    for (int i : rep.nesting.maximal) {
        std::set<std::string> inside;
        for (const auto& r : rep.nesting.run_sets[i])
            if (origin_runs.count(r)) inside.insert(r);
        rep.alpha[i] = prior.mass(inside) / p0;
        rep.alpha_sum += rep.alpha[i];
    }

    for (const Run& r : sys.runs()) {
        const Rat lhs = origin_runs.count(r.name) ? prior.of(r.name) / p0 : Rat(0);
        Rat rhs;
        for (int i : rep.nesting.maximal) {
            if (rep.alpha[i].is_zero()) continue;
            if (!rep.nesting.run_sets[i].count(r.name)) continue;
            const Rat member_mass = prior.mass(rep.nesting.run_sets[i]);
            if (member_mass.is_zero()) continue;
            rhs += rep.alpha[i] * (prior.of(r.name) / member_mass);
        }
        rep.residuals[r.name] = lhs - rhs;
    }

    bool residuals_zero = true;
    for (const auto& [name, res] : rep.residuals)
        if (!res.is_zero()) residuals_zero = false;

    if (rep.alpha_sum != Rat(1)) {
        rep.reason = "coefficients sum to " + rep.alpha_sum.str();
    } else if (!residuals_zero) {
        rep.reason = "nonzero decomposition residual";
    } else {
        rep.ok = true;
    }
    return rep;
}

SpanAudit audit_reflection_span(const ProbabilisticSystem& psys, const std::string& agent,
                                int time, const std::set<std::string>& event_runs,
                                Method method, const Point& origin) {
    SpanAudit audit;
    audit.agent = agent;
    audit.origin = origin;
    audit.time = time;
    audit.event = event_runs;
    audit.method = method;

    const NestingReport nesting = nesting_structure(psys.sys(), agent, time, origin);
    for (const InformationSet& k : nesting.members) {
        Rat belief;
        try {
            belief = run_event_belief(psys, agent, k.points.front(), event_runs, method);
        } catch (const domain_error&) {
            continue;  // zero-mass member: no belief there
        }
        audit.member_beliefs.emplace_back(k.state, belief);
    }
    if (audit.member_beliefs.empty())
        throw domain_error("no time-" + std::to_string(time) +
                           " beliefs reachable from " + origin.str());

    audit.now = run_event_belief(psys, agent, origin, event_runs, method);
    audit.lo = audit.hi = audit.member_beliefs.front().second;
    for (const auto& [state, b] : audit.member_beliefs) {
        audit.lo = std::min(audit.lo, b);
        audit.hi = std::max(audit.hi, b);
    }
    audit.within_span = audit.lo <= audit.now && audit.now <= audit.hi;
    audit.all_members_equal = audit.lo == audit.hi;
    audit.sure_thing_holds = !audit.all_members_equal || audit.now == audit.lo;
    return audit;
}

Rat belief_conditional(const ProbabilisticSystem& psys, const std::string& agent, int time,
                       const std::set<std::string>& event_runs,
                       const std::function<bool(const Rat&)>& pred, Method method) {
    const System& sys = psys.sys();
    const RunPrior& prior = psys.prior_for(agent);

    std::set<std::string> satisfying;
    for (const Run& r : sys.runs()) {
        if (static_cast<int>(r.states.size()) <= time) continue;
        Rat belief;
        try {
            belief = run_event_belief(psys, agent, Point{r.name, time}, event_runs, method);
        } catch (const domain_error&) {
            continue;  // zero-mass information set: the run itself has prior zero
        }
        if (pred(belief)) satisfying.insert(r.name);
    }

    const Rat denom = prior.mass(satisfying);
    if (denom.is_zero())
        throw domain_error("conditioning event has zero prior mass at time " +
                           std::to_string(time));
    std::set<std::string> both;
    for (const auto& r : satisfying)
        if (event_runs.count(r)) both.insert(r);
    return prior.mass(both) / denom;
}

}  // namespace epiprob
