#pragma once

#include <cstdint>
#include <functional>

#include "epiprob/measures.hpp"

namespace epiprob {

// {(r,m) : (r,m+1) is in the set}. Distinct points can share a predecessor.
std::vector<Point> predecessors(const std::vector<Point>& points);

// The part of the information set at p = (r,m) still compatible with where
// the agent finds itself one step later: the points of K(r,m) lying on runs
// that pass through K(r,m+1). For synchronous agents with perfect recall
// this equals predecessors(K(r,m+1)).
std::vector<Point> carryover_set(const System& sys, const std::string& agent, const Point& p);

// The run-based events an exhaustive audit ranges over: every subset of runs
// when there are at most 12, otherwise all singletons plus 256 seeded random
// subsets.
std::vector<std::set<std::string>> run_event_family(const System& sys, uint64_t seed = 0);

struct ViolationRecord {
    Point point;                  // where the later belief was evaluated
    std::set<std::string> event;  // run-based event
    Rat lhs;                      // belief at `point`
    Rat rhs;                      // conditioned earlier belief
};

struct ConditioningAudit {
    bool applicable = true;
    std::string reason;  // set when not applicable
    bool synchronous = false;
    bool perfect_recall = false;
    long checks = 0;
    long skipped = 0;  // comparisons with an undefined side (zero-mass conditioning)
    std::vector<ViolationRecord> violations;

    bool holds() const { return applicable && violations.empty(); }
};

// Checks, for every time step and every run-based event U, that the time-m+1
// belief equals the time-m belief conditioned on the predecessors of the
// later information set. Sound for synchronous agents with perfect recall;
// requires synchrony to state at all (beliefs are the conditioned time-m
// measures), and reports violations when recall fails.
ConditioningAudit audit_step_conditioning_sync(const ProbabilisticSystem& psys,
                                               const std::string& agent, uint64_t seed = 0);

// Checks, for every time step and every run-based event U, that the belief
// at (r,m+1) equals the belief at (r,m) conditioned on the carryover set,
// under the given assignment method. Holds for the cell measure whenever the
// agent has perfect recall; the proportional point assignment can violate it.
ConditioningAudit audit_step_conditioning_carryover(const ProbabilisticSystem& psys,
                                                    const std::string& agent, Method method,
                                                    uint64_t seed = 0);

struct NestingReport {
    std::string agent;
    Point origin;
    int time = 0;
    std::vector<InformationSet> members;  // distinct time-`time` information sets reached
    std::vector<std::set<std::string>> run_sets;      // runs through each member
    std::vector<std::pair<int, int>> incomparable;    // overlapping, neither contains the other
    // Indices not strictly contained in another member, one representative
    // per distinct run set (equal run sets carry identical run-based beliefs).
    std::vector<int> maximal;
    bool trichotomy = true;                           // incomparable is empty
    bool maximal_disjoint = true;
    bool covers_origin_runs = true;  // maximal run sets cover the runs through the origin set

    bool ok() const { return trichotomy && maximal_disjoint; }
};

// The distinct information sets K(r', time) over runs r' through the origin
// point's information set, with their containment structure. Runs shorter
// than time+1 contribute no member.
NestingReport nesting_structure(const System& sys, const std::string& agent, int time,
                                const Point& origin);

struct ReflectionReport {
    std::string agent;
    Point origin;
    int time = 0;
    NestingReport nesting;
    std::vector<Rat> alpha;  // one per nesting member; nonzero only on the maximal cover
    Rat alpha_sum;
    std::map<std::string, Rat> residuals;  // per run: decomposition error, all zero on success
    bool ok = false;
    std::string reason;  // set when not ok
};

// Writes the origin-time belief (the prior conditioned on the runs through
// the origin information set) as a convex combination of the possible
// time-`time` beliefs: alpha_j = Pr(runs through member j | runs through
// origin) on the maximal disjoint cover, 0 elsewhere. Verified exactly on
// every singleton run event.
ReflectionReport reflection_decompose(const ProbabilisticSystem& psys,
                                      const std::string& agent, int time,
                                      const Point& origin);

struct SpanAudit {
    std::string agent;
    Point origin;
    int time = 0;
    std::set<std::string> event;
    Method method = Method::ht;
    Rat now;  // belief at the origin point
    std::vector<std::pair<std::string, Rat>> member_beliefs;  // keyed by member state token
    Rat lo, hi;
    bool within_span = false;
    bool all_members_equal = false;
    bool sure_thing_holds = true;  // if all members agree, `now` must equal them

    bool holds() const { return within_span && sure_thing_holds; }
};

// Checks that the current belief in a run-based event lies between the
// smallest and largest of the possible time-`time` beliefs, and that when
// those beliefs all coincide the current belief equals them.
SpanAudit audit_reflection_span(const ProbabilisticSystem& psys, const std::string& agent,
                                int time, const std::set<std::string>& event_runs,
                                Method method, const Point& origin);

// The prior probability of `event` among runs whose time-t belief in `event`
// satisfies `pred`. Runs without a time-t point never satisfy the predicate.
Rat belief_conditional(const ProbabilisticSystem& psys, const std::string& agent, int time,
                       const std::set<std::string>& event_runs,
                       const std::function<bool(const Rat&)>& pred,
                       Method method = Method::ht);

}  // namespace epiprob
