#pragma once

#include <string>

#include "json.hpp"

#include "epiprob/betting.hpp"
#include "epiprob/dynamics.hpp"
#include "epiprob/measures.hpp"
#include "epiprob/simulate.hpp"

namespace epiprob {

// System files: {"agents":[...], "runs":[{"name":..., "prob":"p/q",
// "states":[{"env":tok, "locals":{agent:tok,...}}, ...]}, ...]}.
// Probabilities are rational strings or integers; floating-point literals
// are rejected. Emission is canonical: keys sorted, runs sorted by name,
// rationals in lowest terms.
ProbabilisticSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const ProbabilisticSystem& psys);

ProbabilisticSystem load_system_file(const std::string& path);

// Bet-book files: {"bets":[{"id":..., "offered_state":tok|"time0",
// "payoff_event":[run,...], "payoff":"p/q", "cost":"p/q",
// "accounting":"per-point"|"per-trial"}, ...]}.
BetBook book_from_json(const nlohmann::json& j);
BetBook load_book_file(const std::string& path);

// Exact rational probability field: "p/q" string or integer.
Rat rat_from_json(const nlohmann::json& j, const std::string& what);

nlohmann::json to_json(const InformationSet& k);
nlohmann::json to_json(const CellMeasure& m);
nlohmann::json to_json(const PointDistribution& d);
nlohmann::json to_json(const RefinementAudit& a);
nlohmann::json to_json(const ConditioningAudit& a);
nlohmann::json to_json(const ReflectionReport& r);
nlohmann::json to_json(const SpanAudit& a);
nlohmann::json to_json(const BookEvaluation& e, const std::string& agent);
nlohmann::json to_json(const SimReport& r);

// The one serialization used for every emitted report: two-space indent,
// sorted keys (nlohmann objects are ordered maps), trailing newline.
// Identical values always serialize to identical bytes.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace epiprob
