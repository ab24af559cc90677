#include "epiprob/system.hpp"

#include <algorithm>

namespace epiprob {

Point Point::parse(const std::string& s) {
    size_t at = s.rfind('@');
    if (at == std::string::npos || at == 0 || at + 1 >= s.size())
        throw input_error("bad point \"" + s + "\" (expected run@time)");
    const std::string digits = s.substr(at + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad point time in \"" + s + "\"");
    return Point{s.substr(0, at), std::stoi(digits)};
}

bool InformationSet::contains(const Point& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

System System::build(std::vector<std::string> agents, std::vector<Run> runs) {
    if (agents.empty()) throw input_error("empty agent roster");
    if (runs.empty()) throw input_error("system has no runs");
    {
        auto sorted = agents;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                throw input_error("duplicate agent \"" + sorted[i] + "\"");
        for (const auto& a : agents)
            if (a.empty()) throw input_error("empty agent name");
    }

    std::sort(runs.begin(), runs.end(),
              [](const Run& a, const Run& b) { return a.name < b.name; });

    System sys;
    sys.agents_ = std::move(agents);
    for (auto& r : runs) {
        if (r.name.empty()) throw input_error("empty run name");
        if (r.states.empty()) throw input_error("run \"" + r.name + "\" has no states");
        if (sys.run_index_.count(r.name))
            throw input_error("duplicate run name \"" + r.name + "\"");
        for (size_t m = 0; m < r.states.size(); ++m) {
            const GlobalState& g = r.states[m];
            if (g.env.empty())
                throw input_error("empty environment token at " + r.name + "@" +
                                  std::to_string(m));
            if (g.locals.size() != sys.agents_.size())
                throw input_error("local-state roster mismatch at " + r.name + "@" +
                                  std::to_string(m));
            for (const auto& a : sys.agents_) {
                auto it = g.locals.find(a);
                if (it == g.locals.end())
                    throw input_error("missing local state for agent \"" + a + "\" at " +
                                      r.name + "@" + std::to_string(m));
                if (it->second.empty())
                    throw input_error("empty local state for agent \"" + a + "\" at " +
                                      r.name + "@" + std::to_string(m));
            }
        }
        sys.run_index_[r.name] = static_cast<int>(sys.runs_.size());
        sys.runs_.push_back(std::move(r));
    }
    return sys;
}

bool System::has_agent(const std::string& agent) const {
    return std::find(agents_.begin(), agents_.end(), agent) != agents_.end();
}

const Run& System::run(const std::string& name) const {
    auto it = run_index_.find(name);
    if (it == run_index_.end()) throw domain_error("unknown run \"" + name + "\"");
    return runs_[it->second];
}

int System::length(const std::string& run_name) const {
    return static_cast<int>(run(run_name).states.size());
}

bool System::has_point(const Point& p) const {
    auto it = run_index_.find(p.run);
    if (it == run_index_.end()) return false;
    return p.time >= 0 && p.time < static_cast<int>(runs_[it->second].states.size());
}

const GlobalState& System::global_state(const Point& p) const {
    const Run& r = run(p.run);
    if (p.time < 0 || p.time >= static_cast<int>(r.states.size()))
        throw domain_error("no point " + p.str());
    return r.states[p.time];
}

const std::string& System::local_state(const std::string& agent, const Point& p) const {
    const GlobalState& g = global_state(p);
    auto it = g.locals.find(agent);
    if (it == g.locals.end()) throw domain_error("unknown agent \"" + agent + "\"");
    return it->second;
}

std::vector<Point> System::all_points() const {
    std::vector<Point> out;
    for (const Run& r : runs_)
        for (int m = 0; m < static_cast<int>(r.states.size()); ++m)
            out.push_back(Point{r.name, m});
    return out;
}

InformationSet System::info_set(const std::string& agent, const Point& p) const {
    const std::string& s = local_state(agent, p);
    InformationSet k;
    k.agent = agent;
    k.state = s;
    for (const Run& r : runs_)
        for (int m = 0; m < static_cast<int>(r.states.size()); ++m)
            if (r.states[m].locals.at(agent) == s) k.points.push_back(Point{r.name, m});
    return k;
}

std::vector<InformationSet> System::info_sets(const std::string& agent) const {
    if (!has_agent(agent)) throw domain_error("unknown agent \"" + agent + "\"");
    std::vector<InformationSet> out;
    std::set<std::string> seen;
    for (const Point& p : all_points()) {
        const std::string& s = local_state(agent, p);
        if (seen.insert(s).second) out.push_back(info_set(agent, p));
    }
    return out;
}

bool System::is_synchronous(const std::string& agent) const {
    for (const InformationSet& k : info_sets(agent))
        for (const Point& p : k.points)
            if (p.time != k.points.front().time) return false;
    return true;
}

std::vector<std::string> System::local_state_sequence(const std::string& agent,
                                                      const Point& p) const {
    const Run& r = run(p.run);
    if (p.time < 0 || p.time >= static_cast<int>(r.states.size()))
        throw domain_error("no point " + p.str());
    std::vector<std::string> seq;
    for (int m = 0; m <= p.time; ++m) {
        const std::string& s = r.states[m].locals.at(agent);
        if (seq.empty() || seq.back() != s) seq.push_back(s);
    }
    return seq;
}

bool System::has_perfect_recall(const std::string& agent) const {
    for (const InformationSet& k : info_sets(agent)) {
        const auto ref = local_state_sequence(agent, k.points.front());
        for (size_t i = 1; i < k.points.size(); ++i)
            if (local_state_sequence(agent, k.points[i]) != ref) return false;
    }
    return true;
}

RefinementAudit System::check_refinement(const std::string& agent) const {
    RefinementAudit audit;
    std::vector<Point> pts = all_points();
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].time == 0) continue;
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[j].time != pts[i].time) continue;
            if (local_state(agent, pts[i]) != local_state(agent, pts[j])) continue;
            Point a{pts[i].run, pts[i].time - 1};
            Point b{pts[j].run, pts[j].time - 1};
            if (local_state(agent, a) != local_state(agent, b))
                audit.counterexamples.emplace_back(pts[i], pts[j]);
        }
    }
    audit.holds = audit.counterexamples.empty();
    return audit;
}

std::set<std::string> runs_through(const std::vector<Point>& points) {
    std::set<std::string> out;
    for (const Point& p : points) out.insert(p.run);
    return out;
}

std::set<std::string> runs_through(const InformationSet& k) { return runs_through(k.points); }

std::vector<Point> points_on(const std::vector<Point>& points,
                             const std::set<std::string>& run_names) {
    std::vector<Point> out;
    for (const Point& p : points)
        if (run_names.count(p.run)) out.push_back(p);
    return out;
}

}  // namespace epiprob
