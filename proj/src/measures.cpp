#include "epiprob/measures.hpp"

#include <algorithm>

namespace epiprob {

RunPrior RunPrior::exact(std::map<std::string, Rat> weights) {
    if (weights.empty()) throw input_error("empty prior");
    Rat total;
    for (const auto& [name, w] : weights) {
        if (w.is_negative()) throw input_error("negative prior for run \"" + name + "\"");
        total += w;
    }
    if (total != Rat(1))
        throw input_error("prior weights sum to " + total.str() + ", expected 1/1");
    RunPrior p;
    p.w_ = std::move(weights);
    return p;
}

RunPrior RunPrior::normalized(std::map<std::string, Rat> weights) {
    if (weights.empty()) throw input_error("empty prior");
    Rat total;
    for (const auto& [name, w] : weights) {
        if (w.is_negative()) throw input_error("negative prior for run \"" + name + "\"");
        total += w;
    }
    if (total.is_zero()) throw input_error("prior weights sum to zero");
    for (auto& [name, w] : weights) w /= total;
    RunPrior p;
    p.w_ = std::move(weights);
    return p;
}

const Rat& RunPrior::of(const std::string& run_name) const {
    auto it = w_.find(run_name);
    if (it == w_.end()) throw domain_error("no prior weight for run \"" + run_name + "\"");
    return it->second;
}

Rat RunPrior::mass(const std::set<std::string>& run_names) const {
    Rat total;
    for (const auto& name : run_names) total += of(name);
    return total;
}

ProbabilisticSystem::ProbabilisticSystem(System sys, RunPrior shared)
    : sys_(std::move(sys)), shared_(std::move(shared)) {
    validate(*shared_);
}

ProbabilisticSystem::ProbabilisticSystem(System sys, std::map<std::string, RunPrior> per_agent)
    : sys_(std::move(sys)), per_agent_(std::move(per_agent)) {
    if (per_agent_.empty()) throw input_error("no per-agent priors given");
    for (const auto& a : sys_.agents())
        if (!per_agent_.count(a)) throw input_error("missing prior for agent \"" + a + "\"");
    for (const auto& [a, p] : per_agent_) {
        if (!sys_.has_agent(a)) throw input_error("prior for unknown agent \"" + a + "\"");
        validate(p);
    }
}

void ProbabilisticSystem::validate(const RunPrior& p) const {
    if (p.weights().size() != sys_.runs().size())
        throw input_error("prior does not cover exactly the runs of the system");
    for (const auto& [name, w] : p.weights())
        if (!sys_.has_run(name)) throw input_error("prior for unknown run \"" + name + "\"");
}

const RunPrior& ProbabilisticSystem::prior_for(const std::string& agent) const {
    if (!sys_.has_agent(agent)) throw domain_error("unknown agent \"" + agent + "\"");
    if (shared_) return *shared_;
    return per_agent_.at(agent);
}

const RunPrior& ProbabilisticSystem::shared_prior() const {
    if (!shared_) throw domain_error("system has per-agent priors, no shared prior");
    return *shared_;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::ht: return "ht";
        case Method::ht_uniform: return "ht-uniform";
        case Method::elga: return "elga";
    }
    throw domain_error("bad method");
}

Method parse_method(const std::string& name) {
    if (name == "ht") return Method::ht;
    if (name == "ht-uniform") return Method::ht_uniform;
    if (name == "elga") return Method::elga;
    throw input_error("unknown method \"" + name + "\" (ht, ht-uniform, elga)");
}

std::vector<Point> points_of_runs(const System& sys, const std::set<std::string>& run_names) {
    std::vector<Point> out;
    for (const Run& r : sys.runs()) {
        if (!run_names.count(r.name)) continue;
        for (int m = 0; m < static_cast<int>(r.states.size()); ++m)
            out.push_back(Point{r.name, m});
    }
    return out;
}

PointDistribution sync_point_probability(const ProbabilisticSystem& psys,
                                         const std::string& agent, const Point& p) {
    const InformationSet k = psys.sys().info_set(agent, p);
    for (const Point& q : k.points)
        if (q.time != p.time)
            throw domain_error("information set of " + p.str() +
                               " spans several times; agent \"" + agent +
                               "\" is not synchronous there");
    const RunPrior& prior = psys.prior_for(agent);
    Rat total;
    for (const Point& q : k.points) total += prior.of(q.run);
    if (total.is_zero())
        throw domain_error("zero prior mass through information set of " + p.str());
    PointDistribution d;
    d.domain = k;
    for (const Point& q : k.points) d.mass[q] = prior.of(q.run) / total;
    return d;
}

CellMeasure ht_assign(const ProbabilisticSystem& psys, const std::string& agent,
                      const Point& p) {
    const InformationSet k = psys.sys().info_set(agent, p);
    const RunPrior& prior = psys.prior_for(agent);
    Rat total;
    for (const std::string& r : runs_through(k)) total += prior.of(r);
    if (total.is_zero())
        throw domain_error("zero prior mass through information set of " + p.str());
    CellMeasure m;
    m.domain = k;
    for (const Point& q : k.points) m.cells[q.run].points.push_back(q);
    for (auto& [run_name, cell] : m.cells) cell.mass = prior.of(run_name) / total;
    return m;
}

PointDistribution ht_uniform_assign(const ProbabilisticSystem& psys, const std::string& agent,
                                    const Point& p) {
    const CellMeasure m = ht_assign(psys, agent, p);
    PointDistribution d;
    d.domain = m.domain;
    for (const auto& [run_name, cell] : m.cells) {
        const Rat share = cell.mass / Rat(static_cast<long>(cell.points.size()));
        for (const Point& q : cell.points) d.mass[q] = share;
    }
    return d;
}

PointDistribution elga_assign(const ProbabilisticSystem& psys, const std::string& agent,
                              const Point& p) {
    const InformationSet k = psys.sys().info_set(agent, p);
    const RunPrior& prior = psys.prior_for(agent);
    std::map<std::string, long> count;
    for (const Point& q : k.points) ++count[q.run];
    Rat denom;
    for (const auto& [run_name, n] : count) denom += prior.of(run_name) * Rat(n);
    if (denom.is_zero())
        throw domain_error("zero prior mass through information set of " + p.str());
    PointDistribution d;
    d.domain = k;
    for (const Point& q : k.points) d.mass[q] = prior.of(q.run) / denom;
    return d;
}

AgreementResult approaches_agree(const ProbabilisticSystem& psys, const std::string& agent,
                                 const Point& p) {
    const InformationSet k = psys.sys().info_set(agent, p);
    const RunPrior& prior = psys.prior_for(agent);
    std::map<std::string, long> count;
    for (const Point& q : k.points) ++count[q.run];

    AgreementResult res;
    std::optional<std::pair<std::string, long>> first;
    for (const auto& [run_name, n] : count) {
        if (prior.of(run_name).is_zero()) continue;
        if (!first) {
            first = {run_name, n};
        } else if (n != first->second) {
            res.agree = false;
            res.witness = {first->first, run_name};
            break;
        }
    }

    // Cross-check against the definition: the two extensions coincide exactly
    // when the positive-prior point counts are equal.
    const bool same = ht_uniform_assign(psys, agent, p) == elga_assign(psys, agent, p);
    if (same != res.agree)
        throw domain_error("internal inconsistency between point-count test and "
                           "distribution comparison at " + p.str());
    return res;
}

namespace {

std::set<Point> trace_on(const std::vector<Point>& points, const InformationSet& domain) {
    std::set<Point> tr;
    for (const Point& p : points)
        if (domain.contains(p)) tr.insert(p);
    return tr;
}

}  // namespace

Rat event_probability(const CellMeasure& m, const std::vector<Point>& points) {
    const std::set<Point> tr = trace_on(points, m.domain);
    Rat total;
    for (const auto& [run_name, cell] : m.cells) {
        size_t inside = 0;
        for (const Point& q : cell.points) inside += tr.count(q);
        if (inside == 0) continue;
        if (inside != cell.points.size())
            throw domain_error("event is not measurable: it splits the cell of run \"" +
                               run_name + "\"");
        total += cell.mass;
    }
    return total;
}

Rat event_probability(const PointDistribution& d, const std::vector<Point>& points) {
    const std::set<Point> tr = trace_on(points, d.domain);
    Rat total;
    for (const Point& q : tr) total += d.mass.at(q);
    return total;
}

namespace {

template <typename Assignment>
Rat conditional_impl(const Assignment& a, const std::vector<Point>& target,
                     const std::vector<Point>& given) {
    const Rat pg = event_probability(a, given);
    if (pg.is_zero()) throw domain_error("zero-mass conditioning set");
    std::vector<Point> both;
    std::set<Point> given_set(given.begin(), given.end());
    for (const Point& p : target)
        if (given_set.count(p)) both.push_back(p);
    return event_probability(a, both) / pg;
}

}  // namespace

Rat conditional(const CellMeasure& m, const std::vector<Point>& target,
                const std::vector<Point>& given) {
    return conditional_impl(m, target, given);
}

Rat conditional(const PointDistribution& d, const std::vector<Point>& target,
                const std::vector<Point>& given) {
    return conditional_impl(d, target, given);
}

Rat run_event_belief(const ProbabilisticSystem& psys, const std::string& agent,
                     const Point& p, const std::set<std::string>& event_runs, Method method) {
    const std::vector<Point> ev = points_of_runs(psys.sys(), event_runs);
    switch (method) {
        case Method::ht: return event_probability(ht_assign(psys, agent, p), ev);
        case Method::ht_uniform:
            return event_probability(ht_uniform_assign(psys, agent, p), ev);
        case Method::elga: return event_probability(elga_assign(psys, agent, p), ev);
    }
    throw domain_error("bad method");
}

Rat conditional_run_event_belief(const ProbabilisticSystem& psys, const std::string& agent,
                                 const Point& p, const std::set<std::string>& event_runs,
                                 const std::vector<Point>& given, Method method) {
    const std::vector<Point> ev = points_of_runs(psys.sys(), event_runs);
    switch (method) {
        case Method::ht: return conditional(ht_assign(psys, agent, p), ev, given);
        case Method::ht_uniform:
            return conditional(ht_uniform_assign(psys, agent, p), ev, given);
        case Method::elga: return conditional(elga_assign(psys, agent, p), ev, given);
    }
    throw domain_error("bad method");
}

}  // namespace epiprob
