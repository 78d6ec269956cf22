#ifndef EXGRAPH_EVENTS_HPP
#define EXGRAPH_EVENTS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/rational.hpp"

namespace exgraph {

struct Measurement {
    std::string id;
    int outcome_arity = 2;
};

/// A measurement event: a partial outcome assignment plus a weight. Events
/// assign only the measurements their experiment actually touches.
struct Event {
    std::map<std::string, int> assignment;  // measurement id -> outcome
    Rational weight = 1;
    std::string label;
};

/// Two (measurement, outcome) atoms declared jointly impossible.
struct ExclusivityRule {
    std::pair<std::string, int> first;
    std::pair<std::string, int> second;

    bool operator<(const ExclusivityRule& o) const {
        return std::tie(first, second) < std::tie(o.first, o.second);
    }
    bool operator==(const ExclusivityRule& o) const {
        return first == o.first && second == o.second;
    }
};

struct Scenario {
    std::vector<Measurement> measurements;
    std::vector<Event> events;
    std::vector<ExclusivityRule> rules;

    const Measurement* find_measurement(const std::string& id) const {
        for (const auto& m : measurements)
            if (m.id == id) return &m;
        return nullptr;
    }
};

/// Every invariant violation, by name; an empty list means the scenario is
/// well formed.
inline std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> diags;
    std::set<std::string> mids;
    for (const auto& m : s.measurements) {
        if (!mids.insert(m.id).second)
            diags.push_back("duplicate measurement id '" + m.id + "'");
        if (m.outcome_arity < 2)
            diags.push_back("measurement '" + m.id + "' arity < 2");
    }
    std::set<std::string> labels;
    for (const auto& e : s.events) {
        if (!labels.insert(e.label).second)
            diags.push_back("duplicate event label '" + e.label + "'");
        if (e.weight < 0)
            diags.push_back("event '" + e.label + "' has negative weight");
        for (const auto& [id, outcome] : e.assignment) {
            const Measurement* m = s.find_measurement(id);
            if (!m) {
                diags.push_back("event '" + e.label + "' references undeclared measurement '" +
                                id + "'");
            } else if (outcome < 0 || outcome >= m->outcome_arity) {
                diags.push_back("event '" + e.label + "' outcome " + std::to_string(outcome) +
                                " out of range for '" + id + "'");
            }
        }
    }
    for (const auto& r : s.rules) {
        if (r.first.first == r.second.first)
            diags.push_back("rule references measurement '" + r.first.first + "' twice");
        for (const auto& atom : {r.first, r.second}) {
            const Measurement* m = s.find_measurement(atom.first);
            if (!m)
                diags.push_back("rule references undeclared measurement '" + atom.first + "'");
            else if (atom.second < 0 || atom.second >= m->outcome_arity)
                diags.push_back("rule outcome out of range for '" + atom.first + "'");
        }
    }
    return diags;
}

/// Exclusivity test: a shared measurement assigned different outcomes, or a
/// declared rule with one atom in each event. Irreflexive by construction.
inline bool events_exclusive(const Event& e1, const Event& e2,
                             const std::vector<ExclusivityRule>& rules) {
    if (&e1 == &e2 || e1.assignment == e2.assignment) return false;
    for (const auto& [id, o1] : e1.assignment) {
        auto it = e2.assignment.find(id);
        if (it != e2.assignment.end() && it->second != o1) return true;
    }
    auto assigns = [](const Event& e, const std::pair<std::string, int>& atom) {
        auto it = e.assignment.find(atom.first);
        return it != e.assignment.end() && it->second == atom.second;
    };
    for (const auto& r : rules) {
        if (assigns(e1, r.first) && assigns(e2, r.second)) return true;
        if (assigns(e1, r.second) && assigns(e2, r.first)) return true;
    }
    return false;
}

/// Compile a scenario into its exclusivity graph: one vertex per event in
/// list order, carrying the event's label and weight.
inline Graph build_exclusivity_graph(const Scenario& s) {
    auto diags = validate_scenario(s);
    if (!diags.empty()) throw std::invalid_argument("invalid scenario: " + diags.front());
    const int n = static_cast<int>(s.events.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (events_exclusive(s.events[i], s.events[j], s.rules)) edges.emplace_back(i, j);
    std::vector<Rational> weights;
    std::vector<std::string> labels;
    for (const auto& e : s.events) {
        weights.push_back(e.weight);
        labels.push_back(e.label);
    }
    return with_labels(make_graph(n, edges, weights), std::move(labels));
}

struct UnionScenario {
    Scenario scenario;
    std::vector<std::pair<int, int>> part_map;  // union vertex -> (part, local index)
};

/// Assemble several experiments into one event set. Event labels get a part
/// prefix; measurement ids shared across parts refer to the same physical
/// measurement, which is what creates cross-part exclusivities.
inline UnionScenario union_scenario(const std::vector<Scenario>& parts,
                                    const std::vector<ExclusivityRule>& extra_rules = {}) {
    UnionScenario u;
    std::set<std::string> labels;
    std::set<ExclusivityRule> rules;
    for (size_t p = 0; p < parts.size(); ++p) {
        const auto& part = parts[p];
        for (const auto& m : part.measurements) {
            const Measurement* existing = u.scenario.find_measurement(m.id);
            if (existing) {
                if (existing->outcome_arity != m.outcome_arity)
                    throw std::invalid_argument("measurement '" + m.id +
                                                "' redeclared with different arity");
            } else {
                u.scenario.measurements.push_back(m);
            }
        }
        for (size_t i = 0; i < part.events.size(); ++i) {
            Event e = part.events[i];
            e.label = std::to_string(p) + ":" + e.label;
            if (!labels.insert(e.label).second)
                throw std::invalid_argument("label collision after prefixing: " + e.label);
            u.scenario.events.push_back(std::move(e));
            u.part_map.emplace_back(static_cast<int>(p), static_cast<int>(i));
        }
        for (const auto& r : part.rules) rules.insert(r);
    }
    for (const auto& r : extra_rules) {
        for (const auto& atom : {r.first, r.second})
            if (!u.scenario.find_measurement(atom.first))
                throw std::invalid_argument("rule references unknown measurement '" +
                                            atom.first + "'");
        rules.insert(r);
    }
    u.scenario.rules.assign(rules.begin(), rules.end());
    return u;
}

}  // namespace exgraph

#endif
