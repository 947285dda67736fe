// Digital-clocks engine: integer-valued clock semantics as an explicit
// finite MDP. Valid for closed, diagonal-free models; each clock saturates
// at its largest compared constant plus one, and time advances in unit
// steps. Serves as the independent cross-check for the backwards engine.

#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "zonecheck/error.hpp"
#include "zonecheck/mdp.hpp"
#include "zonecheck/model.hpp"
#include "zonecheck/result.hpp"

namespace zonecheck::digital {

struct DigitalState {
    std::size_t location;
    std::vector<std::int64_t> values;

    bool operator<(const DigitalState& o) const {
        if (location != o.location) return location < o.location;
        return values < o.values;
    }
};

struct DigitalModel {
    mdp::Mdp m;
    std::vector<DigitalState> states;
    std::size_t initial = 0;
};

namespace detail {

inline void require_closed(const ExprPtr& e, const std::string& what) {
    visit_expr(e, [&](const Expr& x) {
        if (x.kind != Expr::Kind::Clock) return;
        if (x.op == CmpOp::Lt || x.op == CmpOp::Gt)
            throw EngineLimitation("digital engine requires closed constraints; " + what +
                                   " contains '" + render_expr(Expr::clock(x.name, x.rhs_clock, x.op, x.constant)) + "'");
    });
}

inline void require_model_supported(const Pta& p) {
    ValidationReport rep = validate(p);
    auto name_offender = [&](bool strict_wanted) {
        std::string found;
        auto scan = [&](const ExprPtr& e, const std::string& where) {
            visit_expr(e, [&](const Expr& x) {
                if (x.kind != Expr::Kind::Clock || !found.empty()) return;
                bool strict = x.op == CmpOp::Lt || x.op == CmpOp::Gt;
                bool diagonal = !x.rhs_clock.empty();
                if ((strict_wanted && strict) || (!strict_wanted && diagonal))
                    found = where + ": " + render_expr(Expr::clock(x.name, x.rhs_clock, x.op, x.constant));
            });
        };
        for (const auto& l : p.locations) scan(l.invariant, "invariant of " + l.name);
        for (const auto& e : p.edges) scan(e.guard, "guard of " + e.action);
        return found;
    };
    if (!rep.closed)
        throw EngineLimitation("digital engine requires closed constraints; " + name_offender(true));
    if (!rep.diagonal_free)
        throw EngineLimitation("digital engine requires diagonal-free constraints; " + name_offender(false));
    if (!rep.initial_ok)
        throw ModelError("initial state violates its invariant");
}

} // namespace detail

// Explicit digital semantics with avoid/target predicates already resolved
// on the (property-clock-injected) model. Exploration order is fixed: edges
// in model order first, the unit delay last.
inline DigitalModel digitize(const Pta& p, const ExprPtr& avoid, const ExprPtr& target) {
    detail::require_model_supported(p);
    detail::require_closed(avoid, "the avoid predicate");
    detail::require_closed(target, "the target predicate");

    // per-clock cap: largest compared constant (model and property) plus one
    std::vector<std::int64_t> cap(p.clocks.size(), 1);
    auto scan = [&](const ExprPtr& e) {
        visit_expr(e, [&](const Expr& x) {
            if (x.kind != Expr::Kind::Clock) return;
            for (const std::string& n : {x.name, x.rhs_clock}) {
                if (n.empty()) continue;
                std::size_t c = *p.clock_index(n) - 1;
                cap[c] = std::max(cap[c], x.constant + 1);
            }
        });
    };
    for (const auto& l : p.locations) scan(l.invariant);
    for (const auto& e : p.edges) scan(e.guard);
    scan(avoid);
    scan(target);

    std::vector<DigitalState> states;
    std::map<DigitalState, std::size_t> index;
    std::vector<std::size_t> queue;

    auto intern = [&](DigitalState s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        std::size_t id = states.size();
        index.emplace(s, id);
        states.push_back(std::move(s));
        queue.push_back(id);
        return id;
    };

    DigitalState init{p.initial_index(), std::vector<std::int64_t>(p.clocks.size(), 0)};
    std::size_t initial = intern(std::move(init));

    struct PendingAction {
        std::size_t state;
        int label;
        std::vector<std::pair<std::size_t, Rational>> dist;
    };
    std::vector<PendingAction> pending;

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t id = queue[qi];
        DigitalState s = states[id];
        const std::string& loc_name = p.locations[s.location].name;

        // a position violating the until's left predicate without satisfying
        // the target fails the path: such states keep no transitions at all
        bool is_target = eval_expr(target, loc_name, p, s.values);
        bool is_avoid = eval_expr(avoid, loc_name, p, s.values);
        if (is_avoid && !is_target) continue;

        // discrete edges, in model order
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            const Edge& edge = p.edges[e];
            if (*p.location_index(edge.source) != s.location) continue;
            if (!eval_expr(edge.guard, loc_name, p, s.values)) continue;
            bool viable = true;
            std::vector<std::pair<std::size_t, Rational>> dist;
            for (const auto& b : edge.branches) {
                DigitalState t;
                t.location = *p.location_index(b.target);
                t.values = s.values;
                for (const auto& r : b.resets) t.values[*p.clock_index(r) - 1] = 0;
                if (!eval_expr(p.locations[t.location].invariant, p.locations[t.location].name, p,
                               t.values)) {
                    viable = false;
                    break;
                }
                dist.push_back({intern(std::move(t)), b.probability});
            }
            if (viable)
                pending.push_back({id, static_cast<int>(e), std::move(dist)});
        }

        // unit delay
        DigitalState t = s;
        for (std::size_t c = 0; c < t.values.size(); ++c)
            t.values[c] = std::min(t.values[c] + 1, cap[c]);
        if (eval_expr(p.locations[s.location].invariant, loc_name, p, t.values))
            pending.push_back({id, -2, {{intern(std::move(t)), Rational(1)}}});
    }

    DigitalModel out{mdp::Mdp(states.size()), {}, initial};
    for (auto& a : pending) out.m.add_action(a.state, a.label, std::move(a.dist));
    for (std::size_t id = 0; id < states.size(); ++id) {
        if (eval_expr(target, p.locations[states[id].location].name, p, states[id].values))
            out.m.set_target(id);
    }
    out.m.finalize();
    out.states = std::move(states);
    return out;
}

// Full digital-clocks query: property-clock injection, digitization, value
// iteration in the requested mode, initial-state lookup.
inline ProbResult check(const Pta& model, const Property& property, const EngineConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto [p, prop] = inject_property_clock(model, property);
    ExprPtr avoid = Expr::negate(prop.left);
    DigitalModel dm = digitize(p, avoid, prop.right);

    ProbResult r;
    r.stats.digital_states = dm.m.size();
    r.stats.mdp_transitions = dm.m.transition_count();
    r.stats.time_explore_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    auto t1 = std::chrono::steady_clock::now();
    auto vi = dm.m.value_iteration(prop.maximize, cfg.epsilon, cfg.vi_cap);
    r.stats.vi_sweeps = vi.sweeps;
    r.stats.time_vi_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t1).count();
    r.probability = vi.values[dm.initial];
    return r;
}

} // namespace zonecheck::digital
