// The backwards reachability engine: discrete predecessors, timed
// predecessors within a safe set, the symbolic-MDP construction for maximal
// until probabilities, the c-parameterised divergence fixpoint used for
// qualitative "stays safe forever" analysis, and the transformation of
// minimum probabilities into maximum ones.

#pragma once

#include <chrono>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zonecheck/error.hpp"
#include "zonecheck/federation.hpp"
#include "zonecheck/mdp.hpp"
#include "zonecheck/model.hpp"
#include "zonecheck/result.hpp"

namespace zonecheck::backwards {

enum class Role { Seed, Derived, Combination };

struct SymbolicState {
    std::size_t location;
    Federation zone; // the discrete-predecessor zone; tpre is applied on demand
    Role role;
};

struct SymbolicAction {
    std::size_t edge;
    std::vector<std::ptrdiff_t> assignment; // per branch: successor state or -1 for the sink
    std::vector<std::ptrdiff_t> images;     // per branch: recorded dpre-image state or -1
    std::vector<std::pair<std::size_t, Rational>> dist; // sink = states.size()
};

// Per-location safe/target federations, both already intersected with the
// location invariant.
struct StateSets {
    std::vector<Federation> safe;
    std::vector<Federation> tgt;
};

struct SymbolicMdp {
    std::vector<SymbolicState> states;
    std::vector<Federation> tpre; // cached tpre_safe per state
    std::vector<std::vector<SymbolicAction>> actions;
    std::vector<std::size_t> seeds;
    bool explored = false; // false when a zero-detection shortcut skipped exploration

    std::size_t sink() const { return states.size(); }

    mdp::Mdp to_mdp() const {
        mdp::Mdp m(states.size() + 1);
        for (std::size_t s : seeds) m.set_target(s);
        for (std::size_t s = 0; s < states.size(); ++s)
            for (const auto& a : actions[s])
                m.add_action(s, static_cast<int>(a.edge), a.dist);
        m.finalize();
        return m;
    }

    std::size_t transition_count() const {
        std::size_t n = 0;
        for (const auto& as : actions)
            for (const auto& a : as) n += a.dist.size();
        return n;
    }

    // States at the given location whose timed predecessor contains v.
    std::vector<std::size_t> covering(std::size_t location, const ClockValuation& v) const {
        std::vector<std::size_t> out;
        for (std::size_t s = 0; s < states.size(); ++s)
            if (states[s].location == location && tpre[s].contains(v)) out.push_back(s);
        return out;
    }
};

// ── Compilation helpers ─────────────────────────────────────────────────────

inline std::vector<Federation> invariant_sets(const Pta& p) {
    std::vector<Federation> out;
    out.reserve(p.locations.size());
    for (std::size_t l = 0; l < p.locations.size(); ++l)
        out.push_back(compile_predicate(p.locations[l].invariant, l, p));
    return out;
}

// Safe = invariant and not avoid; Tgt = invariant and target.
inline StateSets build_state_sets(const Pta& p, const ExprPtr& avoid, const ExprPtr& target) {
    StateSets sets;
    auto inv = invariant_sets(p);
    for (std::size_t l = 0; l < p.locations.size(); ++l) {
        sets.safe.push_back(inv[l].intersect(compile_predicate(avoid, l, p).complement()));
        sets.tgt.push_back(inv[l].intersect(compile_predicate(target, l, p)));
    }
    return sets;
}

// ── Core operators ──────────────────────────────────────────────────────────

// Timed predecessor of `zone` at `location` while remaining inside the safe
// set of that location (which already includes the invariant).
inline Federation tpre_safe(const StateSets& sets, std::size_t location, const Federation& zone,
                            std::size_t tpre_cap) {
    return tpre_within(sets.safe[location], zone, tpre_cap);
}

// Discrete predecessor over one edge branch: backwards reset of the branch's
// clocks, intersected with the guard and the source invariant.
inline Federation dpre(const Pta& p, const std::vector<Federation>& inv,
                       const std::vector<Federation>& guards, std::size_t edge,
                       std::size_t branch, const Federation& target_zone) {
    const Edge& e = p.edges[edge];
    const Branch& b = e.branches[branch];
    std::vector<std::size_t> resets;
    for (const auto& r : b.resets) resets.push_back(*p.clock_index(r));
    Federation pulled = target_zone.backwards_reset(resets);
    std::size_t src = *p.location_index(e.source);
    return pulled.intersect(guards[edge]).intersect(inv[src]);
}

inline Federation dpre(const Pta& p, std::size_t edge, std::size_t branch,
                       const Federation& target_zone) {
    std::vector<Federation> inv = invariant_sets(p);
    std::vector<Federation> guards;
    for (std::size_t e = 0; e < p.edges.size(); ++e)
        guards.push_back(compile_predicate(p.edges[e].guard, *p.location_index(p.edges[e].source), p));
    return dpre(p, inv, guards, edge, branch, target_zone);
}

// ── MaxU: backwards exploration building the symbolic MDP ──────────────────

inline SymbolicMdp max_u(const Pta& p, const StateSets& sets, const EngineConfig& cfg) {
    SymbolicMdp out;
    std::vector<Federation> inv = invariant_sets(p);
    std::vector<Federation> guards;
    for (std::size_t e = 0; e < p.edges.size(); ++e)
        guards.push_back(compile_predicate(p.edges[e].guard, *p.location_index(p.edges[e].source), p));

    std::vector<std::vector<std::size_t>> at_location(p.locations.size());
    std::deque<std::size_t> worklist;

    auto add_state = [&](std::size_t loc, Federation zone, Role role) {
        out.states.push_back(SymbolicState{loc, std::move(zone), role});
        out.tpre.push_back(Federation(p.dim())); // filled when processed
        at_location[loc].push_back(out.states.size() - 1);
        worklist.push_back(out.states.size() - 1);
        if (out.states.size() > cfg.explore_cap)
            throw IterationCapExceeded("backwards exploration exceeded " +
                                       std::to_string(cfg.explore_cap) + " symbolic states");
        return out.states.size() - 1;
    };

    auto find_state = [&](std::size_t loc, const Federation& zone) -> std::optional<std::size_t> {
        for (std::size_t id : at_location[loc])
            if (out.states[id].zone.equals_sem(zone)) return id;
        return std::nullopt;
    };

    // seeds: one state per location with a non-empty target set
    for (std::size_t l = 0; l < p.locations.size(); ++l) {
        Federation t = sets.tgt[l].reduced();
        if (!t.is_empty()) {
            std::size_t id = add_state(l, std::move(t), Role::Seed);
            out.seeds.push_back(id);
        }
    }

    // per (edge, branch): (successor state, dpre-image state) records
    struct Record {
        std::size_t successor;
        std::size_t image;
    };
    std::vector<std::vector<std::vector<Record>>> records(p.edges.size());
    for (std::size_t e = 0; e < p.edges.size(); ++e)
        records[e].resize(p.edges[e].branches.size());

    // a jump may only be taken from a position satisfying the until's left
    // predicate or the target itself
    std::vector<Federation> jump_ok;
    jump_ok.reserve(p.locations.size());
    for (std::size_t l = 0; l < p.locations.size(); ++l)
        jump_ok.push_back(sets.safe[l].unite(sets.tgt[l]).reduced());

    auto process = [&](std::size_t id) {
        Federation tp = tpre_safe(sets, out.states[id].location, out.states[id].zone, cfg.tpre_cap);
        out.tpre[id] = tp;
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            for (std::size_t i = 0; i < p.edges[e].branches.size(); ++i) {
                if (*p.location_index(p.edges[e].branches[i].target) != out.states[id].location)
                    continue;
                std::size_t src = *p.location_index(p.edges[e].source);
                Federation dz = dpre(p, inv, guards, e, i, tp).intersect(jump_ok[src]);
                if (dz.is_empty()) continue;
                auto existing = find_state(src, dz);
                std::size_t image = existing ? *existing : add_state(src, std::move(dz), Role::Derived);
                records[e][i].push_back(Record{id, image});
            }
        }
    };

    // enumerate branch assignments of an edge over recorded successors plus
    // the sink (not all sink), intersecting the recorded dpre-image zones and
    // pruning as soon as a running intersection is empty
    auto for_each_assignment = [&](std::size_t e,
                                   const std::function<void(const std::vector<std::ptrdiff_t>&,
                                                            const std::vector<std::ptrdiff_t>&,
                                                            const Federation&)>& fn) {
        const std::size_t branches = p.edges[e].branches.size();
        std::vector<std::ptrdiff_t> assignment(branches, -1);
        std::vector<std::ptrdiff_t> images(branches, -1);
        std::function<void(std::size_t, std::optional<Federation>)> go =
            [&](std::size_t i, std::optional<Federation> inter) {
                if (i == branches) {
                    if (inter) fn(assignment, images, *inter);
                    return;
                }
                for (const Record& r : records[e][i]) {
                    Federation next = inter ? inter->intersect(out.states[r.image].zone)
                                            : out.states[r.image].zone;
                    if (next.is_empty()) continue;
                    assignment[i] = static_cast<std::ptrdiff_t>(r.successor);
                    images[i] = static_cast<std::ptrdiff_t>(r.image);
                    go(i + 1, std::move(next));
                }
                assignment[i] = -1; // sink
                images[i] = -1;
                go(i + 1, std::move(inter));
            };
        go(0, std::nullopt);
    };

    // explore until no new state appears, interleaving worklist draining
    // with combination materialization
    while (!worklist.empty()) {
        while (!worklist.empty()) {
            std::size_t id = worklist.front();
            worklist.pop_front();
            process(id);
        }
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            std::size_t src = *p.location_index(p.edges[e].source);
            for_each_assignment(e, [&](const std::vector<std::ptrdiff_t>&,
                                       const std::vector<std::ptrdiff_t>&, const Federation& inter) {
                if (!find_state(src, inter)) add_state(src, inter, Role::Combination);
            });
        }
    }

    // freeze: actions from the final assignment enumeration
    out.actions.assign(out.states.size(), {});
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        std::size_t src = *p.location_index(p.edges[e].source);
        for_each_assignment(e, [&](const std::vector<std::ptrdiff_t>& assignment,
                                   const std::vector<std::ptrdiff_t>& images, const Federation& inter) {
            SymbolicAction action;
            action.edge = e;
            action.assignment = assignment;
            action.images = images;
            // weight per distinct non-sink successor; remainder on the sink
            std::vector<std::pair<std::size_t, Rational>> dist;
            Rational sink_mass(0);
            for (std::size_t i = 0; i < assignment.size(); ++i) {
                const Rational& pr = p.edges[e].branches[i].probability;
                if (assignment[i] < 0) {
                    sink_mass += pr;
                    continue;
                }
                std::size_t id = static_cast<std::size_t>(assignment[i]);
                bool merged = false;
                for (auto& [t, w] : dist)
                    if (t == id) { w += pr; merged = true; break; }
                if (!merged) dist.push_back({id, pr});
            }
            if (sink_mass > Rational(0)) dist.push_back({out.sink(), sink_mass});
            action.dist = std::move(dist);
            for (std::size_t s : at_location[src])
                if (inter.includes_sem(out.states[s].zone))
                    out.actions[s].push_back(action);
        });
    }

    out.explored = true;
    return out;
}

inline SymbolicMdp max_u(const Pta& p, const ExprPtr& avoid, const ExprPtr& target,
                         const EngineConfig& cfg) {
    std::vector<std::int64_t> zeros(p.clocks.size(), 0);
    const Location& init = p.locations[p.initial_index()];
    if (!eval_expr(init.invariant, init.name, p, zeros))
        throw ModelError("initial state violates the invariant of '" + init.name + "'");
    return max_u(p, build_state_sets(p, avoid, target), cfg);
}

// ── Static zero-detection ───────────────────────────────────────────────────

// A sound lower bound on the time needed to reach each location: an edge
// whose guard's conjunction spine demands x >= k forces a dwell of k time
// units whenever x is zero on every entry into its source location.
inline std::vector<std::optional<std::int64_t>> static_min_times(const Pta& p) {
    const std::size_t n = p.locations.size();
    // entry_zero[l][c]: clock c is zero whenever l is entered
    std::vector<std::vector<bool>> entry_zero(n, std::vector<bool>(p.clocks.size(), true));
    for (const auto& e : p.edges) {
        for (const auto& b : e.branches) {
            std::size_t l = *p.location_index(b.target);
            for (std::size_t c = 0; c < p.clocks.size(); ++c) {
                bool reset = false;
                for (const auto& r : b.resets)
                    if (*p.clock_index(r) == c + 1) reset = true;
                if (!reset) entry_zero[l][c] = false;
            }
        }
    }

    auto guard_dwell = [&](const Edge& e) {
        std::size_t src = *p.location_index(e.source);
        std::int64_t dwell = 0;
        std::function<void(const ExprPtr&)> spine = [&](const ExprPtr& x) {
            if (x->kind == Expr::Kind::And) {
                spine(x->a);
                spine(x->b);
                return;
            }
            if (x->kind != Expr::Kind::Clock || !x->rhs_clock.empty()) return;
            if (x->op != CmpOp::Ge && x->op != CmpOp::Gt && x->op != CmpOp::Eq) return;
            std::size_t c = *p.clock_index(x->name) - 1;
            if (entry_zero[src][c]) dwell = std::max(dwell, x->constant);
        };
        spine(e.guard);
        return dwell;
    };

    std::vector<std::optional<std::int64_t>> dist(n);
    dist[p.initial_index()] = 0;
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& e : p.edges) {
            std::size_t src = *p.location_index(e.source);
            if (!dist[src]) continue;
            std::int64_t through = *dist[src] + guard_dwell(e);
            for (const auto& b : e.branches) {
                std::size_t t = *p.location_index(b.target);
                if (!dist[t] || *dist[t] > through) {
                    dist[t] = through;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    return dist;
}

// Probability is exactly zero when every location with a non-empty target
// zone either is unreachable in the location graph or demands, on some
// never-reset clock, less time than any path needs to get there.
inline bool provably_unreachable_in_time(const Pta& p, const StateSets& sets) {
    std::vector<std::size_t> never_reset;
    for (std::size_t c = 1; c < p.dim(); ++c) {
        bool reset = false;
        for (const auto& e : p.edges)
            for (const auto& b : e.branches)
                for (const auto& r : b.resets)
                    if (*p.clock_index(r) == c) reset = true;
        if (!reset) never_reset.push_back(c);
    }
    auto dist = static_min_times(p);
    for (std::size_t l = 0; l < p.locations.size(); ++l) {
        if (sets.tgt[l].is_empty()) continue;
        if (!dist[l]) continue; // unreachable target location: fine
        bool excluded = false;
        for (std::size_t g : never_reset) {
            Bound ub = Bound::strict(std::numeric_limits<std::int64_t>::min() / 4);
            for (const auto& m : sets.tgt[l].members())
                if (m.at(g, 0).is_infinite()) { ub = Bound::infinity(); break; }
                else if (ub < m.at(g, 0)) ub = m.at(g, 0);
            if (ub.is_infinite()) continue;
            std::int64_t needed = *dist[l];
            if (needed > ub.value() || (needed == ub.value() && ub.is_strict())) {
                excluded = true;
                break;
            }
        }
        if (!excluded) return false;
    }
    return true;
}

// ── MaxV>=1: divergent safety with probability one ──────────────────────────

namespace detail {

inline std::string fresh_clock_name(const Pta& p) {
    std::string name = "_w";
    while (p.clock_index(name)) name += "_";
    return name;
}

} // namespace detail

// Per-location federation of states from which the maximal probability of
// remaining inside `safe` forever, over time-divergent behaviour, is one.
// Each round keeps the states that can, with probability one, stay safe for
// at least c more time units (tracked by a fresh clock) and end safe; the
// result is a fixpoint and is independent of the choice of c >= 1.
inline std::vector<Federation> max_v_geq1(const Pta& p, const std::vector<Federation>& safe,
                                          std::int64_t c, const EngineConfig& cfg,
                                          EngineStats* stats = nullptr) {
    if (c < 1) throw std::invalid_argument("the divergence parameter c must be positive");
    std::vector<Federation> inv = invariant_sets(p);
    std::vector<Federation> x;
    x.reserve(safe.size());
    for (std::size_t l = 0; l < safe.size(); ++l) x.push_back(safe[l].intersect(inv[l]).reduced());

    Pta pw = p;
    pw.clocks.push_back(detail::fresh_clock_name(p));
    const std::size_t w = pw.dim() - 1;

    for (std::size_t round = 0; round < cfg.maxv_cap; ++round) {
        if (stats) ++stats->iter_maxv;
        StateSets sets;
        for (std::size_t l = 0; l < x.size(); ++l) {
            Federation lifted = x[l].lifted();
            sets.safe.push_back(lifted);
            Federation bound = Federation::of(
                Dbm::universe(pw.dim()).conjoined(0, w, Bound::weak(-c)));
            sets.tgt.push_back(lifted.intersect(bound));
        }
        SymbolicMdp sym = max_u(pw, sets, cfg);
        mdp::Mdp m = sym.to_mdp();
        std::size_t prob1_iters = 0;
        std::vector<bool> p1 = m.prob1_max(&prob1_iters);
        if (stats) stats->iter_maxu1 += prob1_iters;

        std::vector<Federation> next;
        for (std::size_t l = 0; l < x.size(); ++l) next.push_back(Federation(p.dim()));
        for (std::size_t s = 0; s < sym.states.size(); ++s) {
            if (!p1[s]) continue;
            Federation slice = sym.tpre[s]
                                   .intersect(Federation::of(
                                       Dbm::universe(pw.dim()).conjoined(w, 0, Bound::zero_weak())))
                                   .project_out(w);
            next[sym.states[s].location] = next[sym.states[s].location].unite(slice);
        }
        for (auto& f : next) f = f.reduced();

        bool stable = true;
        for (std::size_t l = 0; l < x.size(); ++l)
            if (!next[l].equals_sem(x[l])) { stable = false; break; }
        x = std::move(next);
        if (stable) return x;
    }
    throw IterationCapExceeded("divergence fixpoint did not stabilize within " +
                               std::to_string(cfg.maxv_cap) + " rounds");
}

// ── Probability queries ─────────────────────────────────────────────────────

struct QueryOutcome {
    ProbResult result;
    SymbolicMdp sym;
    std::vector<double> values;          // per symbolic state (empty when skipped)
    std::vector<std::size_t> initial_covering;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Runs the maximal-probability pipeline on prepared state sets.
inline QueryOutcome run_max_query(const Pta& p, const StateSets& sets, const EngineConfig& cfg,
                                  bool allow_shortcut) {
    QueryOutcome out;
    auto t0 = std::chrono::steady_clock::now();

    if (allow_shortcut && provably_unreachable_in_time(p, sets)) {
        // keep the seeds, skip exploration and value iteration entirely
        for (std::size_t l = 0; l < p.locations.size(); ++l) {
            Federation t = sets.tgt[l].reduced();
            if (t.is_empty()) continue;
            out.sym.states.push_back(SymbolicState{l, t, Role::Seed});
            out.sym.tpre.push_back(Federation(p.dim()));
            out.sym.seeds.push_back(out.sym.states.size() - 1);
        }
        out.sym.actions.assign(out.sym.states.size(), {});
        out.result.probability = 0.0;
        out.result.stats.seeds = out.sym.seeds.size();
        out.result.stats.states_max = out.sym.states.size();
        out.result.stats.time_explore_ms = ms_since(t0);
        return out;
    }

    out.sym = max_u(p, sets, cfg);
    out.result.stats.seeds = out.sym.seeds.size();
    out.result.stats.states_max = out.sym.states.size();
    out.result.stats.mdp_transitions = out.sym.transition_count();
    out.result.stats.time_explore_ms = ms_since(t0);

    ClockValuation v0 = ClockValuation::zero(p.clocks.size());
    out.initial_covering = out.sym.covering(p.initial_index(), v0);
    if (out.initial_covering.empty()) {
        out.result.probability = 0.0; // exact: no symbolic state covers the initial state
        return out;
    }

    auto t1 = std::chrono::steady_clock::now();
    mdp::Mdp m = out.sym.to_mdp();
    std::vector<bool> p1 = m.prob1_max();
    bool covered_by_one = false;
    for (std::size_t id : out.initial_covering)
        if (p1[id]) covered_by_one = true;
    if (covered_by_one) {
        out.result.probability = 1.0; // exact: a prob-1 state covers the initial state
        out.result.stats.time_vi_ms = ms_since(t1);
        return out;
    }

    auto vi = m.value_iteration(true, cfg.epsilon, cfg.vi_cap);
    out.values = vi.values;
    out.result.stats.vi_sweeps = vi.sweeps;
    out.result.stats.time_vi_ms = ms_since(t1);
    double best = 0.0;
    for (std::size_t id : out.initial_covering) best = std::max(best, vi.values[id]);
    out.result.probability = best;
    return out;
}

} // namespace detail

// Maximal probability of (not avoid) until target from the initial state.
inline QueryOutcome pmax_until_full(const Pta& p, const ExprPtr& avoid, const ExprPtr& target,
                                    const EngineConfig& cfg) {
    std::vector<std::int64_t> zeros(p.clocks.size(), 0);
    const Location& init = p.locations[p.initial_index()];
    if (!eval_expr(init.invariant, init.name, p, zeros))
        throw ModelError("initial state violates the invariant of '" + init.name + "'");
    return detail::run_max_query(p, build_state_sets(p, avoid, target), cfg, true);
}

inline ProbResult pmax_until(const Pta& p, const ExprPtr& avoid, const ExprPtr& target,
                             const EngineConfig& cfg) {
    return pmax_until_full(p, avoid, target, cfg).result;
}

// Minimal probability via the maximal-probability dual:
//   1 - Pmax( not target U ((avoid and not target) or G) )
// where G holds in the states that can stay inside "not target" forever with
// maximal probability one over divergent behaviour.
inline QueryOutcome pmin_until_full(const Pta& p, const ExprPtr& avoid, const ExprPtr& target,
                                    const EngineConfig& cfg) {
    std::vector<std::int64_t> zeros(p.clocks.size(), 0);
    const Location& init = p.locations[p.initial_index()];
    if (!eval_expr(init.invariant, init.name, p, zeros))
        throw ModelError("initial state violates the invariant of '" + init.name + "'");

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Federation> inv = invariant_sets(p);
    std::vector<Federation> not_target;
    for (std::size_t l = 0; l < p.locations.size(); ++l)
        not_target.push_back(compile_predicate(target, l, p).complement().intersect(inv[l]));

    EngineStats graph_stats;
    std::int64_t c = cfg.c.value_or(default_c(p));
    std::vector<Federation> g = max_v_geq1(p, not_target, c, cfg, &graph_stats);
    double graph_ms = detail::ms_since(t0);

    StateSets sets;
    for (std::size_t l = 0; l < p.locations.size(); ++l) {
        sets.safe.push_back(not_target[l]);
        Federation avoid_not_target =
            compile_predicate(avoid, l, p).intersect(not_target[l]);
        sets.tgt.push_back(avoid_not_target.unite(g[l]).intersect(inv[l]).reduced());
    }

    QueryOutcome out = detail::run_max_query(p, sets, cfg, false);
    out.result.probability = 1.0 - out.result.probability;
    out.result.stats.states_min = out.result.stats.states_max;
    out.result.stats.states_max = 0;
    out.result.stats.iter_maxv = graph_stats.iter_maxv;
    out.result.stats.iter_maxu1 = graph_stats.iter_maxu1;
    out.result.stats.time_graph_ms = graph_ms;
    return out;
}

inline ProbResult pmin_until(const Pta& p, const ExprPtr& avoid, const ExprPtr& target,
                             const EngineConfig& cfg) {
    return pmin_until_full(p, avoid, target, cfg).result;
}

// Threshold verdict on a computed probability.
inline bool evaluate_threshold(ProbResult& r, const Threshold& t) {
    double lambda = t.value.to_double();
    bool verdict = false;
    switch (t.op) {
        case CmpOp::Lt: verdict = r.probability < lambda; break;
        case CmpOp::Le: verdict = r.probability <= lambda; break;
        case CmpOp::Eq: verdict = r.probability == lambda; break;
        case CmpOp::Ge: verdict = r.probability >= lambda; break;
        case CmpOp::Gt: verdict = r.probability > lambda; break;
    }
    r.verdict = verdict;
    return verdict;
}

} // namespace zonecheck::backwards
