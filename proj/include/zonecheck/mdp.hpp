// Finite MDPs with exact-rational distributions, reachability value
// iteration and the qualitative prob-0 / prob-1 graph analyses. Distributions
// are validated to sum to one exactly; floating-point copies are made once
// the MDP is frozen.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "zonecheck/error.hpp"
#include "zonecheck/rational.hpp"

namespace zonecheck::mdp {

struct Transition {
    std::size_t target;
    Rational prob;
    double weight = 0.0;
};

struct Action {
    int label = -1; // caller-defined tag (edge index, delay marker, ...)
    std::vector<Transition> transitions;
};

struct ValueIterationResult {
    std::vector<double> values;
    std::uint64_t sweeps = 0;
};

class Mdp {
public:
    explicit Mdp(std::size_t states) : actions_(states), target_(states, false) {}

    std::size_t size() const { return actions_.size(); }

    void set_target(std::size_t s) { target_[s] = true; }
    bool is_target(std::size_t s) const { return target_[s]; }

    void add_action(std::size_t s, int label, std::vector<std::pair<std::size_t, Rational>> dist) {
        if (frozen_) throw std::logic_error("mdp is frozen");
        Action a;
        a.label = label;
        Rational sum(0);
        for (auto& [t, p] : dist) {
            if (t >= size()) throw std::invalid_argument("transition target out of range");
            if (!(p > Rational(0))) throw std::invalid_argument("transition probability must be positive");
            sum += p;
            a.transitions.push_back({t, p});
        }
        if (sum != Rational(1))
            throw std::invalid_argument("distribution sums to " + sum.to_string() + ", not 1");
        actions_[s].push_back(std::move(a));
    }

    // Adds absorbing self-loops where needed and freezes the MDP.
    void finalize() {
        if (frozen_) return;
        for (std::size_t s = 0; s < size(); ++s)
            if (actions_[s].empty())
                actions_[s].push_back(Action{-1, {Transition{s, Rational(1)}}});
        for (auto& as : actions_)
            for (auto& a : as)
                for (auto& t : a.transitions)
                    t.weight = t.prob.to_double();
        preds_.assign(size(), {});
        for (std::size_t s = 0; s < size(); ++s)
            for (const auto& a : actions_[s])
                for (const auto& t : a.transitions)
                    if (preds_[t.target].empty() || preds_[t.target].back() != s)
                        preds_[t.target].push_back(s);
        frozen_ = true;
    }

    const std::vector<Action>& actions(std::size_t s) const { return actions_[s]; }

    std::size_t transition_count() const {
        std::size_t n = 0;
        for (const auto& as : actions_)
            for (const auto& a : as) n += a.transitions.size();
        return n;
    }

    // States that cannot reach the target under any scheduler.
    std::vector<bool> prob0_max() const {
        require_frozen();
        return complement(exists_reach(target_));
    }

    // States with maximal reachability probability exactly 1: greatest
    // fixpoint restricting to states that can stay inside the candidate set
    // while some branch makes progress towards the target.
    std::vector<bool> prob1_max(std::size_t* iterations = nullptr) const {
        require_frozen();
        std::vector<bool> u(size(), true);
        std::size_t iters = 0;
        while (true) {
            ++iters;
            std::vector<bool> r = target_;
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t s = 0; s < size(); ++s) {
                    if (r[s]) continue;
                    for (const auto& a : actions_[s]) {
                        bool stays = true, progresses = false;
                        for (const auto& t : a.transitions) {
                            if (!u[t.target]) { stays = false; break; }
                            if (r[t.target]) progresses = true;
                        }
                        if (stays && progresses) { r[s] = true; grew = true; break; }
                    }
                }
            }
            if (r == u) break;
            u = std::move(r);
        }
        if (iterations) *iterations = iters;
        return u;
    }

    // States from which some scheduler avoids the target entirely.
    std::vector<bool> prob0_min() const {
        require_frozen();
        std::vector<bool> avoid(size());
        for (std::size_t s = 0; s < size(); ++s) avoid[s] = !target_[s];
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (std::size_t s = 0; s < size(); ++s) {
                if (!avoid[s]) continue;
                bool ok = false;
                for (const auto& a : actions_[s]) {
                    bool all_avoid = true;
                    for (const auto& t : a.transitions)
                        if (!avoid[t.target]) { all_avoid = false; break; }
                    if (all_avoid) { ok = true; break; }
                }
                if (!ok) { avoid[s] = false; shrunk = true; }
            }
        }
        return avoid;
    }

    // States with minimal reachability probability exactly 1: the adversary
    // cannot steer to an avoiding state before the target is reached.
    std::vector<bool> prob1_min() const {
        require_frozen();
        std::vector<bool> avoid = prob0_min();
        // backward reachability of `avoid` over non-target states
        std::vector<bool> can_reach_avoid = avoid;
        std::vector<std::size_t> queue;
        for (std::size_t s = 0; s < size(); ++s)
            if (avoid[s]) queue.push_back(s);
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            for (std::size_t p : preds_[v]) {
                if (can_reach_avoid[p] || target_[p]) continue;
                bool has_edge = false;
                for (const auto& a : actions_[p]) {
                    for (const auto& t : a.transitions)
                        if (t.target == v) { has_edge = true; break; }
                    if (has_edge) break;
                }
                if (has_edge) {
                    can_reach_avoid[p] = true;
                    queue.push_back(p);
                }
            }
        }
        return complement(can_reach_avoid);
    }

    // Gauss-Seidel value iteration from below with exact qualitative
    // precomputation: prob-1 states are pinned to 1, prob-0 states to 0.
    ValueIterationResult value_iteration(bool maximize, double epsilon, std::uint64_t cap) const {
        require_frozen();
        std::vector<bool> one = maximize ? prob1_max() : prob1_min();
        std::vector<bool> zero = maximize ? prob0_max() : prob0_min();
        ValueIterationResult out;
        out.values.assign(size(), 0.0);
        for (std::size_t s = 0; s < size(); ++s)
            if (one[s]) out.values[s] = 1.0;

        std::vector<std::size_t> active;
        for (std::size_t s = 0; s < size(); ++s)
            if (!one[s] && !zero[s]) active.push_back(s);
        if (active.empty()) return out;

        for (out.sweeps = 1; out.sweeps <= cap; ++out.sweeps) {
            double residual = 0.0;
            for (std::size_t s : active) {
                double best = maximize ? 0.0 : 2.0;
                for (const auto& a : actions_[s]) {
                    double v = 0.0;
                    for (const auto& t : a.transitions) v += t.weight * out.values[t.target];
                    best = maximize ? std::max(best, v) : std::min(best, v);
                }
                residual = std::max(residual, best - out.values[s]);
                out.values[s] = best;
            }
            if (residual <= epsilon) return out;
        }
        throw IterationCapExceeded("value iteration did not converge within " +
                                   std::to_string(cap) + " sweeps");
    }

    // Plain-text transition list for debugging.
    std::string export_text() const {
        std::string out;
        for (std::size_t s = 0; s < size(); ++s) {
            for (std::size_t ai = 0; ai < actions_[s].size(); ++ai) {
                for (const auto& t : actions_[s][ai].transitions) {
                    out += std::to_string(s) + " " + std::to_string(ai) + " " +
                           t.prob.to_string() + " " + std::to_string(t.target);
                    if (target_[t.target]) out += " target";
                    out += "\n";
                }
            }
        }
        return out;
    }

private:
    void require_frozen() const {
        if (!frozen_) throw std::logic_error("mdp must be finalized first");
    }

    static std::vector<bool> complement(std::vector<bool> v) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = !v[i];
        return v;
    }

    // Backward reachability: states with some path into `from`.
    std::vector<bool> exists_reach(const std::vector<bool>& from) const {
        std::vector<bool> seen = from;
        std::vector<std::size_t> queue;
        for (std::size_t s = 0; s < size(); ++s)
            if (seen[s]) queue.push_back(s);
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            for (std::size_t p : preds_[v]) {
                if (!seen[p]) {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        return seen;
    }

    std::vector<std::vector<Action>> actions_;
    std::vector<bool> target_;
    std::vector<std::vector<std::size_t>> preds_;
    bool frozen_ = false;
};

} // namespace zonecheck::mdp
