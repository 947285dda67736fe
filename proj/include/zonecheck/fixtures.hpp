// Built-in benchmark models. The example protocol automaton is exact; the
// CSMA/CD and FireWire automata are second-generation recreations rebuilt
// from published descriptions of those protocols, with constants scaled so
// a full sweep stays desk-sized. Their absolute state counts and iteration
// numbers are indicative only; validation relies on the cross-engine and
// property-based checks instead.

#pragma once

#include <string>
#include <vector>

#include "zonecheck/model.hpp"

namespace zonecheck::fixtures {

namespace detail {

inline Location loc(std::string name, const std::string& invariant) {
    return Location{std::move(name), parse_expr(invariant)};
}

inline Edge edge(std::string source, std::string action, const std::string& guard,
                 std::vector<Branch> branches) {
    return Edge{std::move(source), std::move(action), parse_expr(guard), std::move(branches)};
}

inline Branch branch(const std::string& prob, std::vector<std::string> resets, std::string target) {
    return Branch{*Rational::parse(prob), std::move(resets), std::move(target)};
}

} // namespace detail

// The small communication protocol with message loss: a send attempt
// succeeds with probability 0.9 and is lost otherwise; lost messages are
// retried once the retry timer expires, and a timeout leads to failure.
inline Pta example_pta() {
    using namespace detail;
    Pta p;
    p.clocks = {"x", "y"};
    p.initial = "init";
    p.locations = {
        loc("init", "x <= 2 & y <= 24"),
        loc("lost", "x <= 8"),
        loc("fail", "true"),
        loc("done", "true"),
    };
    p.edges = {
        edge("init", "send", "x >= 1",
             {branch("0.9", {}, "done"), branch("0.1", {}, "lost")}),
        edge("init", "t_out", "y >= 18", {branch("1", {}, "fail")}),
        edge("lost", "retry", "x = 8", {branch("1", {"x"}, "init")}),
        edge("done", "d", "true", {branch("1", {}, "done")}),
    };
    return p;
}

// CSMA/CD-style sender: a transmission takes LAMBDA time units; during the
// first SIGMA units a collision may occur, after which the station backs off
// for a short or long slot (fair coin) and retries. The backoff counter is
// unfolded into locations; after bcmax collisions the medium is considered
// free and the transmission completes. Clock y times transmissions, clock x
// times backoff slots.
inline Pta csma(int bcmax) {
    using namespace detail;
    if (bcmax != 1 && bcmax != 2)
        throw ModelError("csma fixture supports bcmax 1 or 2");
    constexpr std::int64_t kLambda = 100; // transmission time
    constexpr std::int64_t kSigma = 4;    // collision window
    const std::string lambda = std::to_string(kLambda);
    const std::string sigma = std::to_string(kSigma);
    const std::string slot_short = std::to_string(2 * kSigma);
    const std::string slot_long = std::to_string(4 * kSigma);

    Pta p;
    p.clocks = {"x", "y"};
    p.initial = "trans1";
    for (int k = 1; k <= bcmax + 1; ++k) {
        std::string t = "trans" + std::to_string(k);
        p.locations.push_back(loc(t, "y <= " + lambda));
        p.edges.push_back(edge(t, "send" + std::to_string(k), "y = " + lambda,
                               {branch("1", {}, "done")}));
        if (k <= bcmax) {
            std::string ws = "wait" + std::to_string(k) + "s";
            std::string wl = "wait" + std::to_string(k) + "l";
            std::string next = "trans" + std::to_string(k + 1);
            p.locations.push_back(loc(ws, "x <= " + slot_short));
            p.locations.push_back(loc(wl, "x <= " + slot_long));
            p.edges.push_back(edge(t, "collide" + std::to_string(k), "y <= " + sigma,
                                   {branch("1/2", {"x"}, ws), branch("1/2", {"x"}, wl)}));
            p.edges.push_back(edge(ws, "resume" + std::to_string(k) + "s", "x = " + slot_short,
                                   {branch("1", {"y"}, next)}));
            p.edges.push_back(edge(wl, "resume" + std::to_string(k) + "l", "x = " + slot_long,
                                   {branch("1", {"y"}, next)}));
        }
    }
    p.locations.push_back(loc("done", "true"));
    p.edges.push_back(edge("done", "d", "true", {branch("1", {}, "done")}));
    return p;
}

// FireWire-style root contention: both nodes flip a coin each round; equal
// coins force another round after the full wire delay, different coins lead
// to a leader being elected after a nondeterministic settle time.
inline Pta firewire() {
    using namespace detail;
    Pta p;
    p.clocks = {"x"};
    p.initial = "contend";
    p.locations = {
        loc("contend", "x <= 5"),
        loc("retry", "x <= 167"),
        loc("elect", "x <= 85"),
        loc("done", "true"),
    };
    p.edges = {
        edge("contend", "decide", "true",
             {branch("1/2", {"x"}, "retry"), branch("1/2", {"x"}, "elect")}),
        edge("retry", "back", "x = 167", {branch("1", {"x"}, "contend")}),
        edge("elect", "win", "x >= 76", {branch("1", {}, "done")}),
        edge("done", "d", "true", {branch("1", {}, "done")}),
    };
    return p;
}

// Named fixture lookup used by the CLI ("fixture:<name>" model references).
inline std::optional<Pta> by_name(const std::string& name) {
    if (name == "example") return example_pta();
    if (name == "csma1") return csma(1);
    if (name == "csma2") return csma(2);
    if (name == "firewire") return firewire();
    return std::nullopt;
}

inline std::vector<std::string> names() { return {"example", "csma1", "csma2", "firewire"}; }

} // namespace zonecheck::fixtures
