#pragma once

#include <cstdint>
#include <optional>

namespace zonecheck {

// Mirrors the benchmark table columns: states_max / states_min are the
// symbolic state counts of the maximum/minimum phase, iter_maxv the outer
// divergence-fixpoint rounds, iter_maxu1 the accumulated qualitative prob-1
// iterations, plus value-iteration sweeps and per-phase wall times.
struct EngineStats {
    std::size_t seeds = 0;
    std::size_t states_max = 0;
    std::size_t states_min = 0;
    std::size_t mdp_transitions = 0;
    std::size_t iter_maxv = 0;
    std::size_t iter_maxu1 = 0;
    std::uint64_t vi_sweeps = 0;
    std::size_t digital_states = 0;
    double time_graph_ms = 0.0;
    double time_explore_ms = 0.0;
    double time_vi_ms = 0.0;
};

struct ProbResult {
    double probability = 0.0;
    std::optional<bool> verdict; // threshold comparison outcome, when requested
    EngineStats stats;
};

} // namespace zonecheck
