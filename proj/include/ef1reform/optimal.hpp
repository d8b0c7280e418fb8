#pragma once

#include <optional>

#include "ef1reform/core.hpp"
#include "ef1reform/oracle.hpp"
#include "ef1reform/reformability.hpp"

namespace ef1reform {

// Agent-vertex multigraph with one directed edge per good, from its current
// holder to its holder in the target allocation. weight[i][j] counts those
// edges; in-degree equals out-degree at every vertex when the size vectors
// match, and the total weight is m.
struct ExchangeGraph {
    int num_agents = 0;
    std::vector<std::vector<int>> weight;
};

ExchangeGraph build_exchange_graph(const Allocation& start, const Allocation& target);

// A maximum-cardinality partition of the edge multiset into directed
// circuits. Self-loops are listed as single-vertex cycles; all other circuits
// are simple cycles (vertex sequences without repetition).
struct CircuitPartition {
    long long count = 0;
    std::vector<std::vector<int>> cycles;
};

CircuitPartition max_circuit_partition(const ExchangeGraph& graph);

// Exact minimum number of exchanges from start to target: m - c*, where c*
// is the maximum circuit partition of the exchange graph. Throws when the
// size vectors differ (the distance is infinite).
long long exchange_distance_exact(const Allocation& start, const Allocation& target);

// A concrete exchange sequence of exactly exchange_distance_exact(start,
// target) steps transforming start into target.
ExchangeTrace realize_exchange_plan(const Allocation& start, const Allocation& target);

// Destination counts for every (source agent, good type) of a start
// allocation, against a target TypeCountMatrix.
struct Movement {
    std::vector<std::uint32_t> types;                    // ascending
    std::vector<std::vector<std::vector<int>>> shipped;  // [agent][type index][destination]
};

struct GreedyResult {
    long long count = 0;
    ExchangeTrace trace;
};

// Two agents with identical utilities: repeatedly swap the richer agent's
// best good with the poorer agent's worst good. The step count is optimal.
GreedyResult optimal_two_identical(const Instance& inst, const Allocation& start);

// Identical binary utilities: the optimum is max{c0, c1}; each trace step
// swaps a valuable good from a currently richest agent with a non-valuable
// good from a currently poorest agent.
GreedyResult optimal_identical_binary(const Instance& inst, const Allocation& start);

struct BinaryOptimalResult {
    Count count = Count::infinity();
    std::optional<Allocation> target;  // a nearest EF1 allocation when finite
};

// Binary utilities, small n: minimum of m - c* over every EF1 equivalence
// class and every feasible movement into it.
BinaryOptimalResult optimal_binary_const(const Instance& inst, const Allocation& start,
                                         const OracleBudget& budget = {});

struct OptimalResult {
    Count count = Count::infinity();
    std::optional<ExchangeTrace> trace;  // present whenever the count is finite
};

// Dispatcher: two-identical greedy, identical-binary formula, binary
// small-n movement search, otherwise the BFS oracle.
OptimalResult optimal_exchanges(const Instance& inst, const Allocation& start,
                                const OracleBudget& budget = {});

}  // namespace ef1reform
