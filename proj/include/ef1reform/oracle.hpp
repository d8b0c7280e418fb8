#pragma once

#include <functional>
#include <optional>

#include "ef1reform/core.hpp"

namespace ef1reform {

// Cap on visited states for the brute-force searches. Exceeding it raises
// BudgetExceededError rather than returning a guess.
struct OracleBudget {
    long long max_states = 5'000'000;
};

// Yields every allocation with the given size vector exactly once, in
// lexicographic order of the good -> agent assignment. The visitor returns
// false to stop early.
void enumerate_allocations(const Instance& inst, const SizeVector& sv,
                           const std::function<bool(const Allocation&)>& visit,
                           const OracleBudget& budget = {});

std::vector<Allocation> collect_allocations(const Instance& inst, const SizeVector& sv,
                                            const OracleBudget& budget = {});

bool exists_ef1_bruteforce(const Instance& inst, const SizeVector& sv,
                           const OracleBudget& budget = {});

// Breadth-first search over allocations reachable by single exchanges.
// Returns the depth of the first EF1 allocation, or infinity when no EF1
// allocation with the start's size vector exists.
Count min_exchanges_bfs(const Instance& inst, const Allocation& start,
                        const OracleBudget& budget = {});

struct BfsWitness {
    Count count = Count::infinity();
    std::optional<ExchangeTrace> trace;  // present iff count is finite
};

BfsWitness min_exchanges_bfs_trace(const Instance& inst, const Allocation& start,
                                   const OracleBudget& budget = {});

// Exact minimum number of exchanges from start to target; infinity iff the
// size vectors differ.
Count exchange_distance_bfs(const Instance& inst, const Allocation& start,
                            const Allocation& target, const OracleBudget& budget = {});

struct BeneficialResult {
    bool reachable = false;
    std::optional<ExchangeTrace> trace;  // present iff reachable
};

// Can an EF1 allocation be reached using only exchanges in which both
// participants strictly gain? Memoized depth-first search; the witness trace
// is deterministic (lexicographic neighbor order).
BeneficialResult beneficial_reachable_ef1(const Instance& inst, const Allocation& start,
                                          const OracleBudget& budget = {});

}  // namespace ef1reform
