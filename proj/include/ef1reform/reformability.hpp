#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "ef1reform/core.hpp"
#include "ef1reform/oracle.hpp"

namespace ef1reform {

// Equivalence class of allocations under binary utilities: for each good type
// (the n-bit vector of per-agent valuations, encoded with agent i at bit i),
// the number of goods of that type held by each agent.
struct TypeCountMatrix {
    std::map<std::uint32_t, std::vector<int>> counts;

    friend bool operator==(const TypeCountMatrix& a, const TypeCountMatrix& b) {
        return a.counts == b.counts;
    }
    friend bool operator<(const TypeCountMatrix& a, const TypeCountMatrix& b) {
        return a.counts < b.counts;
    }
};

// Bit-vector type of one good (binary utilities, at most 30 agents).
std::uint32_t good_type_bits(const Instance& inst, int good);

// Does an EF1 allocation with the given size vector exist? Dispatches to the
// cheapest applicable method; every route agrees with exists_ef1_bruteforce.
bool reformable(const Instance& inst, const SizeVector& sv, const OracleBudget& budget = {});

// Two agents, identical utilities: give the smaller bundle the top goods and
// check that single directed EF1 condition.
bool reformable_two_identical(const Instance& inst, const SizeVector& sv);

// Integer-utility dynamic program over reachable (bundle value, best good,
// bundle size) states; intended for a small constant number of agents.
bool reformable_dp(const Instance& inst, const SizeVector& sv, const OracleBudget& budget = {});

// Binary utilities: yields every EF1 equivalence class with the given size
// vector, types ascending as bit-integers, per-type compositions in
// lexicographic order. The visitor returns false to stop early.
void enumerate_ef1_classes(const Instance& inst, const SizeVector& sv,
                           const std::function<bool(const TypeCountMatrix&)>& visit);

std::vector<TypeCountMatrix> collect_ef1_classes(const Instance& inst, const SizeVector& sv);

// Binary utilities, small n: true iff some EF1 equivalence class exists.
bool reformable_binary_const(const Instance& inst, const SizeVector& sv);

// Identical binary utilities: valuable-good count against the threshold
// s_0 * n + n - n_0.
bool reformable_identical_binary(const Instance& inst, const SizeVector& sv);

}  // namespace ef1reform
