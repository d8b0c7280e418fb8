#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

#include "ef1reform/core.hpp"

namespace ef1reform {

// Equal-cardinality partition: split 2q positive integers summing to 2K'
// into two halves of q elements and sum K' each.
struct PartitionEq {
    int q = 0;
    std::vector<long long> values;  // 2q entries

    long long half_sum() const;  // K'
};

// Split pq integers, each in (K, 2K] and summing to p(q+1)K, into p parts of
// cardinality q and sum (q+1)K each.
struct BalancedMultiPartition {
    int p = 0;
    int q = 0;
    long long K = 0;
    std::vector<long long> values;  // pq entries
};

// Split 3q integers summing to qK, each strictly between K/4 and K/2, into q
// triples of sum K.
struct ThreePartition {
    int q = 0;
    long long K = 0;
    std::vector<long long> values;  // 3q entries
};

struct GraphColoring {
    int vertices = 0;
    int colors = 0;  // at least 3
    std::vector<std::pair<int, int>> edges;
};

// Exact cover of {0..3q-1} by q of the given 3-element sets.
struct ExactCover3 {
    int q = 0;
    std::vector<std::array<int, 3>> sets;
};

// Choose l of the given subsets of {0..q-1} whose union has at most k
// elements.
struct MinKCoverage {
    int k = 0;
    int l = 0;
    int q = 0;
    std::vector<std::vector<int>> sets;
};

using SourceProblem = std::variant<PartitionEq, BalancedMultiPartition, ThreePartition,
                                   GraphColoring, ExactCover3, MinKCoverage>;

// Structural validation per tag; throws std::invalid_argument on violations.
void validate_source(const SourceProblem& source);
std::string source_tag(const SourceProblem& source);

enum class ReductionTarget {
    ExistTwoGeneral,       // two agents, general utilities
    ExistConstIdentical,   // three agents, identical utilities
    ExistGeneralIdentical, // many agents, identical utilities
    ExistGeneralBinary,    // many agents, binary utilities (coloring)
    OptimalTwoGeneral,     // two agents, balanced start, exchange budget
    OptimalConstIdentical, // p+1 agents, identical, balanced start
    OptimalGeneralBinary,  // 3q+1 agents, binary, balanced start
    BeneficialBinary,      // beneficial-exchange reachability
};

std::string reduction_target_name(ReductionTarget target);
std::optional<ReductionTarget> reduction_target_from_name(const std::string& name);

struct ReducedInstance {
    Instance instance;
    SizeVector size_vector;
    std::optional<Allocation> initial_allocation;
    std::optional<long long> budget_k;  // set for the exchange-budget targets
};

// Pads an equal-cardinality partition instance with p-2 copies of K' and
// zeros, then shifts every value by K+1 with K = K'+q. Answer-preserving.
// Rejects sources with an element above K' (trivially infeasible).
BalancedMultiPartition gen_balanced_multi_partition(const PartitionEq& partition, int p);

ReducedInstance reduce(const SourceProblem& source, ReductionTarget target);

// Uniform utilities in [0, max_u], constrained by the class; deterministic
// for a fixed seed.
Instance random_instance(std::uint64_t seed, int n, int m, UtilityClass cls, Utility max_u);

// Exhaustive answer for any source problem; fixture-sized inputs only.
bool solve_source_bruteforce(const SourceProblem& source);

}  // namespace ef1reform
