#pragma once

// Source-problem fixtures shared by the generators tests and the acceptance
// runner. Answers are stated next to each fixture and re-derived by
// solve_source_bruteforce wherever they are used.

#include "ef1reform/generators.hpp"

namespace fixtures {

using namespace ef1reform;

struct SourceFixture {
    SourceProblem source;
    bool answer;
};

// p = 2, q = 2, K = 6; values in (6, 12] summing to 36; a yes-instance splits
// into two pairs of sum 18.
inline std::vector<SourceFixture> balanced_multi_partition() {
    return {
        {BalancedMultiPartition{2, 2, 6, {8, 10, 9, 9}}, true},
        {BalancedMultiPartition{2, 2, 6, {9, 9, 9, 9}}, true},
        {BalancedMultiPartition{2, 2, 6, {7, 7, 10, 12}}, false},
        {BalancedMultiPartition{2, 2, 6, {8, 8, 9, 11}}, false},
    };
}

inline std::vector<SourceFixture> three_partition() {
    return {
        {ThreePartition{2, 18, {5, 6, 7, 5, 6, 7}}, true},
        {ThreePartition{2, 14, {4, 4, 6, 6, 4, 4}}, true},
        {ThreePartition{2, 18, {5, 5, 5, 7, 7, 7}}, false},
        {ThreePartition{2, 22, {6, 6, 6, 8, 9, 9}}, false},
    };
}

inline std::vector<SourceFixture> graph_coloring() {
    return {
        // triangle, 3-colorable
        {GraphColoring{3, 3, {{0, 1}, {1, 2}, {0, 2}}}, true},
        // single edge
        {GraphColoring{2, 3, {{0, 1}}}, true},
        // K4 needs four colors
        {GraphColoring{4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}, false},
        // K4 plus an isolated vertex
        {GraphColoring{5, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}, false},
    };
}

inline std::vector<SourceFixture> exact_cover() {
    return {
        {ExactCover3{1, {{{0, 1, 2}}, {{0, 1, 2}}}}, true},
        {ExactCover3{2, {{{0, 1, 2}}, {{3, 4, 5}}, {{0, 1, 2}}, {{3, 4, 5}}}}, true},
        // every set contains element 2: no two sets are disjoint
        {ExactCover3{2, {{{2, 0, 1}}, {{2, 0, 3}}, {{2, 1, 4}}, {{2, 3, 5}}, {{2, 4, 5}}}}, false},
        // every set contains element 0
        {ExactCover3{2, {{{0, 1, 2}}, {{0, 3, 4}}, {{0, 5, 1}}, {{0, 2, 3}}, {{0, 4, 5}}}}, false},
    };
}

inline std::vector<SourceFixture> min_k_coverage() {
    return {
        {MinKCoverage{1, 1, 2, {{0}, {1}}}, true},
        {MinKCoverage{1, 2, 2, {{0}, {1}}}, false},
        {MinKCoverage{2, 2, 3, {{0, 1}, {1, 2}, {0, 2}}}, false},
        {MinKCoverage{2, 2, 3, {{0}, {0, 1}, {2}}}, true},
        {MinKCoverage{2, 3, 2, {{0}, {0}, {1}}}, true},
    };
}

inline std::vector<SourceFixture> partition_eq() {
    return {
        {PartitionEq{2, {1, 3, 2, 2}}, true},
        {PartitionEq{2, {2, 2, 2, 2}}, true},
        {PartitionEq{2, {1, 1, 2, 4}}, false},
        {PartitionEq{3, {1, 1, 1, 1, 1, 5}}, false},
    };
}

}  // namespace fixtures
