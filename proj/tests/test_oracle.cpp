#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ef1reform/oracle.hpp"

#include <set>

#include "support/corpus.hpp"

using namespace ef1reform;

namespace {

Instance identical(std::vector<Utility> row, int n = 2) {
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n), row);
    return Instance(n, static_cast<int>(row.size()), std::move(u));
}

long long multinomial(int m, const SizeVector& sv) {
    long long result = 1;
    int left = m;
    for (int s : sv) {
        for (int k = 1; k <= s; ++k) {
            result = result * left / k;  // binomial prefix products stay integral
            --left;
        }
    }
    return result;
}

}  // namespace

TEST_CASE("enumerate_allocations counts match multinomials") {
    {
        const Instance inst = identical({0, 0, 0}, 3);
        CHECK(collect_allocations(inst, {3, 0, 0}).size() == 1);
    }
    {
        const Instance inst = identical({0, 0, 0, 0});
        CHECK(collect_allocations(inst, {2, 2}).size() == 6);
    }
    {
        const Instance inst = identical({0, 0, 0, 0, 0, 0, 0, 0, 0}, 3);
        CHECK(collect_allocations(inst, {3, 3, 3}).size() == 1680);  // 9!/(3!)^3
    }
}

TEST_CASE("enumerate_allocations is deterministic, duplicate-free, quota-exact") {
    const Instance inst = identical({1, 2, 3, 4, 5}, 3);
    const SizeVector sv{2, 1, 2};
    const auto first = collect_allocations(inst, sv);
    const auto second = collect_allocations(inst, sv);
    CHECK(first.size() == static_cast<size_t>(multinomial(5, sv)));
    REQUIRE(first.size() == second.size());
    std::set<std::string> keys;
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i] == second[i]);
        CHECK(size_vector(first[i]) == sv);
        CHECK(keys.insert(first[i].key()).second);
    }
}

TEST_CASE("enumerate_allocations budget is a hard stop") {
    const Instance inst = identical({0, 0, 0, 0, 0, 0, 0, 0}, 4);
    OracleBudget tiny{10};
    CHECK_THROWS_AS(collect_allocations(inst, {2, 2, 2, 2}, tiny), BudgetExceededError);
}

TEST_CASE("exists_ef1_bruteforce") {
    CHECK(exists_ef1_bruteforce(identical({2, 2, 2, 2}), {2, 2}));  // balanced
    CHECK_FALSE(exists_ef1_bruteforce(identical({2, 2, 2, 2}), {1, 3}));
    CHECK(exists_ef1_bruteforce(identical({4, 3, 2, 1}), {1, 3}));
}

TEST_CASE("min_exchanges_bfs on the spec walkthroughs") {
    {
        const Instance inst = identical({3, 2, 1, 0});
        CHECK(min_exchanges_bfs(inst, Allocation({{0, 3}, {1, 2}})) == Count::finite(0));
    }
    {
        const Instance inst = identical({5, 4, 3, 2, 1, 0});
        CHECK(min_exchanges_bfs(inst, Allocation({{0, 1, 2}, {3, 4, 5}})) == Count::finite(1));
    }
    {
        const Instance inst = identical({2, 2, 2, 2});
        CHECK(min_exchanges_bfs(inst, Allocation({{0}, {1, 2, 3}})) == Count::infinity());
    }
}

TEST_CASE("min_exchanges_bfs trace replays to EF1 at the claimed depth") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst = corpus::random_instance_basic(seed, 3, 6, 3);
        const Allocation start =
            corpus::random_allocation_with_sizes(seed, {2, 2, 2});
        const BfsWitness w = min_exchanges_bfs_trace(inst, start);
        REQUIRE(w.count.is_finite());  // balanced start is always reformable
        REQUIRE(w.trace.has_value());
        CHECK(static_cast<long long>(w.trace->size()) == w.count.value());
        CHECK(is_ef1(inst, apply_trace(start, *w.trace)));
        if (w.count.value() > 0) CHECK_FALSE(is_ef1(inst, start));
    }
}

TEST_CASE("min_exchanges_bfs is infinite exactly when no EF1 allocation exists") {
    corpus::for_each_identical(2, 4, 2, [&](const Instance& inst) {
        corpus::for_each_allocation(2, 4, [&](const Allocation& start) {
            const bool exists = exists_ef1_bruteforce(inst, size_vector(start));
            CHECK(min_exchanges_bfs(inst, start).is_infinite() == !exists);
        });
    });
    // seeded sweep at the full stated range, n <= 3 and m <= 7
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 2);
        const int m = 4 + static_cast<int>(seed % 4);
        const Instance inst = corpus::random_instance_basic(seed * 241 + 9, n, m, 2);
        SizeVector sv(static_cast<size_t>(n), 0);
        corpus::Rng rng(seed * 11 + 1);
        for (int g = 0; g < m; ++g) sv[static_cast<size_t>(rng.below(n))]++;
        const Allocation start = corpus::random_allocation_with_sizes(seed, sv);
        const bool exists = exists_ef1_bruteforce(inst, sv);
        CHECK(min_exchanges_bfs(inst, start).is_infinite() == !exists);
    }
}

TEST_CASE("exchange_distance_bfs basics") {
    const Instance inst = identical({1, 2, 3}, 3);
    const Allocation a({{0}, {1}, {2}});
    CHECK(exchange_distance_bfs(inst, a, a) == Count::finite(0));
    CHECK(exchange_distance_bfs(inst, a, Allocation({{0, 1}, {}, {2}})) == Count::infinity());
    // three-agent cyclic displacement needs two exchanges
    CHECK(exchange_distance_bfs(inst, a, Allocation({{1}, {2}, {0}})) == Count::finite(2));
}

TEST_CASE("exchange_distance_bfs is symmetric and satisfies the triangle inequality") {
    const Instance inst = corpus::random_instance_basic(7, 3, 5, 3);
    const SizeVector sv{2, 2, 1};
    std::vector<Allocation> sample;
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        sample.push_back(corpus::random_allocation_with_sizes(seed * 31 + 5, sv));
    for (const auto& a : sample)
        for (const auto& b : sample) {
            const Count ab = exchange_distance_bfs(inst, a, b);
            CHECK(ab == exchange_distance_bfs(inst, b, a));
            for (const auto& c : sample) {
                const Count bc = exchange_distance_bfs(inst, b, c);
                const Count ac = exchange_distance_bfs(inst, a, c);
                REQUIRE(ab.is_finite());
                REQUIRE(bc.is_finite());
                REQUIRE(ac.is_finite());
                CHECK(ac.value() <= ab.value() + bc.value());
            }
        }
}

TEST_CASE("beneficial_reachable_ef1 single crossed swap") {
    {
        // Singleton bundles are EF1 outright: reachable with an empty trace.
        const Instance inst(2, 2, {{0, 1}, {1, 0}});
        const auto result = beneficial_reachable_ef1(inst, Allocation({{0}, {1}}));
        CHECK(result.reachable);
        REQUIRE(result.trace.has_value());
        CHECK(result.trace->empty());
    }
    {
        const Instance inst(2, 4, {{0, 0, 1, 1}, {1, 1, 0, 0}});
        const auto result = beneficial_reachable_ef1(inst, Allocation({{0, 1}, {2, 3}}));
        CHECK(result.reachable);
        REQUIRE(result.trace.has_value());
        CHECK(result.trace->size() == 1);
    }
}

TEST_CASE("beneficial_reachable_ef1 finds nothing under identical utilities") {
    const Instance inst = identical({2, 2, 2, 2});
    const auto result = beneficial_reachable_ef1(inst, Allocation({{0}, {1, 2, 3}}));
    CHECK_FALSE(result.reachable);
    CHECK_FALSE(result.trace.has_value());
}

TEST_CASE("beneficial traces replay to EF1 and every step strictly benefits both sides") {
    int reached = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Instance inst = corpus::random_instance_basic(seed + 1000, 3, 6, 2);
        const Allocation start = corpus::random_allocation_with_sizes(seed, {2, 2, 2});
        const auto result = beneficial_reachable_ef1(inst, start);
        if (!result.reachable) continue;
        ++reached;
        Allocation current = start;
        for (const auto& step : *result.trace) {
            CHECK(inst.u(step.agent_a, step.good_b) > inst.u(step.agent_a, step.good_a));
            CHECK(inst.u(step.agent_b, step.good_a) > inst.u(step.agent_b, step.good_b));
            current = apply_exchange(current, step);
        }
        CHECK(is_ef1(inst, current));
        const int m = inst.num_goods;
        CHECK(static_cast<int>(result.trace->size()) <= m * (m - 1) / 2);
    }
    CHECK(reached > 20);
}

TEST_CASE("binary beneficial traces touch each good at most once") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Instance inst = corpus::random_instance_basic(seed + 77, 3, 6, 1);
        const Allocation start = corpus::random_allocation_with_sizes(seed, {2, 2, 2});
        const auto result = beneficial_reachable_ef1(inst, start);
        if (!result.reachable) continue;
        std::set<int> touched;
        for (const auto& step : *result.trace) {
            CHECK(touched.insert(step.good_a).second);
            CHECK(touched.insert(step.good_b).second);
        }
        CHECK(static_cast<int>(result.trace->size()) <= inst.num_goods / 2);
    }
}
