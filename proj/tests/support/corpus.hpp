#pragma once

// Shared sweep helpers for the test suites: exhaustive utility matrices,
// exhaustive allocations, and small seeded samplers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "ef1reform/core.hpp"

namespace corpus {

using ef1reform::Allocation;
using ef1reform::Instance;
using ef1reform::SizeVector;
using ef1reform::Utility;

// Every n x m utility matrix with entries in [0, max_u].
inline void for_each_matrix(int n, int m, Utility max_u,
                            const std::function<void(const Instance&)>& visit) {
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    std::function<void(int)> step = [&](int cell) {
        if (cell == n * m) {
            visit(Instance(n, m, u));
            return;
        }
        for (Utility v = 0; v <= max_u; ++v) {
            u[static_cast<size_t>(cell / m)][static_cast<size_t>(cell % m)] = v;
            step(cell + 1);
        }
    };
    step(0);
}

// Every identical-utility instance with m goods and entries in [0, max_u].
inline void for_each_identical(int n, int m, Utility max_u,
                               const std::function<void(const Instance&)>& visit) {
    std::vector<Utility> row(static_cast<size_t>(m), 0);
    std::function<void(int)> step = [&](int g) {
        if (g == m) {
            visit(Instance(n, m, std::vector<std::vector<Utility>>(static_cast<size_t>(n), row)));
            return;
        }
        for (Utility v = 0; v <= max_u; ++v) {
            row[static_cast<size_t>(g)] = v;
            step(g + 1);
        }
    };
    step(0);
}

// Every allocation of m goods to n agents (all size vectors).
inline void for_each_allocation(int n, int m,
                                const std::function<void(const Allocation&)>& visit) {
    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    std::function<void(int)> place = [&](int good) {
        if (good == m) {
            visit(Allocation(bundles));
            return;
        }
        for (int agent = 0; agent < n; ++agent) {
            bundles[static_cast<size_t>(agent)].push_back(good);
            place(good + 1);
            bundles[static_cast<size_t>(agent)].pop_back();
        }
    };
    place(0);
}

// Every allocation with the given size vector.
inline void for_each_allocation_with_sizes(const SizeVector& sv,
                                           const std::function<void(const Allocation&)>& visit) {
    const int n = static_cast<int>(sv.size());
    int m = 0;
    for (int s : sv) m += s;
    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    std::function<void(int)> place = [&](int good) {
        if (good == m) {
            visit(Allocation(bundles));
            return;
        }
        for (int agent = 0; agent < n; ++agent) {
            if (static_cast<int>(bundles[static_cast<size_t>(agent)].size()) >=
                sv[static_cast<size_t>(agent)])
                continue;
            bundles[static_cast<size_t>(agent)].push_back(good);
            place(good + 1);
            bundles[static_cast<size_t>(agent)].pop_back();
        }
    };
    place(0);
}

// Every size vector of n non-negative entries summing to m.
inline void for_each_size_vector(int n, int m,
                                 const std::function<void(const SizeVector&)>& visit) {
    SizeVector sv(static_cast<size_t>(n), 0);
    std::function<void(int, int)> fill = [&](int agent, int left) {
        if (agent == n - 1) {
            sv[static_cast<size_t>(agent)] = left;
            visit(sv);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            sv[static_cast<size_t>(agent)] = take;
            fill(agent + 1, left - take);
        }
    };
    fill(0, m);
}

// Tiny deterministic generator, independent of the library's random_instance.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 6364136223846793005ull + 1442695040888963407ull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

inline Instance random_instance_basic(std::uint64_t seed, int n, int m, Utility max_u) {
    Rng rng(seed ^ 0x5eedULL);
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    for (auto& row : u)
        for (auto& v : row) v = rng.below(static_cast<int>(max_u) + 1);
    return Instance(n, m, std::move(u));
}

inline Instance random_identical_instance(std::uint64_t seed, int n, int m, Utility max_u) {
    Rng rng(seed ^ 0x1de2ULL);
    std::vector<Utility> row(static_cast<size_t>(m), 0);
    for (auto& v : row) v = rng.below(static_cast<int>(max_u) + 1);
    return Instance(n, m, std::vector<std::vector<Utility>>(static_cast<size_t>(n), row));
}

inline Allocation random_allocation_with_sizes(std::uint64_t seed, const SizeVector& sv) {
    Rng rng(seed ^ 0xa110cULL);
    int m = 0;
    for (int s : sv) m += s;
    std::vector<int> goods(static_cast<size_t>(m));
    for (int g = 0; g < m; ++g) goods[static_cast<size_t>(g)] = g;
    for (int g = m - 1; g > 0; --g)
        std::swap(goods[static_cast<size_t>(g)], goods[static_cast<size_t>(rng.below(g + 1))]);
    std::vector<std::vector<int>> bundles(sv.size());
    int at = 0;
    for (size_t i = 0; i < sv.size(); ++i)
        for (int k = 0; k < sv[i]; ++k) bundles[i].push_back(goods[static_cast<size_t>(at++)]);
    return Allocation(std::move(bundles));
}

}  // namespace corpus
