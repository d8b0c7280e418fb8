#include "ef1reform/worst_case.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ef1reform/optimal.hpp"

namespace ef1reform {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long upper_bound_formula(int n, long long s) {
    if (n < 2 || s < 1) throw std::invalid_argument("upper_bound_formula: need n >= 2, s >= 1");
    const long long r = s % n;
    if (n == 2) {
        return (s - r) / 2;
    }
    long long twice = s * (n - 1);
    if (r != 0) twice += r * (n - 3);
    if (twice % 2 != 0) throw std::logic_error("upper_bound_formula: non-integral bound");
    return twice / 2 + (r != 0 ? 1 : 0);
}

std::pair<Instance, Allocation> lower_bound_instance(int n, int s) {
    if (n < 2 || s < 1) throw std::invalid_argument("lower_bound_instance: need n >= 2, s >= 1");
    const int m = n * s;
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 1));
    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < s; ++j) {
            const int g = i * s + j;
            u[static_cast<size_t>(i)][static_cast<size_t>(g)] = 0;  // own goods are worthless
            bundles[static_cast<size_t>(i)].push_back(g);
        }
    return {Instance(n, m, std::move(u)), Allocation(std::move(bundles))};
}

namespace {

int balanced_bundle_size(const Allocation& start) {
    const SizeVector sv = size_vector(start);
    for (int s : sv)
        if (s != sv[0])
            throw std::invalid_argument("expected an allocation with equal bundle sizes");
    return sv.empty() ? 0 : sv[0];
}

}  // namespace

CategoryPlan make_category_plan(const Allocation& start) {
    const int n = start.num_bundles();
    const int s = balanced_bundle_size(start);
    const int q = s / n;
    const int r = s - q * n;

    CategoryPlan plan;
    std::vector<std::vector<int>> leftovers(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> category(start.bundles[i].begin(), start.bundles[i].begin() + q * n);
        leftovers[static_cast<size_t>(i)].assign(start.bundles[i].begin() + q * n,
                                                 start.bundles[i].end());
        plan.categories.push_back(std::move(category));
    }
    // Mixed categories: repeatedly the smallest-index agent with an
    // unselected good feeds the smallest unfinished category.
    std::vector<std::vector<int>> mixed(static_cast<size_t>(r));
    size_t cursor_agent = 0;
    for (int w = 0; w < r; ++w) {
        while (static_cast<int>(mixed[static_cast<size_t>(w)].size()) < n) {
            while (leftovers[cursor_agent].empty()) ++cursor_agent;
            mixed[static_cast<size_t>(w)].push_back(leftovers[cursor_agent].front());
            leftovers[cursor_agent].erase(leftovers[cursor_agent].begin());
        }
    }
    for (auto& d : mixed) plan.categories.push_back(std::move(d));
    return plan;
}

namespace {

// Returns some directed cycle of `envies` as a vertex sequence, or empty.
// Deterministic: DFS from the lowest vertex, neighbors ascending.
std::vector<int> find_envy_cycle(const std::vector<std::vector<char>>& envies) {
    const int n = static_cast<int>(envies.size());
    std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> stack;
    std::vector<int> cycle;

    std::function<bool(int)> dfs = [&](int v) -> bool {
        state[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
        for (int w = 0; w < n; ++w) {
            if (!envies[static_cast<size_t>(v)][static_cast<size_t>(w)]) continue;
            if (state[static_cast<size_t>(w)] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[static_cast<size_t>(w)] == 0 && dfs(w)) return true;
        }
        stack.pop_back();
        state[static_cast<size_t>(v)] = 2;
        return false;
    };

    for (int v = 0; v < n; ++v)
        if (state[static_cast<size_t>(v)] == 0 && dfs(v)) return cycle;
    return {};
}

std::vector<std::vector<char>> envy_edges(const Instance& inst,
                                          const std::vector<std::vector<int>>& bundles) {
    const int n = inst.num_agents;
    std::vector<std::vector<char>> envies(static_cast<size_t>(n),
                                          std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const Utility own = inst.bundle_utility(i, bundles[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j)
            if (i != j && own < inst.bundle_utility(i, bundles[static_cast<size_t>(j)]))
                envies[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    }
    return envies;
}

}  // namespace

Allocation constrained_round_robin(const Instance& inst, const CategoryPlan& plan) {
    const int n = inst.num_agents;
    {
        std::vector<char> seen(static_cast<size_t>(inst.num_goods), 0);
        int total = 0;
        for (const auto& category : plan.categories) {
            if (static_cast<int>(category.size()) % n != 0)
                throw std::invalid_argument(
                    "constrained_round_robin: category size not divisible by the agent count");
            for (int g : category) {
                if (g < 0 || g >= inst.num_goods || seen[static_cast<size_t>(g)]++)
                    throw std::invalid_argument(
                        "constrained_round_robin: categories must partition the goods");
                ++total;
            }
        }
        if (total != inst.num_goods)
            throw std::invalid_argument(
                "constrained_round_robin: categories must partition the goods");
    }

    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    for (const auto& category : plan.categories) {
        // Rotate bundles along envy cycles until the envy digraph is acyclic.
        // Every rotation strictly raises each member's own-bundle utility.
        for (;;) {
            const auto envies = envy_edges(inst, bundles);
            const std::vector<int> cycle = find_envy_cycle(envies);
            if (cycle.empty()) break;
            std::vector<int> first = bundles[static_cast<size_t>(cycle[0])];
            for (size_t t = 0; t + 1 < cycle.size(); ++t)
                bundles[static_cast<size_t>(cycle[t])] =
                    bundles[static_cast<size_t>(cycle[t + 1])];
            bundles[static_cast<size_t>(cycle.back())] = std::move(first);
        }

        // Topological picking order: enviers precede the envied, ties by index.
        const auto envies = envy_edges(inst, bundles);
        std::vector<int> indegree(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (envies[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    ++indegree[static_cast<size_t>(j)];
        std::vector<int> order;
        std::vector<char> placed(static_cast<size_t>(n), 0);
        while (static_cast<int>(order.size()) < n) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!placed[static_cast<size_t>(v)] && indegree[static_cast<size_t>(v)] == 0) {
                    pick = v;
                    break;
                }
            if (pick < 0) throw std::logic_error("constrained_round_robin: envy digraph not acyclic");
            placed[static_cast<size_t>(pick)] = 1;
            order.push_back(pick);
            for (int w = 0; w < n; ++w)
                if (envies[static_cast<size_t>(pick)][static_cast<size_t>(w)])
                    --indegree[static_cast<size_t>(w)];
        }

        std::vector<int> remaining = category;
        const int rounds = static_cast<int>(category.size()) / n;
        for (int round = 0; round < rounds; ++round)
            for (int agent : order) {
                size_t best = 0;
                for (size_t k = 1; k < remaining.size(); ++k)
                    if (inst.u(agent, remaining[k]) > inst.u(agent, remaining[best])) best = k;
                bundles[static_cast<size_t>(agent)].push_back(remaining[best]);
                remaining.erase(remaining.begin() + static_cast<long>(best));
            }
    }
    return Allocation(std::move(bundles));
}

ConstructResult construct_ef1_within_bound(const Instance& inst, const Allocation& start) {
    start.validate_for(inst);
    const int n = inst.num_agents;
    balanced_bundle_size(start);  // rejects starts that are not s-balanced

    Allocation target;
    if (n == 2) {
        // Each agent's start bundle is re-dealt round-robin, its owner first.
        std::vector<std::vector<int>> bundles(2);
        for (int phase = 0; phase < 2; ++phase) {
            std::vector<int> remaining = start.bundles[phase];
            int turn = phase;
            while (!remaining.empty()) {
                size_t best = 0;
                for (size_t k = 1; k < remaining.size(); ++k)
                    if (inst.u(turn, remaining[k]) > inst.u(turn, remaining[best])) best = k;
                bundles[static_cast<size_t>(turn)].push_back(remaining[best]);
                remaining.erase(remaining.begin() + static_cast<long>(best));
                turn = 1 - turn;
            }
        }
        target = Allocation(std::move(bundles));
    } else {
        target = constrained_round_robin(inst, make_category_plan(start));
    }

    ConstructResult result{std::move(target), 0};
    result.exchanges = exchange_distance_exact(start, result.target);
    return result;
}

BoundReport idenbin_bounds(int n, int s) {
    if (n < 2 || s < 1) throw std::invalid_argument("idenbin_bounds: need n >= 2, s >= 1");
    const long long half_down = n / 2;

    long long lower;
    Rational upper;
    std::string tag;
    if (n % 2 == 0) {
        lower = (n / 2) * (s / 2);
        upper = Rational(static_cast<long long>(s) * n, 4);
        tag = "even-n";
    } else {
        lower = ((n + 1) / 2) * ((static_cast<long long>(s) * (n - 1)) / (2 * n));
        upper = Rational(static_cast<long long>(s) * (n - 1) * (n + 1), 4LL * n);
        tag = "odd-n";
    }
    if (!(Rational(lower, 1) <= upper))
        throw std::logic_error("idenbin_bounds: lower bound exceeds upper bound");

    // Extremal start: floor(n/2) agents hold s valuable goods each, the rest
    // hold only worthless ones.
    const int m = n * s;
    const long long valuable = half_down * s;
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    for (int g = 0; g < valuable; ++g)
        for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)][static_cast<size_t>(g)] = 1;
    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < s; ++j) bundles[static_cast<size_t>(i)].push_back(i * s + j);
    Instance extremal(n, m, std::move(u));
    Allocation allocation(std::move(bundles));
    const long long achieved = optimal_identical_binary(extremal, allocation).count;

    return BoundReport{n, s, lower, upper, achieved, tag, std::move(extremal),
                       std::move(allocation)};
}

}  // namespace ef1reform
