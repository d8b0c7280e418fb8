#include "ef1reform/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ef1reform {

namespace {

void check_size_vector(const Instance& inst, const SizeVector& sv, const char* who) {
    if (static_cast<int>(sv.size()) != inst.num_agents)
        throw std::invalid_argument(std::string(who) + ": size vector length mismatch");
    long long total = 0;
    for (int s : sv) {
        if (s < 0) throw std::invalid_argument(std::string(who) + ": negative size");
        total += s;
    }
    if (total != inst.num_goods)
        throw std::invalid_argument(std::string(who) +
                                    ": size vector must sum to the number of goods");
}

Allocation allocation_from_owners(const std::string& owners, int n) {
    std::vector<std::vector<int>> bundles(n);
    for (size_t g = 0; g < owners.size(); ++g)
        bundles[static_cast<unsigned char>(owners[g])].push_back(static_cast<int>(g));
    Allocation alloc;
    alloc.bundles = std::move(bundles);  // already sorted by construction
    return alloc;
}

// Visits neighbors in lexicographic (agent_a, agent_b, good_a, good_b) order.
// The visitor returns false to stop.
bool for_each_exchange(const Allocation& alloc,
                       const std::function<bool(const ExchangeStep&)>& visit) {
    const int n = alloc.num_bundles();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int ga : alloc.bundles[a])
                for (int gb : alloc.bundles[b])
                    if (!visit(ExchangeStep{a, b, ga, gb})) return false;
    return true;
}

}  // namespace

void enumerate_allocations(const Instance& inst, const SizeVector& sv,
                           const std::function<bool(const Allocation&)>& visit,
                           const OracleBudget& budget) {
    check_size_vector(inst, sv, "enumerate_allocations");
    const int n = inst.num_agents;
    const int m = inst.num_goods;
    std::string owners(static_cast<size_t>(m), '\0');
    SizeVector remaining = sv;
    long long yielded = 0;
    bool stopped = false;

    std::function<void(int)> place = [&](int good) {
        if (stopped) return;
        if (good == m) {
            if (++yielded > budget.max_states)
                throw BudgetExceededError("enumerate_allocations: state budget exceeded");
            if (!visit(allocation_from_owners(owners, n))) stopped = true;
            return;
        }
        for (int agent = 0; agent < n && !stopped; ++agent) {
            if (remaining[agent] == 0) continue;
            --remaining[agent];
            owners[static_cast<size_t>(good)] = static_cast<char>(agent);
            place(good + 1);
            ++remaining[agent];
        }
    };
    place(0);
}

std::vector<Allocation> collect_allocations(const Instance& inst, const SizeVector& sv,
                                            const OracleBudget& budget) {
    std::vector<Allocation> out;
    enumerate_allocations(inst, sv, [&](const Allocation& a) {
        out.push_back(a);
        return true;
    }, budget);
    return out;
}

bool exists_ef1_bruteforce(const Instance& inst, const SizeVector& sv,
                           const OracleBudget& budget) {
    bool found = false;
    enumerate_allocations(inst, sv, [&](const Allocation& a) {
        if (is_ef1(inst, a)) {
            found = true;
            return false;
        }
        return true;
    }, budget);
    return found;
}

namespace {

struct BfsNode {
    std::string owners;
    int parent;
    ExchangeStep step;
};

// Shared BFS core. `goal` decides termination; when it never fires the whole
// component is exhausted and infinity is returned.
BfsWitness bfs_search(const Instance& inst, const Allocation& start,
                      const std::function<bool(const Allocation&)>& goal,
                      bool want_trace, const OracleBudget& budget) {
    start.validate_for(inst);
    if (goal(start)) {
        BfsWitness w;
        w.count = Count::finite(0);
        if (want_trace) w.trace = ExchangeTrace{};
        return w;
    }

    std::vector<BfsNode> nodes;
    std::unordered_set<std::string> visited;
    std::deque<std::pair<int, int>> frontier;  // (node index, depth)

    nodes.push_back(BfsNode{start.key(), -1, {}});
    visited.insert(nodes[0].owners);
    frontier.emplace_back(0, 0);

    while (!frontier.empty()) {
        auto [index, depth] = frontier.front();
        frontier.pop_front();
        const Allocation current = allocation_from_owners(nodes[index].owners, inst.num_agents);

        int found = -1;
        for_each_exchange(current, [&](const ExchangeStep& step) {
            Allocation next = apply_exchange(current, step);
            std::string k = next.key();
            if (!visited.insert(k).second) return true;
            if (static_cast<long long>(visited.size()) > budget.max_states)
                throw BudgetExceededError("min_exchanges_bfs: state budget exceeded");
            nodes.push_back(BfsNode{std::move(k), index, step});
            const int id = static_cast<int>(nodes.size()) - 1;
            if (goal(next)) {
                found = id;
                return false;
            }
            frontier.emplace_back(id, depth + 1);
            return true;
        });

        if (found >= 0) {
            BfsWitness w;
            w.count = Count::finite(depth + 1);
            if (want_trace) {
                ExchangeTrace trace;
                for (int at = found; at > 0; at = nodes[at].parent)
                    trace.push_back(nodes[at].step);
                std::reverse(trace.begin(), trace.end());
                w.trace = std::move(trace);
            }
            return w;
        }
    }
    return BfsWitness{};
}

}  // namespace

Count min_exchanges_bfs(const Instance& inst, const Allocation& start,
                        const OracleBudget& budget) {
    return bfs_search(inst, start,
                      [&](const Allocation& a) { return is_ef1(inst, a); },
                      false, budget).count;
}

BfsWitness min_exchanges_bfs_trace(const Instance& inst, const Allocation& start,
                                   const OracleBudget& budget) {
    return bfs_search(inst, start,
                      [&](const Allocation& a) { return is_ef1(inst, a); },
                      true, budget);
}

Count exchange_distance_bfs(const Instance& inst, const Allocation& start,
                            const Allocation& target, const OracleBudget& budget) {
    start.validate_for(inst);
    target.validate_for(inst);
    if (size_vector(start) != size_vector(target)) return Count::infinity();
    const std::string goal_key = target.key();
    return bfs_search(inst, start,
                      [&](const Allocation& a) { return a.key() == goal_key; },
                      false, budget).count;
}

BeneficialResult beneficial_reachable_ef1(const Instance& inst, const Allocation& start,
                                          const OracleBudget& budget) {
    start.validate_for(inst);
    std::unordered_set<std::string> dead;  // states proven unable to reach EF1
    ExchangeTrace path;
    BeneficialResult result;

    std::function<bool(const Allocation&)> search = [&](const Allocation& current) -> bool {
        if (is_ef1(inst, current)) return true;
        bool ok = false;
        for_each_exchange(current, [&](const ExchangeStep& step) {
            // Both sides must strictly gain.
            if (inst.u(step.agent_a, step.good_b) <= inst.u(step.agent_a, step.good_a))
                return true;
            if (inst.u(step.agent_b, step.good_a) <= inst.u(step.agent_b, step.good_b))
                return true;
            Allocation next = apply_exchange(current, step);
            if (dead.count(next.key())) return true;
            path.push_back(step);
            if (search(next)) {
                ok = true;
                return false;
            }
            path.pop_back();
            return true;
        });
        if (!ok) {
            dead.insert(current.key());
            if (static_cast<long long>(dead.size()) > budget.max_states)
                throw BudgetExceededError("beneficial_reachable_ef1: state budget exceeded");
        }
        return ok;
    };

    result.reachable = search(start);
    if (result.reachable) result.trace = path;
    return result;
}

}  // namespace ef1reform
