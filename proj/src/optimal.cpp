#include "ef1reform/optimal.hpp"

#include <algorithm>
#include <map>

namespace ef1reform {

ExchangeGraph build_exchange_graph(const Allocation& start, const Allocation& target) {
    if (size_vector(start) != size_vector(target))
        throw std::invalid_argument("build_exchange_graph: size vectors differ");
    const int n = start.num_bundles();
    const int m = start.total_goods();
    std::vector<int> target_owner(static_cast<size_t>(m), -1);
    for (int j = 0; j < n; ++j)
        for (int g : target.bundles[j]) {
            if (g < 0 || g >= m)
                throw std::invalid_argument("build_exchange_graph: good sets differ");
            target_owner[static_cast<size_t>(g)] = j;
        }

    ExchangeGraph graph;
    graph.num_agents = n;
    graph.weight.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int g : start.bundles[i]) {
            const int j = target_owner[static_cast<size_t>(g)];
            if (j < 0) throw std::invalid_argument("build_exchange_graph: good sets differ");
            graph.weight[static_cast<size_t>(i)][static_cast<size_t>(j)] += 1;
        }
    return graph;
}

namespace {

// Exact branch and bound for the maximum circuit partition. Self-loops are
// split off first (each is always its own circuit in some optimum). On the
// remaining balanced multigraph we pick the lexicographically smallest edge
// and branch over every simple cycle through it; the bound prunes with
// remaining_edges / 2 since every further circuit uses at least two edges.
struct PartitionSearch {
    int n;
    std::vector<std::vector<int>> w;
    long long best_count = -1;
    std::vector<std::vector<int>> best_cycles;
    std::vector<std::vector<int>> current;
    long long remaining = 0;

    void run() {
        long long loops = 0;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < w[static_cast<size_t>(i)][static_cast<size_t>(i)]; ++k)
                current.push_back({i});
            loops += w[static_cast<size_t>(i)][static_cast<size_t>(i)];
            remaining -= w[static_cast<size_t>(i)][static_cast<size_t>(i)];
            w[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
        }
        search(loops);
    }

    void search(long long count) {
        if (remaining == 0) {
            if (count > best_count) {
                best_count = count;
                best_cycles = current;
            }
            return;
        }
        if (count + remaining / 2 <= best_count) return;

        int from = -1, to = -1;
        for (int i = 0; i < n && from < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (w[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0) {
                    from = i;
                    to = j;
                    break;
                }

        std::vector<int> cycle = {from, to};
        std::vector<char> used(static_cast<size_t>(n), 0);
        used[static_cast<size_t>(from)] = used[static_cast<size_t>(to)] = 1;
        w[static_cast<size_t>(from)][static_cast<size_t>(to)] -= 1;
        remaining -= 1;
        extend(count, cycle, used, to, from);
        w[static_cast<size_t>(from)][static_cast<size_t>(to)] += 1;
        remaining += 1;
    }

    void extend(long long count, std::vector<int>& cycle, std::vector<char>& used,
                int at, int home) {
        if (w[static_cast<size_t>(at)][static_cast<size_t>(home)] > 0) {
            w[static_cast<size_t>(at)][static_cast<size_t>(home)] -= 1;
            remaining -= 1;
            current.push_back(cycle);
            search(count + 1);
            current.pop_back();
            w[static_cast<size_t>(at)][static_cast<size_t>(home)] += 1;
            remaining += 1;
        }
        for (int next = 0; next < n; ++next) {
            if (used[static_cast<size_t>(next)]) continue;
            if (w[static_cast<size_t>(at)][static_cast<size_t>(next)] == 0) continue;
            w[static_cast<size_t>(at)][static_cast<size_t>(next)] -= 1;
            remaining -= 1;
            used[static_cast<size_t>(next)] = 1;
            cycle.push_back(next);
            extend(count, cycle, used, next, home);
            cycle.pop_back();
            used[static_cast<size_t>(next)] = 0;
            w[static_cast<size_t>(at)][static_cast<size_t>(next)] += 1;
            remaining += 1;
        }
    }
};

}  // namespace

CircuitPartition max_circuit_partition(const ExchangeGraph& graph) {
    PartitionSearch s;
    s.n = graph.num_agents;
    s.w = graph.weight;
    for (const auto& row : s.w)
        for (int v : row) s.remaining += v;
    s.run();
    CircuitPartition result;
    result.count = s.best_count;
    result.cycles = std::move(s.best_cycles);
    return result;
}

long long exchange_distance_exact(const Allocation& start, const Allocation& target) {
    const ExchangeGraph graph = build_exchange_graph(start, target);
    const long long m = start.total_goods();
    return m - max_circuit_partition(graph).count;
}

ExchangeTrace realize_exchange_plan(const Allocation& start, const Allocation& target) {
    const ExchangeGraph graph = build_exchange_graph(start, target);
    const int n = graph.num_agents;
    const int m = start.total_goods();

    std::vector<int> target_owner(static_cast<size_t>(m), -1);
    for (int j = 0; j < n; ++j)
        for (int g : target.bundles[j]) target_owner[static_cast<size_t>(g)] = j;

    // pending[i][j]: goods at i that belong to j, ascending; lowest picked first.
    std::vector<std::vector<std::vector<int>>> pending(
        static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int g : start.bundles[i])
            pending[static_cast<size_t>(i)][static_cast<size_t>(target_owner[static_cast<size_t>(g)])]
                .push_back(g);

    auto take = [&](int at, int to) {
        auto& list = pending[static_cast<size_t>(at)][static_cast<size_t>(to)];
        const int g = list.front();
        list.erase(list.begin());
        return g;
    };

    ExchangeTrace trace;
    const CircuitPartition partition = max_circuit_partition(graph);
    for (const auto& cycle : partition.cycles) {
        const int k = static_cast<int>(cycle.size());
        if (k == 1) {
            take(cycle[0], cycle[0]);  // already in place
            continue;
        }
        // Goods x_t sit at cycle[t] and belong to cycle[t+1]. The hub
        // cycle[0] swaps with each later vertex in turn; every good lands at
        // its destination after k-1 exchanges.
        int carried = take(cycle[0], cycle[1]);
        for (int t = 1; t < k; ++t) {
            const int other = cycle[static_cast<size_t>(t)];
            const int incoming = take(other, cycle[static_cast<size_t>((t + 1) % k)]);
            trace.push_back(ExchangeStep{cycle[0], other, carried, incoming});
            carried = incoming;
        }
    }
    return trace;
}

GreedyResult optimal_two_identical(const Instance& inst, const Allocation& start) {
    start.validate_for(inst);
    if (inst.num_agents != 2)
        throw std::invalid_argument("optimal_two_identical: exactly two agents required");
    if (!is_identical_utilities(inst))
        throw std::invalid_argument("optimal_two_identical: identical utilities required");
    if (!reformable_two_identical(inst, size_vector(start)))
        throw std::invalid_argument("optimal_two_identical: no EF1 allocation with this size vector");

    GreedyResult result;
    if (is_ef1(inst, start)) return result;

    Allocation current = start;
    const int poorer = inst.bundle_utility(0, current.bundles[0]) <=
                               inst.bundle_utility(1, current.bundles[1])
                           ? 0
                           : 1;
    const int richer = 1 - poorer;
    while (!is_ef1_pair(inst, current, poorer, richer)) {
        int give = -1;  // max-utility good of the richer bundle, lowest index on ties
        for (int g : current.bundles[richer])
            if (give < 0 || inst.u(0, g) > inst.u(0, give)) give = g;
        int get = -1;  // min-utility good of the poorer bundle, lowest index on ties
        for (int g : current.bundles[poorer])
            if (get < 0 || inst.u(0, g) < inst.u(0, get)) get = g;
        const ExchangeStep step{richer, poorer, give, get};
        current = apply_exchange(current, step);
        result.trace.push_back(step);
        ++result.count;
    }
    return result;
}

GreedyResult optimal_identical_binary(const Instance& inst, const Allocation& start) {
    start.validate_for(inst);
    if (!is_identical_utilities(inst) || !is_binary_utilities(inst))
        throw std::invalid_argument(
            "optimal_identical_binary: identical binary utilities required");
    if (!reformable_identical_binary(inst, size_vector(start)))
        throw std::invalid_argument(
            "optimal_identical_binary: no EF1 allocation with this size vector");

    const int n = inst.num_agents;
    long long valuable_total = 0;
    for (int g = 0; g < inst.num_goods; ++g) valuable_total += inst.u(0, g);
    const long long floor_share = valuable_total / n;

    std::vector<long long> held(static_cast<size_t>(n), 0);
    Allocation current = start;
    for (int i = 0; i < n; ++i) held[static_cast<size_t>(i)] = inst.bundle_utility(0, current.bundles[i]);

    GreedyResult result;
    auto settled = [&]() {
        for (long long h : held)
            if (h < floor_share || h > floor_share + 1) return false;
        return true;
    };
    while (!settled()) {
        int hi = 0;
        for (int i = 1; i < n; ++i)
            if (held[static_cast<size_t>(i)] > held[static_cast<size_t>(hi)]) hi = i;
        // Poorest agent that still holds a non-valuable good to give back;
        // one always exists while an in-range target is feasible.
        int lo = -1;
        for (int i = 0; i < n; ++i) {
            if (held[static_cast<size_t>(i)] >=
                static_cast<long long>(current.bundles[i].size()))
                continue;  // every good valuable: nothing to trade away
            if (lo < 0 || held[static_cast<size_t>(i)] < held[static_cast<size_t>(lo)]) lo = i;
        }
        if (lo < 0) throw std::logic_error("optimal_identical_binary: exchange unavailable");
        int give = -1;  // lowest-index valuable good of the richest bundle
        for (int g : current.bundles[hi])
            if (inst.u(0, g) == 1) {
                give = g;
                break;
            }
        int get = -1;  // lowest-index non-valuable good of the poorest bundle
        for (int g : current.bundles[lo])
            if (inst.u(0, g) == 0) {
                get = g;
                break;
            }
        if (give < 0 || get < 0)
            throw std::logic_error("optimal_identical_binary: exchange unavailable");
        const ExchangeStep step{hi, lo, give, get};
        current = apply_exchange(current, step);
        held[static_cast<size_t>(hi)] -= 1;
        held[static_cast<size_t>(lo)] += 1;
        result.trace.push_back(step);
        ++result.count;
    }
    return result;
}

namespace {

// Enumerates, per type, all transportation matrices from the start holdings
// to the class counts (rows: source agents ascending; destination
// compositions lexicographic) and minimizes m - c* over the summed graphs.
struct MovementSearch {
    const Instance& inst;
    int n;
    std::vector<std::uint32_t> types;
    std::vector<std::vector<int>> holdings;   // [type][agent] in the start
    std::vector<std::vector<int>> wanted;     // [type][agent] in the class
    std::vector<std::vector<int>> weight;     // running exchange-graph weights
    std::vector<std::vector<int>> column;     // running per-type destination sums
    long long best = -1;
    Movement best_movement;
    Movement current;
    long long state_guard = 0;
    long long max_states = 0;

    void evaluate() {
        ExchangeGraph graph;
        graph.num_agents = n;
        graph.weight = weight;
        const long long m = inst.num_goods;
        const long long d = m - max_circuit_partition(graph).count;
        if (best < 0 || d < best) {
            best = d;
            best_movement = current;
        }
    }

    // Enumeration order: agents ascending, then types ascending, destination
    // compositions lexicographic.
    void ship(int agent, size_t t, int dest, int left) {
        if (++state_guard > max_states)
            throw BudgetExceededError("optimal_binary_const: movement budget exceeded");
        if (dest == n - 1) {
            if (column[t][static_cast<size_t>(dest)] + left > wanted[t][static_cast<size_t>(dest)])
                return;
            current.shipped[static_cast<size_t>(agent)][t][static_cast<size_t>(dest)] = left;
            column[t][static_cast<size_t>(dest)] += left;
            weight[static_cast<size_t>(agent)][static_cast<size_t>(dest)] += left;
            advance(agent, t + 1);
            weight[static_cast<size_t>(agent)][static_cast<size_t>(dest)] -= left;
            column[t][static_cast<size_t>(dest)] -= left;
            current.shipped[static_cast<size_t>(agent)][t][static_cast<size_t>(dest)] = 0;
            return;
        }
        const int cap = std::min(left, wanted[t][static_cast<size_t>(dest)] -
                                           column[t][static_cast<size_t>(dest)]);
        for (int send = 0; send <= cap; ++send) {
            current.shipped[static_cast<size_t>(agent)][t][static_cast<size_t>(dest)] = send;
            column[t][static_cast<size_t>(dest)] += send;
            weight[static_cast<size_t>(agent)][static_cast<size_t>(dest)] += send;
            ship(agent, t, dest + 1, left - send);
            weight[static_cast<size_t>(agent)][static_cast<size_t>(dest)] -= send;
            column[t][static_cast<size_t>(dest)] -= send;
            current.shipped[static_cast<size_t>(agent)][t][static_cast<size_t>(dest)] = 0;
        }
    }

    void advance(int agent, size_t t) {
        if (t == types.size()) {
            agent += 1;
            t = 0;
            if (agent == n) {
                evaluate();
                return;
            }
        }
        ship(agent, t, 0, holdings[t][static_cast<size_t>(agent)]);
    }

    void run() {
        if (types.empty()) {
            evaluate();
            return;
        }
        advance(0, 0);
    }
};

Allocation realize_movement(const Instance& inst, const Allocation& start,
                            const Movement& movement) {
    const int n = inst.num_agents;
    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    std::map<std::uint32_t, size_t> type_index;
    for (size_t t = 0; t < movement.types.size(); ++t) type_index[movement.types[t]] = t;

    for (int i = 0; i < n; ++i) {
        // Goods of one type are interchangeable: assign ascending goods to
        // ascending destinations for determinism.
        std::vector<std::vector<int>> by_type(movement.types.size());
        for (int g : start.bundles[i])
            by_type[type_index.at(good_type_bits(inst, g))].push_back(g);
        for (size_t t = 0; t < movement.types.size(); ++t) {
            size_t cursor = 0;
            for (int dest = 0; dest < n; ++dest) {
                const int count = movement.shipped[static_cast<size_t>(i)][t][static_cast<size_t>(dest)];
                for (int k = 0; k < count; ++k)
                    bundles[static_cast<size_t>(dest)].push_back(by_type[t][cursor++]);
            }
        }
    }
    return Allocation(std::move(bundles));
}

}  // namespace

BinaryOptimalResult optimal_binary_const(const Instance& inst, const Allocation& start,
                                         const OracleBudget& budget) {
    start.validate_for(inst);
    if (!is_binary_utilities(inst))
        throw std::invalid_argument("optimal_binary_const: utilities must be binary");
    const SizeVector sv = size_vector(start);

    std::map<std::uint32_t, std::vector<int>> holdings_by_type;
    for (int i = 0; i < inst.num_agents; ++i)
        for (int g : start.bundles[i]) {
            auto& row = holdings_by_type[good_type_bits(inst, g)];
            if (row.empty()) row.assign(static_cast<size_t>(inst.num_agents), 0);
            row[static_cast<size_t>(i)] += 1;
        }

    BinaryOptimalResult result;
    long long best = -1;
    Movement best_movement;

    enumerate_ef1_classes(inst, sv, [&](const TypeCountMatrix& cls) {
        MovementSearch search{inst, inst.num_agents, {}, {}, {}, {}, {}, -1, {}, {}, 0,
                              budget.max_states};
        for (const auto& [bits, want] : cls.counts) {
            search.types.push_back(bits);
            auto it = holdings_by_type.find(bits);
            search.holdings.push_back(it == holdings_by_type.end()
                                          ? std::vector<int>(static_cast<size_t>(inst.num_agents), 0)
                                          : it->second);
            search.wanted.push_back(want);
        }
        search.weight.assign(static_cast<size_t>(inst.num_agents),
                             std::vector<int>(static_cast<size_t>(inst.num_agents), 0));
        search.column.assign(search.types.size(),
                             std::vector<int>(static_cast<size_t>(inst.num_agents), 0));
        search.current.types = search.types;
        search.current.shipped.assign(
            static_cast<size_t>(inst.num_agents),
            std::vector<std::vector<int>>(search.types.size(),
                                          std::vector<int>(static_cast<size_t>(inst.num_agents), 0)));
        search.run();
        if (search.best >= 0 && (best < 0 || search.best < best)) {
            best = search.best;
            best_movement = search.best_movement;
        }
        return true;
    });

    if (best < 0) return result;  // no EF1 class: infinity
    result.count = Count::finite(best);
    result.target = realize_movement(inst, start, best_movement);
    return result;
}

OptimalResult optimal_exchanges(const Instance& inst, const Allocation& start,
                                const OracleBudget& budget) {
    start.validate_for(inst);
    OptimalResult result;
    if (is_ef1(inst, start)) {
        result.count = Count::finite(0);
        result.trace = ExchangeTrace{};
        return result;
    }

    const UtilityClass cls = classify_utilities(inst);
    if (inst.num_agents == 2 && (cls == UtilityClass::Identical ||
                                 cls == UtilityClass::IdenticalBinary)) {
        if (!reformable_two_identical(inst, size_vector(start))) return result;
        GreedyResult g = optimal_two_identical(inst, start);
        result.count = Count::finite(g.count);
        result.trace = std::move(g.trace);
        return result;
    }
    if (cls == UtilityClass::IdenticalBinary) {
        if (!reformable_identical_binary(inst, size_vector(start))) return result;
        GreedyResult g = optimal_identical_binary(inst, start);
        result.count = Count::finite(g.count);
        result.trace = std::move(g.trace);
        return result;
    }
    if (cls == UtilityClass::Binary && inst.num_agents <= 3) {
        BinaryOptimalResult b = optimal_binary_const(inst, start, budget);
        result.count = b.count;
        if (b.target) result.trace = realize_exchange_plan(start, *b.target);
        return result;
    }
    BfsWitness w = min_exchanges_bfs_trace(inst, start, budget);
    result.count = w.count;
    result.trace = std::move(w.trace);
    return result;
}

}  // namespace ef1reform
