#include "ef1reform/core.hpp"

#include <algorithm>

namespace ef1reform {

Instance::Instance(int n, int m, std::vector<std::vector<Utility>> u)
    : num_agents(n), num_goods(m), utilities(std::move(u)) {
    if (num_agents < 2) throw std::invalid_argument("Instance: need at least two agents");
    if (num_goods < 0) throw std::invalid_argument("Instance: negative number of goods");
    if (static_cast<int>(utilities.size()) != num_agents)
        throw std::invalid_argument("Instance: utility matrix must have one row per agent");
    for (const auto& row : utilities) {
        if (static_cast<int>(row.size()) != num_goods)
            throw std::invalid_argument("Instance: utility row length must equal number of goods");
        for (Utility v : row)
            if (v < 0) throw std::invalid_argument("Instance: utilities must be non-negative");
    }
}

Utility Instance::bundle_utility(int agent, const std::vector<int>& bundle) const {
    Utility total = 0;
    for (int g : bundle) total += utilities[agent][g];
    return total;
}

Utility Instance::max_in_bundle(int agent, const std::vector<int>& bundle) const {
    Utility best = 0;
    for (int g : bundle) best = std::max(best, utilities[agent][g]);
    return best;
}

Utility Instance::max_over_goods(int agent) const {
    Utility best = 0;
    for (int g = 0; g < num_goods; ++g) best = std::max(best, utilities[agent][g]);
    return best;
}

Allocation::Allocation(std::vector<std::vector<int>> b) : bundles(std::move(b)) {
    for (auto& bundle : bundles) std::sort(bundle.begin(), bundle.end());
}

int Allocation::total_goods() const {
    int total = 0;
    for (const auto& bundle : bundles) total += static_cast<int>(bundle.size());
    return total;
}

void Allocation::validate_for(const Instance& inst) const {
    if (num_bundles() != inst.num_agents)
        throw std::invalid_argument("Allocation: bundle count must equal number of agents");
    std::vector<int> seen(inst.num_goods, 0);
    int total = 0;
    for (const auto& bundle : bundles) {
        for (int g : bundle) {
            if (g < 0 || g >= inst.num_goods)
                throw std::invalid_argument("Allocation: good index out of range");
            if (seen[g]++) throw std::invalid_argument("Allocation: good assigned twice");
            ++total;
        }
    }
    if (total != inst.num_goods)
        throw std::invalid_argument("Allocation: bundles must cover every good");
}

std::string Allocation::key() const {
    if (bundles.size() >= 256)
        throw std::invalid_argument("Allocation::key: too many agents");
    std::string owners(static_cast<size_t>(total_goods()), '\0');
    for (size_t i = 0; i < bundles.size(); ++i)
        for (int g : bundles[i]) {
            if (g < 0 || g >= static_cast<int>(owners.size()))
                throw std::invalid_argument("Allocation::key: good indices not dense");
            owners[static_cast<size_t>(g)] = static_cast<char>(i);
        }
    return owners;
}

bool is_identical_utilities(const Instance& inst) {
    for (int i = 1; i < inst.num_agents; ++i)
        if (inst.utilities[i] != inst.utilities[0]) return false;
    return true;
}

bool is_binary_utilities(const Instance& inst) {
    for (const auto& row : inst.utilities)
        for (Utility v : row)
            if (v != 0 && v != 1) return false;
    return true;
}

UtilityClass classify_utilities(const Instance& inst) {
    const bool identical = is_identical_utilities(inst);
    const bool binary = is_binary_utilities(inst);
    if (identical && binary) return UtilityClass::IdenticalBinary;
    if (identical) return UtilityClass::Identical;
    if (binary) return UtilityClass::Binary;
    return UtilityClass::General;
}

std::string utility_class_name(UtilityClass c) {
    switch (c) {
        case UtilityClass::General: return "general";
        case UtilityClass::Identical: return "identical";
        case UtilityClass::Binary: return "binary";
        case UtilityClass::IdenticalBinary: return "identical-binary";
    }
    return "general";
}

SizeVector size_vector(const Allocation& alloc) {
    SizeVector sv(alloc.bundles.size());
    for (size_t i = 0; i < alloc.bundles.size(); ++i)
        sv[i] = static_cast<int>(alloc.bundles[i].size());
    return sv;
}

bool is_balanced(const SizeVector& sv) {
    if (sv.empty()) return true;
    auto [lo, hi] = std::minmax_element(sv.begin(), sv.end());
    return *hi - *lo <= 1;
}

bool is_ef1_pair(const Instance& inst, const Allocation& alloc, int i, int j) {
    if (i < 0 || i >= inst.num_agents || j < 0 || j >= inst.num_agents)
        throw std::out_of_range("is_ef1_pair: agent index out of range");
    if (i == j) throw std::invalid_argument("is_ef1_pair: agents must differ");
    const auto& other = alloc.bundles[j];
    if (other.empty()) return true;
    const Utility own = inst.bundle_utility(i, alloc.bundles[i]);
    const Utility theirs = inst.bundle_utility(i, other);
    return own >= theirs - inst.max_in_bundle(i, other);
}

bool is_ef1(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_agents; ++i)
        for (int j = 0; j < inst.num_agents; ++j)
            if (i != j && !is_ef1_pair(inst, alloc, i, j)) return false;
    return true;
}

bool is_weak_ef1(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_agents; ++i) {
        const Utility own = inst.bundle_utility(i, alloc.bundles[i]);
        const Utility slack = inst.max_over_goods(i);
        for (int j = 0; j < inst.num_agents; ++j) {
            if (i == j) continue;
            if (own < inst.bundle_utility(i, alloc.bundles[j]) - slack) return false;
        }
    }
    return true;
}

namespace {

void remove_good(std::vector<int>& bundle, int good, int agent, const char* side) {
    auto it = std::lower_bound(bundle.begin(), bundle.end(), good);
    if (it == bundle.end() || *it != good)
        throw std::invalid_argument("apply_exchange: " + std::string(side) + " agent " +
                                    std::to_string(agent) + " does not hold good " +
                                    std::to_string(good));
    bundle.erase(it);
}

void insert_good(std::vector<int>& bundle, int good) {
    bundle.insert(std::upper_bound(bundle.begin(), bundle.end(), good), good);
}

}  // namespace

Allocation apply_exchange(const Allocation& alloc, const ExchangeStep& step) {
    const int n = alloc.num_bundles();
    if (step.agent_a < 0 || step.agent_a >= n || step.agent_b < 0 || step.agent_b >= n)
        throw std::invalid_argument("apply_exchange: agent index out of range");
    if (step.agent_a == step.agent_b)
        throw std::invalid_argument("apply_exchange: agents must differ");
    Allocation next = alloc;
    remove_good(next.bundles[step.agent_a], step.good_a, step.agent_a, "giving");
    remove_good(next.bundles[step.agent_b], step.good_b, step.agent_b, "receiving");
    insert_good(next.bundles[step.agent_a], step.good_b);
    insert_good(next.bundles[step.agent_b], step.good_a);
    return next;
}

Allocation apply_trace(const Allocation& alloc, const ExchangeTrace& trace) {
    Allocation current = alloc;
    for (const auto& step : trace) current = apply_exchange(current, step);
    return current;
}

Allocation round_robin(const Instance& inst, const SizeVector& sv,
                       const std::vector<int>& order) {
    if (static_cast<int>(sv.size()) != inst.num_agents)
        throw std::invalid_argument("round_robin: size vector length mismatch");
    long long total = 0;
    for (int s : sv) {
        if (s < 0) throw std::invalid_argument("round_robin: negative quota");
        total += s;
    }
    if (total != inst.num_goods)
        throw std::invalid_argument("round_robin: size vector must sum to the number of goods");

    if (static_cast<int>(order.size()) != inst.num_agents)
        throw std::invalid_argument("round_robin: order is not a permutation");
    std::vector<char> used(inst.num_agents, 0);
    for (int a : order) {
        if (a < 0 || a >= inst.num_agents || used[a])
            throw std::invalid_argument("round_robin: order is not a permutation");
        used[a] = 1;
    }
    for (size_t k = 1; k < order.size(); ++k)
        if (sv[order[k - 1]] < sv[order[k]])
            throw std::invalid_argument(
                "round_robin: agents with larger quotas must come first in the order");

    std::vector<char> taken(inst.num_goods, 0);
    std::vector<std::vector<int>> bundles(inst.num_agents);
    SizeVector remaining = sv;
    int left = inst.num_goods;
    while (left > 0) {
        for (int agent : order) {
            if (remaining[agent] == 0) continue;
            int pick = -1;
            Utility best = -1;
            for (int g = 0; g < inst.num_goods; ++g) {
                if (taken[g]) continue;
                if (inst.u(agent, g) > best) {
                    best = inst.u(agent, g);
                    pick = g;
                }
            }
            taken[pick] = 1;
            bundles[agent].push_back(pick);
            --remaining[agent];
            if (--left == 0) break;
        }
    }
    return Allocation(std::move(bundles));
}

}  // namespace ef1reform
