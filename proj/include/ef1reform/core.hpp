#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ef1reform {

using Utility = std::int64_t;

// Thrown when a search would visit more states than its budget allows.
// A distinguishable third outcome: never a wrong YES/NO/number.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// An exchange count that may be infinite (no EF1 allocation reachable).
class Count {
public:
    static Count finite(long long value) {
        if (value < 0) throw std::invalid_argument("Count::finite: negative value");
        Count c;
        c.infinite_ = false;
        c.value_ = value;
        return c;
    }
    static Count infinity() {
        Count c;
        c.infinite_ = true;
        return c;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    long long value() const {
        if (infinite_) throw std::logic_error("Count::value on infinity");
        return value_;
    }
    std::string to_string() const {
        return infinite_ ? "INFINITY" : std::to_string(value_);
    }

    friend bool operator==(const Count& a, const Count& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Count& a, const Count& b) { return !(a == b); }

private:
    bool infinite_ = true;
    long long value_ = 0;
};

// n agents, m goods, non-negative integer utilities. All comparisons exact.
struct Instance {
    int num_agents = 0;
    int num_goods = 0;
    std::vector<std::vector<Utility>> utilities;  // [agent][good]

    Instance(int n, int m, std::vector<std::vector<Utility>> u);

    Utility u(int agent, int good) const { return utilities[agent][good]; }
    Utility bundle_utility(int agent, const std::vector<int>& bundle) const;
    // 0 for an empty bundle.
    Utility max_in_bundle(int agent, const std::vector<int>& bundle) const;
    // 0 when there are no goods.
    Utility max_over_goods(int agent) const;
};

using SizeVector = std::vector<int>;

// Ordered partition of the goods into n bundles; bundles kept sorted so that
// iteration order is deterministic everywhere.
struct Allocation {
    std::vector<std::vector<int>> bundles;

    Allocation() = default;
    explicit Allocation(std::vector<std::vector<int>> b);

    // Checks the bundles form a partition of {0..m-1} into exactly n parts.
    void validate_for(const Instance& inst) const;

    int num_bundles() const { return static_cast<int>(bundles.size()); }
    int total_goods() const;
    // Canonical collision-free key: the good -> holder assignment, one byte
    // per good (requires fewer than 256 agents).
    std::string key() const;

    friend bool operator==(const Allocation& a, const Allocation& b) {
        return a.bundles == b.bundles;
    }
};

struct ExchangeStep {
    int agent_a = 0;
    int agent_b = 0;
    int good_a = 0;  // held by agent_a before the step
    int good_b = 0;  // held by agent_b before the step

    friend bool operator==(const ExchangeStep& x, const ExchangeStep& y) {
        return x.agent_a == y.agent_a && x.agent_b == y.agent_b &&
               x.good_a == y.good_a && x.good_b == y.good_b;
    }
};

using ExchangeTrace = std::vector<ExchangeStep>;

enum class UtilityClass { General, Identical, Binary, IdenticalBinary };

bool is_identical_utilities(const Instance& inst);
bool is_binary_utilities(const Instance& inst);
UtilityClass classify_utilities(const Instance& inst);
std::string utility_class_name(UtilityClass c);

SizeVector size_vector(const Allocation& alloc);
bool is_balanced(const SizeVector& sv);

// Agent i is EF1 towards j: A_j empty, or u_i(A_i) >= u_i(A_j) - max_{g in A_j} u_i(g).
bool is_ef1_pair(const Instance& inst, const Allocation& alloc, int i, int j);
bool is_ef1(const Instance& inst, const Allocation& alloc);
// Weak variant: the removal candidate ranges over all goods, not just A_j.
bool is_weak_ef1(const Instance& inst, const Allocation& alloc);

// Swaps step.good_a and step.good_b between the two agents; throws if either
// good is not held by the stated agent.
Allocation apply_exchange(const Allocation& alloc, const ExchangeStep& step);
Allocation apply_trace(const Allocation& alloc, const ExchangeTrace& trace);

// Agents pick a remaining favorite good in rotation (ties: lowest good index),
// skipping agents whose quota is filled. The order must be a permutation that
// lists agents with larger quotas before agents with smaller ones.
Allocation round_robin(const Instance& inst, const SizeVector& sv,
                       const std::vector<int>& order);

}  // namespace ef1reform
