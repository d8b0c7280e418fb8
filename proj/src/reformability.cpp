#include "ef1reform/reformability.hpp"

#include <algorithm>
#include <numeric>
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

}  // namespace

std::uint32_t good_type_bits(const Instance& inst, int good) {
    if (!is_binary_utilities(inst))
        throw std::invalid_argument("good_type_bits: utilities must be binary");
    if (inst.num_agents > 30)
        throw std::invalid_argument("good_type_bits: too many agents for type encoding");
    std::uint32_t bits = 0;
    for (int i = 0; i < inst.num_agents; ++i)
        if (inst.u(i, good) == 1) bits |= (1u << i);
    return bits;
}

bool reformable_two_identical(const Instance& inst, const SizeVector& sv) {
    check_size_vector(inst, sv, "reformable_two_identical");
    if (inst.num_agents != 2)
        throw std::invalid_argument("reformable_two_identical: exactly two agents required");
    if (!is_identical_utilities(inst))
        throw std::invalid_argument("reformable_two_identical: identical utilities required");

    // Relabeling is internal: only the smaller quota matters.
    const int s_small = std::min(sv[0], sv[1]);

    std::vector<int> goods(inst.num_goods);
    std::iota(goods.begin(), goods.end(), 0);
    std::stable_sort(goods.begin(), goods.end(), [&](int a, int b) {
        return inst.u(0, a) > inst.u(0, b);
    });

    Utility top = 0, rest = 0, rest_max = 0;
    for (int k = 0; k < inst.num_goods; ++k) {
        const Utility v = inst.u(0, goods[k]);
        if (k < s_small) {
            top += v;
        } else {
            rest += v;
            rest_max = std::max(rest_max, v);
        }
    }
    if (inst.num_goods == s_small) return true;  // other bundle empty
    return top >= rest - rest_max;
}

namespace {

// Reachable-state key for the dynamic program: a (n*n bundle values), then
// b (n*n best single goods), then c (n bundle sizes), flattened.
struct DpState {
    std::vector<Utility> data;

    bool operator==(const DpState& other) const { return data == other.data; }
};

struct DpStateHash {
    size_t operator()(const DpState& s) const noexcept {
        size_t h = 1469598103934665603ull;
        for (Utility v : s.data) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

bool reformable_dp(const Instance& inst, const SizeVector& sv, const OracleBudget& budget) {
    check_size_vector(inst, sv, "reformable_dp");
    const int n = inst.num_agents;
    const int m = inst.num_goods;
    const int nn = n * n;

    std::unordered_set<DpState, DpStateHash> states;
    DpState zero;
    zero.data.assign(static_cast<size_t>(2 * nn + n), 0);
    states.insert(zero);

    for (int good = 0; good < m; ++good) {
        std::unordered_set<DpState, DpStateHash> next;
        for (const DpState& s : states) {
            for (int j = 0; j < n; ++j) {
                if (s.data[static_cast<size_t>(2 * nn + j)] >= sv[j]) continue;  // quota full
                DpState t = s;
                for (int i = 0; i < n; ++i) {
                    const Utility v = inst.u(i, good);
                    t.data[static_cast<size_t>(i * n + j)] += v;
                    Utility& best = t.data[static_cast<size_t>(nn + i * n + j)];
                    best = std::max(best, v);
                }
                t.data[static_cast<size_t>(2 * nn + j)] += 1;
                next.insert(std::move(t));
                if (static_cast<long long>(next.size()) > budget.max_states)
                    throw BudgetExceededError("reformable_dp: state budget exceeded");
            }
        }
        states = std::move(next);
        if (states.empty()) return false;  // quotas cannot absorb the remaining goods
    }

    for (const DpState& s : states) {
        // Quota pruning guarantees c == sv here; check EF1 on the summary.
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (i == j) continue;
                if (sv[j] == 0) continue;
                const Utility own = s.data[static_cast<size_t>(i * n + i)];
                const Utility theirs = s.data[static_cast<size_t>(i * n + j)];
                const Utility best = s.data[static_cast<size_t>(nn + i * n + j)];
                if (own < theirs - best) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

namespace {

struct ClassEnumerator {
    const Instance& inst;
    const SizeVector& sv;
    const std::function<bool(const TypeCountMatrix&)>& visit;

    std::vector<std::uint32_t> types;       // ascending
    std::vector<int> type_totals;           // goods of each type
    std::vector<std::vector<int>> counts;   // counts[type_index][agent]
    SizeVector capacity;                    // per-agent space left
    bool stopped = false;

    bool ef1_on_counts() const {
        const int n = inst.num_agents;
        for (int i = 0; i < n; ++i) {
            Utility own = 0;
            for (size_t t = 0; t < types.size(); ++t)
                if (types[t] & (1u << i)) own += counts[t][static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j) {
                if (i == j || sv[j] == 0) continue;
                Utility theirs = 0;
                Utility best = 0;
                for (size_t t = 0; t < types.size(); ++t) {
                    if (!(types[t] & (1u << i))) continue;
                    const int c = counts[t][static_cast<size_t>(j)];
                    theirs += c;
                    if (c > 0) best = 1;
                }
                if (own < theirs - best) return false;
            }
        }
        return true;
    }

    void emit() {
        TypeCountMatrix tcm;
        for (size_t t = 0; t < types.size(); ++t)
            tcm.counts.emplace(types[t], counts[t]);
        if (!visit(tcm)) stopped = true;
    }

    // Distribute type `t` among agents; `agent` gets 0.. of the `left` goods,
    // compositions in lexicographic order.
    void compose(size_t t, int agent, int left) {
        if (stopped) return;
        const int n = inst.num_agents;
        if (agent == n - 1) {
            if (left > capacity[static_cast<size_t>(agent)]) return;
            counts[t][static_cast<size_t>(agent)] = left;
            capacity[static_cast<size_t>(agent)] -= left;
            next_type(t + 1);
            capacity[static_cast<size_t>(agent)] += left;
            counts[t][static_cast<size_t>(agent)] = 0;
            return;
        }
        const int cap = std::min(left, capacity[static_cast<size_t>(agent)]);
        for (int take = 0; take <= cap && !stopped; ++take) {
            counts[t][static_cast<size_t>(agent)] = take;
            capacity[static_cast<size_t>(agent)] -= take;
            compose(t, agent + 1, left - take);
            capacity[static_cast<size_t>(agent)] += take;
            counts[t][static_cast<size_t>(agent)] = 0;
        }
    }

    void next_type(size_t t) {
        if (stopped) return;
        if (t == types.size()) {
            // Capacities are exactly consumed (totals sum to m == sum sv).
            if (ef1_on_counts()) emit();
            return;
        }
        compose(t, 0, type_totals[t]);
    }
};

}  // namespace

void enumerate_ef1_classes(const Instance& inst, const SizeVector& sv,
                           const std::function<bool(const TypeCountMatrix&)>& visit) {
    check_size_vector(inst, sv, "enumerate_ef1_classes");
    if (!is_binary_utilities(inst))
        throw std::invalid_argument("enumerate_ef1_classes: utilities must be binary");

    std::map<std::uint32_t, int> totals;
    for (int g = 0; g < inst.num_goods; ++g) totals[good_type_bits(inst, g)]++;

    ClassEnumerator e{inst, sv, visit, {}, {}, {}, sv, false};
    for (const auto& [bits, count] : totals) {
        e.types.push_back(bits);
        e.type_totals.push_back(count);
    }
    e.counts.assign(e.types.size(), std::vector<int>(static_cast<size_t>(inst.num_agents), 0));
    e.next_type(0);
}

std::vector<TypeCountMatrix> collect_ef1_classes(const Instance& inst, const SizeVector& sv) {
    std::vector<TypeCountMatrix> out;
    enumerate_ef1_classes(inst, sv, [&](const TypeCountMatrix& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool reformable_binary_const(const Instance& inst, const SizeVector& sv) {
    bool found = false;
    enumerate_ef1_classes(inst, sv, [&](const TypeCountMatrix&) {
        found = true;
        return false;
    });
    return found;
}

bool reformable_identical_binary(const Instance& inst, const SizeVector& sv) {
    check_size_vector(inst, sv, "reformable_identical_binary");
    if (!is_identical_utilities(inst) || !is_binary_utilities(inst))
        throw std::invalid_argument(
            "reformable_identical_binary: identical binary utilities required");
    const long long s0 = *std::min_element(sv.begin(), sv.end());
    const long long n0 = std::count(sv.begin(), sv.end(), static_cast<int>(s0));
    long long valuable = 0;
    for (int g = 0; g < inst.num_goods; ++g) valuable += inst.u(0, g);
    const long long n = inst.num_agents;
    return valuable <= s0 * n + n - n0;
}

bool reformable(const Instance& inst, const SizeVector& sv, const OracleBudget& budget) {
    check_size_vector(inst, sv, "reformable");
    if (is_balanced(sv)) return true;

    const UtilityClass cls = classify_utilities(inst);
    if (cls == UtilityClass::IdenticalBinary) return reformable_identical_binary(inst, sv);
    if (inst.num_agents == 2 && cls == UtilityClass::Identical)
        return reformable_two_identical(inst, sv);
    if ((cls == UtilityClass::Binary) && inst.num_agents <= 4)
        return reformable_binary_const(inst, sv);
    if (inst.num_agents <= 3) return reformable_dp(inst, sv, budget);
    return exists_ef1_bruteforce(inst, sv, budget);
}

}  // namespace ef1reform
