#include "ef1reform/weak_ef1.hpp"

#include <algorithm>
#include <set>

namespace ef1reform {

WeakEf1Result balanced_exchange_loop(const Instance& inst, const Allocation& start) {
    start.validate_for(inst);
    if (!is_identical_utilities(inst))
        throw std::invalid_argument("balanced_exchange_loop: identical utilities required");
    const SizeVector sv = size_vector(start);
    for (int s : sv)
        if (s != sv[0])
            throw std::invalid_argument("balanced_exchange_loop: bundle sizes must all be equal");

    const int n = inst.num_agents;
    const Utility slack = inst.max_over_goods(0);
    const int round_cap = inst.num_goods / 2;

    WeakEf1Result result{start, {}};
    std::vector<Utility> value(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        value[static_cast<size_t>(i)] = inst.bundle_utility(0, result.final.bundles[i]);

    auto weak_ef1_now = [&]() {
        const auto [lo, hi] = std::minmax_element(value.begin(), value.end());
        return *lo >= *hi - slack;
    };

    int round = 0;
    while (!weak_ef1_now()) {
        if (round >= round_cap)
            throw std::logic_error("balanced_exchange_loop: exceeded the floor(m/2) round bound");
        int strong = 0, weak = 0;
        for (int i = 1; i < n; ++i) {
            if (value[static_cast<size_t>(i)] > value[static_cast<size_t>(strong)]) strong = i;
            if (value[static_cast<size_t>(i)] < value[static_cast<size_t>(weak)]) weak = i;
        }
        int give = -1;  // best good of the strong bundle
        for (int g : result.final.bundles[strong])
            if (give < 0 || inst.u(0, g) > inst.u(0, give)) give = g;
        int take = -1;  // worst good of the weak bundle
        for (int g : result.final.bundles[weak])
            if (take < 0 || inst.u(0, g) < inst.u(0, take)) take = g;

        result.final = apply_exchange(result.final, ExchangeStep{strong, weak, give, take});
        value[static_cast<size_t>(strong)] += inst.u(0, take) - inst.u(0, give);
        value[static_cast<size_t>(weak)] += inst.u(0, give) - inst.u(0, take);

        TraceStep step;
        step.round = round;
        step.strong_agent = strong;
        step.weak_agent = weak;
        step.good_from_strong = give;
        step.good_from_weak = take;
        step.value_from_strong = inst.u(0, give);
        step.value_from_weak = inst.u(0, take);
        step.utilities_after = value;
        result.trace.push_back(std::move(step));
        ++round;
    }
    return result;
}

std::vector<std::string> verify_trace(const std::vector<TraceStep>& trace) {
    std::vector<std::string> violations;
    if (trace.empty()) return violations;

    const size_t n = trace.front().utilities_after.size();
    for (const TraceStep& step : trace) {
        if (step.utilities_after.size() != n ||
            step.strong_agent < 0 || step.strong_agent >= static_cast<int>(n) ||
            step.weak_agent < 0 || step.weak_agent >= static_cast<int>(n) ||
            step.strong_agent == step.weak_agent ||
            step.good_from_strong < 0 || step.good_from_weak < 0)
            throw std::invalid_argument("verify_trace: malformed trace");
    }

    std::set<int> goods_seen;
    bool repeated_good = false;
    for (const TraceStep& step : trace) {
        if (!goods_seen.insert(step.good_from_strong).second) repeated_good = true;
        if (!goods_seen.insert(step.good_from_weak).second) repeated_good = true;
    }
    if (repeated_good) violations.push_back("good-exchanged-twice");

    std::set<int> strong_set, weak_set;
    for (const TraceStep& step : trace) {
        strong_set.insert(step.strong_agent);
        weak_set.insert(step.weak_agent);
    }
    {
        std::vector<int> overlap;
        std::set_intersection(strong_set.begin(), strong_set.end(), weak_set.begin(),
                              weak_set.end(), std::back_inserter(overlap));
        if (!overlap.empty()) violations.push_back("strong-weak-overlap");
    }

    // Reconstruct pre-run utilities from the first step, then walk the
    // after-step vectors checking monotonicity per role.
    std::vector<Utility> before = trace.front().utilities_after;
    before[static_cast<size_t>(trace.front().strong_agent)] +=
        trace.front().value_from_strong - trace.front().value_from_weak;
    before[static_cast<size_t>(trace.front().weak_agent)] +=
        trace.front().value_from_weak - trace.front().value_from_strong;

    bool strong_rose = false, weak_fell = false;
    std::vector<Utility> previous = std::move(before);
    for (const TraceStep& step : trace) {
        for (int agent : strong_set)
            if (step.utilities_after[static_cast<size_t>(agent)] >
                previous[static_cast<size_t>(agent)])
                strong_rose = true;
        for (int agent : weak_set)
            if (step.utilities_after[static_cast<size_t>(agent)] <
                previous[static_cast<size_t>(agent)])
                weak_fell = true;
        previous = step.utilities_after;
    }
    if (strong_rose) violations.push_back("strong-utility-increase");
    if (weak_fell) violations.push_back("weak-utility-decrease");

    bool bad_swap = false;
    for (const TraceStep& step : trace)
        if (step.value_from_strong <= step.value_from_weak) bad_swap = true;
    if (bad_swap) violations.push_back("swap-value-not-greater");

    return violations;
}

}  // namespace ef1reform
