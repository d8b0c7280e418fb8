#pragma once

#include <string>

#include "ef1reform/core.hpp"

namespace ef1reform {

// One round of the balanced exchange loop: the strong agent (highest bundle
// utility) trades its best good for the weak agent's (lowest bundle utility)
// worst good. Values are recorded so traces can be audited standalone.
struct TraceStep {
    int round = 0;
    int strong_agent = 0;
    int weak_agent = 0;
    int good_from_strong = 0;
    int good_from_weak = 0;
    Utility value_from_strong = 0;
    Utility value_from_weak = 0;
    std::vector<Utility> utilities_after;  // own-bundle utilities after the swap
};

struct WeakEf1Result {
    Allocation final;
    std::vector<TraceStep> trace;
};

// Identical utilities, equal bundle sizes. Loops until the allocation is
// weak-EF1 (own utility >= other's utility minus the best good overall,
// compared in exact integers); ties at both the agent and good level break
// to the lowest index. Terminates within floor(m/2) rounds.
WeakEf1Result balanced_exchange_loop(const Instance& inst, const Allocation& start);

// Audits a trace produced by balanced_exchange_loop. Returns the names of violated
// properties (empty on success):
//   good-exchanged-twice     a good index appears in two steps
//   strong-weak-overlap      an agent acted in both roles
//   strong-utility-increase  a strong agent's own utility ever rose
//   weak-utility-decrease    a weak agent's own utility ever fell
//   swap-value-not-greater   a step's given good did not beat the taken one
std::vector<std::string> verify_trace(const std::vector<TraceStep>& trace);

}  // namespace ef1reform
