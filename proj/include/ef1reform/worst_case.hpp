#pragma once

#include <string>

#include "ef1reform/core.hpp"

namespace ef1reform {

// Exact rational, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    std::string to_string() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    // a <= b for normalized positive denominators
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
};

// Worst-case exchange bound for reaching EF1 from an s-balanced allocation of
// n agents: s(n-1)/2 when n divides s, s(n-1)/2 + r(n-3)/2 + 1 otherwise, and
// the tighter (s-r)/2 for two agents. Always an integer; integrality is
// checked.
long long upper_bound_formula(int n, long long s);

// Instance family meeting the lower bound: ns goods g_{i,j}, each worth 0 to
// agent i and 1 to everyone else; agent i starts with her own row.
std::pair<Instance, Allocation> lower_bound_instance(int n, int s);

// Categories C_1..C_n (qn goods, from one agent's start bundle each) followed
// by D_1..D_r (n goods each, from consecutive agents' leftovers).
struct CategoryPlan {
    std::vector<std::vector<int>> categories;
};

CategoryPlan make_category_plan(const Allocation& start);

// Processes categories in order; per category, eliminates envy cycles of the
// partial allocation by rotating bundles, fixes a picking order in which
// enviers precede the envied, then hands out |category|/n goods per agent
// round-robin.
Allocation constrained_round_robin(const Instance& inst, const CategoryPlan& plan);

struct ConstructResult {
    Allocation target;
    long long exchanges = 0;  // exact distance from the start to the target
};

// Builds an EF1 allocation whose exchange distance from the s-balanced start
// stays within upper_bound_formula(n, s).
ConstructResult construct_ef1_within_bound(const Instance& inst, const Allocation& start);

// Worst-case bounds for identical binary utilities, plus the extremal
// instance (half the agents hold all valuable goods) and its measured
// optimal exchange count.
struct BoundReport {
    int n = 0;
    int s = 0;
    long long lower = 0;
    Rational upper;
    long long achieved = 0;
    std::string formula_tag;
    Instance extremal_instance;
    Allocation extremal_allocation;
};

BoundReport idenbin_bounds(int n, int s);

}  // namespace ef1reform
