#include "ef1reform/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ef1reform {

long long PartitionEq::half_sum() const {
    long long total = std::accumulate(values.begin(), values.end(), 0LL);
    if (total % 2 != 0)
        throw std::invalid_argument("PartitionEq: values must have an even total");
    return total / 2;
}

namespace {

void validate_partition_eq(const PartitionEq& p) {
    if (p.q < 1) throw std::invalid_argument("partition-eq: q must be positive");
    if (static_cast<int>(p.values.size()) != 2 * p.q)
        throw std::invalid_argument("partition-eq: expected 2q values");
    for (long long v : p.values)
        if (v < 1) throw std::invalid_argument("partition-eq: values must be positive");
    p.half_sum();
}

void validate_bmp(const BalancedMultiPartition& b) {
    if (b.p < 2 || b.q < 1 || b.K < 1)
        throw std::invalid_argument("balanced-multi-partition: need p >= 2, q >= 1, K >= 1");
    if (static_cast<int>(b.values.size()) != b.p * b.q)
        throw std::invalid_argument("balanced-multi-partition: expected pq values");
    long long total = 0;
    for (long long v : b.values) {
        if (v <= b.K || v > 2 * b.K)
            throw std::invalid_argument(
                "balanced-multi-partition: every value must lie in (K, 2K]");
        total += v;
    }
    if (total != static_cast<long long>(b.p) * (b.q + 1) * b.K)
        throw std::invalid_argument("balanced-multi-partition: values must sum to p(q+1)K");
}

void validate_three_partition(const ThreePartition& t) {
    if (t.q < 1 || t.K < 1)
        throw std::invalid_argument("three-partition: need q >= 1, K >= 1");
    if (static_cast<int>(t.values.size()) != 3 * t.q)
        throw std::invalid_argument("three-partition: expected 3q values");
    long long total = 0;
    for (long long v : t.values) {
        if (4 * v <= t.K || 2 * v >= t.K)
            throw std::invalid_argument(
                "three-partition: every value must lie strictly between K/4 and K/2");
        total += v;
    }
    if (total != static_cast<long long>(t.q) * t.K)
        throw std::invalid_argument("three-partition: values must sum to qK");
}

void validate_coloring(const GraphColoring& g) {
    if (g.vertices < 1) throw std::invalid_argument("graph-coloring: need at least one vertex");
    if (g.colors < 3) throw std::invalid_argument("graph-coloring: need at least three colors");
    for (auto [a, b] : g.edges) {
        if (a < 0 || a >= g.vertices || b < 0 || b >= g.vertices)
            throw std::invalid_argument("graph-coloring: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("graph-coloring: self-loops not allowed");
    }
}

void validate_x3c(const ExactCover3& x) {
    if (x.q < 1) throw std::invalid_argument("x3c: q must be positive");
    std::vector<int> occurrences(static_cast<size_t>(3 * x.q), 0);
    for (const auto& set : x.sets) {
        std::set<int> distinct(set.begin(), set.end());
        if (distinct.size() != 3)
            throw std::invalid_argument("x3c: sets must contain three distinct elements");
        for (int e : set) {
            if (e < 0 || e >= 3 * x.q)
                throw std::invalid_argument("x3c: element out of range");
            ++occurrences[static_cast<size_t>(e)];
        }
    }
    for (int count : occurrences)
        if (count < 2)
            throw std::invalid_argument("x3c: every element must appear in at least two sets");
}

void validate_min_k_coverage(const MinKCoverage& m) {
    if (m.q < 1 || m.k < 1 || m.l < 1)
        throw std::invalid_argument("min-k-coverage: k, l, q must be positive");
    if (m.k > m.q) throw std::invalid_argument("min-k-coverage: need k <= q");
    if (m.l > static_cast<int>(m.sets.size()))
        throw std::invalid_argument("min-k-coverage: need l <= number of sets");
    for (const auto& set : m.sets) {
        std::set<int> distinct(set.begin(), set.end());
        if (distinct.size() != set.size())
            throw std::invalid_argument("min-k-coverage: duplicate element in a set");
        for (int e : set)
            if (e < 0 || e >= m.q)
                throw std::invalid_argument("min-k-coverage: element out of range");
    }
}

}  // namespace

void validate_source(const SourceProblem& source) {
    std::visit([](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PartitionEq>) validate_partition_eq(s);
        else if constexpr (std::is_same_v<T, BalancedMultiPartition>) validate_bmp(s);
        else if constexpr (std::is_same_v<T, ThreePartition>) validate_three_partition(s);
        else if constexpr (std::is_same_v<T, GraphColoring>) validate_coloring(s);
        else if constexpr (std::is_same_v<T, ExactCover3>) validate_x3c(s);
        else validate_min_k_coverage(s);
    }, source);
}

std::string source_tag(const SourceProblem& source) {
    return std::visit([](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PartitionEq>) return "partition-eq";
        else if constexpr (std::is_same_v<T, BalancedMultiPartition>) return "balanced-multi-partition";
        else if constexpr (std::is_same_v<T, ThreePartition>) return "three-partition";
        else if constexpr (std::is_same_v<T, GraphColoring>) return "graph-coloring";
        else if constexpr (std::is_same_v<T, ExactCover3>) return "x3c";
        else return "min-k-coverage";
    }, source);
}

std::string reduction_target_name(ReductionTarget target) {
    switch (target) {
        case ReductionTarget::ExistTwoGeneral: return "exist-two-general";
        case ReductionTarget::ExistConstIdentical: return "exist-const-identical";
        case ReductionTarget::ExistGeneralIdentical: return "exist-general-identical";
        case ReductionTarget::ExistGeneralBinary: return "exist-general-binary";
        case ReductionTarget::OptimalTwoGeneral: return "optimal-two-general";
        case ReductionTarget::OptimalConstIdentical: return "optimal-const-identical";
        case ReductionTarget::OptimalGeneralBinary: return "optimal-general-binary";
        case ReductionTarget::BeneficialBinary: return "beneficial-binary";
    }
    return "";
}

std::optional<ReductionTarget> reduction_target_from_name(const std::string& name) {
    for (ReductionTarget t : {ReductionTarget::ExistTwoGeneral, ReductionTarget::ExistConstIdentical,
                              ReductionTarget::ExistGeneralIdentical, ReductionTarget::ExistGeneralBinary,
                              ReductionTarget::OptimalTwoGeneral, ReductionTarget::OptimalConstIdentical,
                              ReductionTarget::OptimalGeneralBinary, ReductionTarget::BeneficialBinary})
        if (reduction_target_name(t) == name) return t;
    return std::nullopt;
}

BalancedMultiPartition gen_balanced_multi_partition(const PartitionEq& partition, int p) {
    validate_partition_eq(partition);
    if (p < 2) throw std::invalid_argument("gen_balanced_multi_partition: need p >= 2");
    const long long k_prime = partition.half_sum();
    for (long long w : partition.values)
        if (w > k_prime)
            throw std::invalid_argument(
                "gen_balanced_multi_partition: an element exceeds half the total; "
                "the source is trivially infeasible");

    const int q = partition.q;
    std::vector<long long> padded = partition.values;
    padded.insert(padded.end(), static_cast<size_t>(p - 2), k_prime);
    padded.insert(padded.end(),
                  static_cast<size_t>(p * q) - padded.size(), 0LL);

    BalancedMultiPartition out;
    out.p = p;
    out.q = q;
    out.K = k_prime + q;
    out.values.reserve(padded.size());
    for (long long w : padded) out.values.push_back(w + out.K + 1);
    validate_bmp(out);
    return out;
}

namespace {

// Two agents, general utilities: goods y_1..y_{2q}, 2K, 0, 0, 0, 2K, 2K for
// agent 2, shifted by 4K for agent 1; size vector (q+2, q+4).
ReducedInstance reduce_two_general(const BalancedMultiPartition& b) {
    if (b.p != 2) throw std::invalid_argument("reduce: this target needs p = 2");
    if (b.q < 2) throw std::invalid_argument("reduce: this target needs q >= 2");
    const int q = b.q;
    const long long K = b.K;
    const int m = 2 * q + 6;

    std::vector<Utility> u2(static_cast<size_t>(m), 0);
    for (int j = 0; j < 2 * q; ++j) u2[static_cast<size_t>(j)] = b.values[static_cast<size_t>(j)];
    u2[static_cast<size_t>(2 * q)] = 2 * K;      // y_{2q+1}
    u2[static_cast<size_t>(2 * q + 1)] = 0;      // y_{2q+2}
    u2[static_cast<size_t>(2 * q + 2)] = 0;
    u2[static_cast<size_t>(2 * q + 3)] = 0;
    u2[static_cast<size_t>(2 * q + 4)] = 2 * K;
    u2[static_cast<size_t>(2 * q + 5)] = 2 * K;

    std::vector<Utility> u1(u2);
    for (Utility& v : u1) v += 4 * K;

    ReducedInstance out{Instance(2, m, {std::move(u1), std::move(u2)}),
                        SizeVector{q + 2, q + 4},
                        std::nullopt,
                        std::nullopt};
    return out;
}

// Three agents, identical utilities: the 2q source values plus three goods
// worth (q+1)K; size vector (q+1, q+1, 1).
ReducedInstance reduce_const_identical(const BalancedMultiPartition& b) {
    if (b.p != 2) throw std::invalid_argument("reduce: this target needs p = 2");
    const int n = 3;
    const int q = b.q;
    const int m = 2 * q + n;
    std::vector<Utility> row(static_cast<size_t>(m), 0);
    for (int j = 0; j < 2 * q; ++j) row[static_cast<size_t>(j)] = b.values[static_cast<size_t>(j)];
    for (int k = 0; k < n; ++k)
        row[static_cast<size_t>(2 * q + k)] = static_cast<long long>(q + 1) * b.K;
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n), row);

    SizeVector sv(static_cast<size_t>(n), 1);
    sv[0] = q + 1;
    sv[1] = q + 1;
    return ReducedInstance{Instance(n, m, std::move(u)), std::move(sv), std::nullopt,
                           std::nullopt};
}

// q+1 agents, identical utilities; all values scaled by five to keep the six
// filler goods (worth K/5 each in the source scale) integral.
ReducedInstance reduce_general_identical(const ThreePartition& t) {
    const int n = t.q + 1;
    const int m = 3 * t.q + 6;
    std::vector<Utility> row(static_cast<size_t>(m), 0);
    for (int j = 0; j < 3 * t.q; ++j)
        row[static_cast<size_t>(j)] = 5 * t.values[static_cast<size_t>(j)];
    for (int k = 0; k < 6; ++k) row[static_cast<size_t>(3 * t.q + k)] = t.K;
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n), row);

    SizeVector sv(static_cast<size_t>(n), 3);
    sv[static_cast<size_t>(n - 1)] = 6;
    return ReducedInstance{Instance(n, m, std::move(u)), std::move(sv), std::nullopt,
                           std::nullopt};
}

// q edge agents (one per edge, valuing that edge's two vertex goods) and k
// color agents (valuing nothing); kp goods of which the first p stand for
// vertices; size vector: 0 per edge agent, p per color agent.
ReducedInstance reduce_general_binary(const GraphColoring& g) {
    const int p = g.vertices;
    const int q = static_cast<int>(g.edges.size());
    const int k = g.colors;
    const int n = q + k;
    const int m = k * p;

    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    for (int r = 0; r < q; ++r) {
        u[static_cast<size_t>(r)][static_cast<size_t>(g.edges[static_cast<size_t>(r)].first)] = 1;
        u[static_cast<size_t>(r)][static_cast<size_t>(g.edges[static_cast<size_t>(r)].second)] = 1;
    }

    SizeVector sv(static_cast<size_t>(n), 0);
    for (int c = 0; c < k; ++c) sv[static_cast<size_t>(q + c)] = p;
    return ReducedInstance{Instance(n, m, std::move(u)), std::move(sv), std::nullopt,
                           std::nullopt};
}

// Balanced two-agent variant: the two-general instance plus 2q+6 worthless
// goods; agent 1 starts with all worthless goods, budget q+2.
ReducedInstance reduce_optimal_two_general(const BalancedMultiPartition& b) {
    ReducedInstance base = reduce_two_general(b);
    const int q = b.q;
    const int m_small = 2 * q + 6;
    const int m = 2 * m_small;

    std::vector<std::vector<Utility>> u(2, std::vector<Utility>(static_cast<size_t>(m), 0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < m_small; ++j)
            u[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                base.instance.u(i, j);

    std::vector<int> pad(static_cast<size_t>(m_small));
    std::iota(pad.begin(), pad.end(), m_small);
    std::vector<int> originals(static_cast<size_t>(m_small));
    std::iota(originals.begin(), originals.end(), 0);

    return ReducedInstance{Instance(2, m, std::move(u)),
                           SizeVector{m_small, m_small},
                           Allocation({pad, originals}),
                           q + 2};
}

// p+1 agents, identical utilities: agent p+1 starts with the pq source goods
// and q+2 goods worth K; the rest start with worthless padding. Budget pq.
ReducedInstance reduce_optimal_const_identical(const BalancedMultiPartition& b) {
    const int p = b.p;
    const int q = b.q;
    const int n = p + 1;
    const int per_agent = p * q + q + 2;
    const int m = n * per_agent;

    std::vector<Utility> row(static_cast<size_t>(m), 0);
    for (int j = 0; j < p * q; ++j) row[static_cast<size_t>(j)] = b.values[static_cast<size_t>(j)];
    for (int j = p * q; j < per_agent; ++j) row[static_cast<size_t>(j)] = b.K;
    std::vector<std::vector<Utility>> u(static_cast<size_t>(n), row);

    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    std::vector<int> special(static_cast<size_t>(per_agent));
    std::iota(special.begin(), special.end(), 0);
    bundles[static_cast<size_t>(n - 1)] = std::move(special);
    int next = per_agent;
    for (int i = 0; i < p; ++i) {
        bundles[static_cast<size_t>(i)].resize(static_cast<size_t>(per_agent));
        std::iota(bundles[static_cast<size_t>(i)].begin(), bundles[static_cast<size_t>(i)].end(),
                  next);
        next += per_agent;
    }

    return ReducedInstance{Instance(n, m, std::move(u)),
                           SizeVector(static_cast<size_t>(n), per_agent),
                           Allocation(std::move(bundles)),
                           static_cast<long long>(p) * q};
}

// 3q+1 agents with binary utilities; good (i, j) is good index i*p + j.
// Element agent i values its first n_i - 2 own goods and every h_j with
// x_i in Y_j; the special agent values nothing. Budget q.
ReducedInstance reduce_optimal_general_binary(const ExactCover3& x) {
    const int q = x.q;
    const int p = static_cast<int>(x.sets.size());
    const int n = 3 * q + 1;
    const int m = n * p;

    std::vector<int> occurrences(static_cast<size_t>(3 * q), 0);
    for (const auto& set : x.sets)
        for (int e : set) ++occurrences[static_cast<size_t>(e)];

    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    const int special = n - 1;
    for (int i = 0; i < 3 * q; ++i) {
        const int own_valuable = occurrences[static_cast<size_t>(i)] - 2;
        for (int j = 0; j < own_valuable; ++j)
            u[static_cast<size_t>(i)][static_cast<size_t>(i * p + j)] = 1;
        for (int j = 0; j < p; ++j) {
            const auto& set = x.sets[static_cast<size_t>(j)];
            if (std::find(set.begin(), set.end(), i) != set.end())
                u[static_cast<size_t>(i)][static_cast<size_t>(special * p + j)] = 1;
        }
    }

    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        bundles[static_cast<size_t>(i)].resize(static_cast<size_t>(p));
        std::iota(bundles[static_cast<size_t>(i)].begin(), bundles[static_cast<size_t>(i)].end(),
                  i * p);
    }

    return ReducedInstance{Instance(n, m, std::move(u)),
                           SizeVector(static_cast<size_t>(n), p),
                           Allocation(std::move(bundles)),
                           q};
}

// Agents a_{1,1..q}, a_{2,1..k}, a_{3,1..p}, a_{4,1..p-l}; agent t holds
// goods 2t and 2t+1. Good 2t+1 is the "tradable" one.
ReducedInstance reduce_beneficial_binary(const MinKCoverage& c) {
    const int q = c.q;
    const int k = c.k;
    const int p = static_cast<int>(c.sets.size());
    const int l = c.l;
    const int n = 2 * p + q + k - l;
    const int m = 2 * n;

    const int group1 = 0;           // q agents, one per element
    const int group2 = q;           // k agents
    const int group3 = q + k;       // p agents, one per set
    const int group4 = q + k + p;   // p - l agents

    auto good0 = [](int agent) { return 2 * agent; };
    auto good1 = [](int agent) { return 2 * agent + 1; };

    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < k; ++j)
            u[static_cast<size_t>(group1 + i)][static_cast<size_t>(good1(group2 + j))] = 1;
        for (int j = 0; j < p; ++j) {
            const auto& set = c.sets[static_cast<size_t>(j)];
            if (std::find(set.begin(), set.end(), i) != set.end()) {
                u[static_cast<size_t>(group1 + i)][static_cast<size_t>(good0(group3 + j))] = 1;
                u[static_cast<size_t>(group1 + i)][static_cast<size_t>(good1(group3 + j))] = 1;
            }
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < q; ++j)
            u[static_cast<size_t>(group2 + i)][static_cast<size_t>(good1(group1 + j))] = 1;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p - l; ++j)
            u[static_cast<size_t>(group3 + i)][static_cast<size_t>(good1(group4 + j))] = 1;
    for (int i = 0; i < p - l; ++i)
        for (int j = 0; j < p; ++j)
            u[static_cast<size_t>(group4 + i)][static_cast<size_t>(good1(group3 + j))] = 1;

    std::vector<std::vector<int>> bundles(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) bundles[static_cast<size_t>(t)] = {good0(t), good1(t)};

    return ReducedInstance{Instance(n, m, std::move(u)),
                           SizeVector(static_cast<size_t>(n), 2),
                           Allocation(std::move(bundles)),
                           std::nullopt};
}

}  // namespace

ReducedInstance reduce(const SourceProblem& source, ReductionTarget target) {
    validate_source(source);
    switch (target) {
        case ReductionTarget::ExistTwoGeneral:
            if (auto* b = std::get_if<BalancedMultiPartition>(&source)) return reduce_two_general(*b);
            break;
        case ReductionTarget::ExistConstIdentical:
            if (auto* b = std::get_if<BalancedMultiPartition>(&source))
                return reduce_const_identical(*b);
            break;
        case ReductionTarget::ExistGeneralIdentical:
            if (auto* t = std::get_if<ThreePartition>(&source)) return reduce_general_identical(*t);
            break;
        case ReductionTarget::ExistGeneralBinary:
            if (auto* g = std::get_if<GraphColoring>(&source)) return reduce_general_binary(*g);
            break;
        case ReductionTarget::OptimalTwoGeneral:
            if (auto* b = std::get_if<BalancedMultiPartition>(&source))
                return reduce_optimal_two_general(*b);
            break;
        case ReductionTarget::OptimalConstIdentical:
            if (auto* b = std::get_if<BalancedMultiPartition>(&source))
                return reduce_optimal_const_identical(*b);
            break;
        case ReductionTarget::OptimalGeneralBinary:
            if (auto* x = std::get_if<ExactCover3>(&source))
                return reduce_optimal_general_binary(*x);
            break;
        case ReductionTarget::BeneficialBinary:
            if (auto* c = std::get_if<MinKCoverage>(&source)) return reduce_beneficial_binary(*c);
            break;
    }
    throw std::invalid_argument("reduce: source tag '" + source_tag(source) +
                                "' is incompatible with target '" +
                                reduction_target_name(target) + "'");
}

Instance random_instance(std::uint64_t seed, int n, int m, UtilityClass cls, Utility max_u) {
    if (n < 2 || m < 0 || max_u < 0)
        throw std::invalid_argument("random_instance: bad parameters");
    std::mt19937_64 rng(seed);
    const Utility cap = (cls == UtilityClass::Binary || cls == UtilityClass::IdenticalBinary)
                            ? std::min<Utility>(1, max_u)
                            : max_u;
    auto draw = [&]() { return static_cast<Utility>(rng() % static_cast<std::uint64_t>(cap + 1)); };

    std::vector<std::vector<Utility>> u(static_cast<size_t>(n),
                                        std::vector<Utility>(static_cast<size_t>(m), 0));
    const bool identical =
        cls == UtilityClass::Identical || cls == UtilityClass::IdenticalBinary;
    for (int g = 0; g < m; ++g) u[0][static_cast<size_t>(g)] = draw();
    for (int i = 1; i < n; ++i)
        for (int g = 0; g < m; ++g)
            u[static_cast<size_t>(i)][static_cast<size_t>(g)] =
                identical ? u[0][static_cast<size_t>(g)] : draw();
    return Instance(n, m, std::move(u));
}

namespace {

bool partition_eq_answer(const PartitionEq& p) {
    const long long target = p.half_sum();
    const int total = 2 * p.q;
    // Choose q indices for the first half.
    std::vector<int> chosen;
    std::function<bool(int, long long)> pick = [&](int start, long long sum) {
        if (static_cast<int>(chosen.size()) == p.q) return sum == target;
        for (int i = start; i < total; ++i) {
            chosen.push_back(i);
            if (pick(i + 1, sum + p.values[static_cast<size_t>(i)])) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0, 0);
}

bool grouped_partition_answer(const std::vector<long long>& values, int parts, int per_part,
                              long long part_sum) {
    // Backtracking with a canonical rule: the lowest unassigned index opens
    // the next group.
    std::vector<char> used(values.size(), 0);
    std::function<bool(int)> fill_groups = [&](int remaining_groups) -> bool {
        if (remaining_groups == 0) return true;
        int anchor = -1;
        for (size_t i = 0; i < values.size(); ++i)
            if (!used[i]) {
                anchor = static_cast<int>(i);
                break;
            }
        used[static_cast<size_t>(anchor)] = 1;
        std::vector<int> group = {anchor};
        std::function<bool(int, long long)> extend = [&](int start, long long sum) -> bool {
            if (static_cast<int>(group.size()) == per_part)
                return sum == part_sum && fill_groups(remaining_groups - 1);
            if (sum > part_sum) return false;
            for (int i = start; i < static_cast<int>(values.size()); ++i) {
                if (used[static_cast<size_t>(i)]) continue;
                used[static_cast<size_t>(i)] = 1;
                group.push_back(i);
                if (extend(i + 1, sum + values[static_cast<size_t>(i)])) return true;
                group.pop_back();
                used[static_cast<size_t>(i)] = 0;
            }
            return false;
        };
        const bool ok = extend(anchor + 1, values[static_cast<size_t>(anchor)]);
        if (!ok) used[static_cast<size_t>(anchor)] = 0;
        return ok;
    };
    return fill_groups(parts);
}

bool coloring_answer(const GraphColoring& g) {
    std::vector<int> color(static_cast<size_t>(g.vertices), -1);
    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == g.vertices) return true;
        for (int c = 0; c < g.colors; ++c) {
            bool ok = true;
            for (auto [a, b] : g.edges) {
                const int other = (a == v) ? b : (b == v ? a : -1);
                if (other >= 0 && color[static_cast<size_t>(other)] == c) ok = false;
            }
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (assign(v + 1)) return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return assign(0);
}

bool x3c_answer(const ExactCover3& x) {
    const int p = static_cast<int>(x.sets.size());
    std::vector<int> chosen;
    std::vector<char> covered(static_cast<size_t>(3 * x.q), 0);
    std::function<bool(int)> pick = [&](int start) -> bool {
        if (static_cast<int>(chosen.size()) == x.q)
            return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
        for (int i = start; i < p; ++i) {
            const auto& set = x.sets[static_cast<size_t>(i)];
            bool clash = false;
            for (int e : set)
                if (covered[static_cast<size_t>(e)]) clash = true;
            if (clash) continue;
            for (int e : set) covered[static_cast<size_t>(e)] = 1;
            chosen.push_back(i);
            if (pick(i + 1)) return true;
            chosen.pop_back();
            for (int e : set) covered[static_cast<size_t>(e)] = 0;
        }
        return false;
    };
    return pick(0);
}

bool min_k_coverage_answer(const MinKCoverage& m) {
    const int p = static_cast<int>(m.sets.size());
    std::vector<int> chosen;
    std::function<bool(int)> pick = [&](int start) -> bool {
        if (static_cast<int>(chosen.size()) == m.l) {
            std::set<int> covered;
            for (int i : chosen)
                covered.insert(m.sets[static_cast<size_t>(i)].begin(),
                               m.sets[static_cast<size_t>(i)].end());
            return static_cast<int>(covered.size()) <= m.k;
        }
        for (int i = start; i < p; ++i) {
            chosen.push_back(i);
            if (pick(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0);
}

}  // namespace

bool solve_source_bruteforce(const SourceProblem& source) {
    validate_source(source);
    return std::visit([](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PartitionEq>) {
            return partition_eq_answer(s);
        } else if constexpr (std::is_same_v<T, BalancedMultiPartition>) {
            return grouped_partition_answer(s.values, s.p, s.q,
                                            static_cast<long long>(s.q + 1) * s.K);
        } else if constexpr (std::is_same_v<T, ThreePartition>) {
            return grouped_partition_answer(s.values, s.q, 3, s.K);
        } else if constexpr (std::is_same_v<T, GraphColoring>) {
            return coloring_answer(s);
        } else if constexpr (std::is_same_v<T, ExactCover3>) {
            return x3c_answer(s);
        } else {
            return min_k_coverage_answer(s);
        }
    }, source);
}

}  // namespace ef1reform
