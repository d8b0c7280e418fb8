#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ef1reform/io.hpp"
#include "ef1reform/optimal.hpp"
#include "ef1reform/oracle.hpp"
#include "ef1reform/reformability.hpp"
#include "ef1reform/weak_ef1.hpp"
#include "ef1reform/worst_case.hpp"

namespace {

using namespace ef1reform;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

struct CommonOptions {
    std::string instance_path;
    std::string size_vector_csv;
    std::string replay_path;
    long long budget = 5'000'000;
    std::uint64_t seed = 0;
    bool force_oracle = false;
};

SizeVector parse_csv_sizes(const std::string& csv) {
    SizeVector sv;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ','))
        sv.push_back(std::stoi(token));
    return sv;
}

const Instance& need_instance(const InstanceFile& file) {
    if (!file.instance) throw std::invalid_argument("input file carries no instance");
    return *file.instance;
}

const Allocation& need_allocation(const InstanceFile& file) {
    if (!file.allocation) throw std::invalid_argument("input file carries no allocation");
    return *file.allocation;
}

// Size vector precedence: --size-vector flag, file field, file allocation.
SizeVector resolve_size_vector(const InstanceFile& file, const CommonOptions& opts) {
    if (!opts.size_vector_csv.empty()) return parse_csv_sizes(opts.size_vector_csv);
    if (file.size_vector) return *file.size_vector;
    if (file.allocation) return size_vector(*file.allocation);
    throw std::invalid_argument("no size vector: pass --size-vector or add one to the file");
}

int run_check(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    Allocation alloc = need_allocation(file);
    if (!opts.replay_path.empty()) alloc = apply_trace(alloc, load_trace(opts.replay_path));
    std::cout << (is_ef1(inst, alloc) ? "YES" : "NO") << "\n";
    std::cout << "weak-ef1: " << (is_weak_ef1(inst, alloc) ? "YES" : "NO") << "\n";
    return kExitOk;
}

int run_reformable(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    const SizeVector sv = resolve_size_vector(file, opts);
    const OracleBudget budget{opts.budget};
    const bool answer = opts.force_oracle ? exists_ef1_bruteforce(inst, sv, budget)
                                          : reformable(inst, sv, budget);
    std::cout << (answer ? "YES" : "NO") << "\n";
    return kExitOk;
}

int run_optimal(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    const Allocation& start = need_allocation(file);
    const OracleBudget budget{opts.budget};

    OptimalResult result;
    if (opts.force_oracle) {
        BfsWitness w = min_exchanges_bfs_trace(inst, start, budget);
        result.count = w.count;
        result.trace = std::move(w.trace);
    } else {
        result = optimal_exchanges(inst, start, budget);
    }
    std::cout << result.count.to_string() << "\n";
    if (result.trace) std::cout << format_trace(*result.trace);
    return kExitOk;
}

int run_oracle(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    const OracleBudget budget{opts.budget};
    if (file.allocation) {
        BfsWitness w = min_exchanges_bfs_trace(inst, *file.allocation, budget);
        std::cout << w.count.to_string() << "\n";
        if (w.trace) std::cout << format_trace(*w.trace);
    } else {
        const SizeVector sv = resolve_size_vector(file, opts);
        std::cout << (exists_ef1_bruteforce(inst, sv, budget) ? "YES" : "NO") << "\n";
    }
    return kExitOk;
}

int run_bound(int n, int s) {
    std::cout << upper_bound_formula(n, s) << "\n";
    const BoundReport report = idenbin_bounds(n, s);
    std::cout << "idenbin-lower: " << report.lower << "\n";
    std::cout << "idenbin-upper: " << report.upper.to_string() << "\n";
    std::cout << "idenbin-achieved: " << report.achieved << "\n";
    std::cout << "idenbin-case: " << report.formula_tag << "\n";
    return kExitOk;
}

int run_construct(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    const Allocation& start = need_allocation(file);
    const ConstructResult result = construct_ef1_within_bound(inst, start);
    std::cout << result.exchanges << "\n";
    std::cout << format_trace(realize_exchange_plan(start, result.target));
    return kExitOk;
}

int run_weakef1(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    const Allocation& start = need_allocation(file);
    const WeakEf1Result result = balanced_exchange_loop(inst, start);
    std::cout << result.trace.size() << "\n";
    ExchangeTrace trace;
    for (const TraceStep& step : result.trace)
        trace.push_back(ExchangeStep{step.strong_agent, step.weak_agent,
                                     step.good_from_strong, step.good_from_weak});
    std::cout << format_trace(trace);
    return kExitOk;
}

int run_beneficial(const CommonOptions& opts) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    const Instance& inst = need_instance(file);
    const Allocation& start = need_allocation(file);
    const BeneficialResult result = beneficial_reachable_ef1(inst, start, OracleBudget{opts.budget});
    std::cout << (result.reachable ? "YES" : "NO") << "\n";
    if (result.trace) std::cout << format_trace(*result.trace);
    return kExitOk;
}

int run_reduce(const CommonOptions& opts, const std::string& target_name) {
    const InstanceFile file = load_instance_file(opts.instance_path);
    if (!file.source) throw std::invalid_argument("input file carries no source envelope");
    const auto target = reduction_target_from_name(target_name);
    if (!target) throw std::invalid_argument("unknown reduction target '" + target_name + "'");
    ReducedInstance reduced = reduce(*file.source, *target);

    InstanceFile out;
    out.instance = std::move(reduced.instance);
    out.size_vector = std::move(reduced.size_vector);
    out.allocation = std::move(reduced.initial_allocation);
    out.budget = reduced.budget_k;
    std::cout << serialize_instance_file(out);
    return kExitOk;
}

int run_generate(const CommonOptions& opts, int n, int m, const std::string& cls_name,
                 long long max_u) {
    UtilityClass cls = UtilityClass::General;
    if (cls_name == "general") cls = UtilityClass::General;
    else if (cls_name == "identical") cls = UtilityClass::Identical;
    else if (cls_name == "binary") cls = UtilityClass::Binary;
    else if (cls_name == "identical-binary") cls = UtilityClass::IdenticalBinary;
    else throw std::invalid_argument("unknown utility class '" + cls_name + "'");

    InstanceFile out;
    out.instance = random_instance(opts.seed, n, m, cls, max_u);
    std::cout << serialize_instance_file(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for reforming allocations of indivisible goods into EF1 "
                 "via pairwise exchanges"};
    app.require_subcommand(1);

    CommonOptions opts;
    int bound_n = 2;
    int bound_s = 1;
    std::string reduce_target;
    int gen_n = 2, gen_m = 4;
    std::string gen_class = "general";
    long long gen_max_u = 3;

    auto add_common = [&](CLI::App* cmd, bool needs_instance) {
        if (needs_instance)
            cmd->add_option("--instance", opts.instance_path, "instance file")->required();
        cmd->add_option("--budget", opts.budget, "search state budget");
        return cmd;
    };

    auto* check = add_common(app.add_subcommand("check", "EF1 / weak-EF1 verdicts"), true);
    check->add_option("--replay", opts.replay_path, "apply a trace before checking");
    auto* reformable_cmd =
        add_common(app.add_subcommand("reformable", "does an EF1 allocation with the size vector exist"), true);
    reformable_cmd->add_option("--size-vector", opts.size_vector_csv, "comma-separated sizes");
    reformable_cmd->add_flag("--oracle", opts.force_oracle, "force the brute-force path");
    auto* optimal_cmd =
        add_common(app.add_subcommand("optimal", "minimum exchanges to reach EF1"), true);
    optimal_cmd->add_flag("--oracle", opts.force_oracle, "force the brute-force path");
    auto* oracle_cmd = add_common(
        app.add_subcommand("oracle", "brute-force verdicts (search, no shortcuts)"), true);
    oracle_cmd->add_option("--size-vector", opts.size_vector_csv, "comma-separated sizes");
    auto* bound_cmd = app.add_subcommand("bound", "worst-case exchange bounds");
    bound_cmd->add_option("--n", bound_n, "number of agents")->required();
    bound_cmd->add_option("--s", bound_s, "goods per agent")->required();
    add_common(app.add_subcommand("construct", "EF1 target within the worst-case bound"), true);
    add_common(app.add_subcommand("weakef1", "balanced exchange loop for identical utilities"), true);
    add_common(app.add_subcommand("beneficial", "EF1 reachability via beneficial exchanges"), true);
    auto* reduce_cmd = add_common(app.add_subcommand("reduce", "build an instance from a source problem"), true);
    reduce_cmd->add_option("--target", reduce_target, "reduction target")->required();
    auto* generate_cmd = app.add_subcommand("generate", "seeded random instance");
    generate_cmd->add_option("--seed", opts.seed, "random seed");
    generate_cmd->add_option("--n", gen_n, "number of agents");
    generate_cmd->add_option("--m", gen_m, "number of goods");
    generate_cmd->add_option("--class", gen_class,
                             "general | identical | binary | identical-binary");
    generate_cmd->add_option("--max-u", gen_max_u, "maximum utility value");

    CLI11_PARSE(app, argc, argv);

    const auto started = std::chrono::steady_clock::now();
    int status = kExitOk;
    try {
        if (app.got_subcommand("check")) status = run_check(opts);
        else if (app.got_subcommand("reformable")) status = run_reformable(opts);
        else if (app.got_subcommand("optimal")) status = run_optimal(opts);
        else if (app.got_subcommand("oracle")) status = run_oracle(opts);
        else if (app.got_subcommand("bound")) status = run_bound(bound_n, bound_s);
        else if (app.got_subcommand("construct")) status = run_construct(opts);
        else if (app.got_subcommand("weakef1")) status = run_weakef1(opts);
        else if (app.got_subcommand("beneficial")) status = run_beneficial(opts);
        else if (app.got_subcommand("reduce")) status = run_reduce(opts, reduce_target);
        else if (app.got_subcommand("generate"))
            status = run_generate(opts, gen_n, gen_m, gen_class, gen_max_u);
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return status;
}
