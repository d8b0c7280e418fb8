#pragma once

// Helpers for driving the command-line binary and the shared golden-run
// table. Compile with CLI_BINARY_PATH, FIXTURES_DIR and GOLDEN_DIR defined.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace cli_cases {

struct RunResult {
    int status = -1;
    std::string out;
};

inline RunResult run_cli(const std::string& args) {
    const std::string command = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
    return std::string(GOLDEN_DIR) + "/" + name + ".out";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// One deterministic invocation per subcommand and mode.
inline std::vector<std::pair<std::string, std::string>> golden_runs() {
    return {
        {"check_iden", "check --instance " + fixture("iden_six_goods.txt")},
        {"check_weak", "check --instance " + fixture("weakef1_start.txt")},
        {"reformable_no", "reformable --instance " + fixture("unbalanced_no.txt")},
        {"reformable_balanced",
         "reformable --instance " + fixture("balanced_two.txt") + " --size-vector 2,2"},
        {"reformable_oracle",
         "reformable --instance " + fixture("unbalanced_no.txt") + " --oracle"},
        {"optimal_iden", "optimal --instance " + fixture("iden_six_goods.txt")},
        {"optimal_iden_oracle",
         "optimal --instance " + fixture("iden_six_goods.txt") + " --oracle"},
        {"optimal_idenbin", "optimal --instance " + fixture("idenbin_three.txt")},
        {"optimal_infinite", "optimal --instance " + fixture("unbalanced_no.txt")},
        {"oracle_infinite", "oracle --instance " + fixture("unbalanced_no.txt")},
        {"bound_3_3", "bound --n 3 --s 3"},
        {"bound_4_2", "bound --n 4 --s 2"},
        {"construct_three", "construct --instance " + fixture("construct_three.txt")},
        {"weakef1_run", "weakef1 --instance " + fixture("weakef1_start.txt")},
        {"beneficial_yes", "beneficial --instance " + fixture("beneficial_crossed.txt")},
        {"reduce_two_general",
         "reduce --instance " + fixture("source_bmp_yes.txt") + " --target exist-two-general"},
        {"reduce_optimal_two",
         "reduce --instance " + fixture("source_bmp_yes.txt") + " --target optimal-two-general"},
        {"reduce_coloring", "reduce --instance " + fixture("source_coloring_k3.txt") +
                                " --target exist-general-binary"},
        {"reduce_x3c", "reduce --instance " + fixture("source_x3c_yes.txt") +
                           " --target optimal-general-binary"},
        {"reduce_beneficial", "reduce --instance " + fixture("source_minkcov_yes.txt") +
                                  " --target beneficial-binary"},
        {"generate_binary", "generate --seed 42 --n 3 --m 5 --class binary --max-u 1"},
        {"generate_identical", "generate --seed 7 --n 2 --m 6 --class identical --max-u 4"},
    };
}

// Splits a report into (verdict line, rest). The rest is the trace.
inline std::pair<std::string, std::string> split_verdict(const std::string& output) {
    const auto newline = output.find('\n');
    if (newline == std::string::npos) return {output, ""};
    return {output.substr(0, newline), output.substr(newline + 1)};
}

inline std::string write_temp(const std::string& tag, const std::string& content) {
    const std::string path = "/tmp/ef1reform_" + tag + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace cli_cases
