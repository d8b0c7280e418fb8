#include "ef1reform/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ef1reform {

ParseError::ParseError(const std::string& file, int line, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct LineReader {
    std::istream& in;
    std::string file;
    int line_no = 0;

    // Next significant line (comments and blanks skipped); false at EOF.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            const auto first = raw.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (raw[first] == '#') continue;
            const auto last = raw.find_last_not_of(" \t");
            out = raw.substr(first, last - first + 1);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(file, line_no, message);
    }
};

std::vector<long long> parse_integers(LineReader& reader, const std::string& text) {
    std::vector<long long> out;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            reader.fail("expected an integer, got '" + token + "'");
        }
    }
    return out;
}

long long parse_single_integer(LineReader& reader, const std::string& text,
                               const std::string& key) {
    const auto values = parse_integers(reader, text);
    if (values.size() != 1) reader.fail("key '" + key + "' expects a single integer");
    return values[0];
}

// Splits "key: rest"; returns false when no colon is present.
bool split_key(const std::string& line, std::string& key, std::string& rest) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = line.substr(0, colon);
    const auto key_end = key.find_last_not_of(" \t");
    key = key_end == std::string::npos ? "" : key.substr(0, key_end + 1);
    rest = line.substr(colon + 1);
    const auto rest_begin = rest.find_first_not_of(" \t");
    rest = rest_begin == std::string::npos ? "" : rest.substr(rest_begin);
    return true;
}

SourceProblem parse_source(LineReader& reader, const std::string& tag) {
    std::optional<long long> p, q, K, k, l, vertices, colors;
    std::optional<std::vector<long long>> values;
    std::vector<std::vector<long long>> rows;
    bool have_rows = false;

    std::string line;
    while (reader.next(line)) {
        std::string key, rest;
        if (!split_key(line, key, rest)) reader.fail("expected 'key: value'");
        if (key == "p") p = parse_single_integer(reader, rest, key);
        else if (key == "q") q = parse_single_integer(reader, rest, key);
        else if (key == "K") K = parse_single_integer(reader, rest, key);
        else if (key == "k") k = parse_single_integer(reader, rest, key);
        else if (key == "l") l = parse_single_integer(reader, rest, key);
        else if (key == "vertices") vertices = parse_single_integer(reader, rest, key);
        else if (key == "colors") colors = parse_single_integer(reader, rest, key);
        else if (key == "values") values = parse_integers(reader, rest);
        else if (key == "edges" || key == "sets") {
            const long long count = parse_single_integer(reader, rest, key);
            if (count < 0) reader.fail("'" + key + "' count must be non-negative");
            for (long long i = 0; i < count; ++i) {
                std::string row;
                if (!reader.next(row)) reader.fail("unexpected end of file inside '" + key + "'");
                if (row == "-") rows.emplace_back();
                else rows.push_back(parse_integers(reader, row));
            }
            have_rows = true;
        } else {
            reader.fail("unknown key '" + key + "' in source envelope");
        }
    }

    auto require = [&](const std::optional<long long>& field, const char* name) {
        if (!field) reader.fail(std::string("source '") + tag + "' requires key '" + name + "'");
        return *field;
    };
    auto to_ints = [&](const std::vector<long long>& xs) {
        std::vector<int> out;
        out.reserve(xs.size());
        for (long long x : xs) out.push_back(static_cast<int>(x));
        return out;
    };

    try {
        if (tag == "partition-eq") {
            PartitionEq s;
            s.q = static_cast<int>(require(q, "q"));
            if (!values) reader.fail("source 'partition-eq' requires key 'values'");
            s.values = *values;
            validate_source(SourceProblem{s});
            return s;
        }
        if (tag == "balanced-multi-partition") {
            BalancedMultiPartition s;
            s.p = static_cast<int>(require(p, "p"));
            s.q = static_cast<int>(require(q, "q"));
            s.K = require(K, "K");
            if (!values) reader.fail("source 'balanced-multi-partition' requires key 'values'");
            s.values = *values;
            validate_source(SourceProblem{s});
            return s;
        }
        if (tag == "three-partition") {
            ThreePartition s;
            s.q = static_cast<int>(require(q, "q"));
            s.K = require(K, "K");
            if (!values) reader.fail("source 'three-partition' requires key 'values'");
            s.values = *values;
            validate_source(SourceProblem{s});
            return s;
        }
        if (tag == "graph-coloring") {
            GraphColoring s;
            s.vertices = static_cast<int>(require(vertices, "vertices"));
            s.colors = static_cast<int>(require(colors, "colors"));
            if (!have_rows) reader.fail("source 'graph-coloring' requires key 'edges'");
            for (const auto& row : rows) {
                if (row.size() != 2) reader.fail("each edge row needs exactly two endpoints");
                s.edges.emplace_back(static_cast<int>(row[0]), static_cast<int>(row[1]));
            }
            validate_source(SourceProblem{s});
            return s;
        }
        if (tag == "x3c") {
            ExactCover3 s;
            s.q = static_cast<int>(require(q, "q"));
            if (!have_rows) reader.fail("source 'x3c' requires key 'sets'");
            for (const auto& row : rows) {
                if (row.size() != 3) reader.fail("each x3c set row needs exactly three elements");
                s.sets.push_back({static_cast<int>(row[0]), static_cast<int>(row[1]),
                                  static_cast<int>(row[2])});
            }
            validate_source(SourceProblem{s});
            return s;
        }
        if (tag == "min-k-coverage") {
            MinKCoverage s;
            s.k = static_cast<int>(require(k, "k"));
            s.l = static_cast<int>(require(l, "l"));
            s.q = static_cast<int>(require(q, "q"));
            if (!have_rows) reader.fail("source 'min-k-coverage' requires key 'sets'");
            for (const auto& row : rows) s.sets.push_back(to_ints(row));
            validate_source(SourceProblem{s});
            return s;
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        reader.fail(e.what());
    }
    reader.fail("unknown source tag '" + tag + "'");
}

}  // namespace

InstanceFile parse_instance_file(std::istream& in, const std::string& filename) {
    LineReader reader{in, filename, 0};
    std::string line;
    if (!reader.next(line)) reader.fail("empty file; expected version line 'ef1reform/1'");
    if (line != "ef1reform/1") reader.fail("unsupported version line '" + line + "'");

    InstanceFile file;
    std::optional<int> n, m;
    std::optional<std::vector<std::vector<Utility>>> utilities;
    std::optional<std::vector<std::vector<int>>> bundles;

    while (reader.next(line)) {
        std::string key, rest;
        if (!split_key(line, key, rest)) reader.fail("expected 'key: value'");

        if (key == "source") {
            if (n || m) reader.fail("a source envelope cannot follow instance keys");
            file.source = parse_source(reader, rest);
            return file;
        }
        if (key == "n") {
            n = static_cast<int>(parse_single_integer(reader, rest, key));
        } else if (key == "m") {
            m = static_cast<int>(parse_single_integer(reader, rest, key));
        } else if (key == "utilities") {
            if (!n || !m) reader.fail("'utilities' requires 'n' and 'm' first");
            std::vector<std::vector<Utility>> rows;
            for (int i = 0; i < *n; ++i) {
                std::string row;
                if (!reader.next(row)) reader.fail("unexpected end of file inside 'utilities'");
                std::vector<long long> parsed =
                    row == "-" ? std::vector<long long>{} : parse_integers(reader, row);
                if (static_cast<int>(parsed.size()) != *m)
                    reader.fail("utility row " + std::to_string(i) + " needs exactly " +
                                std::to_string(*m) + " entries");
                rows.emplace_back(parsed.begin(), parsed.end());
            }
            utilities = std::move(rows);
        } else if (key == "allocation") {
            if (!n) reader.fail("'allocation' requires 'n' first");
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < *n; ++i) {
                std::string row;
                if (!reader.next(row)) reader.fail("unexpected end of file inside 'allocation'");
                std::vector<int> bundle;
                if (row != "-")
                    for (long long g : parse_integers(reader, row))
                        bundle.push_back(static_cast<int>(g));
                rows.push_back(std::move(bundle));
            }
            bundles = std::move(rows);
        } else if (key == "size_vector") {
            SizeVector sv;
            for (long long v : parse_integers(reader, rest)) sv.push_back(static_cast<int>(v));
            file.size_vector = std::move(sv);
        } else if (key == "budget") {
            file.budget = parse_single_integer(reader, rest, key);
        } else {
            reader.fail("unknown key '" + key + "'");
        }
    }

    if (!utilities) reader.fail("missing 'utilities'");
    try {
        file.instance = Instance(*n, *m, std::move(*utilities));
        if (bundles) {
            file.allocation = Allocation(std::move(*bundles));
            file.allocation->validate_for(*file.instance);
        }
        if (file.size_vector) {
            if (static_cast<int>(file.size_vector->size()) != *n)
                throw std::invalid_argument("size_vector length must equal n");
            long long total = 0;
            for (int v : *file.size_vector) {
                if (v < 0) throw std::invalid_argument("size_vector entries must be non-negative");
                total += v;
            }
            if (total != *m) throw std::invalid_argument("size_vector must sum to m");
        }
    } catch (const std::exception& e) {
        reader.fail(e.what());
    }
    return file;
}

InstanceFile load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_instance_file(in, path);
}

namespace {

void serialize_source(std::ostringstream& out, const SourceProblem& source) {
    out << "source: " << source_tag(source) << "\n";
    std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        auto write_values = [&](const std::vector<long long>& values) {
            out << "values:";
            for (long long v : values) out << " " << v;
            out << "\n";
        };
        if constexpr (std::is_same_v<T, PartitionEq>) {
            out << "q: " << s.q << "\n";
            write_values(s.values);
        } else if constexpr (std::is_same_v<T, BalancedMultiPartition>) {
            out << "p: " << s.p << "\n";
            out << "q: " << s.q << "\n";
            out << "K: " << s.K << "\n";
            write_values(s.values);
        } else if constexpr (std::is_same_v<T, ThreePartition>) {
            out << "q: " << s.q << "\n";
            out << "K: " << s.K << "\n";
            write_values(s.values);
        } else if constexpr (std::is_same_v<T, GraphColoring>) {
            out << "vertices: " << s.vertices << "\n";
            out << "colors: " << s.colors << "\n";
            out << "edges: " << s.edges.size() << "\n";
            for (auto [a, b] : s.edges) out << a << " " << b << "\n";
        } else if constexpr (std::is_same_v<T, ExactCover3>) {
            out << "q: " << s.q << "\n";
            out << "sets: " << s.sets.size() << "\n";
            for (const auto& set : s.sets) out << set[0] << " " << set[1] << " " << set[2] << "\n";
        } else {
            out << "k: " << s.k << "\n";
            out << "l: " << s.l << "\n";
            out << "q: " << s.q << "\n";
            out << "sets: " << s.sets.size() << "\n";
            for (const auto& set : s.sets) {
                if (set.empty()) {
                    out << "-\n";
                    continue;
                }
                for (size_t i = 0; i < set.size(); ++i)
                    out << (i ? " " : "") << set[i];
                out << "\n";
            }
        }
    }, source);
}

}  // namespace

std::string serialize_instance_file(const InstanceFile& file) {
    std::ostringstream out;
    out << file.version << "\n";
    if (file.source) {
        serialize_source(out, *file.source);
        return out.str();
    }
    if (!file.instance)
        throw std::invalid_argument("serialize_instance_file: neither instance nor source set");
    const Instance& inst = *file.instance;
    out << "n: " << inst.num_agents << "\n";
    out << "m: " << inst.num_goods << "\n";
    out << "utilities:\n";
    for (int i = 0; i < inst.num_agents; ++i) {
        if (inst.num_goods == 0) {
            out << "-\n";
            continue;
        }
        for (int g = 0; g < inst.num_goods; ++g) out << (g ? " " : "") << inst.u(i, g);
        out << "\n";
    }
    if (file.allocation) {
        out << "allocation:\n";
        for (const auto& bundle : file.allocation->bundles) {
            if (bundle.empty()) {
                out << "-\n";
                continue;
            }
            for (size_t i = 0; i < bundle.size(); ++i) out << (i ? " " : "") << bundle[i];
            out << "\n";
        }
    }
    if (file.size_vector) {
        out << "size_vector:";
        for (int v : *file.size_vector) out << " " << v;
        out << "\n";
    }
    if (file.budget) out << "budget: " << *file.budget << "\n";
    return out.str();
}

std::string format_trace(const ExchangeTrace& trace) {
    std::ostringstream out;
    for (size_t t = 0; t < trace.size(); ++t)
        out << (t + 1) << ": (" << trace[t].agent_a << "," << trace[t].agent_b << ") g"
            << trace[t].good_a << "<->g" << trace[t].good_b << "\n";
    return out.str();
}

ExchangeTrace parse_trace(std::istream& in, const std::string& filename) {
    LineReader reader{in, filename, 0};
    ExchangeTrace trace;
    std::string line;
    while (reader.next(line)) {
        ExchangeStep step;
        long long index = 0;
        char c = 0;
        std::istringstream s(line);
        if (!(s >> index >> c) || c != ':') reader.fail("expected 't: (i,j) gA<->gB'");
        std::string rest;
        std::getline(s, rest);
        int a, b, ga, gb;
        if (std::sscanf(rest.c_str(), " (%d,%d) g%d<->g%d", &a, &b, &ga, &gb) != 4)
            reader.fail("expected 't: (i,j) gA<->gB'");
        step.agent_a = a;
        step.agent_b = b;
        step.good_a = ga;
        step.good_b = gb;
        if (index != static_cast<long long>(trace.size()) + 1)
            reader.fail("trace steps must be numbered consecutively from 1");
        trace.push_back(step);
    }
    return trace;
}

ExchangeTrace load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_trace(in, path);
}

}  // namespace ef1reform
