#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ef1reform/core.hpp"
#include "ef1reform/generators.hpp"

namespace ef1reform {

// Parse failure with a file/line-precise message.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_ = 0;
};

// One parsed "ef1reform/1" container: either an instance (utilities plus
// optional allocation / size vector / budget) or a source-problem envelope.
struct InstanceFile {
    std::string version = "ef1reform/1";
    std::optional<Instance> instance;
    std::optional<Allocation> allocation;
    std::optional<SizeVector> size_vector;
    std::optional<long long> budget;
    std::optional<SourceProblem> source;
};

InstanceFile parse_instance_file(std::istream& in, const std::string& filename = "<input>");
InstanceFile load_instance_file(const std::string& path);

// Canonical serialization: UTF-8, LF line endings, fixed key order.
std::string serialize_instance_file(const InstanceFile& file);

// Exchange trace lines, one step per line: "t: (i,j) g<a><->g<b>".
std::string format_trace(const ExchangeTrace& trace);
ExchangeTrace parse_trace(std::istream& in, const std::string& filename = "<trace>");
ExchangeTrace load_trace(const std::string& path);

}  // namespace ef1reform
