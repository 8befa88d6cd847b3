#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gerst {

enum class Task { Verify, BracketA, BracketTaft, Hopf, OracleCompare, Dims };
enum class Format { Json, Csv, Text };

struct RunConfig {
    int p = 3;
    Task task = Task::Verify;
    int max_degree = 3;
    Format format = Format::Json;
    std::optional<std::string> out;
    unsigned seed = 1;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Report {
    nlohmann::json doc;
    int exit_code = 0;
};

/// Throws UsageError on an invalid configuration.
void validate(const RunConfig& cfg);
Report run(const RunConfig& cfg);
std::string render(const Report& r, Format format);

/// Parses arguments, runs, writes the report; returns the process exit code.
int cli_main(int argc, char** argv);

}  // namespace gerst
