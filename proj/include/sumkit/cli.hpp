#ifndef SUMKIT_CLI_HPP
#define SUMKIT_CLI_HPP

#include <map>
#include <string>
#include <vector>

#include "sumkit/sequence.hpp"

namespace sumkit {
namespace cli {

enum class Command { Accel, Resum, Pade, Heat, Anharmonic, Casimir, Quintic, TwoLevel, Catalog };
enum class Format { Table, Csv, Json };

struct RunConfig {
    Command command = Command::Catalog;
    std::map<std::string, std::string> params;
    Format format = Format::Table;
    int digits = 0; // 0 = take RESUM_DIGITS or the 50-digit default
};

struct RunResult {
    int exit_code = 0;
    std::string output;
    std::string error;
};

/// Dispatch a parsed configuration. Deterministic output for fixed config
/// and digits; exit 2 for invalid input, 3 for computation failures
/// surfaced from the modules.
RunResult run(const RunConfig& config);

Command parse_command(const std::string& name);
Format parse_format(const std::string& name);

/// Core catalog plus the physics-backed entries.
CoefficientSequence full_catalog(const std::string& name);
std::vector<std::pair<std::string, std::string>> full_catalog_listing();

int default_digits();

} // namespace cli
} // namespace sumkit

#endif
