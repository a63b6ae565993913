#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "merocoef/bigfloat.hpp"

namespace merocoef {

inline constexpr const char* kSchemaVersion = "1.0.0";

enum class Command { Oracle, Compare, Convergence, PoincareCheck, PoleFamily };
enum class OutputFormat { Json, Csv, Text };

enum ExitCode : int { kExitOk = 0, kExitTolerance = 1, kExitUsage = 2, kExitDomain = 3 };

struct RunConfig {
    Command command = Command::Oracle;
    std::optional<std::string> target;  // form name, or identity name for poincare-check
    long n_from = 0;
    long n_to = 10;
    std::int64_t cutoff = 10000;
    Prec precision_bits = 256;
    std::int64_t box_bound = 60;
    std::optional<double> tolerance;  // command-specific default when unset
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    std::optional<std::string> tau0;
    std::optional<std::string> samples;  // "zr,zi,r,i;..." with rational parts
    unsigned threads = 0;
};

struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = kExitOk;
};

Command parse_command(const std::string& verb);
std::string command_name(Command c);
OutputFormat parse_format(const std::string& s);

// Exact rational from "p", "p/q" or a plain decimal such as "-0.125".
mpq_class parse_rational(const std::string& s);
// "2i", "1/2+3i", "-1/3-2i", "0.5,3" or the keyword "rho".
BigComplex parse_point(const std::string& s, Prec prec);

void validate(const RunConfig& cfg);

// Runs the command; errors become a structured report with exit code 2 or 3.
CommandResult run_command(const RunConfig& cfg);

std::string render(const nlohmann::ordered_json& report, OutputFormat fmt);

// Decimal helpers shared with the tests.
std::string rel_err_string(const BigReal& rel);
int digits_matched(const BigReal& rel_err, Prec prec);

}  // namespace merocoef
