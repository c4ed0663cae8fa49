#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gam/decision_log.hpp"
#include "gam/run_config.hpp"

namespace gam {

enum class Command { Stats, Coverage, Agree, Features, Validate, All };

/// Throws std::invalid_argument for an unknown name.
Command parse_command(std::string_view name);
std::string to_string(Command command);

/// Loads every input the command needs (failing with InputError before any
/// computation), runs it and writes the report files into `config.out`.
/// Progress and summaries go to `out`. Returns the written paths.
std::vector<std::filesystem::path> run(Command command, const RunConfig& config,
                                       DecisionLog& log, std::ostream& out);

/// True when the log holds an event that --strict turns into exit status 2
/// (degenerate statistic or non-computable cell).
bool has_degeneracy(const DecisionLog& log);

}  // namespace gam
