#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cuqoe/sweep.hpp"

namespace cuqoe {

/// Scientific notation with 16 significant digits, e.g. 1.266518449436735e+00.
std::string format_number(double value);

/// Header line, then one line per row; LF line endings, comma separated.
void write_csv(const SweepResult& result, std::ostream& out);

/// Writes the CSV file. Throws ConfigError on an empty result (no file is
/// created) and std::runtime_error on I/O failure.
void emit_csv(const SweepResult& result, const std::filesystem::path& destination);

}  // namespace cuqoe
