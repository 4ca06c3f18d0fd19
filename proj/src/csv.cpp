#include "cuqoe/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cuqoe/errors.hpp"

namespace cuqoe {

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific, 15);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    return std::string(buf.data(), end);
}

void write_csv(const SweepResult& result, std::ostream& out) {
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        out << (i ? "," : "") << result.columns[i];
    }
    out << '\n';
    for (const auto& row : result.rows) {
        if (row.series_value) {
            out << format_number(*row.series_value) << ',';
        }
        out << format_number(row.swept_value);
        for (double v : row.values) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void emit_csv(const SweepResult& result, const std::filesystem::path& destination) {
    if (result.rows.empty()) {
        throw ConfigError("emit_csv: refusing to write a CSV without rows");
    }
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("emit_csv: cannot open " + destination.string());
    }
    write_csv(result, file);
    file.flush();
    if (!file) {
        throw std::runtime_error("emit_csv: write failed for " + destination.string());
    }
}

}  // namespace cuqoe
