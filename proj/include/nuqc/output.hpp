#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "nuqc/experiments.hpp"

namespace nuqc::output {

/// Locale-independent scientific notation with 16 significant digits.
std::string format_double(double value);

/// Fixed column order; band columns are appended when the curve has a band.
std::string csv_header(bool with_band);

void write_csv(std::ostream& os, const MarkerCurve& curve);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe a partially written file. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace nuqc::output
