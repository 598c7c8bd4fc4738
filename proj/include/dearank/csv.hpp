#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dearank/matrix.hpp"

namespace dearank {

/// Parse or validation failure with the 1-based cell that caused it.
class CsvError : public std::runtime_error {
public:
    CsvError(std::string message, std::size_t row, std::size_t column);
    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_ = 0;
    std::size_t column_ = 0;
};

/// Decision-matrix CSV layout:
///   line 1: name,<attribute label>,...
///   line 2: role,<input|output>,...            (case-insensitive roles)
///   line 3+: <alternative name>,<number>,...
/// Throws CsvError on malformed input (ragged rows, unknown role,
/// unparsable number, empty table).
DecisionMatrix parse_csv(std::string_view text,
                         std::string_view source_name = "<memory>");

/// parse_csv on a file's contents followed by DecisionMatrix::ensure_valid().
DecisionMatrix ingest_csv(const std::filesystem::path& path);

/// Serialize in the layout accepted by parse_csv (shortest round-tripping
/// number format).
std::string to_csv(const DecisionMatrix& m);

} // namespace dearank
