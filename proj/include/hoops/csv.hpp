#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hoops::csv {

/// Split one CSV line into fields. Handles double-quoted fields with
/// embedded commas and "" escapes; trims a trailing '\r'.
std::vector<std::string> split_line(std::string_view line);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// 1-based file line number for each row (header excluded).
    std::vector<std::size_t> line_numbers;
};

/// Read a whole CSV file. Throws ValidationError if the file cannot be
/// opened or has no header. Blank lines are skipped.
Table read_file(const std::string& path);

/// Quote a field if it contains a comma, quote or newline.
std::string escape(std::string_view field);

/// Join fields into one escaped CSV line (no trailing newline).
std::string join(const std::vector<std::string>& fields);

}  // namespace hoops::csv
