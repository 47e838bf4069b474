#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vr3c {

/// Numeric cell format shared by all emitted CSV files: 9 significant
/// digits, shortest of fixed/scientific (printf %.9g).
std::string format_g9(double value);

/// Compact scientific notation for human reports: "7.76315789e7".
std::string format_sci9(double value);

/// One CSV table: fixed header, rows appended cell by cell.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells);
    std::string to_string() const;
    std::size_t columns() const { return header_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Writes via a sibling temp file and rename so readers never observe a
/// partial file.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

} // namespace vr3c
