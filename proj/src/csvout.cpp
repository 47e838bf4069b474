#include "vr3c/csvout.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace vr3c {

std::string format_g9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string format_sci9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8e", value);
    std::string s(buf);
    const auto e = s.find('e');
    if (e == std::string::npos)
        return s;
    std::string mantissa = s.substr(0, e);
    std::string exponent = s.substr(e + 1);
    // drop trailing zeros (and a bare decimal point) from the mantissa
    const auto last = mantissa.find_last_not_of('0');
    if (last != std::string::npos)
        mantissa.erase(last + 1);
    if (!mantissa.empty() && mantissa.back() == '.')
        mantissa.pop_back();
    // "+07" -> "7", "-07" -> "-7"
    bool negative = false;
    std::size_t i = 0;
    if (i < exponent.size() && (exponent[i] == '+' || exponent[i] == '-')) {
        negative = exponent[i] == '-';
        ++i;
    }
    while (i + 1 < exponent.size() && exponent[i] == '0')
        ++i;
    return mantissa + "e" + (negative ? "-" : "") + exponent.substr(i);
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::logic_error("csv row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i)
            out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace vr3c
