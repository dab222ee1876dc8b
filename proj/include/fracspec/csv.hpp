#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fracspec {

/// Scientific notation with 6 significant digits ("2.14000e-02"); non-finite
/// values print as "inf", "-inf" or "nan".
std::string format_sci(double value);
/// format_sci, or "-" when empty.
std::string format_sci(const std::optional<double>& value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// RFC 4180 text with CRLF line ends; fields quoted only when needed.
std::string to_csv(const CsvTable& table);

/// Writes via a temporary file and rename. Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& text);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

}  // namespace fracspec
