#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gam::io {

/// Delimited text as read from disk. Quoted fields ("a, b" with "" escapes)
/// may span lines; `lines` maps each row to its 1-based starting line.
struct DelimitedTable {
  std::string source;
  char delimiter = ',';
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;

  std::size_t line_of(std::size_t row) const { return row < lines.size() ? lines[row] : 0; }
  /// Index of a header column, or npos.
  std::size_t column(std::string_view name) const;
};

/// Picks ',', ';' or '\t' by frequency in the first line (',' on ties).
char detect_delimiter(std::string_view first_line);

DelimitedTable parse_delimited(std::string_view content, bool has_header, char delimiter = 0,
                               std::string source = {});
/// Throws InputError when the file cannot be opened. delimiter 0 = detect.
DelimitedTable read_delimited(const std::filesystem::path& path, bool has_header = true,
                              char delimiter = 0);

std::string trim(std::string_view s);

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// `key = value` lines; '#' starts a comment line, blank lines skipped.
/// Throws InputError for a line without '='.
std::vector<KeyValue> read_key_values(const std::filesystem::path& path);

/// Parses a real number, allowing a decimal comma ("3,5"). nullopt when the
/// text is empty or not a number.
std::optional<double> parse_real(std::string_view text);
std::string read_file(const std::filesystem::path& path);

/// Quotes a field when it contains the delimiter, a quote or a newline.
std::string escape_field(std::string_view field, char delimiter = ',');
std::string join_row(const std::vector<std::string>& fields, char delimiter = ',');

}  // namespace gam::io
