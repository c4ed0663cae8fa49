#include "gam/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gam/outcome.hpp"

namespace gam::io {

std::size_t DelimitedTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? std::string::npos : static_cast<std::size_t>(it - header.begin());
}

char detect_delimiter(std::string_view first_line) {
  std::size_t commas = 0, semicolons = 0, tabs = 0;
  bool quoted = false;
  for (char c : first_line) {
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == ',') ++commas;
    if (c == ';') ++semicolons;
    if (c == '\t') ++tabs;
  }
  if (tabs > commas && tabs >= semicolons) return '\t';
  if (semicolons > commas) return ';';
  return ',';
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

DelimitedTable parse_delimited(std::string_view content, bool has_header, char delimiter,
                               std::string source) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  DelimitedTable table;
  table.source = std::move(source);
  table.delimiter =
      delimiter != 0 ? delimiter : detect_delimiter(content.substr(0, content.find('\n')));

  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> record_lines;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = record.size() == 1 && trim(record[0]).empty();
    if (!blank) {
      records.push_back(std::move(record));
      record_lines.push_back(record_line);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == table.delimiter) {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_record();
      ++line;
      record_line = line;
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (quoted) throw InputError("unterminated quoted field", table.source, record_line);
  if (!field.empty() || !record.empty()) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    end_record();
  }

  std::size_t start = 0;
  if (has_header && !records.empty()) {
    for (auto& h : records.front()) table.header.push_back(trim(h));
    start = 1;
  }
  for (std::size_t r = start; r < records.size(); ++r) {
    table.rows.push_back(std::move(records[r]));
    table.lines.push_back(record_lines[r]);
  }
  return table;
}

std::vector<KeyValue> read_key_values(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<KeyValue> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const auto nl = content.find('\n', pos);
    const std::string_view raw(content.data() + pos,
                               (nl == std::string::npos ? content.size() : nl) - pos);
    ++line_no;
    const std::string line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw InputError("expected 'key = value'", path.string(), line_no);
      }
      out.push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no});
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::optional<double> parse_real(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) return std::nullopt;
  if (s.find('.') == std::string::npos) std::replace(s.begin(), s.end(), ',', '.');
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

DelimitedTable read_delimited(const std::filesystem::path& path, bool has_header,
                              char delimiter) {
  return parse_delimited(read_file(path), has_header, delimiter, path.string());
}

std::string escape_field(std::string_view field, char delimiter) {
  const bool needs_quotes = field.find_first_of(std::string{'"', '\n', '\r', delimiter}) !=
                            std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join_row(const std::vector<std::string>& fields, char delimiter) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(delimiter);
    out += escape_field(fields[i], delimiter);
  }
  return out;
}

}  // namespace gam::io
