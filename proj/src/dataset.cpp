#include "ubenford/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "ubenford/error.hpp"

namespace ubenford {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = trim(s.substr(1, s.size() - 2));
  return std::string(s);
}

}  // namespace

ColumnSelector ColumnSelector::parse(const std::string& text) {
  ColumnSelector c;
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    c.index = std::stoi(text);
    if (c.index < 1) throw Error(ErrorKind::InvalidParameter, "column index is 1-based");
  } else {
    c.name = text;
  }
  return c;
}

bool parse_number(std::string_view field, bool decimal_comma, double& out) {
  std::string s = unquote(field);
  if (s.empty()) return false;
  if (decimal_comma && std::count(s.begin(), s.end(), ',') == 1 && s.find('.') == std::string::npos) {
    std::replace(s.begin(), s.end(), ',', '.');
  }
  const char* first = s.data();
  if (*first == '+') ++first;
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

Dataset ingest_csv(const std::filesystem::path& path, const ColumnSelector& column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileError, "cannot open " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) lines.push_back(std::move(line));
  }
  if (in.bad()) throw Error(ErrorKind::FileError, "read error on " + path.string());

  Dataset ds;
  ds.source = path;
  ds.name = path.stem().string();
  const auto any_has = [&](char c) {
    return std::any_of(lines.begin(), lines.end(), [c](const std::string& l) { return l.find(c) != std::string::npos; });
  };
  ds.delimiter = any_has('\t') ? '\t' : any_has(';') ? ';' : ',';
  const bool decimal_comma = ds.delimiter != ',';

  std::size_t col = static_cast<std::size_t>(column.index - 1);
  std::size_t first_data = 0;
  if (!column.name.empty()) {
    if (lines.empty()) throw Error(ErrorKind::FileError, path.string() + " is empty");
    const auto header = split(lines.front(), ds.delimiter);
    const auto it = std::find_if(header.begin(), header.end(),
                                 [&](std::string_view h) { return unquote(h) == column.name; });
    if (it == header.end()) throw Error(ErrorKind::FileError, "no column named '" + column.name + "' in " + path.string());
    col = static_cast<std::size_t>(it - header.begin());
    ds.header = column.name;
    first_data = 1;
  } else if (!lines.empty()) {
    const auto fields = split(lines.front(), ds.delimiter);
    double v;
    if (col < fields.size() && !parse_number(fields[col], decimal_comma, v)) {
      ds.header = unquote(fields[col]);
      first_data = 1;
    }
  }

  long numeric = 0;
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    ++ds.raw_rows;
    const auto fields = split(lines[i], ds.delimiter);
    double v;
    if (col >= fields.size() || !parse_number(fields[col], decimal_comma, v)) {
      ++ds.dropped_non_numeric;
      continue;
    }
    ++numeric;
    if (v == 0.0) {
      ++ds.dropped_zero;
    } else if (v < 0.0) {
      ++ds.dropped_negative;
    } else {
      ds.values.push_back(v);
    }
  }
  if (numeric == 0) throw Error(ErrorKind::NoNumericColumn, "column has no numeric values in " + path.string());
  if (ds.values.empty()) throw Error(ErrorKind::EmptyDataset, "no positive values in " + path.string());
  return ds;
}

}  // namespace ubenford
