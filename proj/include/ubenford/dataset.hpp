#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ubenford {

/// Column by 1-based position, or by header name when `name` is set.
struct ColumnSelector {
  int index = 1;
  std::string name;

  /// "3" selects the third column, anything else a header name.
  static ColumnSelector parse(const std::string& text);
};

struct Dataset {
  std::string name;  ///< file stem
  std::filesystem::path source;
  std::vector<double> values;  ///< all > 0, in file order
  std::string header;          ///< header cell of the column, empty if none
  char delimiter = ',';
  long raw_rows = 0;  ///< data rows after the header, blank lines excluded
  long dropped_zero = 0;
  long dropped_negative = 0;
  long dropped_non_numeric = 0;  ///< unparseable or missing field

  long dropped() const { return dropped_zero + dropped_negative + dropped_non_numeric; }
};

/// Reads one column of a delimited text file.
///
/// The delimiter is a tab if any line has one, else ';' if any line has one,
/// else ','. With ';' or tab a decimal comma ("1,5") is read as a decimal
/// point. The first non-blank row is a header when its selected field is not
/// numeric. Throws FileError (unreadable, or header name not found),
/// NoNumericColumn (no parseable number in the column) and EmptyDataset
/// (numbers, but none positive).
Dataset ingest_csv(const std::filesystem::path& path, const ColumnSelector& column = {});

/// Parses one field as a number: surrounding blanks and quotes are stripped;
/// `decimal_comma` turns a lone ',' into '.'. Returns false if anything is left over.
bool parse_number(std::string_view field, bool decimal_comma, double& out);

}  // namespace ubenford
