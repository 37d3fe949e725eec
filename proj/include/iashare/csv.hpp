#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace iashare {

struct CsvRow {
    std::size_t line_no = 0; // 1-based, line where the row starts
    std::vector<std::string> fields;
};

/// Strict RFC-4180-style reader: quoted fields with "" escapes, CRLF and LF
/// line endings, optional UTF-8 BOM, embedded newlines inside quotes. Fully
/// blank lines are skipped. Structural problems (stray quote, unterminated
/// quote) throw Error{MalformedRow} with the line number.
class CsvReader {
  public:
    explicit CsvReader(std::istream& in, char delimiter = ',');

    std::optional<CsvRow> next();

  private:
    std::istream& in_;
    char delimiter_;
    std::size_t line_no_ = 1;
    bool at_start_ = true;
};

/// Quotes a field if it contains the delimiter, quotes or newlines.
std::string csv_escape(const std::string& field, char delimiter);

} // namespace iashare
