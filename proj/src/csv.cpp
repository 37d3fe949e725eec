#include "iashare/csv.hpp"

#include "iashare/error.hpp"

namespace iashare {

CsvReader::CsvReader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

std::optional<CsvRow> CsvReader::next()
{
    if (at_start_) {
        at_start_ = false;
        // UTF-8 BOM
        if (in_.peek() == 0xEF) {
            char bom[3];
            in_.read(bom, 3);
            if (in_.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF))
                fail(ErrorKind::MalformedRow, "line 1: invalid byte-order mark");
        }
    }

    while (true) {
        int first = in_.peek();
        if (first == EOF)
            return std::nullopt;
        if (first == '\n') {
            in_.get();
            ++line_no_;
            continue;
        }
        if (first == '\r') {
            in_.get();
            if (in_.peek() == '\n')
                in_.get();
            ++line_no_;
            continue;
        }
        break;
    }

    CsvRow row;
    row.line_no = line_no_;
    std::string field;
    bool quoted = false;

    int c;
    while ((c = in_.get()) != EOF) {
        if (quoted) {
            if (c == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n')
                    ++line_no_;
                field.push_back(static_cast<char>(c));
            }
            continue;
        }
        if (c == '"') {
            if (!field.empty())
                fail(ErrorKind::MalformedRow,
                     "line " + std::to_string(line_no_) + ": stray quote inside unquoted field");
            quoted = true;
            continue;
        }
        if (c == delimiter_) {
            row.fields.push_back(std::move(field));
            field.clear();
            continue;
        }
        if (c == '\r') {
            if (in_.peek() == '\n')
                in_.get();
            ++line_no_;
            row.fields.push_back(std::move(field));
            return row;
        }
        if (c == '\n') {
            ++line_no_;
            row.fields.push_back(std::move(field));
            return row;
        }
        field.push_back(static_cast<char>(c));
    }

    if (quoted)
        fail(ErrorKind::MalformedRow,
             "line " + std::to_string(row.line_no) + ": unterminated quoted field");
    row.fields.push_back(std::move(field));
    return row;
}

std::string csv_escape(const std::string& field, char delimiter)
{
    bool needs_quotes = field.find_first_of(std::string("\"\r\n") + delimiter) != std::string::npos;
    if (!needs_quotes)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    out += "\"";
    return out;
}

} // namespace iashare
