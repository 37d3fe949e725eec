#include "iashare/employment.hpp"

#include "iashare/csv.hpp"
#include "iashare/error.hpp"

#include <cctype>
#include <fstream>
#include <set>

namespace iashare {
namespace {

std::string key_str(const ObsKey& key)
{
    std::string s = std::to_string(key.year);
    s += '/';
    s += key.province.code();
    s += '/';
    s += key.division.code();
    s += '/';
    s += sex_letter(key.sex);
    return s;
}

// Integer with optional Spanish thousands dots ("3.014.953"): groups after
// the first must be exactly three digits.
std::optional<std::int64_t> parse_count_digits(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    std::int64_t value = 0;
    std::size_t group_len = 0;
    bool first_group = true;
    std::size_t i = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (group_len == 0 || (!first_group && group_len != 3) || (first_group && group_len > 3))
                return std::nullopt;
            first_group = false;
            group_len = 0;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        if (value > (INT64_MAX - 9) / 10)
            return std::nullopt;
        value = value * 10 + (c - '0');
        ++group_len;
    }
    if (!first_group && group_len != 3)
        return std::nullopt;
    if (group_len == 0)
        return std::nullopt;
    return value;
}

} // namespace

void EmploymentTable::insert(const ObsKey& key, std::int64_t count)
{
    if (count < 0)
        fail(ErrorKind::NegativeCount, "negative count for " + key_str(key));
    auto [it, inserted] = data_.emplace(key, count);
    if (!inserted)
        fail(ErrorKind::DuplicateKey, "duplicate observation key " + key_str(key));
    (void)it;
}

void EmploymentTable::merge(const EmploymentTable& other)
{
    for (const auto& [key, count] : other.data_) {
        if (data_.contains(key))
            fail(ErrorKind::DuplicateKey, "duplicate observation key across files: " + key_str(key));
    }
    data_.insert(other.data_.begin(), other.data_.end());
}

std::vector<std::pair<int, Sex>> EmploymentTable::coverage() const
{
    std::set<std::pair<int, Sex>> seen;
    for (const auto& [key, count] : data_)
        seen.emplace(key.year, key.sex);
    return {seen.begin(), seen.end()};
}

bool EmploymentTable::has_series(int year, Sex sex) const
{
    for (const auto& [key, count] : data_)
        if (key.year == year && key.sex == sex)
            return true;
    return false;
}

std::vector<int> EmploymentTable::years() const
{
    std::set<int> seen;
    for (const auto& [key, count] : data_)
        seen.insert(key.year);
    return {seen.begin(), seen.end()};
}

ParsedEmployment parse_employment_csv(std::istream& in, DivisionPolicy policy)
{
    CsvReader reader(in);
    auto header = reader.next();
    static const std::vector<std::string> kHeader = {"year", "province", "cnae", "sex", "count"};
    if (!header || header->fields != kHeader)
        fail(ErrorKind::MalformedRow, "expected header 'year,province,cnae,sex,count'");

    ParsedEmployment result;
    std::map<ObsKey, std::size_t> line_of;
    while (auto row = reader.next()) {
        const std::string where = "line " + std::to_string(row->line_no);
        if (row->fields.size() != 5)
            fail(ErrorKind::MalformedRow,
                 where + ": expected 5 fields, got " + std::to_string(row->fields.size()));

        const std::string& year_text = row->fields[0];
        int year = 0;
        for (char c : year_text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || year > 100'000) {
                year = 0;
                break;
            }
            year = year * 10 + (c - '0');
        }
        if (year_text.empty() || year <= 0)
            fail(ErrorKind::MalformedRow, where + ": bad year '" + year_text + "'");

        auto province = Province::try_parse(row->fields[1]);
        if (!province)
            fail(ErrorKind::UnknownProvince,
                 where + ": unknown province code '" + row->fields[1] + "'");

        auto division = Cnae::try_parse(row->fields[2]);
        if (!division) {
            if (policy == DivisionPolicy::Skip) {
                result.warnings.push_back(
                    {row->line_no, "skipped row: unknown CNAE division '" + row->fields[2] + "'"});
                continue;
            }
            fail(ErrorKind::UnknownDivision,
                 where + ": unknown CNAE division '" + row->fields[2] + "'");
        }

        auto sex = sex_from_letter(row->fields[3]);
        if (!sex)
            fail(ErrorKind::MalformedRow,
                 where + ": bad sex '" + row->fields[3] + "' (expected T, F or M)");

        std::string_view count_text = row->fields[4];
        bool negative = !count_text.empty() && count_text[0] == '-';
        auto count = parse_count_digits(negative ? count_text.substr(1) : count_text);
        if (!count)
            fail(ErrorKind::MalformedRow, where + ": bad count '" + row->fields[4] + "'");
        if (negative)
            fail(ErrorKind::NegativeCount, where + ": negative count '" + row->fields[4] + "'");

        ObsKey key{year, *province, *division, *sex};
        auto [it, inserted] = line_of.emplace(key, row->line_no);
        if (!inserted)
            fail(ErrorKind::DuplicateKey, where + ": duplicate key " + key_str(key) +
                                              " (first at line " + std::to_string(it->second) + ")");
        result.table.insert(key, *count);
    }
    return result;
}

ParsedEmployment parse_employment_file(const std::filesystem::path& path, DivisionPolicy policy)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot open employment file: " + path.string());
    try {
        return parse_employment_csv(in, policy);
    } catch (const Error& e) {
        fail(e.kind(), path.filename().string() + ": " + e.what());
    }
}

std::string emit_employment_csv(const EmploymentTable& table)
{
    std::string out = "year,province,cnae,sex,count\n";
    for (const auto& [key, count] : table.observations()) {
        out += std::to_string(key.year);
        out += ',';
        out += key.province.code();
        out += ',';
        out += key.division.code();
        out += ',';
        out += sex_letter(key.sex);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

std::vector<SexConsistencyRow> sex_consistency_report(const EmploymentTable& table,
                                                      double tolerance)
{
    struct Triple {
        std::optional<std::int64_t> total, female, male;
    };
    std::map<std::tuple<int, Province, Cnae>, Triple> groups;
    for (const auto& [key, count] : table.observations()) {
        Triple& t = groups[{key.year, key.province, key.division}];
        switch (key.sex) {
        case Sex::Total: t.total = count; break;
        case Sex::Female: t.female = count; break;
        case Sex::Male: t.male = count; break;
        }
    }

    std::vector<SexConsistencyRow> rows;
    for (const auto& [group_key, t] : groups) {
        if (!t.total || !t.female || !t.male)
            continue;
        std::int64_t fm = *t.female + *t.male;
        double gap = static_cast<double>(std::abs(*t.total - fm)) /
                     static_cast<double>(std::max<std::int64_t>(*t.total, 1));
        if (gap > tolerance)
            rows.push_back({std::get<0>(group_key), std::get<1>(group_key),
                            std::get<2>(group_key), *t.total, fm, gap});
    }
    return rows;
}

} // namespace iashare
