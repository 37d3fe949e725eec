#include "iashare/incidence.hpp"

#include "iashare/csv.hpp"
#include "iashare/error.hpp"
#include "iashare/fixtures.hpp"

#include <algorithm>
#include <fstream>

namespace iashare {

IncidenceMatrix::IncidenceMatrix(std::map<Cnae, MatrixEntry> entries, std::string source_id)
    : entries_(std::move(entries)), source_id_(std::move(source_id))
{
}

bool IncidenceMatrix::contains(Cnae division) const
{
    return entries_.contains(division);
}

std::optional<Factor> IncidenceMatrix::find(Cnae division) const
{
    auto it = entries_.find(division);
    if (it == entries_.end())
        return std::nullopt;
    return it->second.factor;
}

Factor IncidenceMatrix::at(Cnae division) const
{
    auto f = find(division);
    if (!f)
        fail(ErrorKind::MissingFactor,
             "matrix '" + source_id_ + "' has no factor for division " + division.code());
    return *f;
}

Factor IncidenceMatrix::min_factor() const
{
    if (entries_.empty())
        fail(ErrorKind::InvalidArgument, "empty matrix has no factor range");
    auto it = std::ranges::min_element(entries_, {}, [](const auto& e) { return e.second.factor; });
    return it->second.factor;
}

Factor IncidenceMatrix::max_factor() const
{
    if (entries_.empty())
        fail(ErrorKind::InvalidArgument, "empty matrix has no factor range");
    auto it = std::ranges::max_element(entries_, {}, [](const auto& e) { return e.second.factor; });
    return it->second.factor;
}

IncidenceMatrix load_matrix(std::istream& in, std::string source_id)
{
    CsvReader reader(in);
    auto header = reader.next();
    if (!header || header->fields.size() < 2 || header->fields.size() > 3 ||
        header->fields[0] != "cnae" || header->fields[1] != "factor" ||
        (header->fields.size() == 3 && header->fields[2] != "label"))
        fail(ErrorKind::MalformedRow,
             source_id + ": expected header 'cnae,factor[,label]'");

    std::map<Cnae, MatrixEntry> entries;
    std::map<Cnae, std::size_t> first_line;
    while (auto row = reader.next()) {
        const std::string where = source_id + " line " + std::to_string(row->line_no);
        if (row->fields.size() < 2 || row->fields.size() > 3)
            fail(ErrorKind::MalformedRow,
                 where + ": expected 2 or 3 fields, got " + std::to_string(row->fields.size()));
        Cnae division = [&] {
            try {
                return Cnae::parse(row->fields[0]);
            } catch (const Error& e) {
                fail(e.kind(), where + ": " + e.what());
            }
        }();
        Factor factor = [&] {
            try {
                return Factor::parse(row->fields[1]);
            } catch (const Error& e) {
                fail(e.kind(), where + ": " + e.what());
            }
        }();
        std::string label = row->fields.size() == 3 ? row->fields[2] : "";
        auto [it, inserted] = entries.emplace(division, MatrixEntry{factor, std::move(label)});
        if (!inserted)
            fail(ErrorKind::DuplicateDivision,
                 where + ": duplicate division " + division.code() + " (first at line " +
                     std::to_string(first_line[division]) + ")");
        first_line[division] = row->line_no;
    }
    return IncidenceMatrix(std::move(entries), std::move(source_id));
}

IncidenceMatrix load_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot open matrix file: " + path.string());
    return load_matrix(in, path.filename().string());
}

const IncidenceMatrix& default_matrix()
{
    static const IncidenceMatrix matrix = [] {
        std::map<Cnae, MatrixEntry> entries;
        for (const auto& row : fixtures::kIncidenceMatrix)
            entries.emplace(Cnae::from_number(row.division),
                            MatrixEntry{Factor::from_scaled(row.factor_scaled), row.label});
        return IncidenceMatrix(std::move(entries), "embedded-default");
    }();
    return matrix;
}

std::string emit_matrix_csv(const IncidenceMatrix& matrix)
{
    std::string out = "cnae,factor,label\n";
    for (const auto& [division, entry] : matrix.entries()) {
        out += division.code();
        out += ',';
        out += entry.factor.str();
        out += ',';
        out += csv_escape(entry.label, ',');
        out += '\n';
    }
    return out;
}

std::optional<std::int32_t> MatrixDiffRow::delta_scaled() const
{
    if (!factor_a || !factor_b)
        return std::nullopt;
    return factor_b->scaled() - factor_a->scaled();
}

std::vector<MatrixDiffRow> matrix_diff(const IncidenceMatrix& a, const IncidenceMatrix& b)
{
    std::vector<MatrixDiffRow> rows;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
            rows.push_back({ia->first, ia->second.factor, std::nullopt});
            ++ia;
        } else if (ia == a.entries().end() || ib->first < ia->first) {
            rows.push_back({ib->first, std::nullopt, ib->second.factor});
            ++ib;
        } else {
            if (ia->second.factor != ib->second.factor)
                rows.push_back({ia->first, ia->second.factor, ib->second.factor});
            ++ia;
            ++ib;
        }
    }
    return rows;
}

} // namespace iashare
