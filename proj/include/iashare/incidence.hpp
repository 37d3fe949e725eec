#pragma once

#include "iashare/factor.hpp"
#include "iashare/taxonomy.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace iashare {

struct MatrixEntry {
    Factor factor;
    std::string label; // optional human-readable sector name
};

/// Immutable CNAE-division → incidence-factor mapping. Keys are valid
/// divisions by construction; factors are validated to [0, 1] (user matrices
/// may explore the whole range, not just the published 0.06–0.305 band).
class IncidenceMatrix {
  public:
    IncidenceMatrix(std::map<Cnae, MatrixEntry> entries, std::string source_id);

    const std::map<Cnae, MatrixEntry>& entries() const noexcept { return entries_; }
    const std::string& source_id() const noexcept { return source_id_; }

    bool contains(Cnae division) const;
    std::optional<Factor> find(Cnae division) const;
    Factor at(Cnae division) const; // throws Error{MissingFactor}

    std::size_t size() const noexcept { return entries_.size(); }
    Factor min_factor() const; // throws on empty matrix
    Factor max_factor() const;

  private:
    std::map<Cnae, MatrixEntry> entries_;
    std::string source_id_;
};

/// Parses a matrix CSV with header `cnae,factor` or `cnae,factor,label`.
/// Decimal comma accepted; duplicate divisions, out-of-range factors and
/// malformed rows are reported with their line number.
IncidenceMatrix load_matrix(std::istream& in, std::string source_id);
IncidenceMatrix load_matrix_file(const std::filesystem::path& path);

/// Embedded default matrix: the published reference table, all 88 divisions.
const IncidenceMatrix& default_matrix();

/// Canonical CSV emission: header `cnae,factor,label`, dot decimals, LF.
std::string emit_matrix_csv(const IncidenceMatrix& matrix);

struct MatrixDiffRow {
    Cnae division;
    std::optional<Factor> factor_a;
    std::optional<Factor> factor_b;
    // delta (b - a) in scaled units, meaningful only when both sides exist
    std::optional<std::int32_t> delta_scaled() const;
};

/// Rows for every division whose factor differs between the two matrices or
/// exists on one side only; empty for identical matrices.
std::vector<MatrixDiffRow> matrix_diff(const IncidenceMatrix& a, const IncidenceMatrix& b);

} // namespace iashare
