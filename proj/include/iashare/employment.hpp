#pragma once

#include "iashare/taxonomy.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iashare {

/// Key of one employment observation. Ordering is (year, province, division,
/// sex): ascending (province, division) is the fixed summation order the
/// engine relies on for reproducible output.
struct ObsKey {
    int year;
    Province province;
    Cnae division;
    Sex sex;

    friend auto operator<=>(const ObsKey&, const ObsKey&) = default;
};

/// Validated long-format employment table: (year, province, division, sex) →
/// headcount. Uniqueness is enforced on insert; the container is a sorted map
/// so iteration order is canonical regardless of input order.
class EmploymentTable {
  public:
    EmploymentTable() = default;

    void insert(const ObsKey& key, std::int64_t count); // throws DuplicateKey / NegativeCount
    void merge(const EmploymentTable& other);           // throws DuplicateKey

    const std::map<ObsKey, std::int64_t>& observations() const noexcept { return data_; }
    bool empty() const noexcept { return data_.empty(); }
    std::size_t size() const noexcept { return data_.size(); }

    /// Distinct (year, sex) series present, sorted.
    std::vector<std::pair<int, Sex>> coverage() const;
    bool has_series(int year, Sex sex) const;
    std::vector<int> years() const;

    friend bool operator==(const EmploymentTable&, const EmploymentTable&) = default;

  private:
    std::map<ObsKey, std::int64_t> data_;
};

enum class DivisionPolicy {
    Reject, // unknown CNAE division fails the whole parse (default)
    Skip,   // row dropped with a warning
};

struct ParseWarning {
    std::size_t line_no;
    std::string message;
};

struct ParsedEmployment {
    EmploymentTable table;
    std::vector<ParseWarning> warnings;
};

/// Parses an employment CSV with header `year,province,cnae,sex,count`.
/// Sex is a single letter T/F/M; counts are non-negative integers, Spanish
/// thousands dots tolerated ("3.014.953"). Duplicate keys name both lines.
ParsedEmployment parse_employment_csv(std::istream& in,
                                      DivisionPolicy policy = DivisionPolicy::Reject);
ParsedEmployment parse_employment_file(const std::filesystem::path& path,
                                       DivisionPolicy policy = DivisionPolicy::Reject);

/// Canonical emission: header row, keys ascending, plain integers, LF.
/// parse(emit(t)) == t.
std::string emit_employment_csv(const EmploymentTable& table);

struct SexConsistencyRow {
    int year;
    Province province;
    Cnae division;
    std::int64_t total;
    std::int64_t female_plus_male;
    double relative_gap; // |T − (F+M)| / max(T, 1)
};

/// Keys where all three series exist and the decomposition misses by more
/// than the tolerance (default 0.5% relative). Empty means consistent.
std::vector<SexConsistencyRow> sex_consistency_report(const EmploymentTable& table,
                                                      double tolerance = 0.005);

} // namespace iashare
