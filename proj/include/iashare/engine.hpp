#pragma once

#include "iashare/employment.hpp"
#include "iashare/incidence.hpp"
#include "iashare/taxonomy.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iashare {

enum class Level { Province, Region, National };

const char* level_label(Level level);
std::optional<Level> level_from_label(std::string_view text);

/// A territory at any aggregation level, ordered by (level, code).
struct TerritoryRef {
    Level level;
    std::string code;
    std::string name;

    friend auto operator<=>(const TerritoryRef&, const TerritoryRef&) = default;
};

TerritoryRef territory_of(Province province);
TerritoryRef territory_of(const Region& region);
TerritoryRef national_territory();

/// Exposure-weighted employment for one territory/sex/year.
///
/// ia_scaled is the exact integer Σ count·factor_scaled, so aggregation is
/// order-free and bit-reproducible; reals are derived on demand. A territory
/// whose total employment is zero has an undefined share (nullopt), never a
/// division by zero.
struct ExposureRecord {
    TerritoryRef territory;
    Sex sex = Sex::Total;
    int year = 0;
    std::int64_t employment = 0;
    std::int64_t ia_scaled = 0;

    double ia_employment() const noexcept;
    std::optional<double> ia_share() const noexcept;
};

/// count × factor, exact (integer product rescaled once).
double exposure_weight(std::int64_t count, Factor factor);

/// One record per territory present in the (sex, year) selection, ascending
/// territory code. Throws Error{MissingFactor} naming divisions absent from
/// the matrix and Error{EmptySelection} when nothing matches.
std::vector<ExposureRecord> compute_exposure(const EmploymentTable& table,
                                             const IncidenceMatrix& matrix, Level level, Sex sex,
                                             int year);

struct GapRecord {
    Province province;
    int year;
    double share_female;
    double share_male;
    double gap_pp; // 100 · (female − male), percentage points
};

/// One record per province where both sexed series exist with positive
/// employment. Throws Error{MissingSeries} when a whole series is absent.
std::vector<GapRecord> gender_gap(const EmploymentTable& table, const IncidenceMatrix& matrix,
                                  int year);

struct StabilityEntry {
    double share_a;
    double share_b;
    double delta; // share_b − share_a
};

struct StabilityRecord {
    int year_a = 0;
    int year_b = 0;
    Sex sex = Sex::Total;
    double max_abs_delta = 0.0;
    std::map<std::string, StabilityEntry> deltas; // territory code → entry
    double rank_correlation = 1.0;                // Spearman, average-rank ties
};

/// Pairs two record sets covering the same territories and sex. Throws
/// Error{TerritoryMismatch} on differing coverage and Error{UndefinedShare}
/// if any share is undefined.
StabilityRecord yoy_delta(std::span<const ExposureRecord> records_a,
                          std::span<const ExposureRecord> records_b);

struct SectorContribution {
    Cnae division;
    std::int64_t employment = 0;
    std::int64_t ia_scaled = 0;
    double share_of_ia = 0.0; // fraction of the territory's ia_employment

    double ia_employment() const noexcept;
};

/// Per-division decomposition of one territory's exposure, sorted by
/// descending share_of_ia (division code breaks ties). territory_code is
/// ignored at national level.
std::vector<SectorContribution> sector_contributions(const EmploymentTable& table,
                                                     const IncidenceMatrix& matrix, Level level,
                                                     std::string_view territory_code, Sex sex,
                                                     int year);

/// Spearman rank correlation with average-rank tie handling. Exactly 1 when
/// the two rankings coincide. Throws Error{DegenerateRange} when one side is
/// constant while the other is not, and Error{InvalidArgument} on size
/// mismatch or n < 2.
double spearman_rank_correlation(std::span<const double> x, std::span<const double> y);

} // namespace iashare
