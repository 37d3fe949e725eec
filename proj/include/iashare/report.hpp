#pragma once

#include "iashare/employment.hpp"
#include "iashare/engine.hpp"
#include "iashare/incidence.hpp"
#include "iashare/scenario.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace iashare {

enum class TableFormat { Csv, Json, Markdown };
enum class NumberLocale {
    Canonical, // decimal dot, no thousands grouping, comma-delimited CSV
    Spanish,   // decimal comma, dot thousands, semicolon-delimited CSV
};

std::optional<TableFormat> table_format_from_label(std::string_view text);

struct TableSpec {
    int precision = 4;                             // fractional digits for shares, 0..6
    NumberLocale locale = NumberLocale::Canonical; // rendering only; data model unaffected
    std::optional<char> delimiter;                 // CSV; default ',' canonical / ';' spanish
    std::vector<std::string> columns;              // subset/order; empty = record default
};

/// Deterministic table emission: rows already ordered by the record
/// producers, shares rounded half-up to spec precision, ia_employment
/// rounded to integer for display. Byte-identical across runs.
std::string emit_table(std::span<const ExposureRecord> records, const TableSpec& spec,
                       TableFormat format);
std::string emit_table(std::span<const GapRecord> records, const TableSpec& spec,
                       TableFormat format);
std::string emit_table(std::span<const ScenarioDeltaRow> records, const TableSpec& spec,
                       TableFormat format);
std::string emit_table(std::span<const SectorContribution> records, const TableSpec& spec,
                       TableFormat format);
std::string emit_table(std::span<const SexConsistencyRow> records, const TableSpec& spec,
                       TableFormat format);
std::string emit_matrix_table(const IncidenceMatrix& matrix, const TableSpec& spec,
                              TableFormat format);
std::string emit_matrix_diff_table(std::span<const MatrixDiffRow> rows, const TableSpec& spec,
                                   TableFormat format);

enum class BinStrategy { EqualWidth, Quantile };

std::optional<BinStrategy> bin_strategy_from_label(std::string_view text);

/// Strictly increasing bin edges covering [min, max] of the values.
/// Quantile strategy slices the sorted values into near-equal counts (±1).
/// Throws Error{DegenerateRange} when all values are equal and
/// Error{InvalidArgument} for n_bins < 2 or too few values.
std::vector<double> bin_shares(std::span<const double> values, int n_bins, BinStrategy strategy);

/// Bin index for a value: half-open bins, last bin closed; values outside
/// the range clamp to the first/last bin.
int bin_index(double value, std::span<const double> edges);

std::vector<std::string> sequential_palette(int bins);
/// Red below the zero edge, blue above; zero_edge is the index of the edge
/// equal to zero (or the nearest split point).
std::vector<std::string> diverging_palette(int bins, int zero_edge);

struct ChoroplethSpec {
    std::vector<double> edges;
    std::vector<std::string> palette;   // one color per bin
    std::string value_key = "ia_share"; // property injected into features
    std::string code_key = "code";      // feature property carrying the 2-digit code
};

/// Edges + palette for plain share maps (sequential) or signed gap maps
/// (diverging, an edge pinned at zero when the values straddle it).
ChoroplethSpec make_choropleth_spec(std::span<const double> values, int n_bins,
                                    BinStrategy strategy, bool diverging);

enum class MapFormat { GeoJson, Svg };

struct ChoroplethOutput {
    std::string payload;
    std::vector<std::string> no_data; // feature codes without a value
};

/// geojson: injects {value_key, bin_index} into each feature's properties,
/// geometry untouched. svg: standalone document, one filled path per
/// feature plus a legend; features without a value use the no-data style.
/// Values whose code has no feature throw Error{GeometryMismatch} listing
/// the unmatched codes.
ChoroplethOutput emit_choropleth(std::string_view geometry_geojson,
                                 const std::map<std::string, double>& values,
                                 const ChoroplethSpec& spec, MapFormat format);

} // namespace iashare
