#pragma once

#include "iashare/taxonomy.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace iashare::fixtures {

struct MatrixRow {
    std::uint8_t division;
    std::int32_t factor_scaled; // × 1e4
    const char* label;
};

/// One row of a published provincial reference table. The printed share is
/// kept two ways: normalized to four decimals for cross-table comparisons,
/// and with its original digit count for printed-precision checks (the
/// source tables mix 2-, 3- and 4-digit rendering).
struct ReferenceRow {
    std::uint8_t province;
    std::int64_t employment;
    std::int64_t ia_employment;
    std::int32_t share_scaled4; // printed share × 1e4, trailing zeros padded
    std::uint8_t share_digits;  // fractional digits as printed
};

extern const std::array<MatrixRow, 88> kIncidenceMatrix;

extern const std::array<ReferenceRow, 52> kTotal2022;
extern const std::array<ReferenceRow, 52> kTotal2021;
extern const std::array<ReferenceRow, 52> kFemale2022;
extern const std::array<ReferenceRow, 52> kMale2022;
extern const std::array<ReferenceRow, 52> kFemale2021;
extern const std::array<ReferenceRow, 52> kMale2021;

inline constexpr std::array<int, 2> kYears{2021, 2022};

/// Table lookup by (year, sex); throws Error{InvalidArgument} outside the
/// embedded coverage.
std::span<const ReferenceRow> reference_table(int year, Sex sex);

} // namespace iashare::fixtures
