#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace iashare {

/// Incidence factor: an exact decimal fraction in [0, 1] with at most four
/// fractional digits, stored as an integer scaled by 1e4. Published values
/// like 0.145 or 0.305 round-trip bit-exactly; downstream arithmetic that
/// needs reals converts once via value().
class Factor {
  public:
    static constexpr std::int32_t kScale = 10'000;

    /// Accepts dot or comma as decimal separator ("0.305", "0,305", "1").
    /// Throws Error{MalformedRow} for syntax/precision problems and
    /// Error{FactorOutOfRange} outside [0, 1].
    static Factor parse(std::string_view text);
    static std::optional<Factor> try_parse(std::string_view text);

    static Factor from_scaled(std::int32_t scaled); // throws FactorOutOfRange

    constexpr std::int32_t scaled() const noexcept { return scaled_; }
    double value() const noexcept { return static_cast<double>(scaled_) / kScale; }

    /// Canonical rendering: decimal dot, trailing zeros trimmed ("0.06",
    /// "0.305", "1").
    std::string str() const;

    friend auto operator<=>(Factor, Factor) = default;

  private:
    constexpr explicit Factor(std::int32_t s) : scaled_(s) {}
    std::int32_t scaled_;
};

/// Parses a plain decimal with at most four fractional digits into scaled-1e4
/// units; used for factors and scenario shifts. Returns nullopt on syntax or
/// precision violations.
std::optional<std::int64_t> parse_scaled_decimal(std::string_view text, bool allow_sign);

/// Renders a scaled-1e4 value the same way Factor::str does (sign allowed).
std::string scaled_decimal_str(std::int64_t scaled);

} // namespace iashare
