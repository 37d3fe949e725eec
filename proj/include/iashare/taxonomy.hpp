#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iashare {

/// Two-digit CNAE-2009 division. Only codes the official classification
/// assigns are representable; gaps such as "04" or "44" are rejected at
/// construction, so a Cnae value is valid by type.
class Cnae {
  public:
    /// Parses "62", "7" (zero-padded to "07"), " 62 " etc. Throws
    /// Error{UnknownDivision} for non-numeric, out-of-range or unassigned codes.
    static Cnae parse(std::string_view text);
    static std::optional<Cnae> try_parse(std::string_view text);

    /// Trusted construction from a division number (1..99, assigned).
    static Cnae from_number(int number);
    static bool valid_number(int number);

    /// All 88 assigned divisions, ascending.
    static std::span<const Cnae> all();

    int number() const noexcept { return number_; }
    std::string code() const; // zero-padded, "01".."99"

    friend auto operator<=>(Cnae, Cnae) = default;

  private:
    constexpr explicit Cnae(std::uint8_t n) : number_(n) {}
    std::uint8_t number_;
};

/// One of the 52 Spanish provinces, keyed by its INE code "01".."52".
class Province {
  public:
    static Province parse(std::string_view text); // throws Error{UnknownProvince}
    static std::optional<Province> try_parse(std::string_view text);
    static Province from_number(int number); // 1..52
    static std::span<const Province> all();

    int number() const noexcept { return number_; }
    std::string code() const;
    const std::string& name() const;

    friend auto operator<=>(Province, Province) = default;

  private:
    constexpr explicit Province(std::uint8_t n) : number_(n) {}
    std::uint8_t number_;
};

enum class Sex : std::uint8_t { Total, Female, Male };

char sex_letter(Sex sex);                          // 'T' / 'F' / 'M'
const char* sex_label(Sex sex);                    // "total" / "female" / "male"
std::optional<Sex> sex_from_letter(std::string_view text);

/// Autonomous community (17) or autonomous city (Ceuta, Melilla). The 19
/// regions partition the 52 provinces exactly.
struct Region {
    std::string code; // INE community code "01".."19"
    std::string name;
    std::vector<Province> provinces;
};

const std::vector<Region>& regions();
const Region& region_of(Province province);

} // namespace iashare
