#include "iashare/factor.hpp"

#include "iashare/error.hpp"

#include <cctype>
#include <cstdlib>

namespace iashare {

std::optional<std::int64_t> parse_scaled_decimal(std::string_view text, bool allow_sign)
{
    std::size_t begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos)
        return std::nullopt;
    std::size_t end = text.find_last_not_of(" \t") + 1;
    text = text.substr(begin, end - begin);

    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (!allow_sign)
            return std::nullopt;
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty())
        return std::nullopt;

    std::size_t sep = text.find_first_of(".,");
    std::string_view int_part = text.substr(0, sep);
    std::string_view frac_part =
        sep == std::string_view::npos ? std::string_view{} : text.substr(sep + 1);
    if (int_part.empty() || (sep != std::string_view::npos && frac_part.empty()))
        return std::nullopt;
    if (frac_part.size() > 4)
        return std::nullopt; // would lose precision in scaled-1e4 storage
    if (int_part.size() > 9)
        return std::nullopt;

    std::int64_t whole = 0;
    for (char c : int_part) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        whole = whole * 10 + (c - '0');
    }
    std::int64_t frac = 0;
    std::int64_t scale = Factor::kScale;
    for (char c : frac_part) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        scale /= 10;
        frac += (c - '0') * scale;
    }
    std::int64_t result = whole * Factor::kScale + frac;
    return negative ? -result : result;
}

std::string scaled_decimal_str(std::int64_t scaled)
{
    std::string sign = scaled < 0 ? "-" : "";
    std::int64_t abs = scaled < 0 ? -scaled : scaled;
    std::string out = sign + std::to_string(abs / Factor::kScale);
    std::int64_t frac = abs % Factor::kScale;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(frac));
        std::string digits(buf);
        while (digits.back() == '0')
            digits.pop_back();
        out += "." + digits;
    }
    return out;
}

Factor Factor::parse(std::string_view text)
{
    auto scaled = parse_scaled_decimal(text, /*allow_sign=*/false);
    if (!scaled)
        fail(ErrorKind::MalformedRow,
             "malformed factor (expected a decimal with at most 4 fractional digits): '" +
                 std::string(text) + "'");
    if (*scaled > kScale)
        fail(ErrorKind::FactorOutOfRange, "factor outside [0, 1]: '" + std::string(text) + "'");
    return Factor(static_cast<std::int32_t>(*scaled));
}

std::optional<Factor> Factor::try_parse(std::string_view text)
{
    auto scaled = parse_scaled_decimal(text, /*allow_sign=*/false);
    if (!scaled || *scaled > kScale)
        return std::nullopt;
    return Factor(static_cast<std::int32_t>(*scaled));
}

Factor Factor::from_scaled(std::int32_t scaled)
{
    if (scaled < 0 || scaled > kScale)
        fail(ErrorKind::FactorOutOfRange,
             "scaled factor outside [0, 10000]: " + std::to_string(scaled));
    return Factor(scaled);
}

std::string Factor::str() const
{
    return scaled_decimal_str(scaled_);
}

} // namespace iashare
