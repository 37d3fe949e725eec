#include "iashare/taxonomy.hpp"

#include "iashare/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace iashare {
namespace {

// CNAE-2009 never assigned these two-digit codes.
constexpr std::array<int, 11> kUnassignedDivisions = {4, 34, 40, 44, 48, 54, 57, 67, 76, 83, 89};

constexpr std::array<const char*, 52> kProvinceNames = {
    "Araba/Álava", "Albacete",  "Alicante",  "Almería",
    "Ávila",       "Badajoz",   "Illes Balears", "Barcelona",
    "Burgos",      "Cáceres",   "Cádiz",     "Castellón",
    "Ciudad Real", "Córdoba",   "A Coruña",  "Cuenca",
    "Girona",      "Granada",   "Guadalajara", "Gipuzkoa",
    "Huelva",      "Huesca",    "Jaén",      "León",
    "Lleida",      "La Rioja",  "Lugo",      "Madrid",
    "Málaga",      "Murcia",    "Navarra",   "Ourense",
    "Asturias",    "Palencia",  "Las Palmas", "Pontevedra",
    "Salamanca",   "Santa Cruz de Tenerife", "Cantabria", "Segovia",
    "Sevilla",     "Soria",     "Tarragona", "Teruel",
    "Toledo",      "Valencia",  "Valladolid", "Bizkaia",
    "Zamora",      "Zaragoza",  "Ceuta",     "Melilla",
};

std::string pad2(int n)
{
    std::string s(2, '0');
    s[0] = static_cast<char>('0' + n / 10);
    s[1] = static_cast<char>('0' + n % 10);
    return s;
}

// Parses a 1-2 digit code with optional surrounding whitespace; -1 if not
// purely numeric.
int parse_two_digit(std::string_view text)
{
    std::size_t begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos)
        return -1;
    std::size_t end = text.find_last_not_of(" \t") + 1;
    text = text.substr(begin, end - begin);
    if (text.empty() || text.size() > 2)
        return -1;
    int value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return -1;
        value = value * 10 + (c - '0');
    }
    return value;
}

} // namespace

bool Cnae::valid_number(int number)
{
    if (number < 1 || number > 99)
        return false;
    return std::ranges::find(kUnassignedDivisions, number) == kUnassignedDivisions.end();
}

Cnae Cnae::from_number(int number)
{
    if (!valid_number(number))
        fail(ErrorKind::UnknownDivision,
             "not an assigned CNAE-2009 division: " + std::to_string(number));
    return Cnae(static_cast<std::uint8_t>(number));
}

std::optional<Cnae> Cnae::try_parse(std::string_view text)
{
    int value = parse_two_digit(text);
    if (value < 0 || !valid_number(value))
        return std::nullopt;
    return Cnae(static_cast<std::uint8_t>(value));
}

Cnae Cnae::parse(std::string_view text)
{
    int value = parse_two_digit(text);
    if (value < 0)
        fail(ErrorKind::UnknownDivision, "malformed CNAE division code: '" + std::string(text) + "'");
    if (!valid_number(value))
        fail(ErrorKind::UnknownDivision,
             "not an assigned CNAE-2009 division: '" + std::string(text) + "'");
    return Cnae(static_cast<std::uint8_t>(value));
}

std::string Cnae::code() const
{
    return pad2(number_);
}

std::span<const Cnae> Cnae::all()
{
    static const std::vector<Cnae> divisions = [] {
        std::vector<Cnae> v;
        for (int n = 1; n <= 99; ++n)
            if (valid_number(n))
                v.push_back(Cnae(static_cast<std::uint8_t>(n)));
        return v;
    }();
    return divisions;
}

Province Province::from_number(int number)
{
    if (number < 1 || number > 52)
        fail(ErrorKind::UnknownProvince, "province code out of range: " + std::to_string(number));
    return Province(static_cast<std::uint8_t>(number));
}

std::optional<Province> Province::try_parse(std::string_view text)
{
    int value = parse_two_digit(text);
    if (value < 1 || value > 52)
        return std::nullopt;
    return Province(static_cast<std::uint8_t>(value));
}

Province Province::parse(std::string_view text)
{
    auto p = try_parse(text);
    if (!p)
        fail(ErrorKind::UnknownProvince, "unknown province code: '" + std::string(text) + "'");
    return *p;
}

std::string Province::code() const
{
    return pad2(number_);
}

const std::string& Province::name() const
{
    static const std::vector<std::string> names(kProvinceNames.begin(), kProvinceNames.end());
    return names[static_cast<std::size_t>(number_ - 1)];
}

std::span<const Province> Province::all()
{
    static const std::vector<Province> provinces = [] {
        std::vector<Province> v;
        for (int n = 1; n <= 52; ++n)
            v.push_back(Province(static_cast<std::uint8_t>(n)));
        return v;
    }();
    return provinces;
}

char sex_letter(Sex sex)
{
    switch (sex) {
    case Sex::Total: return 'T';
    case Sex::Female: return 'F';
    case Sex::Male: return 'M';
    }
    return '?';
}

const char* sex_label(Sex sex)
{
    switch (sex) {
    case Sex::Total: return "total";
    case Sex::Female: return "female";
    case Sex::Male: return "male";
    }
    return "?";
}

std::optional<Sex> sex_from_letter(std::string_view text)
{
    if (text.size() != 1)
        return std::nullopt;
    switch (text[0]) {
    case 'T': case 't': return Sex::Total;
    case 'F': case 'f': return Sex::Female;
    case 'M': case 'm': return Sex::Male;
    default: return std::nullopt;
    }
}

namespace {

struct RegionDef {
    const char* code;
    const char* name;
    std::initializer_list<int> provinces;
};

// INE first-level administrative division: 17 communities plus the two
// autonomous cities, partitioning the 52 provinces.
constexpr std::array<RegionDef, 19> kRegionDefs = {{
    {"01", "Andalucía", {4, 11, 14, 18, 21, 23, 29, 41}},
    {"02", "Aragón", {22, 44, 50}},
    {"03", "Principado de Asturias", {33}},
    {"04", "Illes Balears", {7}},
    {"05", "Canarias", {35, 38}},
    {"06", "Cantabria", {39}},
    {"07", "Castilla y León", {5, 9, 24, 34, 37, 40, 42, 47}},
    {"08", "Castilla-La Mancha", {2, 13, 16, 19, 45}},
    {"09", "Cataluña", {8, 17, 25, 43}},
    {"10", "Comunitat Valenciana", {3, 12, 46}},
    {"11", "Extremadura", {6, 10}},
    {"12", "Galicia", {15, 27, 32, 36}},
    {"13", "Comunidad de Madrid", {28}},
    {"14", "Región de Murcia", {30}},
    {"15", "Comunidad Foral de Navarra", {31}},
    {"16", "País Vasco", {1, 20, 48}},
    {"17", "La Rioja", {26}},
    {"18", "Ceuta", {51}},
    {"19", "Melilla", {52}},
}};

} // namespace

const std::vector<Region>& regions()
{
    static const std::vector<Region> all = [] {
        std::vector<Region> v;
        v.reserve(kRegionDefs.size());
        for (const auto& def : kRegionDefs) {
            Region region{def.code, def.name, {}};
            for (int p : def.provinces)
                region.provinces.push_back(Province::from_number(p));
            v.push_back(std::move(region));
        }
        return v;
    }();
    return all;
}

const Region& region_of(Province province)
{
    static const std::array<const Region*, 52> index = [] {
        std::array<const Region*, 52> idx{};
        for (const Region& region : regions())
            for (Province p : region.provinces)
                idx[static_cast<std::size_t>(p.number() - 1)] = &region;
        return idx;
    }();
    return *index[static_cast<std::size_t>(province.number() - 1)];
}

} // namespace iashare
