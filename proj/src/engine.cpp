#include "iashare/engine.hpp"

#include "iashare/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace iashare {

const char* level_label(Level level)
{
    switch (level) {
    case Level::Province: return "province";
    case Level::Region: return "region";
    case Level::National: return "national";
    }
    return "?";
}

std::optional<Level> level_from_label(std::string_view text)
{
    if (text == "province")
        return Level::Province;
    if (text == "region")
        return Level::Region;
    if (text == "national")
        return Level::National;
    return std::nullopt;
}

TerritoryRef territory_of(Province province)
{
    return {Level::Province, province.code(), province.name()};
}

TerritoryRef territory_of(const Region& region)
{
    return {Level::Region, region.code, region.name};
}

TerritoryRef national_territory()
{
    return {Level::National, "ES", "España"};
}

double ExposureRecord::ia_employment() const noexcept
{
    return static_cast<double>(ia_scaled) / Factor::kScale;
}

std::optional<double> ExposureRecord::ia_share() const noexcept
{
    if (employment == 0)
        return std::nullopt;
    return static_cast<double>(ia_scaled) /
           (static_cast<double>(Factor::kScale) * static_cast<double>(employment));
}

double SectorContribution::ia_employment() const noexcept
{
    return static_cast<double>(ia_scaled) / Factor::kScale;
}

double exposure_weight(std::int64_t count, Factor factor)
{
    if (count < 0)
        fail(ErrorKind::NegativeCount, "exposure_weight: negative count");
    return static_cast<double>(count * static_cast<std::int64_t>(factor.scaled())) /
           Factor::kScale;
}

namespace {

struct Sums {
    std::int64_t employment = 0;
    std::int64_t ia_scaled = 0;
};

// Accumulates the (sex, year) selection per province in key order; exact
// integer arithmetic, so the result is independent of scheduling and input
// permutation by construction.
std::map<Province, Sums> accumulate_selection(const EmploymentTable& table,
                                              const IncidenceMatrix& matrix, Sex sex, int year)
{
    std::set<std::string> missing;
    for (const auto& [key, count] : table.observations()) {
        if (key.year == year && key.sex == sex && !matrix.contains(key.division))
            missing.insert(key.division.code());
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& code : missing)
            list += (list.empty() ? "" : ", ") + code;
        fail(ErrorKind::MissingFactor,
             "matrix '" + matrix.source_id() + "' has no factor for division(s): " + list);
    }

    std::map<Province, Sums> per_province;
    for (const auto& [key, count] : table.observations()) {
        if (key.year != year || key.sex != sex)
            continue;
        Sums& sums = per_province[key.province];
        sums.employment += count;
        sums.ia_scaled += count * static_cast<std::int64_t>(matrix.at(key.division).scaled());
    }
    if (per_province.empty())
        fail(ErrorKind::EmptySelection, std::string("no observations for sex=") +
                                            sex_letter(sex) + " year=" + std::to_string(year));
    return per_province;
}

} // namespace

std::vector<ExposureRecord> compute_exposure(const EmploymentTable& table,
                                             const IncidenceMatrix& matrix, Level level, Sex sex,
                                             int year)
{
    auto per_province = accumulate_selection(table, matrix, sex, year);

    std::vector<ExposureRecord> records;
    switch (level) {
    case Level::Province:
        for (const auto& [province, sums] : per_province)
            records.push_back(
                {territory_of(province), sex, year, sums.employment, sums.ia_scaled});
        break;
    case Level::Region: {
        std::map<std::string, Sums> per_region;
        for (const auto& [province, sums] : per_province) {
            Sums& agg = per_region[region_of(province).code];
            agg.employment += sums.employment;
            agg.ia_scaled += sums.ia_scaled;
        }
        for (const Region& region : regions()) {
            auto it = per_region.find(region.code);
            if (it != per_region.end())
                records.push_back(
                    {territory_of(region), sex, year, it->second.employment, it->second.ia_scaled});
        }
        break;
    }
    case Level::National: {
        Sums national;
        for (const auto& [province, sums] : per_province) {
            national.employment += sums.employment;
            national.ia_scaled += sums.ia_scaled;
        }
        records.push_back({national_territory(), sex, year, national.employment,
                           national.ia_scaled});
        break;
    }
    }
    return records;
}

std::vector<GapRecord> gender_gap(const EmploymentTable& table, const IncidenceMatrix& matrix,
                                  int year)
{
    if (!table.has_series(year, Sex::Female))
        fail(ErrorKind::MissingSeries, "no female series for year " + std::to_string(year));
    if (!table.has_series(year, Sex::Male))
        fail(ErrorKind::MissingSeries, "no male series for year " + std::to_string(year));

    auto female = accumulate_selection(table, matrix, Sex::Female, year);
    auto male = accumulate_selection(table, matrix, Sex::Male, year);

    std::vector<GapRecord> records;
    for (const auto& [province, f] : female) {
        auto it = male.find(province);
        if (it == male.end())
            continue;
        const Sums& m = it->second;
        if (f.employment == 0 || m.employment == 0)
            continue; // share undefined on one side; no gap to report
        double share_f = static_cast<double>(f.ia_scaled) /
                         (static_cast<double>(Factor::kScale) * static_cast<double>(f.employment));
        double share_m = static_cast<double>(m.ia_scaled) /
                         (static_cast<double>(Factor::kScale) * static_cast<double>(m.employment));
        records.push_back({province, year, share_f, share_m, 100.0 * (share_f - share_m)});
    }
    return records;
}

StabilityRecord yoy_delta(std::span<const ExposureRecord> records_a,
                          std::span<const ExposureRecord> records_b)
{
    if (records_a.empty() || records_b.empty())
        fail(ErrorKind::InvalidArgument, "yoy_delta: empty record set");

    Sex sex = records_a.front().sex;
    int year_a = records_a.front().year;
    int year_b = records_b.front().year;
    for (const auto& r : records_a)
        if (r.sex != sex || r.year != year_a)
            fail(ErrorKind::InvalidArgument, "yoy_delta: mixed series in first record set");
    for (const auto& r : records_b)
        if (r.sex != sex)
            fail(ErrorKind::TerritoryMismatch, "yoy_delta: sex series differ");
    for (const auto& r : records_b)
        if (r.year != year_b)
            fail(ErrorKind::InvalidArgument, "yoy_delta: mixed years in second record set");

    std::map<std::string, const ExposureRecord*> by_code_b;
    for (const auto& r : records_b)
        by_code_b.emplace(r.territory.code, &r);

    StabilityRecord result;
    result.year_a = year_a;
    result.year_b = year_b;
    result.sex = sex;

    std::vector<double> shares_a, shares_b;
    for (const auto& ra : records_a) {
        auto it = by_code_b.find(ra.territory.code);
        if (it == by_code_b.end())
            fail(ErrorKind::TerritoryMismatch,
                 "territory " + ra.territory.code + " missing from second record set");
        auto sa = ra.ia_share();
        auto sb = it->second->ia_share();
        if (!sa || !sb)
            fail(ErrorKind::UndefinedShare,
                 "undefined share for territory " + ra.territory.code);
        result.deltas[ra.territory.code] = {*sa, *sb, *sb - *sa};
        shares_a.push_back(*sa);
        shares_b.push_back(*sb);
    }
    if (by_code_b.size() != records_a.size())
        fail(ErrorKind::TerritoryMismatch, "record sets cover different territories");

    for (const auto& [code, entry] : result.deltas)
        result.max_abs_delta = std::max(result.max_abs_delta, std::abs(entry.delta));
    result.rank_correlation = spearman_rank_correlation(shares_a, shares_b);
    return result;
}

std::vector<SectorContribution> sector_contributions(const EmploymentTable& table,
                                                     const IncidenceMatrix& matrix, Level level,
                                                     std::string_view territory_code, Sex sex,
                                                     int year)
{
    std::set<Province> wanted;
    switch (level) {
    case Level::Province:
        wanted.insert(Province::parse(territory_code));
        break;
    case Level::Region: {
        const Region* found = nullptr;
        for (const Region& region : regions())
            if (region.code == territory_code)
                found = &region;
        if (!found)
            fail(ErrorKind::TerritoryMismatch,
                 "unknown region code: '" + std::string(territory_code) + "'");
        wanted.insert(found->provinces.begin(), found->provinces.end());
        break;
    }
    case Level::National:
        wanted.insert(Province::all().begin(), Province::all().end());
        break;
    }

    std::map<Cnae, SectorContribution> per_division;
    std::set<std::string> missing;
    for (const auto& [key, count] : table.observations()) {
        if (key.year != year || key.sex != sex || !wanted.contains(key.province))
            continue;
        if (!matrix.contains(key.division)) {
            missing.insert(key.division.code());
            continue;
        }
        auto [it, inserted] =
            per_division.try_emplace(key.division, SectorContribution{key.division});
        it->second.employment += count;
        it->second.ia_scaled += count * static_cast<std::int64_t>(matrix.at(key.division).scaled());
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& code : missing)
            list += (list.empty() ? "" : ", ") + code;
        fail(ErrorKind::MissingFactor,
             "matrix '" + matrix.source_id() + "' has no factor for division(s): " + list);
    }
    if (per_division.empty())
        fail(ErrorKind::EmptySelection,
             std::string("no observations for territory in sex=") + sex_letter(sex) +
                 " year=" + std::to_string(year));

    std::int64_t total_ia = 0;
    for (const auto& [division, c] : per_division)
        total_ia += c.ia_scaled;

    std::vector<SectorContribution> rows;
    rows.reserve(per_division.size());
    for (auto& [division, c] : per_division) {
        c.share_of_ia = total_ia > 0
                            ? static_cast<double>(c.ia_scaled) / static_cast<double>(total_ia)
                            : 0.0;
        rows.push_back(c);
    }
    std::ranges::sort(rows, [](const SectorContribution& a, const SectorContribution& b) {
        if (a.share_of_ia != b.share_of_ia)
            return a.share_of_ia > b.share_of_ia;
        return a.division < b.division;
    });
    return rows;
}

namespace {

// Average ranks (1-based); equal values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });

    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]])
            ++j;
        double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double spearman_rank_correlation(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        fail(ErrorKind::InvalidArgument, "rank correlation: size mismatch");
    if (x.size() < 2)
        fail(ErrorKind::InvalidArgument, "rank correlation needs at least 2 observations");

    std::vector<double> rx = average_ranks(x);
    std::vector<double> ry = average_ranks(y);
    if (rx == ry)
        return 1.0; // identical rankings, exact by definition

    double n = static_cast<double>(rx.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        mean_x += rx[i];
        mean_y += ry[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        double dx = rx[i] - mean_x;
        double dy = ry[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        fail(ErrorKind::DegenerateRange, "rank correlation undefined: constant ranks on one side");
    return sxy / std::sqrt(sxx * syy);
}

} // namespace iashare
