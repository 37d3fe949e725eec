#include "iashare/verify.hpp"

#include "iashare/engine.hpp"
#include "iashare/error.hpp"
#include "iashare/fixtures.hpp"
#include "iashare/incidence.hpp"
#include "iashare/taxonomy.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace iashare {
namespace {

using fixtures::ReferenceRow;

constexpr std::array<Sex, 3> kSexes = {Sex::Total, Sex::Female, Sex::Male};

std::string province_label(int number)
{
    Province p = Province::from_number(number);
    return p.code() + " " + p.name();
}

std::string fmt(const char* format, ...)
{
    va_list args;
    va_start(args, format);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// printed share at its own precision, from the 4-decimal-normalized storage
std::int64_t printed_at_own_digits(const ReferenceRow& row)
{
    std::int64_t scale = 1;
    for (int i = row.share_digits; i < 4; ++i)
        scale *= 10;
    return row.share_scaled4 / scale;
}

double share4_value(const ReferenceRow& row)
{
    return row.share_scaled4 / 10000.0;
}

} // namespace

std::int64_t round_ratio_scaled(std::int64_t numerator, std::int64_t denominator, int digits)
{
    if (denominator <= 0)
        fail(ErrorKind::InvalidArgument, "round_ratio_scaled: non-positive denominator");
    __int128 scaled = static_cast<__int128>(numerator);
    for (int i = 0; i < digits; ++i)
        scaled *= 10;
    __int128 rounded = (2 * scaled + denominator) / (2 * denominator);
    return static_cast<std::int64_t>(rounded);
}

namespace {

// half-even variant, used only to report whether the convention matters
std::int64_t round_ratio_scaled_half_even(std::int64_t numerator, std::int64_t denominator,
                                          int digits)
{
    __int128 scaled = static_cast<__int128>(numerator);
    for (int i = 0; i < digits; ++i)
        scaled *= 10;
    __int128 q = scaled / denominator;
    __int128 r = scaled % denominator;
    if (2 * r > denominator)
        return static_cast<std::int64_t>(q + 1);
    if (2 * r < denominator)
        return static_cast<std::int64_t>(q);
    return static_cast<std::int64_t>(q + (q % 2)); // exact tie
}

} // namespace

std::string share_digits_str(std::int64_t scaled, int digits)
{
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    std::string out = std::to_string(scaled / scale);
    if (digits > 0) {
        std::string frac = std::to_string(scaled % scale);
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

const char* claim_status_label(ClaimStatus status)
{
    switch (status) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::HoldsWithExceptions: return "holds_with_exceptions";
    case ClaimStatus::Fails: return "fails";
    }
    return "?";
}

ClaimReport check_ratio_consistency()
{
    ClaimReport report;
    report.claim_id = "ratio-consistency";

    int total = 0;
    int matched = 0;
    int convention_disagreements = 0;
    for (int year : fixtures::kYears) {
        for (Sex sex : kSexes) {
            for (const ReferenceRow& row : fixtures::reference_table(year, sex)) {
                ++total;
                std::int64_t printed = printed_at_own_digits(row);
                std::int64_t recomputed =
                    round_ratio_scaled(row.ia_employment, row.employment, row.share_digits);
                std::int64_t recomputed_even = round_ratio_scaled_half_even(
                    row.ia_employment, row.employment, row.share_digits);
                if (recomputed != recomputed_even)
                    ++convention_disagreements;
                if (recomputed == printed) {
                    ++matched;
                } else {
                    report.exceptions.push_back(
                        {province_label(row.province),
                         fmt("%d %s: printed %s, recomputed %s (= %lld/%lld)", year,
                             sex_label(sex), share_digits_str(printed, row.share_digits).c_str(),
                             share_digits_str(recomputed, row.share_digits).c_str(),
                             static_cast<long long>(row.ia_employment),
                             static_cast<long long>(row.employment))});
                }
            }
        }
    }

    report.status = report.exceptions.empty() ? ClaimStatus::Holds
                                              : ClaimStatus::HoldsWithExceptions;
    report.metric = fmt("%d/%d rows match at printed precision (%.2f%%); rounding half-up; "
                        "half-even %s",
                        matched, total, 100.0 * matched / total,
                        convention_disagreements == 0 ? "agrees on every row"
                                                      : "disagrees on some rows");
    return report;
}

ClaimReport check_band_claim()
{
    ClaimReport report;
    report.claim_id = "share-band";

    std::string metric;
    for (int year : fixtures::kYears) {
        auto rows = fixtures::reference_table(year, Sex::Total);
        const ReferenceRow* min_row = &rows[0];
        const ReferenceRow* max_row = &rows[0];
        for (const ReferenceRow& row : rows) {
            if (row.share_scaled4 < min_row->share_scaled4)
                min_row = &row;
            if (row.share_scaled4 > max_row->share_scaled4)
                max_row = &row;
        }
        for (const ReferenceRow& row : rows) {
            if (row.share_scaled4 < 1800)
                report.exceptions.push_back(
                    {province_label(row.province),
                     fmt("%d total share %.4f below 0.18", year, share4_value(row))});
            else if (row.share_scaled4 > 2200)
                report.exceptions.push_back(
                    {province_label(row.province),
                     fmt("%d total share %.4f above 0.22", year, share4_value(row))});
        }
        metric += fmt("%s%d: min %.4f (%s), max %.4f (%s)", metric.empty() ? "" : "; ", year,
                      share4_value(*min_row), province_label(min_row->province).c_str(),
                      share4_value(*max_row), province_label(max_row->province).c_str());
    }
    report.metric = metric + "; claimed band [0.18, 0.22]";
    report.status = report.exceptions.empty() ? ClaimStatus::Holds
                                              : ClaimStatus::HoldsWithExceptions;
    return report;
}

ClaimReport check_gap_sign_claim()
{
    ClaimReport report;
    report.claim_id = "gap-sign";

    std::string metric;
    for (int year : fixtures::kYears) {
        auto female = fixtures::reference_table(year, Sex::Female);
        auto male = fixtures::reference_table(year, Sex::Male);
        int satisfied = 0;
        for (std::size_t i = 0; i < female.size(); ++i) {
            // strict inequality; an exact tie does not satisfy the claim
            if (female[i].share_scaled4 > male[i].share_scaled4) {
                ++satisfied;
            } else {
                report.exceptions.push_back(
                    {province_label(female[i].province),
                     fmt("%d: female %.4f vs male %.4f", year, share4_value(female[i]),
                         share4_value(male[i]))});
            }
        }
        metric += fmt("%s%d: female > male in %d/52 provinces", metric.empty() ? "" : "; ", year,
                      satisfied);
    }
    report.metric = metric;
    report.status = report.exceptions.empty() ? ClaimStatus::Holds
                                              : ClaimStatus::HoldsWithExceptions;
    return report;
}

ClaimReport check_gap_magnitude()
{
    ClaimReport report;
    report.claim_id = "gap-magnitude";

    std::string metric;
    bool majority_everywhere = true;
    for (int year : fixtures::kYears) {
        auto female = fixtures::reference_table(year, Sex::Female);
        auto male = fixtures::reference_table(year, Sex::Male);
        std::vector<std::int64_t> gaps_scaled; // pp × 100
        for (std::size_t i = 0; i < female.size(); ++i)
            gaps_scaled.push_back(female[i].share_scaled4 - male[i].share_scaled4);
        std::ranges::sort(gaps_scaled);

        int in_band = 0;
        for (std::int64_t g : gaps_scaled)
            if (g >= 150 && g <= 300)
                ++in_band;
        double n = static_cast<double>(gaps_scaled.size());
        double median = (static_cast<double>(gaps_scaled[25]) +
                         static_cast<double>(gaps_scaled[26])) /
                        2.0 / 100.0;
        double fraction = in_band / n;
        if (fraction <= 0.5)
            majority_everywhere = false;
        metric += fmt("%s%d: gap_pp min %.2f, max %.2f, median %.3f, in [1.5, 3.0] pp: %d/52 "
                      "(%.1f%%)",
                      metric.empty() ? "" : "; ", year,
                      static_cast<double>(gaps_scaled.front()) / 100.0,
                      static_cast<double>(gaps_scaled.back()) / 100.0, median, in_band,
                      100.0 * fraction);
    }
    report.metric = metric;
    // distributional claim: "mostly inside the band" read as fraction > 1/2
    report.status = majority_everywhere ? ClaimStatus::Holds : ClaimStatus::Fails;
    return report;
}

ClaimReport check_stability_claims()
{
    ClaimReport report;
    report.claim_id = "yoy-stability";

    auto t21 = fixtures::reference_table(2021, Sex::Total);
    auto t22 = fixtures::reference_table(2022, Sex::Total);

    int within = 0;
    std::int64_t max_abs = 0;
    int max_abs_province = 0;
    std::vector<double> shares21, shares22;
    for (std::size_t i = 0; i < t21.size(); ++i) {
        std::int64_t delta = t22[i].share_scaled4 - t21[i].share_scaled4;
        shares21.push_back(share4_value(t21[i]));
        shares22.push_back(share4_value(t22[i]));
        if (std::abs(delta) > max_abs) {
            max_abs = std::abs(delta);
            max_abs_province = t21[i].province;
        }
        if (std::abs(delta) <= 20) {
            ++within;
        } else {
            report.exceptions.push_back(
                {province_label(t21[i].province),
                 fmt("total share %.4f -> %.4f, delta %+.4f exceeds 0.002",
                     share4_value(t21[i]), share4_value(t22[i]),
                     static_cast<double>(delta) / 10000.0)});
        }
    }

    const ReferenceRow& madrid21 = t21[27];
    const ReferenceRow& madrid22 = t22[27];
    bool madrid_holds = madrid21.share_scaled4 > 2150 && madrid22.share_scaled4 > 2150;
    if (!madrid_holds)
        report.exceptions.push_back({province_label(28),
                                     fmt("total share not above 0.215 in both years: %.4f / %.4f",
                                         share4_value(madrid21), share4_value(madrid22))});

    double rho = spearman_rank_correlation(shares21, shares22);
    report.metric = fmt("|delta| <= 0.002 in %d/52 provinces; max |delta| %.4f (%s); Madrid "
                        "total %.4f / %.4f %s 0.215 in both years; Spearman rho %.12f",
                        within, static_cast<double>(max_abs) / 10000.0,
                        province_label(max_abs_province).c_str(), share4_value(madrid21),
                        share4_value(madrid22), madrid_holds ? ">" : "NOT >", rho);
    report.status = report.exceptions.empty() ? ClaimStatus::Holds
                                              : ClaimStatus::HoldsWithExceptions;
    return report;
}

ClaimReport check_factor_range()
{
    ClaimReport report;
    report.claim_id = "factor-range";

    const IncidenceMatrix& matrix = default_matrix();
    for (const auto& [division, entry] : matrix.entries()) {
        if (entry.factor.scaled() > 3000 || entry.factor.scaled() < 600)
            report.exceptions.push_back(
                {division.code() + " " + entry.label,
                 fmt("factor %s outside the stated range [0.06, 0.30]",
                     entry.factor.str().c_str())});
    }
    report.metric = fmt("embedded factors span [%s, %s]; stated range [0.06, 0.30]",
                        matrix.min_factor().str().c_str(), matrix.max_factor().str().c_str());
    report.status = report.exceptions.empty() ? ClaimStatus::Holds
                                              : ClaimStatus::HoldsWithExceptions;
    return report;
}

std::vector<ClaimReport> run_all_checks()
{
    return {
        check_ratio_consistency(), check_band_claim(),      check_gap_sign_claim(),
        check_gap_magnitude(),     check_stability_claims(), check_factor_range(),
    };
}

std::string render_text_report(std::span<const ClaimReport> reports)
{
    std::string out;
    out += "reference replay: 52 provinces x {2021, 2022} x {total, female, male}\n";
    out += "rounding: half-up at each row's printed precision\n\n";
    for (const ClaimReport& report : reports) {
        out += "[" + std::string(claim_status_label(report.status)) + "] " + report.claim_id +
               "\n";
        out += "  " + report.metric + "\n";
        for (const ClaimException& e : report.exceptions)
            out += "  ! " + e.territory + ": " + e.detail + "\n";
        out += "\n";
    }
    return out;
}

std::string render_json_report(std::span<const ClaimReport> reports)
{
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    for (const ClaimReport& report : reports) {
        nlohmann::ordered_json exceptions = nlohmann::ordered_json::array();
        for (const ClaimException& e : report.exceptions)
            exceptions.push_back({{"territory", e.territory}, {"detail", e.detail}});
        claims.push_back({{"claim_id", report.claim_id},
                          {"status", claim_status_label(report.status)},
                          {"metric", report.metric},
                          {"exceptions", std::move(exceptions)}});
    }
    return claims.dump(2) + "\n";
}

} // namespace iashare
