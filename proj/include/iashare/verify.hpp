#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace iashare {

enum class ClaimStatus { Holds, HoldsWithExceptions, Fails };

const char* claim_status_label(ClaimStatus status);

struct ClaimException {
    std::string territory;
    std::string detail;
};

/// Machine-checked replay of one published claim against the embedded
/// reference tables. For claims of universal form, status is Holds exactly
/// when exceptions is empty; distributional claims carry their numbers in
/// metric.
struct ClaimReport {
    std::string claim_id;
    ClaimStatus status;
    std::string metric;
    std::vector<ClaimException> exceptions;
};

/// ia_employment/employment recomputed for all 312 reference rows, rounded
/// half-up to each row's printed digit count and compared with the printed
/// share; every mismatch itemized. Half-even is evaluated alongside and the
/// metric records whether the conventions disagree anywhere.
ClaimReport check_ratio_consistency();

/// Published band: provincial total shares between 18% and 22%; out-of-band
/// provinces per year are the exceptions.
ClaimReport check_band_claim();

/// Strictly greater female share in every province, per year.
ClaimReport check_gap_sign_claim();

/// Gap distribution per year (min / max / median / fraction inside
/// [1.5, 3.0] pp); "mostly in band" reported as the fraction, not asserted.
ClaimReport check_gap_magnitude();

/// Year-over-year stability of provincial totals: |delta| ≤ 0.002 count and
/// exceedances, the Madrid > 0.215-in-both-years check, and the Spearman
/// rank correlation between the two years.
ClaimReport check_stability_claims();

/// The published prose factor band [0.06, 0.30] versus the embedded matrix
/// range (three divisions carry 0.305).
ClaimReport check_factor_range();

/// All claims, fixed order, deterministic content.
std::vector<ClaimReport> run_all_checks();

std::string render_text_report(std::span<const ClaimReport> reports);
std::string render_json_report(std::span<const ClaimReport> reports);

/// round(numerator/denominator · 10^digits) half-up, exact integer
/// arithmetic; denominator > 0.
std::int64_t round_ratio_scaled(std::int64_t numerator, std::int64_t denominator, int digits);

/// Renders a scaled share at the given fractional digit count ("0.2168",
/// digits 4; "0.204", digits 3).
std::string share_digits_str(std::int64_t scaled, int digits);

} // namespace iashare
