#include "iashare/scenario.hpp"

#include "iashare/csv.hpp"
#include "iashare/error.hpp"

#include <algorithm>

namespace iashare {

IncidenceMatrix apply_scenario(const IncidenceMatrix& base, const ScenarioSpec& spec)
{
    for (const auto& [division, factor] : spec.overrides) {
        if (!base.contains(division))
            fail(ErrorKind::UnknownDivision,
                 "scenario override for division absent from base matrix: " + division.code());
    }

    std::map<Cnae, MatrixEntry> entries;
    for (const auto& [division, entry] : base.entries()) {
        std::int64_t shifted = static_cast<std::int64_t>(entry.factor.scaled()) +
                               spec.uniform_shift_scaled;
        shifted = std::clamp<std::int64_t>(shifted, 0, Factor::kScale);
        Factor factor = Factor::from_scaled(static_cast<std::int32_t>(shifted));
        auto it = spec.overrides.find(division);
        if (it != spec.overrides.end())
            factor = it->second;
        entries.emplace(division, MatrixEntry{factor, entry.label});
    }
    return IncidenceMatrix(std::move(entries), base.source_id() + "#scenario");
}

std::map<Cnae, Factor> load_scenario_overrides(std::istream& in)
{
    IncidenceMatrix parsed = load_matrix(in, "scenario-overrides");
    std::map<Cnae, Factor> overrides;
    for (const auto& [division, entry] : parsed.entries())
        overrides.emplace(division, entry.factor);
    return overrides;
}

std::vector<ScenarioDeltaRow> scenario_delta(const EmploymentTable& table,
                                             const IncidenceMatrix& base,
                                             const ScenarioSpec& spec, Level level, Sex sex,
                                             int year)
{
    IncidenceMatrix scenario = apply_scenario(base, spec);
    auto base_records = compute_exposure(table, base, level, sex, year);
    auto scenario_records = compute_exposure(table, scenario, level, sex, year);

    // same table and selection, so the two record sets cover identical
    // territories in identical order
    std::vector<ScenarioDeltaRow> rows;
    rows.reserve(base_records.size());
    for (std::size_t i = 0; i < base_records.size(); ++i) {
        const auto& b = base_records[i];
        const auto& s = scenario_records[i];
        ScenarioDeltaRow row{b.territory, b.ia_share(), s.ia_share(), 0.0};
        if (row.base_share && row.scenario_share)
            row.delta = *row.scenario_share - *row.base_share;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace iashare
