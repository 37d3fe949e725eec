#pragma once

#include "iashare/engine.hpp"
#include "iashare/incidence.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <vector>

namespace iashare {

/// Declarative what-if over a base matrix: a uniform shift applied to every
/// factor (clamped to [0, 1]) and then per-division absolute overrides.
struct ScenarioSpec {
    std::map<Cnae, Factor> overrides;
    std::int64_t uniform_shift_scaled = 0; // signed, scaled 1e4
};

/// New matrix with the scenario applied; the base is untouched. Overrides
/// naming divisions the base does not carry throw Error{UnknownDivision}.
IncidenceMatrix apply_scenario(const IncidenceMatrix& base, const ScenarioSpec& spec);

/// Override file: CSV with header `cnae,factor`.
std::map<Cnae, Factor> load_scenario_overrides(std::istream& in);

struct ScenarioDeltaRow {
    TerritoryRef territory;
    std::optional<double> base_share;
    std::optional<double> scenario_share;
    double delta = 0.0; // scenario − base, 0 when both undefined
};

/// Per-territory change in ia_share induced by the scenario, at the given
/// aggregation level. delta is exactly 0 wherever the scenario leaves every
/// factor with positive employment in that territory unchanged.
std::vector<ScenarioDeltaRow> scenario_delta(const EmploymentTable& table,
                                             const IncidenceMatrix& base,
                                             const ScenarioSpec& spec, Level level, Sex sex,
                                             int year);

} // namespace iashare
