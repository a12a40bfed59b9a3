// Mass and energy bookkeeping: rocket-equation delta-v, hover endurance,
// attitude-control allowance, battery endurance, tank packaging, and the
// power/propulsion technology comparison table.
#pragma once

#include <string>
#include <vector>

namespace pitbot::propulsion {

/// Standard gravity used for Isp conversion on every body.
inline constexpr double kStandardGravity = 9.80665;  // m/s^2

struct EngineSpec {
  double isp_main_s = 330.0;            // RP-1 / H2O2 main engine
  double isp_acs_s = 180.0;             // warm-gas (decomposed H2O2) thrusters
  double g0 = kStandardGravity;
  double of_ratio = 7.0;                // oxidizer:fuel mass ratio
  double rho_fuel_kg_m3 = 700.0;        // RP-1
  double rho_oxidizer_kg_m3 = 1190.0;   // 50 wt% H2O2 solution

  double exhaust_velocity(bool use_acs) const {
    return (use_acs ? isp_acs_s : isp_main_s) * g0;
  }
};
void validate(const EngineSpec&);

struct MassBudget {
  double dry_mass_kg = 2.0;     // structure + avionics + power + sensors + payload + dry engine
  double propellant_kg = 1.0;
  double total_kg() const { return dry_mass_kg + propellant_kg; }
};
void validate(const MassBudget&);

struct PowerSpec {
  double battery_mass_kg = 0.3;
  double specific_energy_wh_per_kg = 700.0;  // LiSOCl2 primaries
  double avionics_draw_w = 10.0;
  double lights_draw_w = 5.0;
  double capacity_wh() const { return battery_mass_kg * specific_energy_wh_per_kg; }
};
void validate(const PowerSpec&);

/// One row of the power/propulsion technology comparison. claimed_* columns
/// are the reference-design datasheet values the budget report audits
/// against; `note` keeps any non-numeric qualifier from the source table.
struct TechnologyPreset {
  std::string name;
  double specific_energy_wh_per_kg = 0.0;
  double mass_kg = 0.0;
  double waste_heat_w = 0.0;
  double claimed_fly_time_hr = 0.0;
  double claimed_range_km = 0.0;
  bool propulsive = false;
  std::string note;
};

/// Tsiolkovsky capacity at the main-engine Isp: isp*g0*ln(m0/mf).
/// Throws std::invalid_argument when propellant >= total (nonphysical).
double dv_capacity(const EngineSpec&, const MassBudget&);

/// Propellant to execute `dv` starting from mass m0: m0*(1 - exp(-dv/ve)).
/// Inverse of dv_capacity. Throws on negative dv or non-positive m0.
double propellant_for_dv(const EngineSpec&, double m0_kg, double dv_mps, bool use_acs);

struct HoverBudget {
  double endurance_s = 0.0;
  double fuel_rate_initial_kg_per_s = 0.0;
};

/// Hover until propellant exhaustion under surface gravity g:
/// endurance = (isp*g0/g) * ln(m0/mf); initial rate = m0*g/(isp*g0).
HoverBudget hover_budget(const EngineSpec&, const MassBudget&, double g_mps2);

/// Propellant needed to hover for duration_s starting at m0 (inverse of the
/// endurance formula); used by the budget report to price the claimed fly time.
double hover_propellant_for(const EngineSpec&, double m0_kg, double duration_s, double g_mps2);

/// Attitude-control propellant charged once per hop, at the ACS Isp.
double acs_allowance(const EngineSpec&, double m_kg, double dv_per_hop_mps);

/// capacity / total draw. Throws std::invalid_argument on zero draw.
double battery_endurance_hours(const PowerSpec&);

struct TankFit {
  double volume_m3 = 0.0;    // oxidizer + fuel volume at the O/F split
  double capacity_m3 = 0.0;  // lower half-sphere volume
  bool fits = false;
};

/// Volume of `propellant_kg` split at the O/F ratio, checked against the
/// lower half of a sphere of the given diameter.
TankFit tank_fit_check(const EngineSpec&, double propellant_kg, double sphere_diameter_m);

/// Built-in technology comparison rows (mirrors data/technology_presets.json).
const std::vector<TechnologyPreset>& technology_presets();
std::vector<TechnologyPreset> load_technology_presets(const std::string& path);

struct TechnologyRow {
  TechnologyPreset preset;
  double computed_range_km = 0.0;     // fly range; 0 for non-propulsive rows
  double computed_fly_time_hr = 0.0;  // hover endurance
};

/// Computed range/endurance beside each preset's claimed columns.
std::vector<TechnologyRow> technology_report(const std::vector<TechnologyPreset>& presets,
                                             double hop_length_m, double g_mps2,
                                             const EngineSpec& engine = {},
                                             const MassBudget& budget = {});
std::string format_technology_report(const std::vector<TechnologyRow>& rows);

}  // namespace pitbot::propulsion
