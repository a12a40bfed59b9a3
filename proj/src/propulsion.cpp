#include "pitbot/propulsion.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pitbot::propulsion {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate(const EngineSpec& e) {
  if (!(e.isp_main_s > 0 && e.isp_acs_s > 0 && e.g0 > 0 && e.of_ratio > 0 &&
        e.rho_fuel_kg_m3 > 0 && e.rho_oxidizer_kg_m3 > 0))
    throw std::invalid_argument("EngineSpec: all parameters must be strictly positive");
  if (e.isp_acs_s > e.isp_main_s)
    throw std::invalid_argument("EngineSpec: isp_acs_s must not exceed isp_main_s");
}

void validate(const MassBudget& b) {
  if (!(b.propellant_kg >= 0.0))
    throw std::invalid_argument("MassBudget: propellant_kg must be >= 0");
  if (!(b.dry_mass_kg > 0.0))
    throw std::invalid_argument("MassBudget: dry_mass_kg must be > 0");
  if (b.total_kg() > 3.0 + 1e-9)
    throw std::invalid_argument("MassBudget: total mass exceeds the 3.0 kg pit-bot limit");
}

void validate(const PowerSpec& p) {
  if (!(p.battery_mass_kg >= 0 && p.specific_energy_wh_per_kg >= 0))
    throw std::invalid_argument("PowerSpec: battery capacity terms must be >= 0");
  if (!(p.avionics_draw_w >= 0 && p.lights_draw_w >= 0))
    throw std::invalid_argument("PowerSpec: draws must be >= 0");
}

double dv_capacity(const EngineSpec& e, const MassBudget& b) {
  if (b.propellant_kg >= b.total_kg())
    throw std::invalid_argument("dv_capacity: propellant mass must be below total mass");
  return e.exhaust_velocity(false) * std::log(b.total_kg() / (b.total_kg() - b.propellant_kg));
}

double propellant_for_dv(const EngineSpec& e, double m0_kg, double dv_mps, bool use_acs) {
  if (dv_mps < 0.0) throw std::invalid_argument("propellant_for_dv: dv must be >= 0");
  if (!(m0_kg > 0.0)) throw std::invalid_argument("propellant_for_dv: m0 must be > 0");
  return m0_kg * (1.0 - std::exp(-dv_mps / e.exhaust_velocity(use_acs)));
}

HoverBudget hover_budget(const EngineSpec& e, const MassBudget& b, double g_mps2) {
  if (!(g_mps2 > 0.0)) throw std::invalid_argument("hover_budget: g must be > 0");
  double ve = e.exhaust_velocity(false);
  HoverBudget h;
  h.endurance_s = (ve / g_mps2) * std::log(b.total_kg() / b.dry_mass_kg);
  h.fuel_rate_initial_kg_per_s = b.total_kg() * g_mps2 / ve;
  return h;
}

double hover_propellant_for(const EngineSpec& e, double m0_kg, double duration_s, double g_mps2) {
  if (!(m0_kg > 0 && duration_s >= 0 && g_mps2 > 0))
    throw std::invalid_argument("hover_propellant_for: bad arguments");
  return m0_kg * (1.0 - std::exp(-duration_s * g_mps2 / e.exhaust_velocity(false)));
}

double acs_allowance(const EngineSpec& e, double m_kg, double dv_per_hop_mps) {
  if (dv_per_hop_mps < 0.0) throw std::invalid_argument("acs_allowance: dv must be >= 0");
  return propellant_for_dv(e, m_kg, dv_per_hop_mps, /*use_acs=*/true);
}

double battery_endurance_hours(const PowerSpec& p) {
  double draw = p.avionics_draw_w + p.lights_draw_w;
  if (!(draw > 0.0)) throw std::invalid_argument("battery_endurance_hours: total draw must be > 0");
  return p.capacity_wh() / draw;
}

TankFit tank_fit_check(const EngineSpec& e, double propellant_kg, double sphere_diameter_m) {
  if (propellant_kg < 0.0) throw std::invalid_argument("tank_fit_check: propellant must be >= 0");
  if (!(sphere_diameter_m > 0.0)) throw std::invalid_argument("tank_fit_check: diameter must be > 0");
  double ox = propellant_kg * e.of_ratio / (1.0 + e.of_ratio);
  double fuel = propellant_kg / (1.0 + e.of_ratio);
  TankFit fit;
  fit.volume_m3 = ox / e.rho_oxidizer_kg_m3 + fuel / e.rho_fuel_kg_m3;
  double r = sphere_diameter_m / 2.0;
  fit.capacity_m3 = (2.0 / 3.0) * kPi * r * r * r;
  fit.fits = fit.volume_m3 <= fit.capacity_m3;
  return fit;
}

const std::vector<TechnologyPreset>& technology_presets() {
  static const std::vector<TechnologyPreset> rows = {
      {"Proposed System RP1+H2O2, LiSOCl2", 700.0, 1.5, 5.0, 0.7, 5.0, true, ""},
      {"LiSOCl2", 700.0, 3.0, 0.5, 0.0, 0.5, false, "rolling only"},
      {"RTG", 1.0e6, 4.0, 100.0, 0.0, 0.4, false, "specific energy >>> 10^6; range 0.4*"},
      {"Lithium Ion", 130.0, 10.0, 0.5, 0.0, 0.1, false, "range < 0.1"},
  };
  return rows;
}

std::vector<TechnologyPreset> load_technology_presets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open technology preset file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<TechnologyPreset> rows;
  for (const auto& j : doc.at("presets")) {
    TechnologyPreset p;
    p.name = j.at("name").get<std::string>();
    p.specific_energy_wh_per_kg = j.at("specific_energy_wh_per_kg").get<double>();
    p.mass_kg = j.at("mass_kg").get<double>();
    p.waste_heat_w = j.at("waste_heat_w").get<double>();
    p.claimed_fly_time_hr = j.at("claimed_fly_time_hr").get<double>();
    p.claimed_range_km = j.at("claimed_range_km").get<double>();
    p.propulsive = j.at("propulsive").get<bool>();
    if (j.contains("note")) p.note = j.at("note").get<std::string>();
    rows.push_back(std::move(p));
  }
  return rows;
}

std::vector<TechnologyRow> technology_report(const std::vector<TechnologyPreset>& presets,
                                             double hop_length_m, double g_mps2,
                                             const EngineSpec& engine, const MassBudget& budget) {
  if (!(hop_length_m > 0.0)) throw std::invalid_argument("technology_report: hop length must be > 0");
  std::vector<TechnologyRow> rows;
  for (const auto& p : presets) {
    TechnologyRow row;
    row.preset = p;
    if (p.propulsive) {
      // Cheapest flat hop costs 2*sqrt(g*R) of dv (45 deg launch + landing burn).
      double dv_per_hop = 2.0 * std::sqrt(g_mps2 * hop_length_m);
      double capacity = dv_capacity(engine, budget);
      row.computed_range_km = std::floor(capacity / dv_per_hop) * hop_length_m / 1000.0;
      row.computed_fly_time_hr = hover_budget(engine, budget, g_mps2).endurance_s / 3600.0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_technology_report(const std::vector<TechnologyRow>& rows) {
  std::ostringstream os;
  os << "technology            Wh/kg     mass_kg  heat_W  fly_hr(claim/comp)  range_km(claim/comp)\n";
  for (const auto& r : rows) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-21s %-9.6g %-8.3g %-7.3g %5.3g / %-11.3g %5.3g / %-8.3g\n",
                  r.preset.name.substr(0, 21).c_str(), r.preset.specific_energy_wh_per_kg,
                  r.preset.mass_kg, r.preset.waste_heat_w, r.preset.claimed_fly_time_hr,
                  r.computed_fly_time_hr, r.preset.claimed_range_km, r.computed_range_km);
    os << buf;
    if (!r.preset.note.empty()) os << "    note: " << r.preset.note << "\n";
  }
  return os.str();
}

}  // namespace pitbot::propulsion
