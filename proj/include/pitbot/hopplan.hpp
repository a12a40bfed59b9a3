// Fuel-minimal impulsive fly-hops: launch burn, ballistic arc under constant
// gravity, soft-landing burn. Plans single hops against corridor geometry and
// produces sampled trajectories and hop-length trade tables.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pitbot/propulsion.hpp"
#include "pitbot/terrain.hpp"

namespace pitbot::hopplan {

struct BodyConstants {
  double g_mps2 = 1.62;  // lunar surface gravity; mars = 3.71
};

/// "moon" or "mars"; throws std::invalid_argument otherwise.
BodyConstants body_from_name(const std::string& name);

struct BallisticSolution {
  double speed_mps = 0.0;
  double flight_time_s = 0.0;
};

/// Launch speed and flight time for an arc through `theta_deg` covering
/// horizontal range R with net height change dz:
///   v^2 = g R^2 / (2 cos^2(theta) (R tan(theta) - dz)).
/// Empty when R tan(theta) <= dz (angle too shallow to gain dz).
/// Preconditions (throwing): range > 0, 0 < theta < 90.
std::optional<BallisticSolution> ballistic_solve(double range_m, double dz_m, double g_mps2,
                                                 double theta_deg);

struct HopPlan {
  terrain::CorridorPoint origin;
  terrain::CorridorPoint target;
  double g_mps2 = 1.62;
  double launch_speed_mps = 0.0;
  double launch_angle_deg = 0.0;
  double flight_time_s = 0.0;
  double apex_z_m = 0.0;
  double dv_launch_mps = 0.0;  // equals launch speed
  double dv_land_mps = 0.0;    // full touchdown velocity cancelled (soft landing)
  double dv_total_mps = 0.0;
  double propellant_kg = 0.0;  // at the supplied engine and launch mass
};

enum class HopInfeasibility {
  None,
  CeilingTooLow,   // no angle keeps the arc under ceiling - margin
  FloorBlocksArc,  // terrain between the endpoints intercepts every arc
  TooShallow,      // no angle in range reaches the height gain
};
const char* to_string(HopInfeasibility reason);

struct PlanOutcome {
  std::optional<HopPlan> plan;
  HopInfeasibility reason = HopInfeasibility::None;
  std::string detail;  // binding constraint description when infeasible
};

/// Minimize dv_total over launch angle, subject to the arc clearing the
/// ceiling minus `margin_m` everywhere and staying strictly above the floor
/// between the endpoints. Grid search (0.1 deg) plus golden-section
/// refinement to 1e-4 deg. On unconstrained flat ground the optimum is
/// 45 deg. Hops are planned in the vertical plane through origin->target.
PlanOutcome plan_min_fuel_hop(terrain::CorridorPoint origin, terrain::CorridorPoint target,
                              const BodyConstants& body, const terrain::TubeProfile& profile,
                              double margin_m = 0.5,
                              const propulsion::EngineSpec& engine = {},
                              double launch_mass_kg = 3.0);

struct TrajectorySample {
  double t_s = 0.0;
  double s_m = 0.0;
  double z_m = 0.0;
  double vs_mps = 0.0;
  double vz_mps = 0.0;
};

/// Samples at t = 0, dt, ..., flight_time (last sample exactly at flight
/// time, i.e. at the target). Throws on dt <= 0.
std::vector<TrajectorySample> sample_trajectory(const HopPlan& plan, double dt_s);

/// dv of the cheapest flat hop of the given length: 2*sqrt(g*R).
double flat_hop_dv(double hop_length_m, double g_mps2);

/// Whole-budget range from repeated flat hops:
/// floor(dv_budget / dv_per_hop) * hop_length.
double hop_sequence_range(double dv_budget_mps, double hop_length_m, const BodyConstants& body);

struct ModeRow {
  double hop_length_m = 0.0;
  double dv_per_hop_mps = 0.0;
  double propellant_per_hop_kg = 0.0;
  double flight_time_s = 0.0;
  double total_range_m = 0.0;
};

/// Fuel-vs-range family over hop lengths on flat ground. Per-hop dv grows as
/// sqrt(R); propellant per meter falls as 1/sqrt(R).
std::vector<ModeRow> compare_modes(const BodyConstants& body, const std::vector<double>& hop_lengths_m,
                                   const propulsion::EngineSpec& engine = {},
                                   const propulsion::MassBudget& budget = {});
std::string modes_to_csv(const std::vector<ModeRow>& rows);

}  // namespace pitbot::hopplan
