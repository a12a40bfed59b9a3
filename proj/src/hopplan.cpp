#include "pitbot/hopplan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pitbot::hopplan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxAngleDeg = 89.0;
constexpr double kGridStepDeg = 0.1;
constexpr double kRefineTolDeg = 1e-4;

double deg2rad(double d) { return d * kPi / 180.0; }

struct Arc {
  double range = 0.0;      // horizontal distance, > 0
  double dir = 1.0;        // +1 forward along s, -1 backward
  double dz = 0.0;         // target z - origin z
  double g = 0.0;
  terrain::CorridorPoint origin;
  terrain::CorridorPoint target;
};

struct Candidate {
  BallisticSolution sol;
  double dv_land = 0.0;
  double dv_total = 0.0;
  double apex_z = 0.0;
  double apex_s = 0.0;  // s where the apex occurs (clamped into the arc)
};

Candidate evaluate(const Arc& arc, double theta_deg, const BallisticSolution& sol) {
  Candidate c;
  c.sol = sol;
  double th = deg2rad(theta_deg);
  double vx = sol.speed_mps * std::cos(th);
  double vz0 = sol.speed_mps * std::sin(th);
  double vz1 = vz0 - arc.g * sol.flight_time_s;
  c.dv_land = std::hypot(vx, vz1);
  c.dv_total = sol.speed_mps + c.dv_land;
  double t_apex = std::clamp(vz0 / arc.g, 0.0, sol.flight_time_s);
  c.apex_z = arc.origin.z_m + vz0 * t_apex - 0.5 * arc.g * t_apex * t_apex;
  c.apex_s = arc.origin.s_m + arc.dir * vx * t_apex;
  return c;
}

enum class Violation { None, Ceiling, Floor };

// Samples the arc and checks corridor clearance. The floor constraint is
// strict and applies between the endpoints only (they may rest on the floor);
// the ceiling-minus-margin constraint applies everywhere including the
// analytic apex.
Violation check_clearance(const Arc& arc, double theta_deg, const Candidate& c,
                          const terrain::TubeProfile& profile, double margin_m, int samples) {
  if (c.apex_s >= 0.0 && c.apex_s <= profile.length_m() &&
      c.apex_z > profile.ceiling_at(c.apex_s) - margin_m)
    return Violation::Ceiling;
  double th = deg2rad(theta_deg);
  double vx = c.sol.speed_mps * std::cos(th);
  double vz0 = c.sol.speed_mps * std::sin(th);
  for (int i = 0; i <= samples; ++i) {
    double t = c.sol.flight_time_s * i / samples;
    double s = arc.origin.s_m + arc.dir * vx * t;
    double z = arc.origin.z_m + vz0 * t - 0.5 * arc.g * t * t;
    if (s < 0.0 || s > profile.length_m()) return Violation::Floor;
    if (z > profile.ceiling_at(s) - margin_m) return Violation::Ceiling;
    if (i > 0 && i < samples && z <= profile.floor_at(s)) return Violation::Floor;
  }
  return Violation::None;
}

}  // namespace

BodyConstants body_from_name(const std::string& name) {
  if (name == "moon") return {1.62};
  if (name == "mars") return {3.71};
  throw std::invalid_argument("unknown body '" + name + "'; expected moon or mars");
}

std::optional<BallisticSolution> ballistic_solve(double range_m, double dz_m, double g_mps2,
                                                 double theta_deg) {
  if (!(range_m > 0.0)) throw std::invalid_argument("ballistic_solve: range must be > 0");
  if (!(theta_deg > 0.0 && theta_deg < 90.0))
    throw std::invalid_argument("ballistic_solve: theta must be in (0, 90) degrees");
  if (!(g_mps2 > 0.0)) throw std::invalid_argument("ballistic_solve: g must be > 0");
  double th = deg2rad(theta_deg);
  double cos_th = std::cos(th);
  double rise = range_m * std::tan(th) - dz_m;
  if (rise <= 0.0) return std::nullopt;
  double v2 = g_mps2 * range_m * range_m / (2.0 * cos_th * cos_th * rise);
  BallisticSolution sol;
  sol.speed_mps = std::sqrt(v2);
  sol.flight_time_s = range_m / (sol.speed_mps * cos_th);
  return sol;
}

const char* to_string(HopInfeasibility reason) {
  switch (reason) {
    case HopInfeasibility::None: return "none";
    case HopInfeasibility::CeilingTooLow: return "ceiling_too_low";
    case HopInfeasibility::FloorBlocksArc: return "floor_blocks_arc";
    case HopInfeasibility::TooShallow: return "too_shallow";
  }
  return "unknown";
}

PlanOutcome plan_min_fuel_hop(terrain::CorridorPoint origin, terrain::CorridorPoint target,
                              const BodyConstants& body, const terrain::TubeProfile& profile,
                              double margin_m, const propulsion::EngineSpec& engine,
                              double launch_mass_kg) {
  if (origin.z_m < profile.floor_at(origin.s_m) - 1e-9 ||
      target.z_m < profile.floor_at(target.s_m) - 1e-9)
    throw std::invalid_argument("plan_min_fuel_hop: endpoints must be on or above the floor");
  Arc arc;
  arc.origin = origin;
  arc.target = target;
  arc.range = std::abs(target.s_m - origin.s_m);
  if (!(arc.range > 0.0))
    throw std::invalid_argument("plan_min_fuel_hop: horizontal separation must be > 0");
  arc.dir = target.s_m >= origin.s_m ? 1.0 : -1.0;
  arc.dz = target.z_m - origin.z_m;
  arc.g = body.g_mps2;

  // Grid on absolute multiples of the step so flat hops evaluate 45.0 exactly.
  double theta_lo = std::max(0.0, std::atan2(arc.dz, arc.range) * 180.0 / kPi);
  const int coarse_samples = 200;

  bool saw_ceiling = false, saw_floor = false;
  double best_theta = -1.0;
  double best_dv = std::numeric_limits<double>::infinity();

  auto cost = [&](double theta, int samples) -> double {
    if (theta <= theta_lo || theta > kMaxAngleDeg) return std::numeric_limits<double>::infinity();
    auto sol = ballistic_solve(arc.range, arc.dz, arc.g, theta);
    if (!sol) return std::numeric_limits<double>::infinity();
    Candidate c = evaluate(arc, theta, *sol);
    switch (check_clearance(arc, theta, c, profile, margin_m, samples)) {
      case Violation::Ceiling: saw_ceiling = true; return std::numeric_limits<double>::infinity();
      case Violation::Floor: saw_floor = true; return std::numeric_limits<double>::infinity();
      case Violation::None: break;
    }
    return c.dv_total;
  };

  for (int k = static_cast<int>(std::floor(theta_lo / kGridStepDeg)) + 1;
       k * kGridStepDeg <= kMaxAngleDeg; ++k) {
    double theta = k * kGridStepDeg;
    double dv = cost(theta, coarse_samples);
    if (dv < best_dv) {
      best_dv = dv;
      best_theta = theta;
    }
  }

  if (best_theta < 0.0) {
    PlanOutcome out;
    std::ostringstream os;
    if (saw_ceiling) {
      out.reason = HopInfeasibility::CeilingTooLow;
      os << "no launch angle keeps the " << arc.range << " m arc below ceiling - "
         << margin_m << " m margin";
    } else if (saw_floor) {
      out.reason = HopInfeasibility::FloorBlocksArc;
      os << "terrain between s = " << origin.s_m << " and s = " << target.s_m
         << " intercepts every arc";
    } else {
      out.reason = HopInfeasibility::TooShallow;
      os << "no angle in (0, " << kMaxAngleDeg << "] deg gains dz = " << arc.dz << " m over "
         << arc.range << " m";
    }
    out.detail = os.str();
    return out;
  }

  // Golden-section refinement around the best grid point. Infeasible angles
  // cost +inf, so the section collapses onto a binding constraint boundary.
  double lo = std::max(best_theta - kGridStepDeg, theta_lo + 1e-9);
  double hi = std::min(best_theta + kGridStepDeg, kMaxAngleDeg);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = cost(x1, coarse_samples);
  double f2 = cost(x2, coarse_samples);
  while (hi - lo > kRefineTolDeg) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = cost(x1, coarse_samples);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = cost(x2, coarse_samples);
    }
  }
  for (double theta : {(lo + hi) / 2.0, lo, hi, best_theta}) {
    double dv = cost(theta, 1000);
    if (dv < best_dv) {
      best_dv = dv;
      best_theta = theta;
    }
  }

  auto sol = ballistic_solve(arc.range, arc.dz, arc.g, best_theta);
  Candidate c = evaluate(arc, best_theta, *sol);
  HopPlan plan;
  plan.origin = origin;
  plan.target = target;
  plan.g_mps2 = body.g_mps2;
  plan.launch_speed_mps = sol->speed_mps;
  plan.launch_angle_deg = best_theta;
  plan.flight_time_s = sol->flight_time_s;
  plan.apex_z_m = c.apex_z;
  plan.dv_launch_mps = sol->speed_mps;
  plan.dv_land_mps = c.dv_land;
  plan.dv_total_mps = c.dv_total;
  plan.propellant_kg = propulsion::propellant_for_dv(engine, launch_mass_kg, c.dv_total, false);
  PlanOutcome out;
  out.plan = plan;
  return out;
}

std::vector<TrajectorySample> sample_trajectory(const HopPlan& plan, double dt_s) {
  if (!(dt_s > 0.0)) throw std::invalid_argument("sample_trajectory: dt must be > 0");
  double th = deg2rad(plan.launch_angle_deg);
  double dir = plan.target.s_m >= plan.origin.s_m ? 1.0 : -1.0;
  double vx = plan.launch_speed_mps * std::cos(th);
  double vz0 = plan.launch_speed_mps * std::sin(th);
  std::vector<TrajectorySample> out;
  double T = plan.flight_time_s;
  for (double t = 0.0;; t += dt_s) {
    bool last = t >= T - 1e-12;
    if (last) t = T;
    TrajectorySample s;
    s.t_s = t;
    s.s_m = plan.origin.s_m + dir * vx * t;
    s.z_m = plan.origin.z_m + vz0 * t - 0.5 * plan.g_mps2 * t * t;
    s.vs_mps = dir * vx;
    s.vz_mps = vz0 - plan.g_mps2 * t;
    out.push_back(s);
    if (last) break;
  }
  return out;
}

double flat_hop_dv(double hop_length_m, double g_mps2) {
  if (!(hop_length_m > 0.0)) throw std::invalid_argument("flat_hop_dv: hop length must be > 0");
  return 2.0 * std::sqrt(g_mps2 * hop_length_m);
}

double hop_sequence_range(double dv_budget_mps, double hop_length_m, const BodyConstants& body) {
  if (!(hop_length_m > 0.0))
    throw std::invalid_argument("hop_sequence_range: hop length must be > 0");
  if (dv_budget_mps <= 0.0) return 0.0;
  return std::floor(dv_budget_mps / flat_hop_dv(hop_length_m, body.g_mps2)) * hop_length_m;
}

std::vector<ModeRow> compare_modes(const BodyConstants& body, const std::vector<double>& hop_lengths_m,
                                   const propulsion::EngineSpec& engine,
                                   const propulsion::MassBudget& budget) {
  if (hop_lengths_m.empty())
    throw std::invalid_argument("compare_modes: need at least one hop length");
  double capacity = propulsion::dv_capacity(engine, budget);
  std::vector<ModeRow> rows;
  for (double L : hop_lengths_m) {
    ModeRow r;
    r.hop_length_m = L;
    r.dv_per_hop_mps = flat_hop_dv(L, body.g_mps2);
    r.propellant_per_hop_kg =
        propulsion::propellant_for_dv(engine, budget.total_kg(), r.dv_per_hop_mps, false);
    r.flight_time_s = std::sqrt(2.0 * L / body.g_mps2);
    r.total_range_m = hop_sequence_range(capacity, L, body);
    rows.push_back(r);
  }
  return rows;
}

std::string modes_to_csv(const std::vector<ModeRow>& rows) {
  std::ostringstream os;
  os << "hop_length_m,dv_per_hop_mps,propellant_per_hop_kg,flight_time_s,total_range_m\n";
  for (const auto& r : rows) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%.6g,%.9g,%.9g,%.9g,%.9g\n", r.hop_length_m,
                  r.dv_per_hop_mps, r.propellant_per_hop_kg, r.flight_time_s, r.total_range_m);
    os << buf;
  }
  return os.str();
}

}  // namespace pitbot::hopplan
