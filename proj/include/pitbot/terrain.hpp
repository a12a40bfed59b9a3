// Lava-tube corridor geometry: piecewise-linear vertical profile extruded
// to a constant half-width, with elevation/slope/clearance/visibility queries.
#pragma once

#include <string>
#include <vector>

namespace pitbot::terrain {

struct Station {
  double s_m = 0.0;
  double floor_z_m = 0.0;
  double ceiling_z_m = 0.0;
};

/// A point in the vertical (s, z) plane of the corridor.
struct CorridorPoint {
  double s_m = 0.0;
  double z_m = 0.0;
};

/// 2.5-D corridor model. Floor and ceiling are piecewise-linear functions of
/// arc length s; values between stations are linear interpolations. The floor
/// plane extends laterally to +/- width_m around the centerline. Immutable
/// after construction; all queries are const and safe to call concurrently.
struct TubeProfile {
  std::string name;
  std::vector<Station> stations;   // s strictly increasing, first at s = 0
  double width_m = 0.0;            // corridor half-width
  double entrance_slope_deg = 0.0;

  double length_m() const { return stations.back().s_m; }

  /// Floor elevation at s. Exact stored value at a station. Throws
  /// std::out_of_range outside [0, length].
  double floor_at(double s) const;
  double ceiling_at(double s) const;
  double clearance_at(double s) const { return ceiling_at(s) - floor_at(s); }

  /// Unsigned grade of the floor segment containing s, in degrees. At a
  /// station the segment to the right is used, so the valid domain is
  /// [0, length); the last station has no right segment.
  double slope_at(double s) const;

  /// Max slope_at over all floor segments intersecting [s0, s1].
  double max_slope_between(double s0, double s1) const;

  bool contains(CorridorPoint p) const;
};

/// Throws std::invalid_argument if the profile violates its invariants
/// (s strictly increasing from 0, ceiling above floor, positive width).
void validate(const TubeProfile& profile);

/// True iff the open segment p1->p2 stays strictly between the floor and
/// ceiling polylines at every intermediate s. Endpoints may lie on the
/// boundary (a robot resting on the floor can still be sighted). Exact for
/// piecewise-linear profiles: no sampling. Throws std::invalid_argument if
/// either endpoint is outside the corridor volume.
bool line_of_sight(const TubeProfile& profile, CorridorPoint p1, CorridorPoint p2);

/// Named presets: flat_tube, mare_ingenii_pit, zigzag_tube.
/// Throws std::invalid_argument listing valid names for anything else.
TubeProfile preset(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace pitbot::terrain
