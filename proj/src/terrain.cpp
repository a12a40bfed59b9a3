#include "pitbot/terrain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pitbot::terrain {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Index of the segment [i, i+1] containing s; at an interior station the
// right segment is chosen. Assumes s within [first, last].
std::size_t segment_index(const std::vector<Station>& st, double s) {
  auto it = std::upper_bound(st.begin(), st.end(), s,
                             [](double v, const Station& a) { return v < a.s_m; });
  std::size_t hi = static_cast<std::size_t>(it - st.begin());
  if (hi == 0) return 0;  // s == first station
  if (hi == st.size()) return st.size() - 2;  // s == last station
  return hi - 1;
}

double lerp(double a, double b, double t) { return a * (1.0 - t) + b * t; }

void check_range(const TubeProfile& p, double s, const char* what) {
  if (!(s >= p.stations.front().s_m && s <= p.stations.back().s_m)) {
    std::ostringstream os;
    os << what << ": s = " << s << " outside profile '" << p.name << "' range [0, "
       << p.stations.back().s_m << "]";
    throw std::out_of_range(os.str());
  }
}

}  // namespace

double TubeProfile::floor_at(double s) const {
  check_range(*this, s, "floor_at");
  std::size_t i = segment_index(stations, s);
  const Station& a = stations[i];
  const Station& b = stations[i + 1];
  double t = (s - a.s_m) / (b.s_m - a.s_m);
  return lerp(a.floor_z_m, b.floor_z_m, t);
}

double TubeProfile::ceiling_at(double s) const {
  check_range(*this, s, "ceiling_at");
  std::size_t i = segment_index(stations, s);
  const Station& a = stations[i];
  const Station& b = stations[i + 1];
  double t = (s - a.s_m) / (b.s_m - a.s_m);
  return lerp(a.ceiling_z_m, b.ceiling_z_m, t);
}

double TubeProfile::slope_at(double s) const {
  if (!(s >= stations.front().s_m && s < stations.back().s_m)) {
    std::ostringstream os;
    os << "slope_at: s = " << s << " outside [0, " << stations.back().s_m << ")";
    throw std::out_of_range(os.str());
  }
  std::size_t i = segment_index(stations, s);
  const Station& a = stations[i];
  const Station& b = stations[i + 1];
  double grade = std::abs((b.floor_z_m - a.floor_z_m) / (b.s_m - a.s_m));
  return std::atan(grade) * 180.0 / kPi;
}

double TubeProfile::max_slope_between(double s0, double s1) const {
  if (s1 < s0) std::swap(s0, s1);
  check_range(*this, s0, "max_slope_between");
  check_range(*this, s1, "max_slope_between");
  std::size_t i = segment_index(stations, s0);
  double worst = 0.0;
  for (; i + 1 < stations.size() && stations[i].s_m < s1; ++i) {
    double grade = std::abs((stations[i + 1].floor_z_m - stations[i].floor_z_m) /
                            (stations[i + 1].s_m - stations[i].s_m));
    worst = std::max(worst, std::atan(grade) * 180.0 / kPi);
  }
  return worst;
}

bool TubeProfile::contains(CorridorPoint p) const {
  if (p.s_m < stations.front().s_m || p.s_m > stations.back().s_m) return false;
  return p.z_m >= floor_at(p.s_m) && p.z_m <= ceiling_at(p.s_m);
}

void validate(const TubeProfile& p) {
  if (p.stations.size() < 2)
    throw std::invalid_argument("profile '" + p.name + "': needs at least 2 stations");
  if (p.stations.front().s_m != 0.0)
    throw std::invalid_argument("profile '" + p.name + "': first station must be at s = 0");
  for (std::size_t i = 0; i < p.stations.size(); ++i) {
    const Station& st = p.stations[i];
    if (i > 0 && !(st.s_m > p.stations[i - 1].s_m))
      throw std::invalid_argument("profile '" + p.name + "': station s values must be strictly increasing");
    if (!(st.ceiling_z_m > st.floor_z_m)) {
      std::ostringstream os;
      os << "profile '" << p.name << "': ceiling must be above floor at s = " << st.s_m;
      throw std::invalid_argument(os.str());
    }
  }
  if (!(p.width_m > 0.0))
    throw std::invalid_argument("profile '" + p.name + "': width_m must be > 0");
}

bool line_of_sight(const TubeProfile& profile, CorridorPoint p1, CorridorPoint p2) {
  if (!profile.contains(p1) || !profile.contains(p2))
    throw std::invalid_argument("line_of_sight: point outside corridor volume");
  if (p1.s_m == p2.s_m) return true;  // vertical or degenerate segment
  if (p1.s_m > p2.s_m) std::swap(p1, p2);

  // Segment height and both polylines are linear between breakpoints, so the
  // clearances (z - floor) and (ceiling - z) are piecewise linear in s. They
  // are positive on the open segment iff they are positive at every interior
  // breakpoint and no sub-interval has zero clearance at both ends.
  std::vector<double> breaks;
  breaks.push_back(p1.s_m);
  for (const Station& st : profile.stations)
    if (st.s_m > p1.s_m && st.s_m < p2.s_m) breaks.push_back(st.s_m);
  breaks.push_back(p2.s_m);

  auto seg_z = [&](double s) {
    double t = (s - p1.s_m) / (p2.s_m - p1.s_m);
    return lerp(p1.z_m, p2.z_m, t);
  };

  std::vector<double> below(breaks.size()), above(breaks.size());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    double z = seg_z(breaks[i]);
    below[i] = z - profile.floor_at(breaks[i]);
    above[i] = profile.ceiling_at(breaks[i]) - z;
    bool interior = i > 0 && i + 1 < breaks.size();
    if (interior && (below[i] <= 0.0 || above[i] <= 0.0)) return false;
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (below[i] == 0.0 && below[i + 1] == 0.0) return false;  // grazes along floor
    if (above[i] == 0.0 && above[i + 1] == 0.0) return false;  // grazes along ceiling
  }
  return true;
}

namespace {

// Preset dimensions other than the 70 m pit depth and the >30 deg entrance
// ramp are representative choices, not measured values.

TubeProfile make_flat_tube() {
  TubeProfile p;
  p.name = "flat_tube";
  p.width_m = 10.0;
  p.entrance_slope_deg = 0.0;
  for (int s = 0; s <= 1000; s += 10)
    p.stations.push_back({static_cast<double>(s), 0.0, 15.0});
  return p;
}

// Entrance plateau, a 100 m ramp descending 70 m (grade atan(0.7) = 35 deg,
// impassable for wheels), then a level tube 70 m down. The ceiling is open
// sky over the pit mouth and closes to 20 m of clearance inside.
TubeProfile make_mare_ingenii_pit() {
  TubeProfile p;
  p.name = "mare_ingenii_pit";
  p.width_m = 10.0;
  p.entrance_slope_deg = std::atan(0.7) * 180.0 / kPi;

  auto floor_z = [](double s) {
    if (s <= 30.0) return 0.0;
    if (s <= 130.0) return -70.0 * (s - 30.0) / 100.0;
    return -70.0;
  };
  auto ceiling_z = [](double s) {
    if (s <= 140.0) return 30.0;
    if (s <= 160.0) return 30.0 + (-50.0 - 30.0) * (s - 140.0) / 20.0;
    return -50.0;
  };

  std::vector<double> svals;
  for (int s = 0; s <= 1000; s += 10) svals.push_back(s);
  for (double s : {30.0, 130.0, 140.0, 160.0}) svals.push_back(s);
  std::sort(svals.begin(), svals.end());
  svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
  for (double s : svals) p.stations.push_back({s, floor_z(s), ceiling_z(s)});
  return p;
}

// Sawtooth floor (period 50 m, amplitude 8 m) with a parallel ceiling 12 m
// up. Crests break sightlines longer than ~one period.
TubeProfile make_zigzag_tube() {
  TubeProfile p;
  p.name = "zigzag_tube";
  p.width_m = 8.0;
  p.entrance_slope_deg = std::atan(8.0 / 25.0) * 180.0 / kPi;
  auto floor_z = [](double s) {
    double u = std::fmod(s, 50.0);
    return u < 25.0 ? 8.0 * u / 25.0 : 8.0 * (50.0 - u) / 25.0;
  };
  for (int s = 0; s <= 1000; s += 5) {
    double f = floor_z(s);
    p.stations.push_back({static_cast<double>(s), f, f + 12.0});
  }
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"flat_tube", "mare_ingenii_pit", "zigzag_tube"};
  return names;
}

TubeProfile preset(const std::string& name) {
  TubeProfile p;
  if (name == "flat_tube") p = make_flat_tube();
  else if (name == "mare_ingenii_pit") p = make_mare_ingenii_pit();
  else if (name == "zigzag_tube") p = make_zigzag_tube();
  else {
    std::ostringstream os;
    os << "unknown tube preset '" << name << "'; valid presets:";
    for (const auto& n : preset_names()) os << " " << n;
    throw std::invalid_argument(os.str());
  }
  validate(p);
  return p;
}

}  // namespace pitbot::terrain
