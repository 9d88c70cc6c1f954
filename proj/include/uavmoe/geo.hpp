#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavmoe/types.hpp"

namespace uavmoe {

struct LocalPoint {
    double x = 0.0;  // meters east of the area origin
    double y = 0.0;  // meters north of the area origin
};

struct Segment {
    LocalPoint a, b;
    LocalPoint midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
};

struct LanePolygon {
    int lane_id = 0;                // 1 = leftmost
    std::vector<LocalPoint> ring;   // closed implicitly, >= 3 distinct vertices
};

struct StudyArea {
    std::string name;
    std::vector<LanePolygon> lanes;  // sorted by lane_id
    Segment upstream_edge;
    Segment downstream_edge;
    double length = 0.0;             // |downstream mid - upstream mid|, meters
    double speed_limit = 55.0 * KMH_TO_MS;  // m/s
    double origin_lat = 0.0;
    double origin_lon = 0.0;

    int lane_count() const { return static_cast<int>(lanes.size()); }
};

constexpr double kEarthRadiusM = 6371000.0;

// Equirectangular projection around the area origin. Sub-decimeter error at
// study-area scale (< 500 m). Inputs further than 0.1 degrees from the
// origin are rejected.
LocalPoint project(double lat, double lon, double origin_lat, double origin_lon);

// Placemark-per-lane KML. Two Placemarks named "upstream" and "downstream"
// carry the edge segments; remaining Placemarks become lanes, ordered by a
// trailing integer in their name when present, else document order.
StudyArea parse_kml_polygons(const std::string& kml_text);
// GeoJSON FeatureCollection with Polygon features carrying a lane_id
// property and two LineString features named/roled upstream and downstream.
StudyArea parse_geojson_polygons(const std::string& json_text);
// Dispatches on file extension (.kml vs .json/.geojson).
StudyArea parse_area_file(const std::string& path);

// Even-odd ray casting; points exactly on the boundary count as inside.
bool point_in_polygon(const LocalPoint& p, const LanePolygon& poly);

// Scalar projection of p onto the upstream->downstream axis, clamped to
// [0, area.length].
double distance_from_upstream(const LocalPoint& p, const StudyArea& area);

struct LaneAssignment {
    std::int64_t track_id = 0;
    std::vector<int> lane_ids;      // per point, 0 = outside the area
    std::size_t entry_index = 0;    // first in-area point
    std::size_t exit_index = 0;     // last in-area point
    int origin_lane = 0;
    int destination_lane = 0;
};

struct AssignmentResult {
    std::vector<LaneAssignment> assignments;           // in-area trajectories only
    std::vector<std::int64_t> excluded_track_ids;      // never intersected a lane
};

// Labels every point with its lane (first matching lane in lane_id order;
// ties from digitization slack resolved that way), then merges lane visits
// shorter than min_lane_dwell into their neighbor. Short out-of-area blips
// between in-area runs are treated the same so the in-area span stays
// contiguous.
AssignmentResult assign_lanes(const Dataset& d, const StudyArea& area,
                              double min_lane_dwell_s = 1.0);

struct LaneChangeStats {
    int vehicles[kVehicleTypeCount] = {0, 0, 0, 0};
    int changes[kVehicleTypeCount] = {0, 0, 0, 0};
    int total_vehicles() const;
    int total_changes() const;
};

// A lane change is each transition between distinct nonzero labels after
// smoothing.
LaneChangeStats detect_lane_changes(const std::vector<LaneAssignment>& assignments,
                                    const Dataset& d);

int count_lane_changes(const std::vector<int>& lane_ids);

struct OdMatrix {
    int n_lanes = 0;
    std::vector<int> counts;  // (n_lanes+1)^2, row-major, index 0 unused
    int& at(int origin, int dest) { return counts[origin * (n_lanes + 1) + dest]; }
    int at(int origin, int dest) const { return counts[origin * (n_lanes + 1) + dest]; }
    int row_sum(int origin) const;
    int col_sum(int dest) const;
    int total() const;
};

OdMatrix od_matrix(const std::vector<LaneAssignment>& assignments, int n_lanes);

// Vehicles per (lane, type); a vehicle counts once in every lane it visited.
struct LaneCountTable {
    int n_lanes = 0;
    std::vector<int> counts;  // [lane-1][type]
    int at(int lane, VehicleType t) const {
        return counts[(lane - 1) * kVehicleTypeCount + static_cast<int>(t)];
    }
    int lane_total(int lane) const;
};

LaneCountTable count_vehicles_per_lane(const std::vector<LaneAssignment>& assignments,
                                       const Dataset& d, int n_lanes);

// Distinct nonzero lanes visited, ascending.
std::vector<int> visited_lanes(const LaneAssignment& a);

}  // namespace uavmoe
