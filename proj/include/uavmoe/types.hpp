#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavmoe/errors.hpp"

namespace uavmoe {

constexpr double KMH_TO_MS = 1.0 / 3.6;
constexpr double MS_TO_KMH = 3.6;

enum class VehicleType { LightMediumDuty = 0, Motorcycle = 1, HeavyDuty = 2, Bus = 3 };
constexpr int kVehicleTypeCount = 4;

const char* vehicle_type_name(VehicleType t);

// Parses dataset labels ("Car", "Taxi", "Medium Vehicle", ...) as well as the
// canonical names above. Taxis report as light/medium duty. Throws DataError
// on an unknown label.
VehicleType parse_vehicle_type(const std::string& label);

// One timestamped record of a vehicle track. All values SI: seconds, degrees
// WGS84, m/s, m/s^2. Speeds are converted from km/h at parse time.
struct TrajectoryPoint {
    double t = 0.0;
    double lat = 0.0;
    double lon = 0.0;
    double speed = 0.0;
    double lon_acc = 0.0;  // longitudinal
    double lat_acc = 0.0;  // lateral
};

struct Trajectory {
    std::int64_t track_id = 0;
    VehicleType type = VehicleType::LightMediumDuty;
    double traveled_d = 0.0;  // meters, as reported at entry
    double avg_speed = 0.0;   // m/s
    std::vector<TrajectoryPoint> points;
};

struct BoundingBox {
    double lat_min = 0.0, lat_max = 0.0, lon_min = 0.0, lon_max = 0.0;
};

struct Dataset {
    std::vector<Trajectory> trajectories;  // unique track_ids, input order
    double sample_interval = 1.0;          // modal dt, seconds
    BoundingBox extent;

    const Trajectory* find(std::int64_t track_id) const;
};

// Modal consecutive time step across all trajectories (1e-4 s buckets);
// falls back to 1.0 when there are no consecutive pairs.
double infer_sample_interval(const std::vector<Trajectory>& trajectories);

BoundingBox compute_extent(const std::vector<Trajectory>& trajectories);

}  // namespace uavmoe
