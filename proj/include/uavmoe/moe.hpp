#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "uavmoe/geo.hpp"
#include "uavmoe/types.hpp"

namespace uavmoe {

struct TimeCard {
    std::int64_t track_id = 0;
    double t_entry = 0.0;
    double t_exit = 0.0;  // >= t_entry
};

inline double travel_time(const TimeCard& card) { return card.t_exit - card.t_entry; }

TimeCard make_time_card(const Trajectory& traj, const LaneAssignment& assignment);

struct LinkCountSeries {
    double t0 = 0.0;             // series starts at t0 with count 0
    double dt = 1.0;
    std::vector<int> net_input;  // u(t_k), events in [t_{k-1}, t_k)
    std::vector<int> count;      // N(t_k) = N(t_{k-1}) + u(t_k)
};

// Vehicles on the link over time from entry/exit cards. N starts at 0 at the
// earliest entry; an event at a bin boundary counts toward the next reported
// time, so a card (0, 10) with dt=1 gives N=1 on t=1..10 and 0 after.
LinkCountSeries link_count_series(const std::vector<TimeCard>& cards, double dt);

// Sum of positive speed drops between consecutive samples, normalized by the
// free-flow speed; a full stop from u_f to 0 totals exactly 1.0 and
// stop-and-go traffic can exceed it.
double partial_stops(std::span<const double> speeds, double u_f);

// Sum over samples of dt * (1 - u/u_f), each term clamped at 0 so speeds
// above u_f contribute no negative delay.
double total_delay(std::span<const double> t, std::span<const double> speeds, double u_f);

// Convenience overloads over the in-area slice of a trajectory.
double partial_stops(const Trajectory& traj, const LaneAssignment& a, double u_f);
double total_delay(const Trajectory& traj, const LaneAssignment& a, double u_f);

struct CrashCoefficient {
    std::string crash_type;
    double a1 = 0.0;  // h/km
    double a2 = 0.0;  // dimensionless
};

constexpr int kCrashTypeCount = 14;

// The 14 crash types with a1 = 0 and a2 = ln(rate); reproduces the published
// national-statistics rates at any facility speed.
std::vector<CrashCoefficient> default_crash_coefficients();

struct CrashRates {
    std::vector<std::pair<std::string, double>> per_type;  // crashes/VMT
    double total = 0.0;
};

// rate_i = exp(a1_i * u_f + a2_i), u_f in km/h. Requires exactly 14 distinct
// types.
CrashRates crash_rates(double u_f_kmh, const std::vector<CrashCoefficient>& coeffs);

// Distance-based rate scaled by the free speed: crashes per vehicle-hour.
inline double time_based_crash_rate(double rate_per_vmt, double u_f_kmh) {
    return rate_per_vmt * u_f_kmh;
}

enum class Movement { LeftTurn = 0, Through = 1 };
constexpr int kMovementCount = 2;
const char* movement_name(Movement m);

struct MovementMap {
    std::vector<int> left_turn_lanes;  // default {1, 2}
    std::vector<int> through_lanes;    // default {3, 4, 5}
    Movement of_lane(int lane) const;
    static MovementMap default_for(int n_lanes);
};

struct PerVehicleMoe {
    std::int64_t track_id = 0;
    VehicleType type = VehicleType::LightMediumDuty;
    double travel_time_s = 0.0;
    double stops = 0.0;
    double delay_s = 0.0;
    std::vector<int> lanes;  // distinct lanes visited
};

struct GroupStats {
    int count = 0;
    double mean_travel_time_s = 0.0;
    double mean_stops = 0.0;
    double mean_delay_s = 0.0;
};

// Per-vehicle means. A vehicle that changed lanes contributes its full-trip
// values once to every visited lane's group (and once per movement), so
// lane counts line up with the per-lane vehicle totals.
struct MoeAggregate {
    int n_lanes = 0;
    // [lane-1][type] and [lane-1][kVehicleTypeCount] = all types
    std::vector<std::array<GroupStats, kVehicleTypeCount + 1>> by_lane;
    std::array<std::array<GroupStats, kVehicleTypeCount + 1>, kMovementCount> by_movement{};
    GroupStats overall;
};

std::vector<PerVehicleMoe> per_vehicle_moes(const Dataset& d,
                                            const std::vector<LaneAssignment>& assignments,
                                            double u_f_mps);

MoeAggregate aggregate_moes(const std::vector<PerVehicleMoe>& moes, int n_lanes,
                            const MovementMap& movements);

// Nearest-rank percentile of all in-area sample speeds (m/s); fallback when
// there are no in-area samples.
double percentile_speed(const Dataset& d, const std::vector<LaneAssignment>& assignments,
                        double percentile, double fallback_mps);

}  // namespace uavmoe
