#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavmoe/geo.hpp"
#include "uavmoe/types.hpp"

namespace uavmoe {

// A vehicle is queued when moving no faster than a pedestrian.
constexpr double kQueueSpeedThreshold = 1.2;  // m/s

inline bool is_queued(double speed_mps, double threshold = kQueueSpeedThreshold) {
    return speed_mps <= threshold;
}

struct QueueParams {
    double speed_threshold_mps = kQueueSpeedThreshold;
    int min_queue_dwell_samples = 2;   // runs shorter than this are noise
    double spillback_eps_m = 5.0;      // "immediately prior" to the upstream edge
    double spillback_dedup_s = 10.0;   // one event per lane per cycle
    double signal_threshold_m = 10.0;  // red-onset detection level
};

struct QueueInterval {
    std::int64_t track_id = 0;
    int lane_id = 0;          // lane at the entering sample
    double t_enter = 0.0;     // first queued sample
    double t_exit = 0.0;      // first non-queued sample after the run
    double x_enter = 0.0;     // meters from the upstream edge
    double x_exit = 0.0;
    double enter_lat = 0.0, enter_lon = 0.0;
    bool entered_queued = false;  // first in-area sample was already queued
};

// Maximal runs of queued in-area samples along one trajectory. A run that
// reaches the end of the data is closed one sample interval after its last
// sample.
std::vector<QueueInterval> extract_queue_intervals(const Trajectory& traj,
                                                   const LaneAssignment& assignment,
                                                   const StudyArea& area,
                                                   const QueueParams& params = {});

struct LaneQueueProfile {
    int lane_id = 0;
    // Step series: extent holds from each t until the next entry. The extent
    // is the area length minus the smallest queue-entry distance among
    // currently queued vehicles, 0 when none are queued.
    std::vector<double> t;
    std::vector<double> extent_m;
};

// intervals must all belong to one lane.
LaneQueueProfile lane_queue_profile(const std::vector<QueueInterval>& intervals,
                                    const StudyArea& area);

struct MaxQueue {
    double length_m = 0.0;
    double t = 0.0;
    double start_lat = 0.0, start_lon = 0.0;  // furthest-upstream queued vehicle
    double end_lat = 0.0, end_lon = 0.0;      // downstream-most queued vehicle
};

// argmax of the lane profile; ties broken by earliest timestamp. nullopt when
// the lane never queued.
std::optional<MaxQueue> max_queue_length(const std::vector<QueueInterval>& intervals,
                                         const StudyArea& area);

struct SpillbackEvent {
    int lane_id = 0;
    double t = 0.0;
    double lat = 0.0, lon = 0.0;
};

// One event per interval that starts within spillback_eps of the upstream
// edge or whose vehicle entered the area already queued; events within
// spillback_dedup_s of the previous kept event in the same lane are dropped.
std::vector<SpillbackEvent> detect_spillbacks(const std::vector<QueueInterval>& intervals,
                                              const StudyArea& area,
                                              const QueueParams& params = {});

struct SignalPhaseEstimate {
    std::vector<double> red_onsets;    // aggregate extent rises through threshold
    std::vector<double> green_onsets;  // extent begins a sustained decline
    std::string confidence;
};

SignalPhaseEstimate infer_signal_phases(const std::vector<LaneQueueProfile>& profiles,
                                        double threshold_m = 10.0);

}  // namespace uavmoe
