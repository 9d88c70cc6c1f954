#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uavmoe/types.hpp"

namespace uavmoe {

// Wide trajectory format: one vehicle per row, semicolon delimited.
//   track_id; type; traveled_d; avg_speed; {lat; lon; speed; lon_acc; lat_acc; time;}*
// Speeds in km/h, accelerations in m/s^2, time in seconds. A leading header
// row is skipped. Rows with zero point groups or a field count not congruent
// to 4 mod 6 are rejected with the offending line number.
Dataset parse_pneuma_wide(std::istream& in);
Dataset parse_pneuma_wide_string(const std::string& text);

// Long format alternative, one point per row:
//   track_id,type,t,lat,lon,speed_kmh,lon_acc,lat_acc
Dataset parse_long_csv(std::istream& in);
Dataset parse_long_csv_string(const std::string& text);

// Sniffs the header/first row to pick between the two formats.
Dataset parse_trajectory_file(const std::string& path);

// Inverse of parse_pneuma_wide; doubles are printed with enough digits that a
// write/parse round trip reproduces the dataset.
void write_pneuma_wide(const Dataset& d, std::ostream& out);
std::string write_pneuma_wide_string(const Dataset& d);

void write_long_csv(const Dataset& d, std::ostream& out);

enum class FindingKind { NonMonotoneTimestamp, SpeedAboveCeiling, SampleGap };

struct ValidationFinding {
    FindingKind kind;
    std::int64_t track_id;
    std::size_t point_index;
    double value;  // offending t, speed, or gap length
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;
    bool clean() const { return findings.empty(); }
};

const char* finding_kind_name(FindingKind k);

// Report-only checks: non-monotone timestamps, speed spikes above the
// ceiling, gaps wider than 3x the inferred sample interval.
ValidationReport validate_dataset(const Dataset& d, double speed_ceiling_mps = 60.0);

}  // namespace uavmoe
