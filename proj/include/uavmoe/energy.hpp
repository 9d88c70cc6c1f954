#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "uavmoe/geo.hpp"
#include "uavmoe/types.hpp"

namespace uavmoe {

// VT-CPFM vehicle class parameters. Speeds enter the resistance and power
// equations in km/h; conversion from internal m/s happens at this module's
// boundary.
struct VehicleClassParams {
    double mass_kg = 1500.0;
    double drag_cd = 0.30;
    double frontal_area_m2 = 2.3;
    double altitude_km = 0.0;
    double cr = 1.75;   // rolling resistance
    double c1 = 0.0328;
    double c2 = 4.575;
    double eta_d = 0.92;      // driveline efficiency, (0, 1]
    double alpha0 = 5.0e-4;   // L/s
    double alpha1 = 6.0e-5;   // L/kWs
    double alpha2 = 1.0e-6;   // L/kW^2 s
};

constexpr double kAirDensity = 1.2256;  // kg/m^3 at sea level, 15 C
constexpr double kGravity = 9.8066;

// Total resistance force in Newtons at speed v (km/h) on grade G.
double resistance(double v_kmh, double grade, const VehicleClassParams& p);

// Power at the wheels in kW; negative under engine braking.
double power(double v_kmh, double accel_ms2, double resistance_n,
             const VehicleClassParams& p);

// Second-degree polynomial in power for P >= 0; constant idle rate otherwise.
double fuel_rate(double power_kw, const VehicleClassParams& p);

struct EnergyConfig {
    std::map<VehicleType, VehicleClassParams> classes;
    double co2_kg_per_liter = 2.31;  // configurable fuel-to-mass factor
    double grade = 0.0;              // the study areas are treated as flat
};

// Built-in sample parameter set per class. Values are plausible defaults
// validated by the model invariants, not calibrated constants; motorcycles
// reuse light-duty parameters with mass, frontal area and alphas scaled.
EnergyConfig default_energy_config(double motorcycle_scale = 0.3);

struct FuelRecord {
    std::int64_t track_id = 0;
    std::vector<double> power_kw;   // per in-area sample
    std::vector<double> fuel_lps;
    double fuel_l = 0.0;
    double co2_kg = 0.0;
    double duration_s = 0.0;
};

// Left-rate Riemann integration of the fuel rate over the in-area slice.
FuelRecord trip_fuel_and_co2(const Trajectory& traj, const LaneAssignment& assignment,
                             const EnergyConfig& cfg);

}  // namespace uavmoe
